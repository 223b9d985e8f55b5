#include "hopfkit/algebroid.hpp"

#include <algorithm>
#include <filesystem>

#include <json.hpp>

#include "hopfkit/io.hpp"
#include "terms.hpp"

namespace hopfkit::algebroid {

namespace {

using detail::add_outer;
using detail::bilinear;
using detail::dual_label;
using detail::terms2;

// Kernel of m as a list of domain vectors.
std::vector<SparseVec> kernel_basis(const LinearMap& m, const Field& f) {
  const Index cod = m.codomain();
  RowEchelon ech(cod + m.domain());
  for (std::size_t j = 0; j < m.domain(); ++j) {
    std::vector<SparseVec::Entry> row(m.column(j).entries());
    row.emplace_back(cod + j, f.one());
    ech.insert(SparseVec::from_entries(std::move(row)));
  }
  std::vector<SparseVec> out;
  for (const auto& [pivot, row] : ech.rows()) {
    if (pivot < cod) continue;
    std::vector<SparseVec::Entry> k;
    for (const auto& [i, c] : row) k.emplace_back(i - cod, c);
    out.push_back(SparseVec::from_entries(std::move(k)));
  }
  return out;
}

// a (x) b over V (x) W, dim W = m
SparseVec flat_outer(const SparseVec& a, const SparseVec& b, std::size_t m) {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.emplace_back(i * m + j, x * y);
  return SparseVec::from_entries(std::move(out));
}

}  // namespace

Subspace::Subspace(std::size_t ambient, std::vector<SparseVec> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  RowEchelon ech(ambient);
  for (const SparseVec& b : basis_)
    if (!ech.insert(b)) throw PresentationError("subspace basis is dependent");
  std::vector<Index> piv;
  for (const auto& [c, row] : ech.rows()) piv.push_back(c);
  const std::size_t m = basis_.size();
  const LinearMap sub = LinearMap::from_function(m, m, [&](std::size_t i) {
    Accumulator acc;
    for (std::size_t k = 0; k < m; ++k) acc.add(k, basis_[i][piv[k]]);
    return acc.take();
  });
  const auto inv = m ? inverse(sub) : std::optional<LinearMap>(LinearMap(0, 0));
  if (!inv) throw PresentationError("subspace pivot block is singular");
  std::vector<SparseVec> cols(ambient);
  for (std::size_t k = 0; k < m; ++k) cols[piv[k]] = inv->column(k);
  coord_ = LinearMap(ambient, m, std::move(cols));
  incl_ = LinearMap(m, ambient, basis_);
}

std::optional<SparseVec> Subspace::coords(const SparseVec& x) const {
  SparseVec c = coord_.apply(x);
  if (incl_.apply(c) != x) return std::nullopt;
  return c;
}

SparseVec Subspace::embed(const SparseVec& c) const { return incl_.apply(c); }

std::optional<Presentation> sub_hopf(const Presentation& h, const Subspace& s, VerdictReport& rep,
                                     const std::string& prefix) {
  const std::size_t m = s.dim();
  const Field& f = h.field();
  Presentation p;
  p.alg.field = f;
  p.alg.dim = m;
  for (std::size_t i = 0; i < m; ++i) p.alg.basis.push_back("u" + std::to_string(i));
  bool ok = true;
  auto in = [&](Verdict& v, const SparseVec& x, SparseVec& out, const std::string& where) {
    const auto c = s.coords(x);
    v.check(c.has_value(), [&] { return where; });
    if (c) out = *c;
    ok = ok && c.has_value();
  };
  in(rep.add(prefix + "contains 1"), h.one(), p.alg.unit, "1");
  Verdict& mv = rep.add(prefix + "closed under multiplication");
  p.alg.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      in(mv, h.mul(s.basis()[i], s.basis()[j]), p.alg.table[i * m + j],
         "(u" + std::to_string(i) + ", u" + std::to_string(j) + ")");
  Verdict& dv = rep.add(prefix + "closed under Delta");
  const LinearMap& cm = s.coordinate_map();
  const LinearMap& im = s.inclusion();
  for (std::size_t i = 0; i < m; ++i) {
    const Tensor d = h.delta(s.basis()[i]);
    const Tensor c = map_legs(d, {&cm, &cm});
    const bool good = map_legs(c, {&im, &im}) == d;
    dv.check(good, [&] { return "u" + std::to_string(i); });
    ok = ok && good;
    p.comult.push_back(c.coeffs());
  }
  Accumulator eps;
  for (std::size_t i = 0; i < m; ++i) eps.add(i, h.eps(s.basis()[i]));
  p.counit = eps.take();
  if (h.antipode) {
    Verdict& sv = rep.add(prefix + "closed under S");
    std::vector<SparseVec> cols(m);
    for (std::size_t i = 0; i < m; ++i)
      in(sv, h.antipode->apply(s.basis()[i]), cols[i], "u" + std::to_string(i));
    p.antipode = LinearMap(m, m, std::move(cols));
  }
  if (!h.has_trivial_phi()) {
    rep.fail(prefix + "trivial associator", "phi is not 1 (x) 1 (x) 1");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return p;
}

RankFactorization rank_factorization(const Presentation& h) {
  RankFactorization out;
  out.report = VerdictReport("rank factorization");
  const std::size_t n = h.dim();
  const Field& f = h.field();
  out.r = h.r_matrix();
  std::vector<Accumulator> rows(n);
  for (const auto& [ab, c] : out.r.coeffs()) rows[ab / n].add(ab % n, c);
  std::vector<SparseVec> m(n);
  for (std::size_t a = 0; a < n; ++a) m[a] = rows[a].take();
  RowEchelon ech(n);
  std::vector<SparseVec> v;
  for (std::size_t a = 0; a < n; ++a)
    if (ech.insert(m[a])) v.push_back(m[a]);
  out.rank = v.size();
  out.d = Subspace(n, v);
  // row a of the coefficient matrix is sum_k c_ak v_k, so u_k = sum_a c_ak e_a
  std::vector<Accumulator> u(out.rank);
  for (std::size_t a = 0; a < n; ++a) {
    const SparseVec c = *out.d.coords(m[a]);
    for (const auto& [k, x] : c) u[k].add(a, x);
  }
  std::vector<SparseVec> ub;
  for (auto& acc : u) ub.push_back(acc.take());
  out.l = Subspace(n, ub);
  Accumulator back;
  for (std::size_t k = 0; k < out.rank; ++k) add_outer(back, ub[k], v[k], n, f.one());
  out.report.add("R = sum u_i (x) v_i").check(back.take() == out.r.coeffs());
  out.report.note("rank", std::to_string(out.rank));
  out.l_hopf = sub_hopf(h, out.l, out.report, "L: ");
  out.d_hopf = sub_hopf(h, out.d, out.report, "D: ");
  out.f = LinearMap::identity(out.rank, f);
  if (out.l_hopf && out.d_hopf) {
    const Presentation lstar = hopf::variant(hopf::dual_hopf(*out.l_hopf), hopf::Variant::cop);
    Presentation dd = *out.d_hopf;
    out.report.merge(hopf::check_morphism(out.f, lstar, dd, false), "f: L*cop -> D: ");
  }
  return out;
}

SparseVec ModuleAlgebra::act(const SparseVec& x, const SparseVec& w) const {
  return bilinear(action, v.dim, x, w);
}

VerdictReport check_module_algebra(const ModuleAlgebra& m) {
  VerdictReport rep("module algebra");
  const std::size_t n = m.h.dim(), d = m.v.dim;
  auto lab = [&](std::size_t x, std::size_t a) { return m.h.basis()[x] + ", " + m.v.basis[a]; };
  Verdict& one = rep.add("1 . v = v");
  for (std::size_t a = 0; a < d; ++a) one.check(m.act(m.h.one(), m.v.basis_vec(a)) == m.v.basis_vec(a), [&] { return m.v.basis[a]; });
  Verdict& assoc = rep.add("(xy) . v = x . (y . v)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < d; ++a)
        assoc.check(m.act(m.h.mul(m.h.e(x), m.h.e(y)), m.v.basis_vec(a)) == m.act(m.h.e(x), m.act(m.h.e(y), m.v.basis_vec(a))),
                    [&] { return m.h.basis()[x] + ", " + lab(y, a); });
  Verdict& unit = rep.add("x . 1 = eps(x) 1");
  for (std::size_t x = 0; x < n; ++x)
    unit.check(m.act(m.h.e(x), m.v.unit) == m.v.unit.scaled(m.h.counit[x]), [&] { return m.h.basis()[x]; });
  Verdict& lr = rep.add("x . (vw) = sum (x1 . v)(x2 . w)");
  for (std::size_t x = 0; x < n; ++x) {
    const auto dx = terms2(m.h.delta(x));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        Accumulator acc;
        for (const auto& [c, x1, x2] : dx) acc.add(m.v.mul(m.act(m.h.e(x1), m.v.basis_vec(a)), m.act(m.h.e(x2), m.v.basis_vec(b))), c);
        lr.check(m.act(m.h.e(x), m.v.product(a, b)) == acc.take(), [&] { return lab(x, a) + ", " + m.v.basis[b]; });
      }
  }
  return rep;
}

VerdictReport check_quantum_commutative(const ModuleAlgebra& m) {
  VerdictReport rep("quantum commutativity");
  const auto r = terms2(m.h.r_matrix());
  Verdict& v = rep.add("v w = sum (R2 . w)(R1 . v)");
  for (std::size_t a = 0; a < m.v.dim; ++a)
    for (std::size_t b = 0; b < m.v.dim; ++b) {
      Accumulator acc;
      for (const auto& [c, r1, r2] : r)
        acc.add(m.v.mul(m.act(m.h.e(r2), m.v.basis_vec(b)), m.act(m.h.e(r1), m.v.basis_vec(a))), c);
      v.check(m.v.product(a, b) == acc.take(), [&] { return m.v.basis[a] + ", " + m.v.basis[b]; });
    }
  return rep;
}

SparseVec BalancedTensor::pair_coords(const SparseVec& x) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, c] : project(x)) {
    const auto it = std::lower_bound(pair_basis.begin(), pair_basis.end(), i);
    out.emplace_back(static_cast<Index>(it - pair_basis.begin()), c);
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec BalancedTensor::project3(const SparseVec& x) const {
  const std::size_t t = t_dim;
  std::map<Index, Accumulator> by_last;
  for (const auto& [ijk, c] : x) by_last[ijk % t].add(ijk / t, c);
  Accumulator acc;
  for (auto& [k, a] : by_last)
    for (const auto& [q, c] : pair_coords(a.take())) acc.add(q * t + k, c);
  return triple.project(acc.take());
}

std::vector<SparseVec> balanced_relations(const Algebra& t, const LinearMap& alpha, const LinearMap& beta,
                                          std::size_t b_dim) {
  const std::size_t n = t.dim;
  std::vector<SparseVec> rels;
  for (std::size_t b = 0; b < b_dim; ++b) {
    std::vector<SparseVec> bl(n), ar(n);
    for (std::size_t i = 0; i < n; ++i) {
      bl[i] = t.mul(beta.column(b), t.basis_vec(i));
      ar[i] = t.mul(alpha.column(b), t.basis_vec(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rels.push_back(flat_outer(bl[i], t.basis_vec(j), n) - flat_outer(t.basis_vec(i), ar[j], n));
  }
  return rels;
}

BalancedTensor balanced_tensor(const Algebra& t, const LinearMap& alpha, const LinearMap& beta, std::size_t b_dim) {
  BalancedTensor bt;
  const std::size_t n = t.dim;
  bt.t_dim = n;
  bt.b_dim = b_dim;
  bt.pair = Quotient(n * n, balanced_relations(t, alpha, beta, b_dim));
  bt.pair_basis = bt.pair.complement();
  // t (x) (beta(b) t') (x) t'' - t (x) t' (x) (alpha(b) t'') on Q2 (x) T
  std::vector<SparseVec> rels;
  std::vector<std::vector<SparseVec>> bl(b_dim, std::vector<SparseVec>(n)), ar(b_dim, std::vector<SparseVec>(n));
  for (std::size_t b = 0; b < b_dim; ++b)
    for (std::size_t i = 0; i < n; ++i) {
      bl[b][i] = t.mul(beta.column(b), t.basis_vec(i));
      ar[b][i] = t.mul(alpha.column(b), t.basis_vec(i));
    }
  for (std::size_t q = 0; q < bt.pair_basis.size(); ++q) {
    const std::size_t i = bt.pair_basis[q] / n, j = bt.pair_basis[q] % n;
    for (std::size_t b = 0; b < b_dim; ++b) {
      const SparseVec left = bt.pair_coords(flat_outer(t.basis_vec(i), bl[b][j], n));
      for (std::size_t k = 0; k < n; ++k)
        rels.push_back(flat_outer(left, t.basis_vec(k), n) - flat_outer(SparseVec::unit(q, t.field.one()), ar[b][k], n));
    }
  }
  bt.triple = Quotient(bt.pair_basis.size() * n, rels);
  return bt;
}

HopfAlgebroid from_hopf(const Presentation& h) {
  HopfAlgebroid p;
  const std::size_t n = h.dim();
  p.total = h.alg;
  p.base = hopf::trivial_hopf(h.field()).alg;
  p.alpha = LinearMap(1, n, {h.one()});
  p.beta = p.alpha;
  p.delta = h.comult;
  p.eps = LinearMap::from_function(n, 1, [&](std::size_t i) { return SparseVec::unit(0, h.counit[i]); });
  if (h.antipode) {
    p.tau = *h.antipode;
    p.tau_inv = inverse(*h.antipode);
  }
  p.gamma = LinearMap::identity(n * n, h.field());
  p.tensor = balanced_tensor(p.total, p.alpha, p.beta, 1);
  return p;
}

namespace {

// sum c f(t_i) g(t_j) for a representative in T (x) T
template <class F, class G>
SparseVec contract(const HopfAlgebroid& p, const SparseVec& x, F&& f, G&& g) {
  const std::size_t n = p.total.dim;
  Accumulator acc;
  for (const auto& [ij, c] : x) acc.add(p.total.mul(f(ij / n), g(ij % n)), c);
  return acc.take();
}

SparseVec delta_of(const HopfAlgebroid& p, const SparseVec& t) {
  Accumulator acc;
  for (const auto& [i, c] : t) acc.add(p.delta[i], c);
  return acc.take();
}

}  // namespace

VerdictReport check_bialgebroid(const HopfAlgebroid& p) {
  VerdictReport rep("bialgebroid");
  const Algebra& T = p.total;
  const Algebra& B = p.base;
  const BalancedTensor& bt = p.tensor;
  const std::size_t n = T.dim, d = B.dim;
  auto tl = [&](std::size_t i) { return T.basis[i]; };
  auto bl = [&](std::size_t i) { return B.basis[i]; };
  auto al = [&](const SparseVec& b) { return p.alpha.apply(b); };
  auto be = [&](const SparseVec& b) { return p.beta.apply(b); };
  auto te = [&](std::size_t i) { return T.basis_vec(i); };
  const std::vector<const Algebra*> legs2{&T, &T};
  auto tmul2 = [&](const SparseVec& x, const SparseVec& y) {
    return tensor_power_product(legs2, Tensor({n, n}, x), Tensor({n, n}, y)).coeffs();
  };

  rep.add("alpha(1) = 1").check(al(B.unit) == T.unit);
  Verdict& am = rep.add("alpha(xy) = alpha(x) alpha(y)");
  Verdict& bm = rep.add("beta(xy) = beta(y) beta(x)");
  Verdict& ab = rep.add("alpha(b) beta(b') = beta(b') alpha(b)");
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const SparseVec ax = al(B.basis_vec(x)), ay = al(B.basis_vec(y));
      const SparseVec bx = be(B.basis_vec(x)), by = be(B.basis_vec(y));
      am.check(al(B.product(x, y)) == T.mul(ax, ay), [&] { return bl(x) + ", " + bl(y); });
      bm.check(be(B.product(x, y)) == T.mul(by, bx), [&] { return bl(x) + ", " + bl(y); });
      ab.check(T.mul(ax, by) == T.mul(by, ax), [&] { return bl(x) + ", " + bl(y); });
    }
  rep.add("beta(1) = 1").check(be(B.unit) == T.unit);
  rep.note("T (x)_B T dim", std::to_string(bt.pair.dim()));
  rep.note("T (x)_B T (x)_B T dim", std::to_string(bt.triple.dim()));

  rep.add("Delta(1) = 1 (x) 1").check(bt.pair.equal(delta_of(p, T.unit), flat_outer(T.unit, T.unit, n)));
  Verdict& dl = rep.add("Delta(alpha(b) t) = (alpha(b) (x) 1) Delta(t)");
  Verdict& dr = rep.add("Delta(beta(b) t) = (1 (x) beta(b)) Delta(t)");
  Verdict& xu1 = rep.add("Delta(t)(beta(b) (x) 1 - 1 (x) alpha(b)) = 0");
  for (std::size_t b = 0; b < d; ++b) {
    const SparseVec ab_ = al(B.basis_vec(b)), bb_ = be(B.basis_vec(b));
    const SparseVec a1 = flat_outer(ab_, T.unit, n), b2 = flat_outer(T.unit, bb_, n);
    const SparseVec b1 = flat_outer(bb_, T.unit, n), a2 = flat_outer(T.unit, ab_, n);
    for (std::size_t t = 0; t < n; ++t) {
      const SparseVec& dt = p.delta[t];
      dl.check(bt.pair.equal(delta_of(p, T.mul(ab_, te(t))), tmul2(a1, dt)), [&] { return bl(b) + ", " + tl(t); });
      dr.check(bt.pair.equal(delta_of(p, T.mul(bb_, te(t))), tmul2(b2, dt)), [&] { return bl(b) + ", " + tl(t); });
      xu1.check(bt.pair.equal(tmul2(dt, b1), tmul2(dt, a2)), [&] { return tl(t) + ", " + bl(b); });
    }
  }
  Verdict& co = rep.add("(Delta (x) id) Delta = (id (x) Delta) Delta");
  for (std::size_t t = 0; t < n; ++t) {
    Accumulator l, r;
    for (const auto& [ij, c] : p.delta[t]) {
      add_outer(l, p.delta[ij / n], te(ij % n), n, c);
      add_outer(r, te(ij / n), p.delta[ij % n], n * n, c);
    }
    co.check(bt.project3(l.take() - r.take()).empty(), [&] { return tl(t); });
  }
  Verdict& xu2 = rep.add("Delta(t t') = Delta(t) Delta(t')");
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      xu2.check(bt.pair.equal(delta_of(p, T.product(t, s)), tmul2(p.delta[t], p.delta[s])),
                [&] { return tl(t) + ", " + tl(s); });

  auto eps = [&](const SparseVec& t) { return p.eps.apply(t); };
  rep.add("eps(1) = 1").check(eps(T.unit) == B.unit);
  Verdict& ea = rep.add("eps alpha = id");
  Verdict& eb = rep.add("eps beta = id");
  for (std::size_t b = 0; b < d; ++b) {
    ea.check(eps(al(B.basis_vec(b))) == B.basis_vec(b), [&] { return bl(b); });
    eb.check(eps(be(B.basis_vec(b))) == B.basis_vec(b), [&] { return bl(b); });
  }
  Verdict& el = rep.add("eps(alpha(b) t) = b eps(t)");
  Verdict& er = rep.add("eps(beta(b) t) = eps(t) b");
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t t = 0; t < n; ++t) {
      el.check(eps(T.mul(al(B.basis_vec(b)), te(t))) == B.mul(B.basis_vec(b), eps(te(t))), [&] { return bl(b) + ", " + tl(t); });
      er.check(eps(T.mul(be(B.basis_vec(b)), te(t))) == B.mul(eps(te(t)), B.basis_vec(b)), [&] { return bl(b) + ", " + tl(t); });
    }
  // lambda (eps (x) id) and rho (id (x) eps) on representatives
  auto lam = [&](const SparseVec& x) { return contract(p, x, [&](std::size_t i) { return al(eps(te(i))); }, te); };
  auto rho = [&](const SparseVec& x) {
    const std::size_t m = n;
    Accumulator acc;
    for (const auto& [ij, c] : x) acc.add(T.mul(be(eps(te(ij % m))), te(ij / m)), c);
    return acc.take();
  };
  Verdict& lwd = rep.add("lambda (eps (x) id) kills the relations");
  Verdict& rwd = rep.add("rho (id (x) eps) kills the relations");
  std::size_t k = 0;
  for (const SparseVec& r : balanced_relations(T, p.alpha, p.beta, d)) {
    lwd.check(lam(r).empty(), [&] { return "relation " + std::to_string(k); });
    rwd.check(rho(r).empty(), [&] { return "relation " + std::to_string(k); });
    ++k;
  }
  Verdict& cl = rep.add("lambda (eps (x) id) Delta = id");
  Verdict& cr = rep.add("rho (id (x) eps) Delta = id");
  for (std::size_t t = 0; t < n; ++t) {
    cl.check(lam(p.delta[t]) == te(t), [&] { return tl(t); });
    cr.check(rho(p.delta[t]) == te(t), [&] { return tl(t); });
  }
  const std::vector<SparseVec> ker = kernel_basis(p.eps, T.field);
  rep.note("dim ker eps", std::to_string(ker.size()));
  Verdict& ki = rep.add("ker eps is a left ideal");
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < ker.size(); ++j)
      ki.check(eps(T.mul(te(t), ker[j])).empty(), [&] { return tl(t) + ", kernel vector " + std::to_string(j); });
  return rep;
}

VerdictReport check_hopf_algebroid(const HopfAlgebroid& p) {
  VerdictReport rep("hopf algebroid");
  if (!p.tau) {
    rep.fail("antipode present", "no tau");
    return rep;
  }
  const Algebra& T = p.total;
  const Algebra& B = p.base;
  const BalancedTensor& bt = p.tensor;
  const std::size_t n = T.dim, d = B.dim;
  const LinearMap& tau = *p.tau;
  auto tl = [&](std::size_t i) { return T.basis[i]; };
  auto te = [&](std::size_t i) { return T.basis_vec(i); };

  Verdict& anti = rep.add("tau(xy) = tau(y) tau(x)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      anti.check(tau.apply(T.product(x, y)) == T.mul(tau.column(y), tau.column(x)), [&] { return tl(x) + ", " + tl(y); });
  const auto inv = inverse(tau);
  rep.add("tau bijective").check(inv.has_value());
  if (p.tau_inv) {
    const LinearMap id = LinearMap::identity(n, T.field);
    rep.add("tau^-1 tau = id").check(p.tau_inv->compose(tau) == id);
    rep.add("tau tau^-1 = id").check(tau.compose(*p.tau_inv) == id);
  }
  Verdict& tb = rep.add("tau beta = alpha");
  for (std::size_t b = 0; b < d; ++b)
    tb.check(tau.apply(p.beta.column(b)) == p.alpha.column(b), [&] { return B.basis[b]; });
  // allowed to fail, so only recorded
  bool et = true;
  for (std::size_t t = 0; t < n; ++t) et = et && p.eps.apply(tau.column(t)) == p.eps.column(t);
  rep.note("eps tau = eps", et);

  auto left = [&](const SparseVec& x) { return contract(p, x, [&](std::size_t i) { return tau.column(i); }, te); };
  const std::vector<SparseVec> rels = balanced_relations(T, p.alpha, p.beta, d);
  Verdict& lwd = rep.add("m (tau (x) id) kills the relations");
  for (std::size_t k = 0; k < rels.size(); ++k) lwd.check(left(rels[k]).empty(), [&] { return "relation " + std::to_string(k); });
  Verdict& a3 = rep.add("m (tau (x) id) Delta = beta eps tau");
  for (std::size_t t = 0; t < n; ++t)
    a3.check(left(p.delta[t]) == p.beta.apply(p.eps.apply(tau.column(t))), [&] { return tl(t); });

  if (!p.gamma) {
    rep.fail("section gamma present", "no gamma");
    return rep;
  }
  const LinearMap& g = *p.gamma;
  Verdict& gw = rep.add("gamma kills the relations");
  for (std::size_t k = 0; k < rels.size(); ++k) gw.check(g.apply(rels[k]).empty(), [&] { return "relation " + std::to_string(k); });
  Verdict& gs = rep.add("p gamma = id");
  for (std::size_t x = 0; x < n * n; ++x)
    gs.check(bt.pair.equal(g.apply(SparseVec::unit(x, T.field.one())), SparseVec::unit(x, T.field.one())),
             [&] { return tl(x / n) + " (x) " + tl(x % n); });
  Verdict& a4 = rep.add("m (id (x) tau) gamma Delta = alpha eps");
  for (std::size_t t = 0; t < n; ++t) {
    const SparseVec lhs = contract(p, g.apply(p.delta[t]), te, [&](std::size_t j) { return tau.column(j); });
    a4.check(lhs == p.alpha.apply(p.eps.column(t)), [&] { return tl(t); });
  }
  return rep;
}

VLAlgebroid build_VL_algebroid(const ModuleAlgebra& m, const std::optional<Subspace>& lsub) {
  VLAlgebroid a;
  a.module = m;
  VerdictReport& pre = a.preconditions;
  pre = VerdictReport("V # L preconditions");
  pre.merge(check_module_algebra(m), "module algebra: ");
  pre.merge(check_quantum_commutative(m), "V: ");
  const Presentation& h = m.h;
  const std::size_t n = h.dim(), dv = m.v.dim;
  const Field& f = h.field();
  a.l = lsub ? *lsub : rank_factorization(h).l;
  const std::size_t ml = a.l.dim();
  auto lh = sub_hopf(h, a.l, pre, "L: ");
  const Tensor& R = h.r_matrix();
  const LinearMap& cm = a.l.coordinate_map();
  const LinearMap idn = LinearMap::identity(n, f);
  const Tensor rl = map_legs(R, {&cm, &idn});
  pre.add("R in L (x) H").check(map_legs(rl, {&a.l.inclusion(), &idn}) == R);
  if (!pre.passed()) throw PreconditionError("V # L preconditions failed", pre);
  a.l_hopf = *lh;
  const Presentation& L = a.l_hopf;
  a.l_action.resize(ml * dv);
  for (std::size_t i = 0; i < ml; ++i)
    for (std::size_t k = 0; k < dv; ++k) a.l_action[i * dv + k] = m.act(a.l.basis()[i], m.v.basis_vec(k));
  auto lact = [&](std::size_t i, const SparseVec& w) { return bilinear(a.l_action, dv, SparseVec::unit(i, f.one()), w); };

  HopfAlgebroid& p = a.p;
  const std::size_t N = dv * ml;
  Algebra& T = p.total;
  T.field = f;
  T.dim = N;
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t l = 0; l < ml; ++l) T.basis.push_back(m.v.basis[v] + "#" + L.basis()[l]);
  // (v # l)(w # l') = sum v (l1 . w) # l2 l'
  T.table.resize(N * N);
  for (std::size_t l = 0; l < ml; ++l) {
    const auto dl = terms2(L.delta(l));
    for (std::size_t w = 0; w < dv; ++w) {
      std::vector<std::pair<Scalar, std::pair<SparseVec, std::size_t>>> parts;
      for (const auto& [c, l1, l2] : dl) parts.push_back({c, {lact(l1, m.v.basis_vec(w)), l2}});
      for (std::size_t v = 0; v < dv; ++v)
        for (std::size_t l2p = 0; l2p < ml; ++l2p) {
          Accumulator acc;
          for (const auto& [c, part] : parts)
            add_outer(acc, m.v.mul(m.v.basis_vec(v), part.first), L.alg.product(part.second, l2p), ml, c);
          T.table[(v * ml + l) * N + (w * ml + l2p)] = acc.take();
        }
    }
  }
  T.unit = flat_outer(m.v.unit, L.one(), ml);
  p.base = m.v;
  p.alpha = LinearMap::from_function(dv, N, [&](std::size_t v) { return flat_outer(m.v.basis_vec(v), L.one(), ml); });
  // beta(v) = sum R2 . v # R1
  const auto rt = terms2(rl);
  p.beta = LinearMap::from_function(dv, N, [&](std::size_t v) {
    Accumulator acc;
    for (const auto& [c, i, b] : rt) add_outer(acc, m.act(h.e(b), m.v.basis_vec(v)), L.e(i), ml, c);
    return acc.take();
  });
  auto hash1 = [&](const SparseVec& l) { return flat_outer(m.v.unit, l, ml); };
  p.delta.resize(N);
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t l = 0; l < ml; ++l) {
      Accumulator acc;
      for (const auto& [c, l1, l2] : terms2(L.delta(l)))
        add_outer(acc, SparseVec::unit(v * ml + l1, f.one()), hash1(L.e(l2)), N, c);
      p.delta[v * ml + l] = acc.take();
    }
  p.eps = LinearMap::from_function(N, dv, [&](std::size_t t) { return m.v.basis_vec(t / ml).scaled(L.counit[t % ml]); });

  a.d0 = doubles::factorizability(h).d0;
  const LinearMap& S = L.antipode_map();
  const auto s_inv = inverse(S);
  if (!s_inv) throw SingularError("antipode of L is not invertible");
  // tau(v # l) = (1 # S(l)) beta(d0 . v), tau^-1(v # l) = (1 # S^-1(l)) beta(v)
  p.tau = LinearMap::from_function(N, N, [&](std::size_t t) {
    return T.mul(hash1(S.column(t % ml)), p.beta.apply(m.act(a.d0, m.v.basis_vec(t / ml))));
  });
  p.tau_inv = LinearMap::from_function(N, N, [&](std::size_t t) {
    return T.mul(hash1(s_inv->column(t % ml)), p.beta.column(t / ml));
  });
  // gamma((v # l) (x) (v' # l')) = beta(v')(v # l) (x) (1 # l')
  p.gamma = LinearMap::from_function(N * N, N * N, [&](std::size_t x) {
    const std::size_t t = x / N, s = x % N;
    return flat_outer(T.mul(p.beta.column(s / ml), T.basis_vec(t)), hash1(L.e(s % ml)), N);
  });
  p.tensor = balanced_tensor(T, p.alpha, p.beta, dv);
  return a;
}

VerdictReport check_vl_identities(const VLAlgebroid& a) {
  VerdictReport rep("V # L identities");
  const ModuleAlgebra& m = a.module;
  const Presentation& h = m.h;
  const Presentation& L = a.l_hopf;
  const HopfAlgebroid& p = a.p;
  const std::size_t dv = m.v.dim, ml = L.dim(), n = h.dim();
  const Field& f = h.field();
  const LinearMap& cm = a.l.coordinate_map();
  const LinearMap idn = LinearMap::identity(n, f);
  const auto rt = terms2(map_legs(h.r_matrix(), {&cm, &idn}));
  auto lact = [&](std::size_t i, const SparseVec& w) { return bilinear(a.l_action, dv, SparseVec::unit(i, f.one()), w); };
  auto hash = [&](const SparseVec& v, const SparseVec& l) { return flat_outer(v, l, ml); };
  auto vl = [&](std::size_t v, std::size_t l) { return m.v.basis[v] + "#" + L.basis()[l]; };

  Verdict& rm = rep.add("(w # l).v = sum w (r2 . v) # r1 l");
  for (std::size_t w = 0; w < dv; ++w)
    for (std::size_t l = 0; l < ml; ++l)
      for (std::size_t v = 0; v < dv; ++v) {
        Accumulator acc;
        for (const auto& [c, i, b] : rt)
          add_outer(acc, m.v.mul(m.v.basis_vec(w), m.act(h.e(b), m.v.basis_vec(v))), L.alg.product(i, l), ml, c);
        rm.check(p.total.mul(p.beta.column(v), p.total.basis_vec(w * ml + l)) == acc.take(),
                 [&] { return vl(w, l) + ", " + m.v.basis[v]; });
      }
  Verdict& bi = rep.add("sum beta(l2 . v)(1 # l1) = (1 # l) beta(v)");
  for (std::size_t l = 0; l < ml; ++l)
    for (std::size_t v = 0; v < dv; ++v) {
      Accumulator acc;
      for (const auto& [c, l1, l2] : terms2(L.delta(l)))
        acc.add(p.total.mul(p.beta.apply(lact(l2, m.v.basis_vec(v))), hash(m.v.unit, L.e(l1))), c);
      bi.check(acc.take() == p.total.mul(hash(m.v.unit, L.e(l)), p.beta.column(v)),
               [&] { return L.basis()[l] + ", " + m.v.basis[v]; });
    }
  rep.merge(doubles::check_drinfeld_element(h), "d0: ");
  Verdict& dm = rep.add("d0 . (vw) = (d0 . v)(d0 . w)");
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t w = 0; w < dv; ++w)
      dm.check(m.act(a.d0, m.v.product(v, w)) == m.v.mul(m.act(a.d0, m.v.basis_vec(v)), m.act(a.d0, m.v.basis_vec(w))),
               [&] { return m.v.basis[v] + ", " + m.v.basis[w]; });
  const LinearMap d0v = LinearMap::from_function(dv, dv, [&](std::size_t v) { return m.act(a.d0, m.v.basis_vec(v)); });
  rep.add("d0 acts bijectively on V").check(inverse(d0v).has_value());
  return rep;
}

ModuleAlgebra lu_module(const Presentation& a) {
  ModuleAlgebra m;
  m.h = doubles::drinfeld_double(a);
  const Presentation d = hopf::dual_hopf(a);
  const std::size_t n = a.dim();
  m.v = d.alg;
  const auto s_inv = inverse(a.antipode_map());
  if (!s_inv) throw SingularError("antipode is not invertible");
  const LinearMap ds_inv = s_inv->transpose();
  m.action.resize(n * n * n);
  // (p (x) b) -> q = sum q2(b) p2 q1 S*^-1(p1)
  for (std::size_t p = 0; p < n; ++p) {
    const auto dp = terms2(d.delta(p));
    for (std::size_t q = 0; q < n; ++q) {
      const auto dq = terms2(d.delta(q));
      for (std::size_t b = 0; b < n; ++b) {
        Accumulator acc;
        for (const auto& [c, q1, q2] : dq) {
          if (q2 != b) continue;
          for (const auto& [c2, p1, p2] : dp) acc.add(d.mul(d.mul(d.e(p2), d.e(q1)), ds_inv.column(p1)), c * c2);
        }
        m.action[(p * n + b) * n + q] = acc.take();
      }
    }
  }
  return m;
}

ModuleAlgebra remark_module(const Presentation& a) {
  ModuleAlgebra m;
  m.h = doubles::drinfeld_double(a);
  const std::size_t n = a.dim();
  m.v = a.alg;
  const LinearMap& S = a.antipode_map();
  const auto s_inv = inverse(S);
  if (!s_inv) throw SingularError("antipode is not invertible");
  const LinearMap ds_inv = s_inv->transpose();
  // y <- q = sum q(y1) y2
  auto hit = [&](const SparseVec& y, const SparseVec& q) {
    Accumulator acc;
    for (const auto& [i, c] : y)
      for (const auto& [c2, y1, y2] : terms2(a.delta(i))) acc.add(y2, c * c2 * q[y1]);
    return acc.take();
  };
  m.action.resize(n * n * n);
  // (p (x) x).b = sum (x1 b S(x2)) <- S^-1(p)
  for (std::size_t x = 0; x < n; ++x) {
    const auto dx = terms2(a.delta(x));
    for (std::size_t b = 0; b < n; ++b) {
      Accumulator conj;
      for (const auto& [c, x1, x2] : dx) conj.add(a.mul(a.alg.product(x1, b), S.column(x2)), c);
      const SparseVec y = conj.take();
      for (std::size_t p = 0; p < n; ++p) m.action[(p * n + x) * n + b] = hit(y, ds_inv.column(p));
    }
  }
  return m;
}

ModuleAlgebra heisenberg_module(const Presentation& a) {
  ModuleAlgebra m;
  const Presentation D = doubles::drinfeld_double(a);
  m.h = hopf::tensor_hopf(D, hopf::variant(D, hopf::Variant::op_cop));
  const star::StarProduct s = star::build_star_product(D);
  m.v = doubles::heisenberg_double(a);
  const std::size_t N = D.dim();
  m.action.resize(N * N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t k = 0; k < N; ++k) m.action[(x * N + y) * N + k] = s.both(D.e(x), s.e(k), D.e(y));
  return m;
}

CorollaryInstance corollary_instance(const Presentation& a) {
  CorollaryInstance out;
  VerdictReport& rep = out.report;
  rep = VerdictReport("corollary instance");
  const std::size_t n = a.dim(), N = n * n;
  const ModuleAlgebra m = heisenberg_module(a);
  {
    const Presentation D = doubles::drinfeld_double(a);
    rep.add("V = D(A)*_R").check(star::build_star_product(D).alg.table == m.v.table);
  }
  out.algebroid = build_VL_algebroid(m);
  const VLAlgebroid& vl = out.algebroid;
  rep.note("rank", std::to_string(vl.l.dim()));
  rep.note("total dim", std::to_string(vl.p.total.dim));
  rep.note("base dim", std::to_string(vl.p.base.dim));

  // (eps (x) e_i) (x) (e^j (x) 1) in D (x) D
  auto j_elem = [&](std::size_t i, std::size_t jj) {
    Accumulator first, second;
    for (const auto& [p, c] : a.counit) first.add(p * n + i, c);
    for (const auto& [x, c] : a.one()) second.add(jj * n + x, c);
    return flat_outer(first.take(), second.take(), N);
  };
  const Presentation ap = hopf::tensor_hopf(a, hopf::variant(hopf::dual_hopf(a), hopf::Variant::op));
  Verdict& inl = rep.add("(eps (x) a) (x) (p (x) 1) in L");
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = vl.l.coords(j_elem(i, j));
      inl.check(c.has_value(), [&] { return a.basis()[i] + ", " + dual_label(j); });
      cols.push_back(c ? *c : SparseVec());
    }
  if (inl.passed()) {
    const LinearMap F(N, vl.l.dim(), cols);
    rep.add("A (x) A*op -> L bijective").check(N == vl.l.dim() && inverse(F).has_value());
    rep.merge(hopf::check_morphism(F, ap, vl.l_hopf, false), "A (x) A*op -> L: ");
  }
  const Presentation dual = hopf::dual_hopf(a);
  Verdict& fm = rep.add("(a (x) p).(b # q) = sum p(b1) q2(a) (b2 # q1)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t q = 0; q < n; ++q) {
          Accumulator acc;
          for (const auto& [c, b1, b2] : terms2(a.delta(b))) {
            if (b1 != j) continue;
            for (const auto& [c2, q1, q2] : terms2(dual.delta(q)))
              if (q2 == i) acc.add(b2 * n + q1, c * c2);
          }
          fm.check(m.act(j_elem(i, j), m.v.basis_vec(b * n + q)) == acc.take(),
                   [&] { return a.basis()[i] + ", " + dual_label(j) + ", " + m.v.basis[b * n + q]; });
        }
  rep.merge(check_bialgebroid(vl.p), "bialgebroid: ");
  rep.merge(check_hopf_algebroid(vl.p), "hopf algebroid: ");
  rep.merge(check_vl_identities(vl), "V # L: ");
  return out;
}

void write_bundle(const HopfAlgebroid& p, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  io::write_file((fs::path(dir) / "T.json").string(), io::write_algebra(p.total, true));
  io::write_file((fs::path(dir) / "B.json").string(), io::write_algebra(p.base, true));
  using nlohmann::ordered_json;
  ordered_json maps;
  auto mat = [](const LinearMap& m) { return ordered_json::parse(io::write_matrix_rows(m)); };
  maps["alpha"] = mat(p.alpha);
  maps["beta"] = mat(p.beta);
  maps["delta"] = mat(LinearMap(p.total.dim, p.total.dim * p.total.dim, p.delta));
  maps["eps"] = mat(p.eps);
  if (p.tau) maps["tau"] = mat(*p.tau);
  if (p.tau_inv) maps["tau_inv"] = mat(*p.tau_inv);
  maps["balanced_dim"] = p.tensor.pair.dim();
  io::write_file((fs::path(dir) / "maps.json").string(), maps.dump(2) + "\n");
}

}  // namespace hopfkit::algebroid
