#include "hopfkit/vertex.hpp"

#include "terms.hpp"

namespace hopfkit::vertex {

namespace {

using detail::bilinear;
using detail::delta3;
using detail::dual_label;
using detail::terms2;

SparseVec flat_outer(const SparseVec& a, const SparseVec& b, std::size_t m) {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.emplace_back(i * m + j, x * y);
  return SparseVec::from_entries(std::move(out));
}

// eps (x) x inside D(A), index p * n + x
SparseVec in_double(const Presentation& a, const SparseVec& x) {
  Accumulator acc;
  for (const auto& [p, c] : a.counit)
    for (const auto& [i, d] : x) acc.add(p * a.dim() + i, c * d);
  return acc.take();
}

// Coordinates in L of eps (x) e_x for every basis x of A, as a map A -> L.
LinearMap a_to_l(const Presentation& a, const algebroid::Subspace& l, Verdict& v) {
  return LinearMap::from_function(a.dim(), l.dim(), [&](std::size_t x) {
    const auto c = l.coords(in_double(a, a.e(x)));
    v.check(c.has_value(), [&] { return a.basis()[x]; });
    return c ? *c : SparseVec();
  });
}

// multiplication table of T moved along an injective map F into another algebra
VerdictReport compare_transport(const Algebra& src, const Algebra& dst, const LinearMap& f, const std::string& name) {
  VerdictReport rep;
  Verdict& v = rep.add(name);
  for (std::size_t i = 0; i < src.dim; ++i)
    for (std::size_t j = 0; j < src.dim; ++j)
      v.check(f.apply(src.product(i, j)) == dst.mul(f.column(i), f.column(j)),
              [&] { return src.basis[i] + ", " + src.basis[j]; });
  rep.add(name + ": unit").check(f.apply(src.unit) == dst.unit);
  return rep;
}

}  // namespace

SparseVec VertexGroupData::act_left(const SparseVec& x, const SparseVec& v) const {
  return bilinear(left, k.dim, x, v);
}

SparseVec VertexGroupData::act_right(const SparseVec& v, const SparseVec& x) const {
  return bilinear(right, h.dim(), v, x);
}

VerdictReport check_vertex_group(const VertexGroupData& v) {
  if (!hopf::is_cocommutative(v.h)) throw PresentationError("a vertex group needs a cocommutative Hopf algebra");
  VerdictReport rep("vertex group");
  const Presentation& h = v.h;
  const Algebra& K = v.k;
  const std::size_t n = h.dim(), d = K.dim;
  const Presentation hd = hopf::dual_hopf(h);
  const hopf::RegularActions ra = hopf::regular_actions(h);
  const LinearMap& S = h.antipode_map();
  const LinearMap& Sd = hd.antipode_map();
  auto hl = [&](std::size_t x) { return h.basis()[x]; };
  auto kl = [&](std::size_t j) { return K.basis[j]; };
  auto ke = [&](std::size_t j) { return K.basis_vec(j); };
  auto L = [&](const SparseVec& x, const SparseVec& k) { return v.act_left(x, k); };
  auto R = [&](const SparseVec& k, const SparseVec& x) { return v.act_right(k, x); };

  Verdict& l1 = rep.add("1 . k = k");
  Verdict& r1 = rep.add("k . 1 = k");
  for (std::size_t j = 0; j < d; ++j) {
    l1.check(L(h.one(), ke(j)) == ke(j), [&] { return kl(j); });
    r1.check(R(ke(j), h.one()) == ke(j), [&] { return kl(j); });
  }
  Verdict& la = rep.add("(xy) . k = x . (y . k)");
  Verdict& ra_ = rep.add("k . (xy) = (k . x) . y");
  Verdict& lr = rep.add("(x . k) . y = x . (k . y)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const SparseVec xy = h.alg.product(x, y);
      for (std::size_t j = 0; j < d; ++j) {
        auto w = [&] { return hl(x) + ", " + hl(y) + ", " + kl(j); };
        la.check(L(xy, ke(j)) == L(h.e(x), L(h.e(y), ke(j))), w);
        ra_.check(R(ke(j), xy) == R(R(ke(j), h.e(x)), h.e(y)), w);
        lr.check(R(L(h.e(x), ke(j)), h.e(y)) == L(h.e(x), R(ke(j), h.e(y))), w);
      }
    }
  Verdict& lu = rep.add("x . 1 = eps(x) 1");
  Verdict& ru = rep.add("1 . x = eps(x) 1");
  Verdict& lm = rep.add("x . (kk') = sum (x1 . k)(x2 . k')");
  Verdict& rm = rep.add("(kk') . x = sum (k . x1)(k' . x2)");
  for (std::size_t x = 0; x < n; ++x) {
    lu.check(L(h.e(x), K.unit) == K.unit.scaled(h.counit[x]), [&] { return hl(x); });
    ru.check(R(K.unit, h.e(x)) == K.unit.scaled(h.counit[x]), [&] { return hl(x); });
    const auto dx = terms2(h.delta(x));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Accumulator l, r;
        for (const auto& [c, x1, x2] : dx) {
          l.add(K.mul(L(h.e(x1), ke(i)), L(h.e(x2), ke(j))), c);
          r.add(K.mul(R(ke(i), h.e(x1)), R(ke(j), h.e(x2))), c);
        }
        auto w = [&] { return hl(x) + ", " + kl(i) + ", " + kl(j); };
        lm.check(L(h.e(x), K.product(i, j)) == l.take(), w);
        rm.check(R(K.product(i, j), h.e(x)) == r.take(), w);
      }
  }

  rep.add("alpha(eps) = 1").check(v.alpha.apply(hd.one()) == K.unit);
  Verdict& am = rep.add("alpha(pq) = alpha(p) alpha(q)");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      am.check(v.alpha.apply(hd.alg.product(p, q)) == K.mul(v.alpha.column(p), v.alpha.column(q)),
               [&] { return dual_label(p) + ", " + dual_label(q); });
  Verdict& al = rep.add("alpha(x -> p) = x . alpha(p)");
  Verdict& ar = rep.add("alpha(p <- x) = alpha(p) . x");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t p = 0; p < n; ++p) {
      al.check(v.alpha.apply(ra.left[x * n + p]) == L(h.e(x), v.alpha.column(p)), [&] { return hl(x) + ", " + dual_label(p); });
      ar.check(v.alpha.apply(ra.right[p * n + x]) == R(v.alpha.column(p), h.e(x)), [&] { return dual_label(p) + ", " + hl(x); });
    }

  const LinearMap& tau = v.tau;
  Verdict& ta = rep.add("tau(kk') = tau(k') tau(k)");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      ta.check(tau.apply(K.product(i, j)) == K.mul(tau.column(j), tau.column(i)), [&] { return kl(i) + ", " + kl(j); });
  rep.add("tau bijective").check(inverse(tau).has_value());
  Verdict& tal = rep.add("tau(alpha(p)) = alpha(S(p))");
  for (std::size_t p = 0; p < n; ++p)
    tal.check(tau.apply(v.alpha.column(p)) == v.alpha.apply(Sd.column(p)), [&] { return dual_label(p); });
  Verdict& tl = rep.add("tau(x . k) = tau(k) . S(x)");
  Verdict& tr = rep.add("tau(k . x) = S(x) . tau(k)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < d; ++j) {
      tl.check(tau.apply(L(h.e(x), ke(j))) == R(tau.column(j), S.column(x)), [&] { return hl(x) + ", " + kl(j); });
      tr.check(tau.apply(R(ke(j), h.e(x))) == L(S.column(x), tau.column(j)), [&] { return kl(j) + ", " + hl(x); });
    }
  rep.note("tau^2 = id", tau.compose(tau) == LinearMap::identity(d, K.field));
  rep.note("K commutative", hopf::is_commutative(K));
  return rep;
}

VertexGroupData dual_vertex_group(const Presentation& h) {
  VertexGroupData v;
  v.h = h;
  const Presentation hd = hopf::dual_hopf(h);
  v.k = hd.alg;
  const hopf::RegularActions ra = hopf::regular_actions(h);
  v.left = ra.left;
  v.right = ra.right;
  v.alpha = LinearMap::identity(h.dim(), h.field());
  v.tau = hd.antipode_map();
  return v;
}

VertexGroupData heisenberg_vertex_group(const Presentation& a) {
  if (!hopf::is_cocommutative(a)) throw PresentationError("the Heisenberg vertex group needs a cocommutative Hopf algebra");
  const std::size_t n = a.dim(), N = n * n;
  const Field& f = a.field();
  const LinearMap& S = a.antipode_map();
  if (S.compose(S) != LinearMap::identity(n, f)) throw PresentationError("S^2 is not the identity");
  const Presentation d = hopf::dual_hopf(a);
  const LinearMap& Sd = d.antipode_map();
  VertexGroupData v;
  v.h = a;
  v.k = doubles::heisenberg_double(a);
  v.alpha = LinearMap::from_function(n, N, [&](std::size_t p) { return flat_outer(a.one(), d.e(p), n); });
  // a -> (b # p) = sum p2(a) (b # p1)
  v.left.resize(n * N);
  for (std::size_t p = 0; p < n; ++p) {
    const auto dp = terms2(d.delta(p));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < n; ++b) {
        Accumulator acc;
        for (const auto& [c, p1, p2] : dp) acc.add(b * n + p1, c * pair(d.e(p2), a.e(x)));
        v.left[x * N + b * n + p] = acc.take();
      }
  }
  // (b # p) <- a = sum p1(a1) (S(a2) b a3 # p2)
  v.right.resize(N * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto dx = delta3(a, x);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t p = 0; p < n; ++p) {
        Accumulator acc;
        for (const auto& [c, p1, p2] : terms2(d.delta(p)))
          for (const auto& [c2, x1, x2, x3] : dx) {
            const Scalar w = c * c2 * pair(d.e(p1), a.e(x1));
            if (w.is_zero()) continue;
            acc.add(flat_outer(a.mul(a.mul(S.column(x2), a.e(b)), a.e(x3)), d.e(p2), n), w);
          }
        v.right[(b * n + p) * n + x] = acc.take();
      }
  }
  // tau(a # p) = sum (S(p) -> (e_i a)) e_j # S(e^j) e^i, q -> y = sum q(y2) y1
  auto hit = [&](const SparseVec& q, const SparseVec& y) {
    Accumulator acc;
    for (const auto& [i, c] : y)
      for (const auto& [c2, y1, y2] : terms2(a.delta(i))) acc.add(y1, c * c2 * q[y2]);
    return acc.take();
  };
  v.tau = LinearMap::from_function(N, N, [&](std::size_t t) {
    const std::size_t x = t / n, p = t % n;
    Accumulator acc;
    for (std::size_t i = 0; i < n; ++i) {
      const SparseVec left = hit(Sd.column(p), a.alg.product(i, x));
      for (std::size_t j = 0; j < n; ++j)
        acc.add(flat_outer(a.mul(left, a.e(j)), d.mul(Sd.column(j), d.e(i)), n));
    }
    return acc.take();
  });
  return v;
}

VerdictReport restricted_action_check(const Presentation& a) {
  return restricted_action_check(a, heisenberg_vertex_group(a));
}

VerdictReport restricted_action_check(const Presentation& a, const VertexGroupData& v) {
  VerdictReport rep("restricted actions");
  const star::StarProduct s = star::build_star_product(doubles::drinfeld_double(a));
  const std::size_t n = a.dim(), N = n * n;
  Verdict& l = rep.add("a -> f = (eps (x) a) -> f");
  Verdict& r = rep.add("f <- a = f <- (eps (x) a)");
  for (std::size_t x = 0; x < n; ++x) {
    const SparseVec j = in_double(a, a.e(x));
    for (std::size_t k = 0; k < N; ++k) {
      l.check(v.act_left(a.e(x), v.k.basis_vec(k)) == s.left(j, s.e(k)), [&] { return a.basis()[x] + ", " + v.k.basis[k]; });
      r.check(v.act_right(v.k.basis_vec(k), a.e(x)) == s.right(s.e(k), j), [&] { return v.k.basis[k] + ", " + a.basis()[x]; });
    }
  }
  return rep;
}

VerdictReport tau_cross_check(const Presentation& a) {
  std::optional<VertexGroupData> v;
  if (hopf::is_cocommutative(a)) v = heisenberg_vertex_group(a);
  return tau_cross_check(a, v ? &*v : nullptr);
}

VerdictReport tau_cross_check(const Presentation& a, const VertexGroupData* vertex) {
  VerdictReport rep("tau cross-check");
  const std::size_t n = a.dim(), N = n * n;
  {
    // Lu algebroid on A* # L, L = {eps (x) a}
    const algebroid::VLAlgebroid lu = algebroid::build_VL_algebroid(algebroid::lu_module(a));
    const Presentation d = hopf::dual_hopf(a);
    const auto s_inv = inverse(a.antipode_map());
    if (!s_inv) throw SingularError("antipode is not invertible");
    const hopf::RegularActions ra = hopf::regular_actions(a);
    Verdict& in = rep.add("eps (x) a in L");
    const LinearMap c = a_to_l(a, lu.l, in);
    const std::size_t ml = lu.l.dim();
    // e^p (x) e_x -> e^p # c(e_x)
    const LinearMap phi = LinearMap::from_function(N, lu.p.total.dim, [&](std::size_t t) {
      return flat_outer(d.e(t / n), c.column(t % n), ml);
    });
    Verdict& v = rep.add("tau^-1(p # a) = sum (S^-1(a) -> (e^i p)) e^j # S^-1(e_j) e_i");
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t x = 0; x < n; ++x) {
        Accumulator acc;
        for (std::size_t i = 0; i < n; ++i) {
          const SparseVec hit = bilinear(ra.left, n, s_inv->column(x), d.alg.product(i, p));
          for (std::size_t j = 0; j < n; ++j) acc.add(flat_outer(d.mul(hit, d.e(j)), a.mul(s_inv->column(j), a.e(i)), n));
        }
        v.check(lu.p.tau_inv->apply(phi.column(p * n + x)) == phi.apply(acc.take()),
                [&] { return dual_label(p) + "#" + a.basis()[x]; });
      }
  }
  if (!vertex) return rep;
  // Lu algebroid of A*: V = A** = A and L = {eps (x) p}, so T = A # A*
  const Presentation b = hopf::dual_hopf(a);
  const algebroid::VLAlgebroid lu = algebroid::build_VL_algebroid(algebroid::lu_module(b));
  rep.add("A** = A").check(lu.module.v.table == a.alg.table);
  Verdict& in = rep.add("eps (x) p in L");
  const LinearMap c = a_to_l(b, lu.l, in);
  const std::size_t ml = lu.l.dim();
  const LinearMap psi = LinearMap::from_function(N, lu.p.total.dim, [&](std::size_t t) {
    return flat_outer(a.e(t / n), c.column(t % n), ml);
  });
  const VertexGroupData& vg = *vertex;
  rep.merge(compare_transport(vg.k, lu.p.total, psi, "H(A) = V # L of A*"));
  Verdict& t = rep.add("tau = tau^-1 of the Lu algebroid of A*");
  for (std::size_t k = 0; k < N; ++k)
    t.check(psi.apply(vg.tau.column(k)) == lu.p.tau_inv->apply(psi.column(k)), [&] { return vg.k.basis[k]; });
  return rep;
}

}  // namespace hopfkit::vertex
