#include "hopfkit/presentation.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hopfkit {

// ---- GroupTable ----

bool GroupTable::is_abelian() const {
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      if (product(g, h) != product(h, g)) return false;
  return true;
}

GroupTable GroupTable::from_table(std::vector<std::vector<std::size_t>> rows,
                                  std::vector<std::string> labels) {
  GroupTable g;
  g.order = rows.size();
  if (g.order == 0) throw PresentationError("group of order 0");
  if (labels.empty())
    for (std::size_t i = 0; i < g.order; ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != g.order) throw PresentationError("group label count mismatch");
  g.labels = std::move(labels);
  for (const auto& r : rows) {
    if (r.size() != g.order) throw PresentationError("group table is not square");
    for (std::size_t v : r)
      if (v >= g.order) throw PresentationError("group table entry out of range");
    g.mul.insert(g.mul.end(), r.begin(), r.end());
  }
  const std::size_t n = g.order;
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x)
      if (g.product(e, x) != x || g.product(x, e) != x) ok = false;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw PresentationError("group table has no identity");
  g.inv.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.product(x, y) == g.identity && g.product(y, x) == g.identity) g.inv[x] = y;
  for (std::size_t x = 0; x < n; ++x)
    if (g.inv[x] == n) throw PresentationError("group element " + g.labels[x] + " has no inverse");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (g.product(g.product(x, y), z) != g.product(x, g.product(y, z)))
          throw PresentationError("group table is not associative");
  return g;
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw PresentationError("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "1" : i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return from_table(std::move(rows), std::move(labels));
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2} in lexicographic order of their images
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1));
  std::vector<std::vector<std::size_t>> rows(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      // (pq)(x) = p(q(x))
      std::array<int, 3> r{};
      for (int x = 0; x < 3; ++x) r[x] = perms[i][perms[j][x]];
      rows[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return from_table(std::move(rows), std::move(labels));
}

GroupTable GroupTable::named(const std::string& name) {
  if (name == "trivial") return cyclic(1);
  if (name == "S3") return symmetric3();
  if (name.size() > 1 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      name.size() < 6) {
    std::size_t n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 64) return cyclic(n);
  }
  throw PresentationError("unknown group '" + name + "'");
}

// ---- Presentation ----

Tensor Presentation::delta(const SparseVec& h) const {
  Accumulator acc;
  for (const auto& [i, s] : h) acc.add(comult[i], s);
  return Tensor({dim(), dim()}, acc.take());
}

Scalar Presentation::eps(const SparseVec& h) const {
  Scalar s = field().zero();
  for (const auto& [i, c] : h) s += c * counit[i];
  return s;
}

LegMap Presentation::counit_leg() const {
  LegMap m;
  for (std::size_t i = 0; i < dim(); ++i) m.images.push_back(SparseVec::unit(0, counit[i]));
  return m;
}

bool Presentation::has_trivial_phi() const { return !phi || *phi == unit(3); }

Tensor Presentation::phi_tensor() const { return phi ? *phi : unit(3); }

Tensor Presentation::phi_inverse() const {
  if (has_trivial_phi()) return unit(3);
  return invert_in_algebra(alg, *phi);
}

const LinearMap& Presentation::antipode_map() const {
  if (!antipode) throw PresentationError("presentation has no antipode");
  return *antipode;
}

const Tensor& Presentation::r_matrix() const {
  if (!R) throw PresentationError("presentation has no R-matrix");
  return *R;
}

Tensor Presentation::r_inverse() const { return invert_in_algebra(alg, r_matrix()); }

Tensor Presentation::embed(const Tensor& x, const std::vector<std::size_t>& on, std::size_t m) const {
  return embed_legs(x, on, std::vector<std::size_t>(m, dim()), std::vector<SparseVec>(m, one()));
}

void Presentation::validate() const {
  const std::size_t n = dim();
  if (n == 0) throw PresentationError("dimension must be positive");
  if (alg.basis.size() != n) throw PresentationError("basis label count differs from dim");
  if (alg.table.size() != n * n) throw PresentationError("multiplication table has the wrong size");
  auto in_range = [](const SparseVec& v, Index bound) { return v.empty() || v.max_index() < bound; };
  for (const auto& v : alg.table)
    if (!in_range(v, n)) throw PresentationError("multiplication index out of range");
  if (!in_range(alg.unit, n)) throw PresentationError("unit index out of range");
  if (comult.size() != n) throw PresentationError("comultiplication table has the wrong size");
  for (const auto& v : comult)
    if (!in_range(v, n * n)) throw PresentationError("comultiplication index out of range");
  if (!in_range(counit, n)) throw PresentationError("counit index out of range");
  if (phi && phi->dims() != std::vector<std::size_t>{n, n, n}) throw PresentationError("phi has the wrong shape");
  if (R && R->dims() != std::vector<std::size_t>{n, n}) throw PresentationError("R has the wrong shape");
  if (antipode && (antipode->domain() != n || antipode->codomain() != n))
    throw PresentationError("antipode has the wrong shape");
  if (alpha && !in_range(*alpha, n)) throw PresentationError("alpha index out of range");
  if (beta && !in_range(*beta, n)) throw PresentationError("beta index out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (alg.mul(alg.unit, e(i)) != e(i) || alg.mul(e(i), alg.unit) != e(i))
      throw PresentationError("unit is not a two-sided identity at basis element " + alg.basis[i]);
  }
}

SparseVec left_hit(const Presentation& h, const SparseVec& x, const SparseVec& p) {
  const std::size_t n = h.dim();
  std::vector<SparseVec::Entry> out;
  for (std::size_t k = 0; k < n; ++k) {
    Scalar s = pair(p, h.mul(h.e(k), x));
    if (!s.is_zero()) out.emplace_back(k, s);
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec right_hit(const Presentation& h, const SparseVec& p, const SparseVec& x) {
  const std::size_t n = h.dim();
  std::vector<SparseVec::Entry> out;
  for (std::size_t k = 0; k < n; ++k) {
    Scalar s = pair(p, h.mul(x, h.e(k)));
    if (!s.is_zero()) out.emplace_back(k, s);
  }
  return SparseVec::from_entries(std::move(out));
}

Scalar pair(const SparseVec& p, const SparseVec& x) {
  Scalar s;
  auto a = p.begin();
  auto b = x.begin();
  while (a != p.end() && b != x.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

}  // namespace hopfkit
