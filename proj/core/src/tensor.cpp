#include "hopfkit/tensor.hpp"

#include <algorithm>
#include <string>

namespace hopfkit {

Tensor::Tensor(std::vector<std::size_t> dims, SparseVec coeffs)
    : dims_(std::move(dims)), c_(std::move(coeffs)) {
  for (std::size_t d : dims_)
    if (d == 0) throw ShapeError("tensor factor of dimension 0");
  if (!c_.empty() && c_.max_index() >= flat_size()) throw ShapeError("tensor coefficient out of range");
}

Tensor Tensor::basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& idx,
                     const Scalar& value) {
  Tensor t(std::move(dims));
  t.c_ = SparseVec::unit(t.flatten(idx), value);
  return t;
}

Tensor Tensor::outer(const std::vector<std::size_t>& dims, const std::vector<SparseVec>& parts) {
  if (dims.size() != parts.size()) throw ShapeError("outer: arity mismatch");
  std::vector<SparseVec::Entry> cur;
  if (parts.empty()) return Tensor(dims);
  for (const auto& e : parts[0]) cur.push_back(e);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::vector<SparseVec::Entry> next;
    next.reserve(cur.size() * parts[k].nnz());
    for (const auto& [i, s] : cur)
      for (const auto& [j, t] : parts[k]) next.emplace_back(i * dims[k] + j, s * t);
    cur = std::move(next);
  }
  return Tensor(dims, SparseVec::from_entries(std::move(cur)));
}

Index Tensor::flat_size() const {
  Index n = 1;
  for (std::size_t d : dims_) n *= d;
  return n;
}

Index Tensor::flatten(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size()) throw ShapeError("multi-index arity mismatch");
  Index f = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= dims_[k]) throw ShapeError("multi-index out of range");
    f = f * dims_[k] + idx[k];
  }
  return f;
}

std::vector<std::size_t> Tensor::unflatten(Index flat) const {
  if (flat >= flat_size()) throw ShapeError("flat index out of range");
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

Tensor Tensor::operator+(const Tensor& b) const {
  if (dims_ != b.dims_) throw ShapeError("tensor shape mismatch");
  return Tensor(dims_, c_ + b.c_);
}

Tensor Tensor::operator-(const Tensor& b) const {
  if (dims_ != b.dims_) throw ShapeError("tensor shape mismatch");
  return Tensor(dims_, c_ - b.c_);
}

Tensor Tensor::scaled(const Scalar& a) const { return Tensor(dims_, c_.scaled(a)); }

void Tensor::for_each(
    const std::function<void(const std::vector<std::size_t>&, const Scalar&)>& f) const {
  for (const auto& [i, s] : c_) f(unflatten(i), s);
}

// ---- LinearMap ----

LinearMap::LinearMap(std::size_t domain, std::size_t codomain)
    : domain_(domain), codomain_(codomain), cols_(domain) {}

LinearMap::LinearMap(std::size_t domain, std::size_t codomain, std::vector<SparseVec> columns)
    : domain_(domain), codomain_(codomain), cols_(std::move(columns)) {
  if (cols_.size() != domain_) throw ShapeError("linear map: wrong number of columns");
  for (const auto& c : cols_)
    if (!c.empty() && c.max_index() >= codomain_) throw ShapeError("linear map: row out of range");
}

LinearMap LinearMap::identity(std::size_t n, const Field& f) {
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(SparseVec::unit(i, f.one()));
  return LinearMap(n, n, std::move(cols));
}

LinearMap LinearMap::from_function(std::size_t domain, std::size_t codomain,
                                   const std::function<SparseVec(std::size_t)>& image) {
  std::vector<SparseVec> cols;
  cols.reserve(domain);
  for (std::size_t i = 0; i < domain; ++i) cols.push_back(image(i));
  return LinearMap(domain, codomain, std::move(cols));
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  Accumulator acc;
  for (const auto& [j, s] : v) {
    if (j >= domain_) throw ShapeError("linear map applied to vector out of range");
    acc.add(cols_[j], s);
  }
  return acc.take();
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.codomain_ != domain_) throw ShapeError("composition dimension mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(inner.domain_);
  for (const auto& c : inner.cols_) cols.push_back(apply(c));
  return LinearMap(inner.domain_, codomain_, std::move(cols));
}

LinearMap LinearMap::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> rows(codomain_);
  for (std::size_t j = 0; j < domain_; ++j)
    for (const auto& [i, s] : cols_[j]) rows[i].emplace_back(j, s);
  std::vector<SparseVec> cols;
  cols.reserve(codomain_);
  for (auto& r : rows) cols.push_back(SparseVec::from_entries(std::move(r)));
  return LinearMap(codomain_, domain_, std::move(cols));
}

LinearMap LinearMap::operator+(const LinearMap& b) const {
  if (domain_ != b.domain_ || codomain_ != b.codomain_) throw ShapeError("map shape mismatch");
  LinearMap r = *this;
  for (std::size_t j = 0; j < domain_; ++j) r.cols_[j] = cols_[j] + b.cols_[j];
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& b) const {
  if (domain_ != b.domain_ || codomain_ != b.codomain_) throw ShapeError("map shape mismatch");
  LinearMap r = *this;
  for (std::size_t j = 0; j < domain_; ++j) r.cols_[j] = cols_[j] - b.cols_[j];
  return r;
}

bool LinearMap::operator==(const LinearMap& b) const {
  return domain_ == b.domain_ && codomain_ == b.codomain_ && cols_ == b.cols_;
}

// ---- leg operations ----

Tensor permute_legs(const Tensor& x, const std::vector<std::size_t>& perm) {
  const std::size_t m = x.arity();
  if (perm.size() != m) throw ShapeError("permutation arity mismatch");
  std::vector<bool> seen(m, false);
  for (std::size_t t : perm) {
    if (t < 1 || t > m || seen[t - 1]) throw ShapeError("not a permutation");
    seen[t - 1] = true;
  }
  std::vector<std::size_t> out_dims(m);
  for (std::size_t k = 0; k < m; ++k) out_dims[perm[k] - 1] = x.dims()[k];
  Tensor shape(out_dims);
  std::vector<SparseVec::Entry> e;
  e.reserve(x.coeffs().nnz());
  std::vector<std::size_t> j(m);
  for (const auto& [flat, s] : x.coeffs()) {
    auto i = x.unflatten(flat);
    for (std::size_t k = 0; k < m; ++k) j[perm[k] - 1] = i[k];
    e.emplace_back(shape.flatten(j), s);
  }
  return Tensor(out_dims, SparseVec::from_entries(std::move(e)));
}

Tensor embed_legs(const Tensor& x, const std::vector<std::size_t>& legs,
                  const std::vector<std::size_t>& dims, const std::vector<SparseVec>& units) {
  const std::size_t m = dims.size();
  if (units.size() != m) throw ShapeError("embed_legs: one unit per target leg required");
  if (legs.size() != x.arity()) throw ShapeError("embed_legs: leg count mismatch");
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (legs[k] < 1 || legs[k] > m) throw ShapeError("embed_legs: position out of range");
    if (k && legs[k] <= legs[k - 1]) throw ShapeError("embed_legs: legs must increase");
    if (dims[legs[k] - 1] != x.dims()[k]) throw ShapeError("embed_legs: dimension mismatch");
  }
  Tensor shape(dims);
  std::vector<int> slot(m, -1);
  for (std::size_t k = 0; k < legs.size(); ++k) slot[legs[k] - 1] = static_cast<int>(k);

  Accumulator acc;
  std::vector<std::size_t> j(m);
  for (const auto& [flat, s] : x.coeffs()) {
    auto i = x.unflatten(flat);
    // expand the unit legs
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> partial{{{}, s}};
    for (std::size_t p = 0; p < m; ++p) {
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
      if (slot[p] >= 0) {
        for (auto& [idx, c] : partial) {
          idx.push_back(i[slot[p]]);
          next.emplace_back(std::move(idx), c);
        }
      } else {
        for (const auto& [idx, c] : partial)
          for (const auto& [u, us] : units[p]) {
            auto n = idx;
            n.push_back(u);
            next.emplace_back(std::move(n), c * us);
          }
      }
      partial = std::move(next);
    }
    for (const auto& [idx, c] : partial) acc.add(shape.flatten(idx), c);
  }
  return Tensor(dims, acc.take());
}

Tensor apply_leg_map(const Tensor& x, std::size_t leg, const LegMap& f) {
  const std::size_t m = x.arity();
  if (leg < 1 || leg > m) throw ShapeError("apply_leg_map: leg out of range");
  if (f.images.size() != x.dims()[leg - 1]) throw ShapeError("apply_leg_map: domain mismatch");
  std::vector<std::size_t> out_dims;
  for (std::size_t k = 0; k < m; ++k) {
    if (k + 1 == leg)
      out_dims.insert(out_dims.end(), f.out_dims.begin(), f.out_dims.end());
    else
      out_dims.push_back(x.dims()[k]);
  }
  Index inner = 1;
  for (std::size_t d : f.out_dims) inner *= d;
  Index after = 1;
  for (std::size_t k = leg; k < m; ++k) after *= x.dims()[k];
  const Index dleg = x.dims()[leg - 1];

  std::vector<SparseVec::Entry> e;
  for (const auto& [flat, s] : x.coeffs()) {
    Index lo = flat % after;
    Index mid = (flat / after) % dleg;
    Index hi = flat / after / dleg;
    for (const auto& [t, c] : f.images[mid]) e.emplace_back((hi * inner + t) * after + lo, s * c);
  }
  return Tensor(out_dims, SparseVec::from_entries(std::move(e)));
}

Tensor map_legs(const Tensor& x, const std::vector<const LinearMap*>& maps) {
  if (maps.size() != x.arity()) throw ShapeError("map_legs: one map per leg required");
  Tensor y = x;
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (maps[k]) y = apply_leg_map(y, k + 1, LegMap::from(*maps[k]));
  return y;
}

Tensor concat(const Tensor& x, const Tensor& y) {
  std::vector<std::size_t> dims = x.dims();
  dims.insert(dims.end(), y.dims().begin(), y.dims().end());
  const Index ny = y.flat_size();
  std::vector<SparseVec::Entry> e;
  e.reserve(x.coeffs().nnz() * y.coeffs().nnz());
  for (const auto& [i, s] : x.coeffs())
    for (const auto& [j, t] : y.coeffs()) e.emplace_back(i * ny + j, s * t);
  return Tensor(dims, SparseVec::from_entries(std::move(e)));
}

}  // namespace hopfkit
