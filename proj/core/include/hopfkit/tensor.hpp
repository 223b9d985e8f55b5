#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "hopfkit/sparse.hpp"

namespace hopfkit {

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of V1 (x) ... (x) Vm, flattened row-major (last leg fastest).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> dims, SparseVec coeffs = {});

  static Tensor basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& idx,
                      const Scalar& value);
  // x1 (x) x2 (x) ... for elements given over their own bases.
  static Tensor outer(const std::vector<std::size_t>& dims, const std::vector<SparseVec>& parts);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t arity() const { return dims_.size(); }
  Index flat_size() const;
  Index flatten(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> unflatten(Index flat) const;

  const SparseVec& coeffs() const { return c_; }
  Scalar at(const std::vector<std::size_t>& idx) const { return c_[flatten(idx)]; }
  bool is_zero() const { return c_.empty(); }

  Tensor operator+(const Tensor& b) const;
  Tensor operator-(const Tensor& b) const;
  Tensor scaled(const Scalar& a) const;
  bool operator==(const Tensor& b) const { return dims_ == b.dims_ && c_ == b.c_; }
  bool operator!=(const Tensor& b) const { return !(*this == b); }

  // Calls f(multi-index, coefficient) for each nonzero term.
  void for_each(const std::function<void(const std::vector<std::size_t>&, const Scalar&)>& f) const;

 private:
  std::vector<std::size_t> dims_;
  SparseVec c_;
};

// Dense-by-column matrix: column j is the image of basis vector j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t domain, std::size_t codomain);
  LinearMap(std::size_t domain, std::size_t codomain, std::vector<SparseVec> columns);
  static LinearMap identity(std::size_t n, const Field& f);
  static LinearMap from_function(std::size_t domain, std::size_t codomain,
                                 const std::function<SparseVec(std::size_t)>& image);

  std::size_t domain() const { return domain_; }
  std::size_t codomain() const { return codomain_; }
  const SparseVec& column(std::size_t j) const { return cols_.at(j); }
  const std::vector<SparseVec>& columns() const { return cols_; }
  Scalar entry(std::size_t row, std::size_t col) const { return cols_.at(col)[row]; }

  SparseVec apply(const SparseVec& v) const;
  LinearMap compose(const LinearMap& inner) const;  // this o inner
  LinearMap transpose() const;
  LinearMap operator+(const LinearMap& b) const;
  LinearMap operator-(const LinearMap& b) const;

  bool operator==(const LinearMap& b) const;
  bool operator!=(const LinearMap& b) const { return !(*this == b); }

 private:
  std::size_t domain_ = 0, codomain_ = 0;
  std::vector<SparseVec> cols_;
};

// A linear map V -> W1 (x) ... (x) Wk taking basis vector i to images[i].
// k = 0 gives a functional (images live in a 1-dim space, index 0).
struct LegMap {
  std::vector<std::size_t> out_dims;
  std::vector<SparseVec> images;

  static LegMap from(const LinearMap& m) { return {{m.codomain()}, m.columns()}; }
};

// Output leg t(k) receives input leg k; perm lists t(1),...,t(m) (1-based).
// With this convention permute_legs(phi, {3,1,2}) is phi_{312}.
Tensor permute_legs(const Tensor& x, const std::vector<std::size_t>& perm);

// Places x on the listed legs (1-based, increasing) of an arity-m tensor,
// putting units[k] on every other leg k.
Tensor embed_legs(const Tensor& x, const std::vector<std::size_t>& legs,
                  const std::vector<std::size_t>& dims, const std::vector<SparseVec>& units);

// Applies a map to one leg (1-based); the leg is replaced by out_dims legs.
Tensor apply_leg_map(const Tensor& x, std::size_t leg, const LegMap& f);

// Applies maps[k] to leg k+1 for every leg.
Tensor map_legs(const Tensor& x, const std::vector<const LinearMap*>& maps);

// Outer product x (x) y.
Tensor concat(const Tensor& x, const Tensor& y);

}  // namespace hopfkit
