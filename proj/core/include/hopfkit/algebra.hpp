#pragma once

#include <string>
#include <vector>

#include "hopfkit/linsolve.hpp"

namespace hopfkit {

// Finite-dimensional (not necessarily associative) unital algebra given by
// structure constants: table[i * dim + j] = e_i e_j.
struct Algebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<SparseVec> table;
  SparseVec unit;

  const SparseVec& product(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  SparseVec basis_vec(std::size_t i) const { return SparseVec::unit(i, field.one()); }
  // Left multiplication by x as a matrix.
  LinearMap left_mult(const SparseVec& x) const;
  LinearMap right_mult(const SparseVec& x) const;
  Algebra opposite() const;
};

// Componentwise product in A1 (x) ... (x) Am.
Tensor tensor_power_product(const std::vector<const Algebra*>& legs, const Tensor& x,
                            const Tensor& y);
inline Tensor tensor_power_product(const Algebra& a, const Tensor& x, const Tensor& y) {
  return tensor_power_product(std::vector<const Algebra*>(x.arity(), &a), x, y);
}

// The unit 1 (x) ... (x) 1.
Tensor unit_tensor(const std::vector<const Algebra*>& legs);
inline Tensor unit_tensor(const Algebra& a, std::size_t m) {
  return unit_tensor(std::vector<const Algebra*>(m, &a));
}

// Algebra structure on A1 (x) ... (x) Am with the flattened basis.
Algebra tensor_algebra(const std::vector<const Algebra*>& legs);

// Two-sided inverse, found by solving x y = 1 and checked against y x = 1.
// Throws SingularError if x is not invertible.
SparseVec invert_in_algebra(const Algebra& a, const SparseVec& x);
Tensor invert_in_algebra(const std::vector<const Algebra*>& legs, const Tensor& x);
inline Tensor invert_in_algebra(const Algebra& a, const Tensor& x) {
  return invert_in_algebra(std::vector<const Algebra*>(x.arity(), &a), x);
}

}  // namespace hopfkit
