#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::size_t> mul;  // mul[g * order + h] = gh
  std::vector<std::size_t> inv;
  std::size_t identity = 0;
  std::vector<std::string> labels;

  std::size_t product(std::size_t g, std::size_t h) const { return mul[g * order + h]; }
  // g acted on by x from the right: x^-1 g x
  std::size_t conj(std::size_t g, std::size_t x) const { return product(product(inv[x], g), x); }
  bool is_abelian() const;

  // Validates the table (closure, identity, inverses, associativity).
  static GroupTable from_table(std::vector<std::vector<std::size_t>> rows,
                               std::vector<std::string> labels);
  static GroupTable cyclic(std::size_t n);
  static GroupTable symmetric3();
  // "Z<n>", "S3" or "trivial".
  static GroupTable named(const std::string& name);
};

// Structure constants of a (quasi-)bialgebra with optional antipode data and
// R-matrix. Absent optional parts mean: phi = 1(x)1(x)1, alpha = beta = 1, no
// antipode, no R-matrix.
struct Presentation {
  Algebra alg;
  std::vector<SparseVec> comult;  // Delta(e_i) over the dim^2 flattened basis
  SparseVec counit;               // eps(e_i) at index i
  std::optional<Tensor> phi;
  std::optional<LinearMap> antipode;
  std::optional<SparseVec> alpha, beta;
  std::optional<Tensor> R;

  std::size_t dim() const { return alg.dim; }
  const Field& field() const { return alg.field; }
  const std::vector<std::string>& basis() const { return alg.basis; }
  const SparseVec& one() const { return alg.unit; }
  SparseVec e(std::size_t i) const { return alg.basis_vec(i); }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const { return alg.mul(a, b); }

  Tensor delta(const SparseVec& h) const;
  Tensor delta(std::size_t i) const { return Tensor({dim(), dim()}, comult[i]); }
  Scalar eps(const SparseVec& h) const;
  LegMap delta_leg() const { return {{dim(), dim()}, comult}; }
  LegMap counit_leg() const;
  LegMap antipode_leg() const { return LegMap::from(antipode_map()); }

  bool has_trivial_phi() const;
  Tensor phi_tensor() const;      // phi or the unit tensor
  Tensor phi_inverse() const;     // computed on demand
  SparseVec alpha_elem() const { return alpha ? *alpha : one(); }
  SparseVec beta_elem() const { return beta ? *beta : one(); }
  const LinearMap& antipode_map() const;
  const Tensor& r_matrix() const;
  Tensor r_inverse() const;

  // Unit tensor of H^{(x)m} and the tensor power legs.
  Tensor unit(std::size_t m) const { return unit_tensor(alg, m); }
  std::vector<const Algebra*> legs(std::size_t m) const { return std::vector<const Algebra*>(m, &alg); }
  Tensor tmul(const Tensor& x, const Tensor& y) const { return tensor_power_product(alg, x, y); }
  // embed on legs (1-based) of an arity-m tensor power of H
  Tensor embed(const Tensor& x, const std::vector<std::size_t>& on, std::size_t m) const;

  // Shape checks only: table sizes, index ranges, unit two-sided.
  void validate() const;
};

// Regular actions of H on H*: (x -> p)(h) = p(hx) and (p <- x)(h) = p(xh),
// with p in dual-basis coordinates.
SparseVec left_hit(const Presentation& h, const SparseVec& x, const SparseVec& p);
SparseVec right_hit(const Presentation& h, const SparseVec& p, const SparseVec& x);
// Evaluation p(x) with p in dual-basis coordinates.
Scalar pair(const SparseVec& p, const SparseVec& x);

}  // namespace hopfkit
