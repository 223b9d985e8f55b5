#pragma once

#include "hopfkit/presentation.hpp"
#include "hopfkit/verdict.hpp"

namespace hopfkit::hopf {

// kG: mult from the group table, Delta(g) = g(x)g, eps(g) = 1, S(g) = g^-1.
Presentation group_algebra(const GroupTable& g, const Field& f);
// The one-dimensional Hopf algebra k.
Presentation trivial_hopf(const Field& f);

// Dual Hopf algebra on the dual basis; requires trivial phi. The R-matrix is
// not carried over.
Presentation dual_hopf(const Presentation& a);

enum class Variant { op, cop, op_cop };
// Requires trivial phi (alpha = beta = 1 are kept). op drops R; cop uses
// R_21; op_cop uses (R_21)^-1.
Presentation variant(const Presentation& h, Variant which);
// H1 (x) H2 with componentwise structure; R = sum (R1 (x) R2') (x) (R2 (x) R2'')
// when both factors carry one.
Presentation tensor_hopf(const Presentation& h1, const Presentation& h2);

// Convolution inverse of the identity; throws SingularError if none exists.
LinearMap derive_antipode(const Presentation& h);

bool is_commutative(const Algebra& a);
bool is_cocommutative(const Presentation& h);

// Tables of the regular actions on H*: left[i * n + k] = e_i -> e^k and
// right[k * n + i] = e^k <- e_i.
struct RegularActions {
  std::vector<SparseVec> left, right;
};
RegularActions regular_actions(const Presentation& h);
VerdictReport check_regular_actions(const Presentation& h);

VerdictReport check_quasi_bialgebra(const Presentation& h);
VerdictReport check_quasi_hopf(const Presentation& h);
// Uses h.R.
VerdictReport check_quasitriangular(const Presentation& h);

// Morphism checks for a linear map F: H -> H' (algebra, coalgebra, R
// transport (F(x)F)(R) = R').
VerdictReport check_morphism(const LinearMap& f, const Presentation& h, const Presentation& h2,
                             bool with_r);

// Apply F (x) F to a tensor of arity 2.
Tensor map2(const LinearMap& f, const Tensor& x);

// Human-readable description of a basis tuple for witnesses.
std::string label_tuple(const Presentation& h, std::initializer_list<std::size_t> idx);

}  // namespace hopfkit::hopf
