#pragma once

#include "hopfkit/hopf.hpp"

namespace hopfkit::star {

// H* with the product (f.g)(h) = sum g(h1 R2) f(h2 R1), together with the
// regular actions of H used by the verifiers. The product need not be
// associative.
struct StarProduct {
  Presentation source;
  Tensor r;                 // the R used for the product
  Algebra alg;              // table[i * n + j] = e^i . e^j, unit eps
  hopf::RegularActions act;

  std::size_t dim() const { return alg.dim; }
  const Field& field() const { return alg.field; }
  SparseVec e(std::size_t i) const { return alg.basis_vec(i); }
  SparseVec mul(const SparseVec& f, const SparseVec& g) const { return alg.mul(f, g); }
  // x -> p and p <- x extended linearly
  SparseVec left(const SparseVec& x, const SparseVec& p) const;
  SparseVec right(const SparseVec& p, const SparseVec& x) const;
  SparseVec both(const SparseVec& x, const SparseVec& p, const SparseVec& y) const {
    return left(x, right(p, y));
  }
};

// Uses h.R; throws PresentationError if absent.
StarProduct build_star_product(const Presentation& h);
StarProduct build_star_product(const Presentation& h, const Tensor& r);

// Leibniz rule for the bimodule action, phi-weighted associativity, unit
// laws and h -> eps <- h' = eps(h) eps(h') eps. Plain associativity is
// added when phi is trivial.
VerdictReport check_bimodule_algebra(const StarProduct& s);
// f.g = sum (R2 -> g <- U1).(R1 -> f <- U2), U = R^-1
VerdictReport check_quantum_commutative_lr(const StarProduct& s);
// f.g = sum (R2 -> g).(R1 -> f); holds exactly when R = 1 (x) 1.
VerdictReport check_left_quantum_commutative(const StarProduct& s);
bool r_is_trivial(const StarProduct& s);

// F: H -> H' a quasitriangular morphism; checks the transpose F* against
// both star products and both regular actions. A failed morphism check is
// reported as a precondition and the F* identities are skipped.
VerdictReport transpose_functoriality(const LinearMap& f, const Presentation& h, const Presentation& h2);

// f _. g = sum (R1 -> f).(g <- S(R2))
Algebra covariantised_product(const StarProduct& s);
// table[x * n + p] = e_x |> e^p = sum h2 -> e^p <- S(h1)
std::vector<SparseVec> triangle_action(const StarProduct& s);
// Associativity and unit of _. and the module-algebra axioms for |>. With q
// given, also Q(f _. g) = Q(f) Q(g).
VerdictReport check_covariantised(const StarProduct& s, const LinearMap* q = nullptr);

// (H^cop)*_{R21} equals (H*_R)^op tablewise.
VerdictReport check_cop_opposite(const Presentation& h);
VerdictReport check_cop_opposite(const Presentation& h, const Presentation& cop);

// Product-only presentation text of the star product (mult, unit and the
// associative flag).
std::string write_star_table(const StarProduct& s);
// e^i . e^j = ... lines in r*w^k notation
std::string format_table(const Algebra& a, const std::vector<std::string>& labels);

}  // namespace hopfkit::star
