#pragma once

#include "hopfkit/starprod.hpp"

namespace hopfkit::doubles {

// D(A) on A* (x) A, basis index p * n + a for e^p (x) e_a. Coalgebra of
// A*cop (x) A, R = sum (eps (x) e_i) (x) (e^i (x) 1), antipode derived.
Presentation drinfeld_double(const Presentation& a);
// The realization on A (x) A*, index a * n + p, with the covariantised
// product, Delta(a (x) p) = sum (a1 (x) p2) (x) (a2 (x) p1) and
// R = sum (e_i (x) eps) (x) (1 (x) e^i).
Presentation alt_double(const Presentation& a);
// A # A* on A (x) A*, index a * n + p:
// (a (x) p)(a' (x) p') = sum a (p1 -> a') (x) p2 p'.
Algebra heisenberg_double(const Presentation& a);

// D(A)*_R against H(A) under <b (x) g, p (x) x> = p(b) g(x).
VerdictReport check_star_equals_heisenberg(const Presentation& a);
VerdictReport check_star_equals_heisenberg(const Algebra& star, const Algebra& heisenberg);
// Closed-form Delta of D(A)* and both regular actions of D(A) on D(A)*,
// compared with the transpose of the multiplication and the generic
// actions. The two-argument forms of this and the checks below take the
// generic side (the double, or its other realization) explicitly.
VerdictReport check_dual_double_formulas(const Presentation& a);
VerdictReport check_dual_double_formulas(const Presentation& a, const Presentation& d);

struct Factorizability {
  LinearMap q;                   // H* -> H
  std::optional<LinearMap> q_inv;
  SparseVec u, u_inv, d0, d0_inv;
};
// Q(p) = sum p(R2 r1) R1 r2, u = sum S(R2) R1, d0 = S(u)^-1. Needs an
// antipode and an R-matrix.
Factorizability factorizability(const Presentation& h);
// Radford: u^-1 y = u^-1 <- p has a unique solution p exactly when Q is
// bijective, and then Q^-1(y) = p <- u^-1.
VerdictReport radford_check(const Presentation& h);
// d0 = sum S^2(R1) R2, d0^-1 = sum S^-1(R1) R2 = sum R1 S(R2),
// S^2(h) = d0 h d0^-1, Delta(d0) = (R21 R)(d0 (x) d0) = (d0 (x) d0)(R21 R).
VerdictReport check_drinfeld_element(const Presentation& h);
// Q(f.g) = sum Q(R1 -> f) Q(g <- R2) and Q(f _. g) = Q(f) Q(g).
VerdictReport q_multiplicativity(const Presentation& h);

// Closed-form Q, Q^-1, u^-1 and Radford's translate for a double, against
// the generic computation.
VerdictReport double_q_explicit(const Presentation& a);
VerdictReport double_q_explicit(const Presentation& a, const Presentation& d);
// Q: A (x) A* -> A* (x) A as an isomorphism of quasitriangular Hopf
// algebras between the two realizations.
VerdictReport realization_isomorphism_check(const Presentation& a);
VerdictReport realization_isomorphism_check(const Presentation& a, const Presentation& d);
// Star product of the A (x) A* realization against
// (p (x) a).(p' (x) a') = sum p'(a'1 -> p) (x) a'2 a and H(A*)^op.
VerdictReport alt_star_product_check(const Presentation& a);
VerdictReport alt_star_product_check(const Presentation& a, const Presentation& alt);

// W = sum (1 (x) e^i) (x) (e_i (x) eps) in H(A) (x) H(A).
Tensor canonical_w(const Presentation& a);
struct PentagonSides {
  Tensor lhs, rhs;  // W12 W13 W23 and W23 W12
};
PentagonSides pentagon_sides(const Algebra& alg, const Tensor& w);
VerdictReport pentagon_check(const Algebra& alg, const Tensor& w);
// lambda: H(A) -> End(A) bijective algebra map, (lambda (x) lambda)(W) = w,
// w w^-1 = 1 and the pentagon for w.
VerdictReport lambda_check(const Presentation& a);
// W = (Q^-1 (x) Q^-1)(R21) for D(A).
VerdictReport w_from_r_check(const Presentation& a);
VerdictReport w_from_r_check(const Presentation& a, const Presentation& d);
// For factorizable (H, R): W = (Q^-1 (x) Q^-1)(R21) and whether it solves the
// pentagon in H*_R.
Tensor w_of(const Presentation& h);
VerdictReport pentagon_conjecture(const Presentation& h);
// (F* (x) F*)((Q'^-1 (x) Q'^-1)(R'21)) = (Q^-1 (x) Q^-1)(R21), after checking
// that F is an injective quasitriangular map between factorizable algebras.
VerdictReport functoriality_transfer(const LinearMap& f, const Presentation& h, const Presentation& h2);
// phi: D(A) -> H(A*) (x) H(A), its two forms, multiplicativity,
// (id (x) Q) phi = (id (x) T (x) id) Delta and the induced module structure
// on A* (x) A.
VerdictReport phi_splitting(const Presentation& a);
VerdictReport phi_splitting(const Presentation& a, const Presentation& d);

// (kZ/3, R) with R = 1/3 sum w^{-ij} a^i (x) a^j.
Presentation z3_example(const Field& f);

struct CounterexampleReport {
  std::string field;
  Scalar omega;
  Presentation h;
  LinearMap q, q_inv;
  Algebra star;
  Tensor w;
  PentagonSides pentagon;
  VerdictReport verdicts;
  std::string first_difference;  // empty when the sides agree

  std::string to_text() const;
};
// Throws FieldError if the field has no primitive cube root (or no 1/3).
CounterexampleReport z3_counterexample(const Field& f);

}  // namespace hopfkit::doubles
