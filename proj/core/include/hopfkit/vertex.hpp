#pragma once

#include "hopfkit/algebroid.hpp"

namespace hopfkit::vertex {

// An H-bimodule algebra K with alpha: H* -> K and tau: K -> K.
struct VertexGroupData {
  Presentation h;
  Algebra k;
  std::vector<SparseVec> left;   // left[x * dim K + j] = e_x . e_j
  std::vector<SparseVec> right;  // right[j * dim H + x] = e_j . e_x
  LinearMap alpha;               // on the dual basis of H
  LinearMap tau;

  SparseVec act_left(const SparseVec& x, const SparseVec& v) const;
  SparseVec act_right(const SparseVec& v, const SparseVec& x) const;
};

// Bimodule-algebra axioms, alpha a unital algebra and bimodule map,
// tau an anti-isomorphism with tau alpha = alpha S, tau(x.k) = tau(k).S(x)
// and tau(k.x) = S(x).tau(k). Notes whether tau^2 = id and K is commutative.
// Throws PresentationError if H is not cocommutative.
VerdictReport check_vertex_group(const VertexGroupData& v);

// K = H*, alpha = id, tau = S*.
VertexGroupData dual_vertex_group(const Presentation& h);

// K = H(A) with alpha(p) = 1 # p,
// a -> (b # p) = sum p2(a) (b # p1), (b # p) <- a = sum p1(a) (S(a) b a # p2),
// tau(a # p) = sum (S(p) -> (e_i a)) e_j # S(e^j) e^i.
// Throws PresentationError if A is not cocommutative or S^2 != id.
VertexGroupData heisenberg_vertex_group(const Presentation& a);

// The closed-form actions against the regular actions of D(A) on
// D(A)* = H(A) along a -> eps (x) a.
VerdictReport restricted_action_check(const Presentation& a);
VerdictReport restricted_action_check(const Presentation& a, const VertexGroupData& v);

// The closed form tau^-1(p # a) = sum (S^-1(a) -> (e^i p)) e^j # S^-1(e_j) e_i
// against the Lu algebroid of A, and, for cocommutative A, tau of the
// vertex group of A against tau^-1 of the Lu algebroid of A* moved to H(A).
// The second form takes that vertex group explicitly and skips the second
// part when it is null.
VerdictReport tau_cross_check(const Presentation& a);
VerdictReport tau_cross_check(const Presentation& a, const VertexGroupData* vertex);

}  // namespace hopfkit::vertex
