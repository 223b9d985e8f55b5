#pragma once

#include "hopfkit/doubles.hpp"

namespace hopfkit::algebroid {

// Span of independent vectors with coordinates read off pivot rows.
class Subspace {
 public:
  Subspace() = default;
  // Throws PresentationError if the vectors are dependent.
  Subspace(std::size_t ambient, std::vector<SparseVec> basis);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  // Coordinates of x, or nullopt when x is outside the span.
  std::optional<SparseVec> coords(const SparseVec& x) const;
  SparseVec embed(const SparseVec& c) const;
  // ambient -> dim, exact on the span
  const LinearMap& coordinate_map() const { return coord_; }
  const LinearMap& inclusion() const { return incl_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec> basis_;
  LinearMap coord_, incl_;
};

// The restriction of a Hopf algebra to a subspace basis, or nullopt with
// failed verdicts in rep if the subspace is not closed under mult, Delta,
// eps-compatible unit or S.
std::optional<Presentation> sub_hopf(const Presentation& h, const Subspace& s, VerdictReport& rep,
                                     const std::string& prefix);

// R = sum u_i (x) v_i with m minimal; L = span(u), D = span(v).
struct RankFactorization {
  Tensor r;
  std::size_t rank = 0;
  Subspace l, d;
  std::optional<Presentation> l_hopf, d_hopf;  // on the u and v bases
  LinearMap f;  // L* -> D on the dual basis of u: f(u^i) = v_i
  VerdictReport report;
};
// Also checks that L and D are Hopf subalgebras and that f: L*cop -> D is a
// Hopf isomorphism.
RankFactorization rank_factorization(const Presentation& h);

// Left H-module algebra V with action[x * dim V + k] = e_x . e_k.
struct ModuleAlgebra {
  Presentation h;
  Algebra v;
  std::vector<SparseVec> action;

  SparseVec act(const SparseVec& x, const SparseVec& w) const;
};
VerdictReport check_module_algebra(const ModuleAlgebra& m);
// v w = sum (R2 . w)(R1 . v)
VerdictReport check_quantum_commutative(const ModuleAlgebra& m);

// T (x)_B T and T (x)_B T (x)_B T for the bimodule b.t = alpha(b) t,
// t.b = beta(b) t. The triple quotient is taken on Q2 (x) T, Q2 the
// complement coordinates of the pair quotient.
struct BalancedTensor {
  std::size_t t_dim = 0, b_dim = 0;
  Quotient pair, triple;
  std::vector<Index> pair_basis;  // complement columns of pair

  // canonical representative in T (x) T
  SparseVec project(const SparseVec& x) const { return pair.project(x); }
  // coordinates over pair_basis
  SparseVec pair_coords(const SparseVec& x) const;
  // canonical form of x in T (x) T (x) T, index (i * t + j) * t + k
  SparseVec project3(const SparseVec& x) const;
};
// Relations (beta(b) t) (x) t' - t (x) (alpha(b) t') over basis triples.
std::vector<SparseVec> balanced_relations(const Algebra& t, const LinearMap& alpha, const LinearMap& beta,
                                          std::size_t b_dim);
BalancedTensor balanced_tensor(const Algebra& t, const LinearMap& alpha, const LinearMap& beta, std::size_t b_dim);

struct HopfAlgebroid {
  Algebra total, base;
  LinearMap alpha, beta;          // B -> T
  std::vector<SparseVec> delta;   // representatives in T (x) T
  LinearMap eps;                  // T -> B
  std::optional<LinearMap> tau, tau_inv;
  std::optional<LinearMap> gamma;  // on representatives, T (x) T -> T (x) T
  BalancedTensor tensor;
};

// A bialgebra as an algebroid over k with tau = S and gamma = id.
HopfAlgebroid from_hopf(const Presentation& h);

VerdictReport check_bialgebroid(const HopfAlgebroid& p);
// Records eps tau = eps as a note.
VerdictReport check_hopf_algebroid(const HopfAlgebroid& p);

class PreconditionError : public PresentationError {
 public:
  PreconditionError(const std::string& what, VerdictReport r) : PresentationError(what), report(std::move(r)) {}
  VerdictReport report;
};

// V # L with T basis index v * dim L + l over the coordinates of L.
struct VLAlgebroid {
  ModuleAlgebra module;
  Subspace l;
  Presentation l_hopf;
  std::vector<SparseVec> l_action;  // l_action[i * dim V + k] = u_i . e_k
  SparseVec d0;
  HopfAlgebroid p;
  VerdictReport preconditions;
};
// L defaults to R_(l); a larger Hopf subalgebra may be passed instead.
// Throws PreconditionError if V is not a quantum commutative module algebra
// or L does not contain the left legs of R.
VLAlgebroid build_VL_algebroid(const ModuleAlgebra& m, const std::optional<Subspace>& l = std::nullopt);
// (w # l).v = sum w (r2 . v) # r1 l, sum beta(l2 . v)(1 # l1) = (1 # l) beta(v),
// the d0 identities and d0 acting as an algebra automorphism of V.
VerdictReport check_vl_identities(const VLAlgebroid& a);

// V = A* under (p (x) b) -> q = sum q2(b) p2 q1 S*^-1(p1), H = D(A).
ModuleAlgebra lu_module(const Presentation& a);
// V = A under (p (x) a).b = sum (a1 b S(a2)) <- S^-1(p), H = D(A).
ModuleAlgebra remark_module(const Presentation& a);
// V = H(A) under (h (x) h').f = h -> f <- h' of D(A) (x) D(A)^opcop.
ModuleAlgebra heisenberg_module(const Presentation& a);

struct CorollaryInstance {
  VLAlgebroid algebroid;
  VerdictReport report;  // action formula, L = A (x) A*op and both suites
};
// H(A) # (A (x) A*op) over H(A), with
// (a (x) p).(b # q) = sum p(b1) q2(a) (b2 # q1).
CorollaryInstance corollary_instance(const Presentation& a);

// T.json, B.json and maps.json under dir.
void write_bundle(const HopfAlgebroid& p, const std::string& dir);

}  // namespace hopfkit::algebroid
