#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopfkit/tensor.hpp"

namespace hopfkit {

class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incremental sparse row echelon form. Rows are inserted in order, reduced
// against existing pivots and normalised to a leading 1 at their leftmost
// nonzero column.
class RowEchelon {
 public:
  explicit RowEchelon(Index ncols) : ncols_(ncols) {}

  // Returns true when the row was independent of those already inserted.
  bool insert(const SparseVec& row);
  // Subtracts pivot rows until v vanishes on every pivot column. The result
  // is the canonical representative of v modulo the row span.
  SparseVec reduce(const SparseVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  Index columns() const { return ncols_; }
  bool is_pivot(Index c) const { return rows_.count(c) != 0; }
  const std::map<Index, SparseVec>& rows() const { return rows_; }

 private:
  Index ncols_;
  std::map<Index, SparseVec> rows_;
};

// Solves A X = B for a square or rectangular system given by rows of A
// (over ncols unknowns) and the right-hand sides as columns of B. Returns
// nullopt if some right-hand side is inconsistent or the solution is not
// unique.
std::optional<std::vector<SparseVec>> solve_unique(const std::vector<SparseVec>& a_rows,
                                                   Index ncols,
                                                   const std::vector<SparseVec>& b_cols);

// Any solution of A x = b, free variables set to zero; nullopt if
// inconsistent.
std::optional<SparseVec> solve_any(const std::vector<SparseVec>& a_rows, Index ncols,
                                   const SparseVec& b);

std::optional<LinearMap> inverse(const LinearMap& m);
std::size_t rank_of(const std::vector<SparseVec>& vectors, Index ncols);

// V / span(relations), represented by the pivot/non-pivot split of the
// relation echelon form. Representatives vanish on every pivot column, so
// the complement coordinates are the non-pivot columns in increasing order.
class Quotient {
 public:
  Quotient() : ech_(0) {}
  Quotient(Index dim, const std::vector<SparseVec>& relations);

  Index ambient_dim() const { return ech_.columns(); }
  std::size_t relation_rank() const { return ech_.rank(); }
  Index dim() const { return ech_.columns() - ech_.rank(); }
  SparseVec project(const SparseVec& v) const { return ech_.reduce(v); }
  bool equal(const SparseVec& a, const SparseVec& b) const { return project(a - b).empty(); }
  std::vector<Index> complement() const;
  LinearMap projection(const Field& f) const;
  const RowEchelon& echelon() const { return ech_; }

 private:
  RowEchelon ech_;
};

inline Quotient solve_and_quotient(Index dim, const std::vector<SparseVec>& relations) {
  return Quotient(dim, relations);
}

}  // namespace hopfkit
