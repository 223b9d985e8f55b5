#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/field.hpp"

namespace hopfkit {

using Index = std::uint64_t;

// Sparse coefficient vector: entries sorted by index, no explicit zeros.
// Elements of an algebra are SparseVecs over its basis; the dimension is
// carried by whatever structure the vector belongs to.
class SparseVec {
 public:
  using Entry = std::pair<Index, Scalar>;

  SparseVec() = default;
  static SparseVec unit(Index i, const Scalar& value);
  // Sums duplicate indices and drops zeros.
  static SparseVec from_entries(std::vector<Entry> entries);

  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  Scalar operator[](Index i) const;
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<Entry>& entries() const { return e_; }
  Index leading_index() const { return e_.front().first; }
  Index max_index() const { return e_.back().first; }

  SparseVec operator+(const SparseVec& b) const;
  SparseVec operator-(const SparseVec& b) const;
  SparseVec operator-() const;
  SparseVec scaled(const Scalar& a) const;
  // this += a * x
  void axpy(const Scalar& a, const SparseVec& x);
  SparseVec& operator+=(const SparseVec& b) {
    *this = *this + b;
    return *this;
  }

  bool operator==(const SparseVec& b) const;
  bool operator!=(const SparseVec& b) const { return !(*this == b); }

  // "[i:s, ...]" for diagnostics.
  std::string str() const;

 private:
  std::vector<Entry> e_;
};

// Scatter-gather builder for SparseVec.
class Accumulator {
 public:
  void add(Index i, const Scalar& s);
  void add(const SparseVec& v, const Scalar& scale);
  void add(const SparseVec& v);
  bool empty() const { return m_.empty(); }
  SparseVec take();

 private:
  std::map<Index, Scalar> m_;
};

}  // namespace hopfkit
