#pragma once

// Shared helpers for sweeping Sweedler terms.

#include <tuple>
#include <vector>

#include "hopfkit/presentation.hpp"

namespace hopfkit::detail {

using Terms2 = std::vector<std::tuple<Scalar, std::size_t, std::size_t>>;
using Terms3 = std::vector<std::tuple<Scalar, std::size_t, std::size_t, std::size_t>>;

// Terms (c, a, b) of an arity-2 tensor over n x n.
inline Terms2 terms2(const Tensor& t) {
  Terms2 out;
  const std::size_t n = t.dims()[1];
  for (const auto& [flat, s] : t.coeffs()) out.emplace_back(s, flat / n, flat % n);
  return out;
}

inline Terms3 terms3(const Tensor& t) {
  Terms3 out;
  const std::size_t n = t.dims()[2];
  for (const auto& [flat, s] : t.coeffs()) out.emplace_back(s, flat / (n * n), (flat / n) % n, flat % n);
  return out;
}

// (Delta (x) id) Delta(e_i)
inline Terms3 delta3(const Presentation& h, std::size_t i) {
  return terms3(apply_leg_map(h.delta(i), 1, h.delta_leg()));
}

// sum x_i y_k table[i * n + k]
inline SparseVec bilinear(const std::vector<SparseVec>& table, std::size_t n, const SparseVec& x,
                          const SparseVec& y) {
  Accumulator acc;
  for (const auto& [i, a] : x)
    for (const auto& [k, b] : y) acc.add(table[i * n + k], a * b);
  return acc.take();
}

// a (x) b over the flattened basis of V (x) W with dim W = m
inline void add_outer(Accumulator& acc, const SparseVec& a, const SparseVec& b, std::size_t m, const Scalar& c) {
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) acc.add(i * m + j, c * x * y);
}

inline std::string dual_label(std::size_t i) { return "e^" + std::to_string(i); }

}  // namespace hopfkit::detail
