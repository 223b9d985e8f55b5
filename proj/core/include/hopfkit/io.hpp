#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hopfkit/presentation.hpp"

namespace hopfkit::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical presentation text. Sparse tables are sorted row lists
// [i, j, k, "c"] (mult: e_i e_j has c e_k; comult: Delta(e_i) has c e_j (x) e_k;
// phi: coefficient of e_i (x) e_j (x) e_k), [i, j, "c"] (antipode: S(e_i) has
// c e_j; R: coefficient of e_i (x) e_j) and [i, "c"] (unit, counit, alpha,
// beta). Optional "associative" flag is written when given.
std::string write_presentation(const Presentation& h, std::optional<bool> associative = std::nullopt);
Presentation read_presentation(std::string_view text);

// Algebra-only document: field, dim, basis, unit, mult and, when given, the
// associative flag.
std::string write_algebra(const Algebra& a, std::optional<bool> associative = std::nullopt);
Algebra read_algebra(std::string_view text);

// "1/3*e^0 + w^2*e^1" style rendering; "0" for the zero vector.
std::string format_element(const SparseVec& v, const std::vector<std::string>& labels);

// {"order": n, "labels": [...], "table": [[...], ...]}
GroupTable read_group_table(std::string_view text);
std::string write_group_table(const GroupTable& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Matrix as [i, j, "c"] rows meaning column i has c at row j.
std::string write_matrix_rows(const LinearMap& m);

}  // namespace hopfkit::io
