#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hopfkit {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Scalar;

namespace detail {
struct FieldData;
}

enum class FieldKind { rationals, prime, cyclotomic };

// Handle to an interned field. Two handles compare equal iff they denote the
// same field; the descriptor "q", "gf:<p>" or "cyclo:<n>" is the identity.
class Field {
 public:
  Field();  // the rationals

  static Field rationals();
  static Field prime(std::uint64_t p);
  static Field cyclotomic(unsigned n);
  static Field parse(std::string_view descriptor);

  FieldKind kind() const;
  std::uint64_t characteristic() const;  // 0 for char-0 fields
  unsigned cyclotomic_order() const;     // n for cyclo:n, else 0
  unsigned degree() const;               // dimension over the prime field
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& v) const;
  Scalar generator() const;  // w for cyclo:n
  Scalar parse_scalar(std::string_view text) const;

  // A primitive n-th root: w^(m/n) in cyclo:m, the least residue in gf:p.
  Scalar primitive_root(unsigned n) const;

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }

  const detail::FieldData* data() const { return d_; }
  explicit Field(const detail::FieldData* d) : d_(d) {}

 private:
  const detail::FieldData* d_;
};

// Exact field element. A default-constructed Scalar is a field-less zero that
// adopts the field of whatever it is combined with.
class Scalar {
 public:
  Scalar() = default;

  bool has_field() const { return f_ != nullptr; }
  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inv() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  // Canonical text encoding; round-trips through Field::parse_scalar.
  std::string str() const;
  // Compact display form: recognises r*w^k monomials, otherwise str().
  std::string pretty() const;

  // Coefficients in the power basis of cyclo:n (length = degree), or the
  // single rational / residue for the other kinds.
  std::vector<mpq_class> rational_coords() const;

  using Poly = std::vector<mpq_class>;
  using Repr = std::variant<std::monostate, mpq_class, std::uint64_t, Poly>;
  Scalar(const detail::FieldData* f, Repr v) : f_(f), v_(std::move(v)) {}
  const Repr& repr() const { return v_; }

 private:
  const detail::FieldData* common(const Scalar& b) const;
  Scalar lifted(const detail::FieldData* f) const;

  const detail::FieldData* f_ = nullptr;
  Repr v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfkit
