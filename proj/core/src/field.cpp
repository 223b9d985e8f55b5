#include "hopfkit/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopfkit {

namespace detail {

struct FieldData {
  FieldKind kind;
  std::uint64_t p = 0;
  unsigned n = 0;
  unsigned deg = 1;
  std::vector<mpq_class> phi;  // monic minimal polynomial, low to high
  std::string name;
  Scalar zero, one;  // cached
};

}  // namespace detail

using detail::FieldData;

namespace {

using Poly = Scalar::Poly;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Integer polynomials, low to high.
using IPoly = std::vector<long long>;

IPoly divide_exact(IPoly num, const IPoly& den) {
  IPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long long c = num[i + den.size() - 1];  // den is monic
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

IPoly cyclotomic_poly(unsigned n) {
  static std::map<unsigned, IPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_poly(d));
  cache[n] = p;
  return p;
}

const FieldData* intern(const std::string& name, FieldKind kind, std::uint64_t p,
                        unsigned n) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<FieldData>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[name];
  if (!slot) {
    auto d = std::make_unique<FieldData>();
    d->kind = kind;
    d->p = p;
    d->n = n;
    d->name = name;
    if (kind == FieldKind::cyclotomic) {
      IPoly c = cyclotomic_poly(n);
      d->deg = static_cast<unsigned>(c.size() - 1);
      for (long long v : c) d->phi.emplace_back(static_cast<long>(v));
    }
    slot = std::move(d);
    const Field f(slot.get());
    slot->zero = f.from_int(0);
    slot->one = f.from_int(1);
  }
  return slot.get();
}

void reduce_poly(Poly& a, const FieldData* f) {
  const unsigned deg = f->deg;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    mpq_class c = a[i];
    for (unsigned j = 0; j <= deg; ++j) a[i - deg + j] -= c * f->phi[j];
  }
  a.resize(deg);
}

Poly poly_mul(const Poly& a, const Poly& b, const FieldData* f) {
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  reduce_poly(r, f);
  return r;
}

// Inverse in Q[x]/Phi_n via the multiplication matrix.
Poly poly_inv(const Poly& a, const FieldData* f) {
  const unsigned d = f->deg;
  // column k of M is a * x^k
  std::vector<Poly> cols;
  Poly xk(d);
  xk[0] = 1;
  for (unsigned k = 0; k < d; ++k) {
    cols.push_back(poly_mul(a, xk, f));
    Poly shifted(d + 1);
    for (unsigned i = 0; i < d; ++i) shifted[i + 1] = xk[i];
    reduce_poly(shifted, f);
    xk = shifted;
  }
  // Solve M c = e0 by Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (unsigned r = 0; r < d; ++r) {
    for (unsigned c = 0; c < d; ++c) m[r][c] = cols[c][r];
    m[r][d] = r == 0 ? 1 : 0;
  }
  for (unsigned c = 0; c < d; ++c) {
    unsigned piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw FieldError("division by zero");
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (unsigned k = c; k <= d; ++k) m[c][k] *= inv;
    for (unsigned r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class s = m[r][c];
      for (unsigned k = c; k <= d; ++k) m[r][k] -= s * m[c][k];
    }
  }
  Poly out(d);
  for (unsigned r = 0; r < d; ++r) out[r] = m[r][d];
  return out;
}

std::uint64_t residue_of(const mpq_class& q, std::uint64_t p) {
  mpz_class pz(std::to_string(p));
  mpz_class a = q.get_num() % pz;
  if (a < 0) a += pz;
  mpz_class b = q.get_den() % pz;
  if (b == 0) throw FieldError("denominator divisible by the characteristic");
  std::uint64_t ai = std::stoull(a.get_str()), bi = std::stoull(b.get_str());
  return mulmod(ai, powmod(bi, p - 2, p), p);
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view t) {
  std::string s(t);
  if (s.empty()) throw FieldError("empty scalar");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw FieldError("bad scalar '" + s + "'");
  std::size_t slash = s.find('/');
  for (std::size_t i = start; i < s.size(); ++i) {
    if (i == slash) continue;
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw FieldError("bad scalar '" + s + "'");
  }
  if (slash != std::string::npos && (slash == start || slash + 1 == s.size()))
    throw FieldError("bad scalar '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw FieldError("bad scalar '" + s + "'");
  if (q.get_den() == 0) throw FieldError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

// ---- Field ----

Field::Field() : d_(rationals().d_) {}

Field Field::rationals() {
  static const FieldData* q = intern("q", FieldKind::rationals, 0, 0);
  return Field(q);
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("gf:" + std::to_string(p) + " is not a prime field");
  if (p >= (std::uint64_t{1} << 62)) throw FieldError("prime too large");
  return Field(intern("gf:" + std::to_string(p), FieldKind::prime, p, 0));
}

Field Field::cyclotomic(unsigned n) {
  if (n < 1 || n > 512) throw FieldError("cyclotomic order out of range");
  return Field(intern("cyclo:" + std::to_string(n), FieldKind::cyclotomic, 0, n));
}

Field Field::parse(std::string_view s) {
  auto number = [&](std::string_view t) {
    if (t.empty() || t.size() > 18) throw FieldError("bad field descriptor '" + std::string(s) + "'");
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw FieldError("bad field descriptor '" + std::string(s) + "'");
    return std::stoull(std::string(t));
  };
  if (s == "q") return rationals();
  if (s.substr(0, 3) == "gf:") return prime(number(s.substr(3)));
  if (s.substr(0, 6) == "cyclo:") {
    auto n = number(s.substr(6));
    if (n > 512) throw FieldError("cyclotomic order out of range");
    return cyclotomic(static_cast<unsigned>(n));
  }
  throw FieldError("bad field descriptor '" + std::string(s) + "'");
}

FieldKind Field::kind() const { return d_->kind; }
std::uint64_t Field::characteristic() const { return d_->p; }
unsigned Field::cyclotomic_order() const { return d_->n; }
unsigned Field::degree() const { return d_->kind == FieldKind::cyclotomic ? d_->deg : 1; }
std::string Field::name() const { return d_->name; }

Scalar Field::zero() const { return d_->zero; }
Scalar Field::one() const { return d_->one; }

Scalar Field::from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }

Scalar Field::from_rational(const mpq_class& value) const {
  mpq_class v = value;
  v.canonicalize();
  switch (d_->kind) {
    case FieldKind::rationals:
      return Scalar(d_, v);
    case FieldKind::prime:
      return Scalar(d_, residue_of(v, d_->p));
    case FieldKind::cyclotomic: {
      Poly c(d_->deg);
      c[0] = v;
      return Scalar(d_, c);
    }
  }
  return {};
}

Scalar Field::generator() const {
  if (d_->kind != FieldKind::cyclotomic) throw FieldError(name() + " has no generator w");
  Poly c(d_->deg + 1);
  c[1] = 1;
  reduce_poly(c, d_);
  return Scalar(d_, c);
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw FieldError("empty scalar");
  if (d_->kind != FieldKind::cyclotomic) {
    mpq_class q = parse_rational(s);
    if (d_->kind == FieldKind::prime && q.get_den() == 1 && q >= 0 &&
        q.get_num() >= mpz_class(std::to_string(d_->p)))
      throw FieldError("residue out of range in '" + s + "'");
    return from_rational(q);
  }
  // Sum of terms  [sign] coeff | [sign] [coeff*] w[^k]
  Scalar acc = zero();
  Scalar w = generator();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw FieldError("bad scalar '" + s + "'");
    std::size_t wpos = term.find('w');
    Scalar t;
    if (wpos == std::string::npos) {
      t = from_rational(parse_rational(term));
    } else {
      mpq_class c = 1;
      if (wpos > 0) {
        if (term[wpos - 1] != '*' || wpos < 2) throw FieldError("bad scalar '" + s + "'");
        c = parse_rational(term.substr(0, wpos - 1));
      }
      long long k = 1;
      std::string rest = term.substr(wpos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2) throw FieldError("bad scalar '" + s + "'");
        for (std::size_t q = 1; q < rest.size(); ++q)
          if (!std::isdigit(static_cast<unsigned char>(rest[q])))
            throw FieldError("bad scalar '" + s + "'");
        if (rest.size() > 10) throw FieldError("bad scalar '" + s + "'");
        k = std::stoll(rest.substr(1));
      }
      t = from_rational(c) * w.pow(k);
    }
    acc += neg ? -t : t;
  }
  return acc;
}

Scalar Field::primitive_root(unsigned n) const {
  if (n == 0) throw FieldError("root order must be positive");
  switch (d_->kind) {
    case FieldKind::rationals:
      if (n == 1) return one();
      if (n == 2) return from_int(-1);
      break;
    case FieldKind::prime: {
      const std::uint64_t p = d_->p;
      if ((p - 1) % n != 0) break;
      std::vector<unsigned> primes;
      for (unsigned q = 2, m = n; m > 1; ++q)
        if (m % q == 0) {
          primes.push_back(q);
          while (m % q == 0) m /= q;
        }
      for (std::uint64_t x = 1; x < p; ++x) {
        if (powmod(x, n, p) != 1) continue;
        bool prim = true;
        for (unsigned q : primes)
          if (powmod(x, n / q, p) == 1) prim = false;
        if (prim) return Scalar(d_, x);
      }
      break;
    }
    case FieldKind::cyclotomic: {
      const unsigned m = d_->n;
      if (m % n == 0) return generator().pow(m / n);
      if (m % 2 == 1 && (2 * m) % n == 0) return (-generator()).pow(2 * m / n);
      break;
    }
  }
  throw FieldError(name() + " has no primitive root of unity of order " + std::to_string(n));
}

// ---- Scalar ----

Field Scalar::field() const {
  if (!f_) throw FieldError("scalar has no field");
  return Field(f_);
}

const FieldData* Scalar::common(const Scalar& b) const {
  if (!f_) return b.f_;
  if (!b.f_ || b.f_ == f_) return f_;
  throw FieldError("mixed-field operands: " + f_->name + " and " + b.f_->name);
}

Scalar Scalar::lifted(const FieldData* f) const {
  if (f_ || !f) return *this;
  return Field(f).zero();
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0:
      return true;
    case 1:
      return std::get<1>(v_) == 0;
    case 2:
      return std::get<2>(v_) == 0;
    default:
      for (const auto& c : std::get<3>(v_))
        if (c != 0) return false;
      return true;
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0:
      return false;
    case 1:
      return std::get<1>(v_) == 1;
    case 2:
      return std::get<2>(v_) == 1;
    default: {
      const auto& c = std::get<3>(v_);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != (i == 0 ? 1 : 0)) return false;
      return true;
    }
  }
}

Scalar Scalar::operator+(const Scalar& b) const {
  const FieldData* f = common(b);
  if (!f) return {};
  if (is_zero()) return b.lifted(f);
  if (b.is_zero()) return lifted(f);
  switch (f->kind) {
    case FieldKind::rationals:
      return Scalar(f, mpq_class(std::get<1>(v_) + std::get<1>(b.v_)));
    case FieldKind::prime: {
      std::uint64_t s = std::get<2>(v_) + std::get<2>(b.v_);
      return Scalar(f, s >= f->p ? s - f->p : s);
    }
    case FieldKind::cyclotomic: {
      Poly c = std::get<3>(v_);
      const Poly& d = std::get<3>(b.v_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      return Scalar(f, std::move(c));
    }
  }
  return {};
}

Scalar Scalar::operator-() const {
  if (!f_) return {};
  switch (f_->kind) {
    case FieldKind::rationals:
      return Scalar(f_, mpq_class(-std::get<1>(v_)));
    case FieldKind::prime: {
      std::uint64_t a = std::get<2>(v_);
      return Scalar(f_, a == 0 ? 0 : f_->p - a);
    }
    case FieldKind::cyclotomic: {
      Poly c = std::get<3>(v_);
      for (auto& x : c) x = -x;
      return Scalar(f_, std::move(c));
    }
  }
  return {};
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator*(const Scalar& b) const {
  const FieldData* f = common(b);
  if (!f) return {};
  if (is_zero() || b.is_zero()) return Field(f).zero();
  switch (f->kind) {
    case FieldKind::rationals:
      return Scalar(f, mpq_class(std::get<1>(v_) * std::get<1>(b.v_)));
    case FieldKind::prime:
      return Scalar(f, mulmod(std::get<2>(v_), std::get<2>(b.v_), f->p));
    case FieldKind::cyclotomic:
      if (b.is_one()) return *this;
      if (is_one()) return b;
      return Scalar(f, poly_mul(std::get<3>(v_), std::get<3>(b.v_), f));
  }
  return {};
}

Scalar Scalar::inv() const {
  if (is_zero()) throw FieldError("division by zero");
  switch (f_->kind) {
    case FieldKind::rationals:
      return Scalar(f_, mpq_class(1 / std::get<1>(v_)));
    case FieldKind::prime:
      return Scalar(f_, powmod(std::get<2>(v_), f_->p - 2, f_->p));
    case FieldKind::cyclotomic:
      return Scalar(f_, poly_inv(std::get<3>(v_), f_));
  }
  return {};
}

Scalar Scalar::operator/(const Scalar& b) const {
  common(b);
  return *this * b.inv();
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar base = *this;
  Scalar r = f_ ? Field(f_).one() : Scalar();
  if (!f_) {
    if (e == 0) throw FieldError("power of a field-less scalar");
    return {};
  }
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& b) const {
  const FieldData* f = common(b);
  if (!f) return true;
  if (is_zero() || b.is_zero()) return is_zero() && b.is_zero();
  return v_ == b.v_;
}

std::vector<mpq_class> Scalar::rational_coords() const {
  switch (v_.index()) {
    case 0:
      return {mpq_class(0)};
    case 1:
      return {std::get<1>(v_)};
    case 2:
      return {mpq_class(std::to_string(std::get<2>(v_)))};
    default:
      return std::get<3>(v_);
  }
}

std::string Scalar::str() const {
  switch (v_.index()) {
    case 0:
      return "0";
    case 1:
      return rational_str(std::get<1>(v_));
    case 2:
      return std::to_string(std::get<2>(v_));
    default:
      break;
  }
  const Poly& c = std::get<3>(v_);
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = rational_str(c[k]);
    } else {
      std::string w = k == 1 ? "w" : "w^" + std::to_string(k);
      if (c[k] == 1)
        term = w;
      else if (c[k] == -1)
        term = "-" + w;
      else
        term = rational_str(c[k]) + "*" + w;
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string Scalar::pretty() const {
  if (v_.index() != 3 || is_zero()) return str();
  const unsigned n = f_->n;
  Scalar w = Field(f_).generator();
  Scalar wk = Field(f_).one();
  for (unsigned k = 0; k < n; ++k) {
    Scalar r = *this / wk;
    const Poly& c = std::get<3>(r.v_);
    bool rational = true;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) rational = false;
    if (rational) {
      if (k == 0) return rational_str(c[0]);
      std::string wstr = k == 1 ? "w" : "w^" + std::to_string(k);
      if (c[0] == 1) return wstr;
      if (c[0] == -1) return "-" + wstr;
      return rational_str(c[0]) + "*" + wstr;
    }
    wk *= w;
  }
  return str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hopfkit
