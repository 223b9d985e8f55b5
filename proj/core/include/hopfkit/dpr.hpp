#pragma once

#include "hopfkit/starprod.hpp"

namespace hopfkit::dpr {

// A G-valued table w(x, y, z), values[(x * n + y) * n + z].
struct Cocycle3 {
  GroupTable group;
  std::string group_name;  // written to files when set, else the table
  Field field;
  std::vector<Scalar> values;

  std::size_t order() const { return group.order; }
  const Scalar& operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return values[(x * order() + y) * order() + z];
  }
  static Cocycle3 trivial(const GroupTable& g, const Field& f);
};

// Normalization and w(x, y, zt) w(xy, z, t) = w(y, z, t) w(x, yz, t) w(x, y, z).
// Throws PresentationError on a zero value.
VerdictReport check_3cocycle(const Cocycle3& w);
// w(a^i, a^j, a^k) = zeta^(i floor((j + k) / n)) on Z/n.
Cocycle3 standard_cyclic_cocycle(std::size_t n, const Scalar& zeta);

struct DPRAlgebra {
  Cocycle3 omega;
  Presentation h;  // basis delta_u (x) g at index u * n + g
  std::vector<Scalar> theta;  // theta[(g * n + x) * n + y] = theta(g; x, y)
  std::vector<Scalar> gamma;  // gamma[(g * n + h) * n + x] = gamma(g, h; x)

  std::size_t order() const { return omega.order(); }
  const Scalar& th(std::size_t g, std::size_t x, std::size_t y) const { return theta[(g * order() + x) * order() + y]; }
  const Scalar& ga(std::size_t g, std::size_t h, std::size_t x) const { return gamma[(g * order() + h) * order() + x]; }
};

// (delta_u (x) g)(delta_v (x) h) = [u = g v g^-1] theta(u; g, h) delta_u (x) gh,
// Delta(delta_u (x) g) = sum_{vw = u} gamma(v, w; g) (delta_v (x) g) (x) (delta_w (x) g),
// phi = sum w^-1(x, y, z) delta_x (x) delta_y (x) delta_z, R = sum (delta_g (x) 1) (x) (eps (x) g).
// No antipode is attached.
DPRAlgebra build_dpr(const Cocycle3& w);

// sum gamma(x, y <| x; h) theta(y; x, h) = theta(y; h, x <| h) gamma(y, x; h)
VerdictReport gamma_theta_identity(const DPRAlgebra& d);
// theta = gamma = 1 when w is trivial
VerdictReport trivial_reduction(const DPRAlgebra& d);

struct DPRStar {
  Algebra closed;  // on H (x) H*, index x * n + s
  VerdictReport report;
};
// (x (x) delta_s).(x' (x) delta_t) = [t = xs] gamma(x, x' <| x; s) theta(x'; x, s) x'x (x) delta_s
// against the generic star product of d.h, and against H(kG)^op when w is
// trivial.
DPRStar dpr_star_product(const DPRAlgebra& d);

// For trivial w: d.h against D(kG)^cop with R21, structure constants.
VerdictReport check_trivial_is_double_cop(const DPRAlgebra& d);

// {group, field, entries [[i, j, k, "scalar"], ...]}, omitted entries are 1.
Cocycle3 read_cocycle(std::string_view text);
std::string write_cocycle(const Cocycle3& w);

}  // namespace hopfkit::dpr
