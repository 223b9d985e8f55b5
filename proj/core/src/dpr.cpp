#include "hopfkit/dpr.hpp"

#include <set>
#include <sstream>

#include "hopfkit/doubles.hpp"
#include "hopfkit/io.hpp"
#include "json.hpp"

namespace hopfkit::dpr {

namespace {

std::string triple(const GroupTable& g, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    s += (first ? "" : ", ") + g.labels[i];
    first = false;
  }
  return s + ")";
}

}  // namespace

Cocycle3 Cocycle3::trivial(const GroupTable& g, const Field& f) {
  Cocycle3 w;
  w.group = g;
  w.field = f;
  w.values.assign(g.order * g.order * g.order, f.one());
  return w;
}

VerdictReport check_3cocycle(const Cocycle3& w) {
  const GroupTable& g = w.group;
  const std::size_t n = g.order;
  if (w.values.size() != n * n * n) throw PresentationError("cocycle table has the wrong size");
  for (std::size_t i = 0; i < w.values.size(); ++i)
    if (w.values[i].is_zero())
      throw PresentationError("cocycle value is zero at " + triple(g, {i / (n * n), (i / n) % n, i % n}));
  VerdictReport rep("3-cocycle");
  const std::size_t e = g.identity;
  auto& nv = rep.add("w(1, x, y) = w(x, 1, y) = w(x, y, 1) = 1");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      nv.check(w(e, x, y).is_one() && w(x, e, y).is_one() && w(x, y, e).is_one(), [&] { return triple(g, {x, y}); });
  auto& cv = rep.add("w(x, y, zt) w(xy, z, t) = w(y, z, t) w(x, yz, t) w(x, y, z)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t)
          cv.check(w(x, y, g.product(z, t)) * w(g.product(x, y), z, t) ==
                       w(y, z, t) * w(x, g.product(y, z), t) * w(x, y, z),
                   [&] { return triple(g, {x, y, z, t}); });
  return rep;
}

Cocycle3 standard_cyclic_cocycle(std::size_t n, const Scalar& zeta) {
  const Field f = zeta.field();
  if (zeta.pow(static_cast<long long>(n)) != f.one()) throw FieldError("zeta is not an n-th root of unity");
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0 && zeta.pow(static_cast<long long>(d)) == f.one()) throw FieldError("zeta is not primitive");
  Cocycle3 w = Cocycle3::trivial(GroupTable::cyclic(n), f);
  w.group_name = "Z" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        w.values[(i * n + j) * n + k] = zeta.pow(static_cast<long long>(i * ((j + k) / n)));
  return w;
}

DPRAlgebra build_dpr(const Cocycle3& w) {
  const GroupTable& G = w.group;
  const std::size_t n = G.order, N = n * n;
  const Field& f = w.field;
  DPRAlgebra d;
  d.omega = w;
  d.theta.resize(n * n * n);
  d.gamma.resize(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        // theta(a; x, y) = w(a, x, y) w(x, y, a <| xy) w^-1(x, a <| x, y)
        d.theta[(a * n + x) * n + y] =
            w(a, x, y) * w(x, y, G.conj(a, G.product(x, y))) / w(x, G.conj(a, x), y);
        // gamma(a, b; x) = w(a, b, x) w(x, a <| x, b <| x) w^-1(a, x, b <| x) with b = y
        d.gamma[(a * n + y) * n + x] = w(a, y, x) * w(x, G.conj(a, x), G.conj(y, x)) / w(a, x, G.conj(y, x));
      }

  Presentation& h = d.h;
  h.alg.field = f;
  h.alg.dim = N;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t g = 0; g < n; ++g) h.alg.basis.push_back("d" + G.labels[u] + "|" + G.labels[g]);
  h.alg.table.resize(N * N);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t k = 0; k < n; ++k)
          if (u == G.product(G.product(g, v), G.inv[g]))
            h.alg.table[(u * n + g) * N + (v * n + k)] = SparseVec::unit(u * n + G.product(g, k), d.th(u, g, k));
  {
    Accumulator one;
    for (std::size_t u = 0; u < n; ++u) one.add(u * n + G.identity, f.one());
    h.alg.unit = one.take();
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t g = 0; g < n; ++g) {
      Accumulator acc;
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t wv = G.product(G.inv[v], u);  // v wv = u
        acc.add((v * n + g) * N + (wv * n + g), d.ga(v, wv, g));
      }
      h.comult.push_back(acc.take());
    }
  {
    Accumulator e;
    for (std::size_t g = 0; g < n; ++g) e.add(G.identity * n + g, f.one());
    h.counit = e.take();
  }
  {
    Accumulator phi;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          phi.add(((x * n + G.identity) * N + (y * n + G.identity)) * N + (z * n + G.identity), w(x, y, z).inv());
    h.phi = Tensor({N, N, N}, phi.take());
    if (h.has_trivial_phi()) h.phi.reset();
  }
  {
    Accumulator r;
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t u = 0; u < n; ++u) r.add((g * n + G.identity) * N + (u * n + g), f.one());
    h.R = Tensor({N, N}, r.take());
  }
  return d;
}

VerdictReport gamma_theta_identity(const DPRAlgebra& d) {
  VerdictReport rep("gamma-theta identity");
  const GroupTable& G = d.omega.group;
  const std::size_t n = d.order();
  auto& v = rep.add("gamma(x, y <| x; h) theta(y; x, h) = theta(y; h, x <| h) gamma(y, x; h)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t h = 0; h < n; ++h)
        v.check(d.ga(x, G.conj(y, x), h) * d.th(y, x, h) == d.th(y, h, G.conj(x, h)) * d.ga(y, x, h),
                [&] { return triple(G, {x, y, h}); });
  return rep;
}

VerdictReport trivial_reduction(const DPRAlgebra& d) {
  VerdictReport rep("trivial cocycle");
  bool trivial = true;
  for (const auto& s : d.omega.values) trivial = trivial && s.is_one();
  rep.note("w trivial", trivial);
  if (!trivial) return rep;
  auto& v = rep.add("theta = gamma = 1");
  for (std::size_t i = 0; i < d.theta.size(); ++i) v.check(d.theta[i].is_one() && d.gamma[i].is_one());
  return rep;
}

DPRStar dpr_star_product(const DPRAlgebra& d) {
  const GroupTable& G = d.omega.group;
  const std::size_t n = d.order(), N = n * n;
  DPRStar out;
  Algebra& c = out.closed;
  c.field = d.omega.field;
  c.dim = N;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < n; ++s) c.basis.push_back(G.labels[x] + "|e^" + std::to_string(s));
  c.table.resize(N * N);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t t = G.product(x, s);
        c.table[(x * n + s) * N + (y * n + t)] =
            SparseVec::unit(G.product(y, x) * n + s, d.ga(x, G.conj(y, x), s) * d.th(y, x, s));
      }
  c.unit = d.h.counit;

  VerdictReport& rep = out.report;
  rep = VerdictReport("star product of the twisted double");
  const star::StarProduct gen = star::build_star_product(d.h);
  rep.add("unit is eps").check(gen.alg.unit == c.unit);
  auto& v = rep.add("closed form = generic star product");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      v.check(gen.alg.product(i, j) == c.product(i, j), [&] { return c.basis[i] + " . " + c.basis[j]; });
  bool trivial = true;
  for (const auto& s : d.omega.values) trivial = trivial && s.is_one();
  if (trivial) {
    const Algebra op = doubles::heisenberg_double(hopf::group_algebra(G, c.field)).opposite();
    auto& o = rep.add("equals H(kG)^op");
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        o.check(op.product(i, j) == c.product(i, j), [&] { return c.basis[i] + " . " + c.basis[j]; });
  }
  return out;
}

VerdictReport check_trivial_is_double_cop(const DPRAlgebra& d) {
  VerdictReport rep("trivial twisted double");
  const Presentation D = doubles::drinfeld_double(hopf::group_algebra(d.omega.group, d.omega.field));
  Presentation c = hopf::variant(D, hopf::Variant::cop);
  rep.add("multiplication").check(c.alg.table == d.h.alg.table && c.alg.unit == d.h.alg.unit);
  rep.add("comultiplication").check(c.comult == d.h.comult);
  rep.add("counit").check(c.counit == d.h.counit);
  rep.add("associator").check(d.h.has_trivial_phi());
  rep.add("R = R21 of D(kG)").check(permute_legs(D.r_matrix(), {2, 1}) == d.h.r_matrix());
  return rep;
}

Cocycle3 read_cocycle(std::string_view text) {
  using nlohmann::json;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw io::ParseError("cocycle document must be an object");
    for (const auto& [k, v] : j.items())
      if (k != "group" && k != "field" && k != "entries") throw io::ParseError("unknown key '" + k + "'");
    if (!j.contains("group") || !j.contains("field")) throw io::ParseError("cocycle needs 'group' and 'field'");
    GroupTable g;
    std::string name;
    if (j["group"].is_string()) {
      name = j["group"].get<std::string>();
      g = GroupTable::named(name);
    } else {
      g = io::read_group_table(j["group"].dump());
    }
    Cocycle3 w = Cocycle3::trivial(g, Field::parse(j["field"].get<std::string>()));
    w.group_name = name;
    const std::size_t n = g.order;
    if (j.contains("entries")) {
      if (!j["entries"].is_array()) throw io::ParseError("'entries' must be an array");
      std::set<std::size_t> seen;
      for (const auto& row : j["entries"]) {
        if (!row.is_array() || row.size() != 4) throw io::ParseError("cocycle entry must be [i, j, k, \"c\"]");
        std::size_t idx = 0;
        for (int m = 0; m < 3; ++m) {
          const auto i = row[m].get<long long>();
          if (i < 0 || static_cast<std::size_t>(i) >= n) throw io::ParseError("group index out of range");
          idx = idx * n + static_cast<std::size_t>(i);
        }
        if (!seen.insert(idx).second) throw io::ParseError("duplicate cocycle entry");
        w.values[idx] = row[3].is_string() ? w.field.parse_scalar(row[3].get<std::string>())
                                           : w.field.from_int(row[3].get<long long>());
      }
    }
    return w;
  } catch (const json::exception& e) {
    throw io::ParseError(std::string("malformed cocycle: ") + e.what());
  } catch (const FieldError& e) {
    throw io::ParseError(std::string("bad scalar or field: ") + e.what());
  } catch (const PresentationError& e) {
    throw io::ParseError(std::string("bad group: ") + e.what());
  }
}

std::string write_cocycle(const Cocycle3& w) {
  using nlohmann::json;
  std::ostringstream os;
  os << "{\n  \"group\": ";
  if (!w.group_name.empty()) {
    os << json(w.group_name).dump();
  } else {
    std::string t = io::write_group_table(w.group);
    while (!t.empty() && t.back() == '\n') t.pop_back();
    std::string indented;
    for (char ch : t) indented += ch == '\n' ? std::string("\n  ") : std::string(1, ch);
    os << indented;
  }
  os << ",\n  \"field\": " << json(w.field.name()).dump() << ",\n  \"entries\": [";
  const std::size_t n = w.order();
  bool first = true;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (w.values[i].is_one()) continue;
    os << (first ? "\n" : ",\n") << "    [" << i / (n * n) << ", " << (i / n) % n << ", " << i % n << ", "
       << json(w.values[i].str()).dump() << "]";
    first = false;
  }
  os << (first ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

}  // namespace hopfkit::dpr
