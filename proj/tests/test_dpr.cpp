#include "doctest.h"
#include "hopfkit/dpr.hpp"
#include "hopfkit/io.hpp"

using namespace hopfkit;
using namespace hopfkit::dpr;

namespace {

void require_pass(const VerdictReport& r) {
  INFO(r.summary());
  CHECK(r.passed());
}

// w(a^i, a^j, a^k) = (-1)^(ijk) on Z/2
Cocycle3 sign_cocycle() {
  Field q;
  Cocycle3 w = Cocycle3::trivial(GroupTable::cyclic(2), q);
  w.group_name = "Z2";
  w.values[7] = q.from_int(-1);
  return w;
}

Cocycle3 z3_cocycle() {
  const Field c3 = Field::parse("cyclo:3");
  return standard_cyclic_cocycle(3, c3.primitive_root(3));
}

}  // namespace

TEST_CASE("3-cocycles") {
  require_pass(check_3cocycle(Cocycle3::trivial(GroupTable::symmetric3(), Field())));
  const Cocycle3 s = sign_cocycle();
  const VerdictReport r = check_3cocycle(s);
  require_pass(r);
  CHECK(r.find("w(x, y, zt) w(xy, z, t) = w(y, z, t) w(x, yz, t) w(x, y, z)")->checked == 16);
  // the standard cocycle on Z/2 is the sign cocycle
  CHECK(standard_cyclic_cocycle(2, Field().from_int(-1)).values == s.values);
  const VerdictReport r3 = check_3cocycle(z3_cocycle());
  require_pass(r3);
  CHECK(r3.find("w(x, y, zt) w(xy, z, t) = w(y, z, t) w(x, yz, t) w(x, y, z)")->checked == 81);
  CHECK(standard_cyclic_cocycle(1, Field().one()).values == std::vector<Scalar>{Field().one()});
  require_pass(check_3cocycle(standard_cyclic_cocycle(3, Field::parse("gf:7").primitive_root(3))));
  CHECK_THROWS_AS(standard_cyclic_cocycle(3, Field::parse("cyclo:3").one()), FieldError);
}

TEST_CASE("3-cocycle negative controls") {
  Cocycle3 w = z3_cocycle();
  SUBCASE("one entry changed") {
    w.values[(1 * 3 + 2) * 3 + 2] = w.values[(1 * 3 + 2) * 3 + 2] * w.field.primitive_root(3);
    const VerdictReport r = check_3cocycle(w);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.find("w(x, y, zt) w(xy, z, t) = w(y, z, t) w(x, yz, t) w(x, y, z)")->witness.empty());
  }
  SUBCASE("first two legs swapped") {
    Cocycle3 s = w;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) s.values[(i * 3 + j) * 3 + k] = w(j, i, k);
    CHECK_FALSE(check_3cocycle(s).passed());
  }
  SUBCASE("normalization broken") {
    w.values[0] = w.field.from_int(2);
    CHECK_FALSE(check_3cocycle(w).passed("w(1, x, y) = w(x, 1, y) = w(x, y, 1) = 1"));
  }
  SUBCASE("zero value") {
    w.values[5] = w.field.zero();
    CHECK_THROWS_AS(check_3cocycle(w), PresentationError);
  }
}

TEST_CASE("twisted doubles pass the quasitriangular suite") {
  for (const Cocycle3& w : {sign_cocycle(), z3_cocycle()}) {
    CAPTURE(w.order());
    const DPRAlgebra d = build_dpr(w);
    CHECK_FALSE(d.h.has_trivial_phi());
    require_pass(hopf::check_quasi_bialgebra(d.h));
    const VerdictReport qt = hopf::check_quasitriangular(d.h);
    require_pass(qt);
    CHECK(qt.passed("quasi-Yang-Baxter"));
    require_pass(gamma_theta_identity(d));
    CHECK(gamma_theta_identity(d).verdicts().front().checked == w.order() * w.order() * w.order());
  }
}

TEST_CASE("trivial cocycle gives the co-opposite double") {
  for (const char* g : {"Z2", "S3"}) {
    CAPTURE(g);
    const DPRAlgebra d = build_dpr(Cocycle3::trivial(GroupTable::named(g), Field()));
    require_pass(check_trivial_is_double_cop(d));
    const VerdictReport t = trivial_reduction(d);
    require_pass(t);
    CHECK(t.notes().at("w trivial") == "true");
  }
}

TEST_CASE("closed-form star product of the twisted double") {
  const DPRStar triv = dpr_star_product(build_dpr(Cocycle3::trivial(GroupTable::cyclic(2), Field())));
  require_pass(triv.report);
  CHECK(triv.report.find("equals H(kG)^op") != nullptr);
  for (const Cocycle3& w : {sign_cocycle(), z3_cocycle()}) {
    CAPTURE(w.order());
    const DPRAlgebra d = build_dpr(w);
    const DPRStar s = dpr_star_product(d);
    require_pass(s.report);
    CHECK(s.report.find("closed form = generic star product")->checked == d.h.dim() * d.h.dim());
    const star::StarProduct gen = star::build_star_product(d.h);
    const VerdictReport b = star::check_bimodule_algebra(gen);
    require_pass(b);
    CHECK(b.find("associativity") == nullptr);
    require_pass(star::check_quantum_commutative_lr(gen));
  }
}

TEST_CASE("twisted double negative controls") {
  const DPRAlgebra good = build_dpr(sign_cocycle());
  SUBCASE("one multiplication entry changed") {
    DPRAlgebra d = good;
    d.h.alg.table[1 * 4 + 1] = d.h.alg.table[1 * 4 + 1].scaled(Field().from_int(-1));
    CHECK_FALSE(dpr_star_product(d).report.passed());
    CHECK_FALSE(hopf::check_quasi_bialgebra(d.h).passed());
  }
  SUBCASE("theta entry changed") {
    // theta(a; a, 1) meets theta(a; 1, a) = 1 at (x, y, h) = (1, a, a)
    DPRAlgebra d = good;
    d.theta[6] = -d.theta[6];
    CHECK_FALSE(gamma_theta_identity(d).passed());
  }
  SUBCASE("associator dropped") {
    // phi is central for abelian G, so only the R-matrix axioms see it
    DPRAlgebra d = good;
    d.h.phi.reset();
    CHECK(hopf::check_quasi_bialgebra(d.h).passed());
    CHECK_FALSE(hopf::check_quasitriangular(d.h).passed());
  }
  SUBCASE("trivial-cocycle comparison rejects a twisted table") {
    DPRAlgebra d = build_dpr(Cocycle3::trivial(GroupTable::cyclic(2), Field()));
    d.h.comult = good.h.comult;
    CHECK_FALSE(check_trivial_is_double_cop(d).passed());
  }
}

TEST_CASE("cocycle files") {
  for (const Cocycle3& w : {sign_cocycle(), z3_cocycle()}) {
    const std::string text = write_cocycle(w);
    const Cocycle3 back = read_cocycle(text);
    CHECK(back.values == w.values);
    CHECK(back.group.mul == w.group.mul);
    CHECK(write_cocycle(back) == text);
  }
  Cocycle3 anon = sign_cocycle();
  anon.group_name.clear();
  const Cocycle3 back = read_cocycle(write_cocycle(anon));
  CHECK(back.values == anon.values);
  CHECK(read_cocycle("{\"group\": \"Z2\", \"field\": \"q\", \"entries\": [[1, 1, 1, \"-1\"]]}").values == sign_cocycle().values);
  CHECK_THROWS_AS(read_cocycle("{\"group\": \"Z2\", \"field\": \"q\", \"entries\": [[1, 1, 2, \"-1\"]]}"), io::ParseError);
  CHECK_THROWS_AS(read_cocycle("{\"group\": \"Z2\"}"), io::ParseError);
  CHECK_THROWS_AS(read_cocycle("{\"group\": \"Z2\", \"field\": \"q\", \"extra\": 1}"), io::ParseError);
}
