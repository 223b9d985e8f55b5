#include "doctest.h"
#include "hopfkit/hopf.hpp"
#include "hopfkit/io.hpp"

using namespace hopfkit;
using namespace hopfkit::hopf;

namespace {

Presentation kg(const std::string& name, const char* field = "q") {
  return group_algebra(GroupTable::named(name), Field::parse(field));
}

// R = 1/2 (1(x)1 + 1(x)a + a(x)1 - a(x)a) on kZ/2
Tensor z2_r(const Field& f) {
  Scalar h = f.from_int(2).inv();
  return Tensor({2, 2}, SparseVec::from_entries({{0, h}, {1, h}, {2, h}, {3, -h}}));
}

// The order-2 monoid {1, x} with x^2 = x and grouplike coproduct.
Presentation idempotent_monoid() {
  Presentation h = trivial_hopf(Field::rationals());
  Field q = Field::rationals();
  h.alg.dim = 2;
  h.alg.basis = {"1", "x"};
  h.alg.table = {SparseVec::unit(0, q.one()), SparseVec::unit(1, q.one()), SparseVec::unit(1, q.one()),
                 SparseVec::unit(1, q.one())};
  h.alg.unit = SparseVec::unit(0, q.one());
  h.comult = {SparseVec::unit(0, q.one()), SparseVec::unit(3, q.one())};
  h.counit = SparseVec::from_entries({{0, q.one()}, {1, q.one()}});
  h.antipode.reset();
  return h;
}

bool same_tables(const Presentation& a, const Presentation& b) {
  return a.alg.table == b.alg.table && a.alg.unit == b.alg.unit && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode;
}

}  // namespace

TEST_CASE("group algebras pass their own verifiers") {
  for (const char* g : {"trivial", "Z2", "Z3", "S3"}) {
    CAPTURE(g);
    Presentation h = kg(g);
    CHECK(check_quasi_bialgebra(h).passed());
    CHECK(check_quasi_hopf(h).passed());
    CHECK(check_regular_actions(h).passed());
    CHECK(is_cocommutative(h));
  }
  CHECK(is_commutative(kg("Z3").alg));
  CHECK_FALSE(is_commutative(kg("S3").alg));
}

TEST_CASE("group algebra antipodes") {
  Field q;
  Presentation z2 = kg("Z2");
  CHECK(z2.antipode_map().column(1) == SparseVec::unit(1, q.one()));
  Presentation z3 = kg("Z3");
  CHECK(z3.antipode_map().column(1) == SparseVec::unit(2, q.one()));
  for (const char* g : {"Z2", "Z3", "Z4", "S3"}) {
    Presentation h = kg(g);
    CHECK(derive_antipode(h) == h.antipode_map());
  }
}

TEST_CASE("monoid without antipode is rejected") {
  Presentation m = idempotent_monoid();
  CHECK(check_quasi_bialgebra(m).passed());
  CHECK_THROWS_AS(derive_antipode(m), SingularError);
}

TEST_CASE("dual Hopf algebras") {
  Presentation z2 = kg("Z2");
  Presentation d2 = dual_hopf(z2);
  // pointwise product on the delta basis
  Field q;
  CHECK(d2.alg.product(0, 0) == SparseVec::unit(0, q.one()));
  CHECK(d2.alg.product(0, 1).empty());
  CHECK(d2.alg.product(1, 1) == SparseVec::unit(1, q.one()));
  CHECK(d2.one() == SparseVec::from_entries({{0, q.one()}, {1, q.one()}}));

  Presentation z3 = kg("Z3");
  CHECK(same_tables(dual_hopf(dual_hopf(z3)), z3));

  Presentation ds3 = dual_hopf(kg("S3"));
  CHECK(is_commutative(ds3.alg));
  CHECK_FALSE(is_cocommutative(ds3));
  CHECK(check_quasi_bialgebra(ds3).passed());
  CHECK(check_quasi_hopf(ds3).passed());
  CHECK(derive_antipode(ds3) == ds3.antipode_map());
}

TEST_CASE("regular actions on the dual") {
  Presentation z3 = kg("Z3");
  Field q;
  RegularActions act = regular_actions(z3);
  const std::size_t n = 3;
  for (std::size_t i = 0; i < n; ++i) {
    // (a -> e^i)(a^j) = e^i(a^{j+1})
    SparseVec p = act.left[1 * n + i];
    for (std::size_t j = 0; j < n; ++j) CHECK(p[j] == ((j + 1) % n == i ? q.one() : q.zero()));
    CHECK(act.left[0 * n + i] == SparseVec::unit(i, q.one()));
  }
  for (std::size_t x = 0; x < n; ++x) CHECK(left_hit(z3, z3.e(x), z3.counit) == z3.counit);
}

TEST_CASE("cocommutative swap invariance") {
  for (const char* g : {"Z3", "S3"}) {
    Presentation h = kg(g);
    for (std::size_t i = 0; i < h.dim(); ++i) CHECK(permute_legs(h.delta(i), {2, 1}) == h.delta(i));
  }
  Presentation d = dual_hopf(kg("S3"));
  bool all = true;
  for (std::size_t i = 0; i < d.dim(); ++i) all = all && permute_legs(d.delta(i), {2, 1}) == d.delta(i);
  CHECK_FALSE(all);
}

TEST_CASE("quasitriangular structures on small group algebras") {
  Field q;
  Presentation z3 = kg("Z3");
  z3.R = z3.unit(2);
  CHECK(check_quasitriangular(z3).passed());

  Presentation z2 = kg("Z2");
  z2.R = z2_r(q);
  VerdictReport r = check_quasitriangular(z2);
  CHECK(r.passed());
  CHECK(r.passed("quasi-Yang-Baxter"));

  // the sign flip of one coefficient breaks the R-matrix
  Presentation bad = z2;
  Scalar h = q.from_int(2).inv();
  bad.R = Tensor({2, 2}, SparseVec::from_entries({{0, h}, {1, h}, {2, h}, {3, h}}));
  CHECK_FALSE(check_quasitriangular(bad).passed());
}

TEST_CASE("variants and tensor products") {
  Presentation z3 = kg("Z3");
  CHECK(same_tables(variant(z3, Variant::op), z3));
  Presentation s3 = kg("S3");
  Presentation s3op = variant(s3, Variant::op);
  CHECK(s3op.alg.table == s3.alg.opposite().table);
  CHECK(check_quasi_hopf(s3op).passed());
  CHECK(check_quasi_hopf(variant(dual_hopf(s3), Variant::cop)).passed());
  CHECK(check_quasi_hopf(variant(dual_hopf(s3), Variant::op_cop)).passed());

  Field q;
  Presentation z2 = kg("Z2");
  z2.R = z2_r(q);
  Presentation oc = variant(z2, Variant::op_cop);
  CHECK(check_quasitriangular(oc).passed());
  Presentation t = tensor_hopf(z2, oc);
  CHECK(t.dim() == 4);
  CHECK(check_quasi_bialgebra(t).passed());
  CHECK(check_quasi_hopf(t).passed());
  CHECK(check_quasitriangular(t).passed());

  Presentation zs = tensor_hopf(kg("Z2"), s3);
  CHECK(zs.dim() == 12);
  CHECK(check_quasi_hopf(zs).passed());
}

TEST_CASE("negative controls for the hopfcore verifiers") {
  Field q;
  SUBCASE("antipode replaced by the identity") {
    Presentation z3 = kg("Z3");
    z3.antipode = LinearMap::identity(3, q);
    VerdictReport r = check_quasi_hopf(z3);
    CHECK_FALSE(r.passed("sum S(h1) alpha h2 = eps(h) alpha"));
    CHECK(r.find("sum S(h1) alpha h2 = eps(h) alpha")->witness.find("a") != std::string::npos);
  }
  SUBCASE("one comultiplication entry changed") {
    Presentation z3 = kg("Z3");
    z3.comult[1] = SparseVec::unit(1 * 3 + 2, q.one());
    CHECK_FALSE(check_quasi_bialgebra(z3).passed());
  }
  SUBCASE("one multiplication entry changed") {
    Presentation z3 = kg("Z3");
    z3.alg.table[1 * 3 + 1] = SparseVec::unit(1, q.one());
    CHECK_FALSE(check_quasi_bialgebra(z3).passed("associativity"));
  }
  SUBCASE("counit entry changed") {
    Presentation z3 = kg("Z3");
    z3.counit = SparseVec::from_entries({{0, q.one()}, {1, q.one()}, {2, q.from_int(2)}});
    CHECK_FALSE(check_quasi_bialgebra(z3).passed());
  }
  SUBCASE("right action table corrupted under a wrong multiplication") {
    Presentation z3 = kg("Z3");
    z3.alg.table[2 * 3 + 2] = SparseVec::unit(0, q.one());
    CHECK_FALSE(check_regular_actions(z3).passed());
  }
  SUBCASE("morphism check rejects a non-multiplicative map") {
    Presentation z3 = kg("Z3");
    LinearMap f = LinearMap::from_function(3, 3, [&](std::size_t i) { return SparseVec::unit(i == 2 ? 0 : i, q.one()); });
    CHECK_FALSE(check_morphism(f, z3, z3, false).passed());
    CHECK(check_morphism(LinearMap::identity(3, q), z3, z3, false).passed());
  }
}

TEST_CASE("presentation files round-trip") {
  Field c3 = Field::parse("cyclo:3");
  Presentation z2 = kg("Z2");
  z2.R = z2_r(Field::rationals());
  for (const Presentation& h : {kg("S3"), dual_hopf(kg("Z3", "cyclo:3")), z2, kg("Z3", "gf:7")}) {
    std::string text = io::write_presentation(h);
    Presentation back = io::read_presentation(text);
    CHECK(same_tables(back, h));
    CHECK(back.R == h.R);
    CHECK(io::write_presentation(back) == text);
  }
  std::string flagged = io::write_presentation(kg("Z2"), false);
  CHECK(flagged.find("\"associative\": false") != std::string::npos);
  CHECK(io::write_presentation(io::read_presentation(flagged), false) == flagged);
}

TEST_CASE("presentation parse errors") {
  CHECK_THROWS_AS(io::read_presentation("{"), io::ParseError);
  CHECK_THROWS_AS(io::read_presentation("[]"), io::ParseError);
  std::string good = io::write_presentation(kg("Z2"));
  std::string bad_field = good;
  bad_field.replace(bad_field.find("\"q\""), 3, "\"gf:9\"");
  CHECK_THROWS_AS(io::read_presentation(bad_field), io::ParseError);
  std::string bad_index = good;
  bad_index.replace(bad_index.find("[1, 1, 0, \"1\"]"), 14, "[1, 1, 5, \"1\"]");
  CHECK_THROWS_AS(io::read_presentation(bad_index), io::ParseError);
  std::string extra = good;
  extra.replace(extra.find("\"field\""), 7, "\"colour\": 1, \"field\"");
  CHECK_THROWS_AS(io::read_presentation(extra), io::ParseError);
}

TEST_CASE("group table files") {
  GroupTable s3 = GroupTable::symmetric3();
  GroupTable back = io::read_group_table(io::write_group_table(s3));
  CHECK(back.mul == s3.mul);
  CHECK(back.labels == s3.labels);
  CHECK_THROWS_AS(io::read_group_table("{\"table\": [[0, 1], [1, 1]]}"), io::ParseError);
  CHECK_THROWS_AS(GroupTable::named("Q8"), PresentationError);
}
