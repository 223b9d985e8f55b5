#include "doctest.h"
#include "hopfkit/doubles.hpp"
#include "hopfkit/io.hpp"

using namespace hopfkit;
using namespace hopfkit::star;

namespace {

Presentation kg(const std::string& name, const char* field = "q") {
  return hopf::group_algebra(GroupTable::named(name), Field::parse(field));
}

Presentation with_trivial_r(Presentation h) {
  h.R = h.unit(2);
  return h;
}

void require_pass(const VerdictReport& r) {
  INFO(r.summary());
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("trivial R on a group algebra gives the pointwise product") {
  const Presentation h = with_trivial_r(kg("Z3"));
  const StarProduct s = build_star_product(h);
  const Field q;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(s.alg.product(i, j) == (i == j ? SparseVec::unit(i, q.one()) : SparseVec()));
  CHECK(s.alg.unit == h.counit);
  CHECK(r_is_trivial(s));
}

TEST_CASE("frozen star table for the Z/3 R-matrix") {
  const Field c3 = Field::parse("cyclo:3");
  const StarProduct s = build_star_product(doubles::z3_example(c3));
  const std::string t = format_table(s.alg, s.alg.basis);
  CHECK(t.find("e^0 . e^0 = 1/3*e^0 + 1/3*w^2*e^1 + 1/3*w^2*e^2\n") != std::string::npos);
  CHECK(t.find("e^1 . e^2 = 1/3*w*e^0 + 1/3*e^1 + 1/3*e^2\n") != std::string::npos);
  CHECK(hopf::is_commutative(s.alg));
}

TEST_CASE("bimodule algebra and quantum commutativity") {
  for (const char* g : {"Z2", "Z3"}) {
    CAPTURE(g);
    const StarProduct s = build_star_product(doubles::drinfeld_double(kg(g)));
    const VerdictReport b = check_bimodule_algebra(s);
    require_pass(b);
    CHECK(b.passed("associativity"));
    require_pass(check_quantum_commutative_lr(s));
  }
  const StarProduct z3 = build_star_product(doubles::z3_example(Field::parse("cyclo:3")));
  require_pass(check_bimodule_algebra(z3));
  require_pass(check_quantum_commutative_lr(z3));
}

TEST_CASE("R = 1 (x) 1 on a noncocommutative algebra breaks the Leibniz rule") {
  const StarProduct s = build_star_product(with_trivial_r(hopf::dual_hopf(kg("S3"))));
  const VerdictReport r = check_bimodule_algebra(s);
  CHECK_FALSE(r.passed("h -> (f.g) <- h' = sum (h1 -> f <- h'2).(h2 -> g <- h'1)"));
}

TEST_CASE("left quantum commutativity needs R = 1 (x) 1") {
  const StarProduct triv = build_star_product(with_trivial_r(kg("S3")));
  const VerdictReport t = check_left_quantum_commutative(triv);
  require_pass(t);
  CHECK(t.notes().at("R = 1 (x) 1") == "true");

  const VerdictReport d = check_left_quantum_commutative(build_star_product(doubles::drinfeld_double(kg("Z2"))));
  CHECK_FALSE(d.passed());
  CHECK(d.notes().at("R = 1 (x) 1") == "false");
  CHECK_FALSE(check_left_quantum_commutative(build_star_product(doubles::z3_example(Field::parse("cyclo:3")))).passed());
}

TEST_CASE("transpose functoriality") {
  const Field c3 = Field::parse("cyclo:3");
  const Presentation h = doubles::z3_example(c3);
  require_pass(transpose_functoriality(LinearMap::identity(3, c3), h, h));
  const LinearMap sq = LinearMap::from_function(3, 3, [&](std::size_t i) { return SparseVec::unit((2 * i) % 3, c3.one()); });
  require_pass(transpose_functoriality(sq, h, h));
  Presentation k = with_trivial_r(hopf::trivial_hopf(c3));
  const LinearMap eps = LinearMap::from_function(3, 1, [&](std::size_t) { return SparseVec::unit(0, c3.one()); });
  require_pass(transpose_functoriality(eps, h, k));

  // the identity does not carry 1 (x) 1 to the nontrivial R
  const VerdictReport r = transpose_functoriality(LinearMap::identity(3, c3), with_trivial_r(kg("Z3", "cyclo:3")), h);
  CHECK_FALSE(r.passed("precondition: (F (x) F)(R) = R'"));
  CHECK(r.find("F*(f.g) = F*(f).F*(g)") == nullptr);
}

TEST_CASE("covariantised product") {
  const Presentation D = doubles::drinfeld_double(kg("Z2"));
  const doubles::Factorizability f = doubles::factorizability(D);
  const VerdictReport r = check_covariantised(build_star_product(D), &f.q);
  require_pass(r);
  CHECK(r.find("Q(f _. g) = Q(f) Q(g)") != nullptr);

  const Presentation z3 = doubles::z3_example(Field::parse("cyclo:3"));
  const doubles::Factorizability fz = doubles::factorizability(z3);
  require_pass(check_covariantised(build_star_product(z3), &fz.q));
  require_pass(check_covariantised(build_star_product(doubles::drinfeld_double(kg("S3")))));
}

TEST_CASE("co-opposite gives the opposite star product") {
  require_pass(check_cop_opposite(doubles::drinfeld_double(kg("Z2"))));
  require_pass(check_cop_opposite(doubles::z3_example(Field::parse("cyclo:3"))));
  require_pass(check_cop_opposite(doubles::drinfeld_double(kg("S3"))));
}

TEST_CASE("star table files") {
  const StarProduct s = build_star_product(doubles::z3_example(Field::parse("cyclo:3")));
  const std::string text = write_star_table(s);
  CHECK(text.find("\"associative\": true") != std::string::npos);
  const Algebra back = io::read_algebra(text);
  CHECK(back.table == s.alg.table);
  CHECK(back.unit == s.alg.unit);
  CHECK(io::write_algebra(back, true) == text);
}
