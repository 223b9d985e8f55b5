#include <random>

#include "doctest.h"
#include "hopfkit/algebra.hpp"
#include "hopfkit/linsolve.hpp"

using namespace hopfkit;

namespace {

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  Scalar s = f.zero();
  if (f.kind() == FieldKind::cyclotomic) {
    Scalar w = f.generator();
    for (unsigned k = 0; k < f.degree(); ++k)
      s += f.from_rational(mpq_class(d(rng), 1 + std::abs(d(rng)))) * w.pow(k);
    return s;
  }
  if (f.kind() == FieldKind::prime) return f.from_int(d(rng));
  return f.from_rational(mpq_class(d(rng), 1 + std::abs(d(rng))));
}

// Z/2 group algebra over q, built by hand.
Algebra kz2() {
  Field q;
  Algebra a;
  a.field = q;
  a.dim = 2;
  a.basis = {"1", "a"};
  a.table = {SparseVec::unit(0, q.one()), SparseVec::unit(1, q.one()), SparseVec::unit(1, q.one()),
             SparseVec::unit(0, q.one())};
  a.unit = SparseVec::unit(0, q.one());
  return a;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  Field gf7 = Field::parse("gf:7");
  CHECK(gf7.from_int(3).inv() == gf7.from_int(5));
  CHECK(gf7.from_int(3).inv().str() == "5");

  Field c3 = Field::parse("cyclo:3");
  Scalar w = c3.generator();
  CHECK((w * w.pow(2)).is_one());
  CHECK((w * w).str() == "-1-w");

  Field q = Field::parse("q");
  CHECK((q.parse_scalar("1/3") + q.parse_scalar("1/6")) == q.parse_scalar("1/2"));
  CHECK((q.parse_scalar("1/3") + q.parse_scalar("1/6")).str() == "1/2");
}

TEST_CASE("scalar errors") {
  Field q;
  CHECK_THROWS_AS(q.zero().inv(), FieldError);
  CHECK_THROWS_AS(q.one() + Field::prime(7).one(), FieldError);
  CHECK_THROWS_AS(Field::parse("gf:8"), FieldError);
  CHECK_THROWS_AS(Field::parse("zz"), FieldError);
  CHECK_THROWS_AS(q.parse_scalar("1/0"), FieldError);
  CHECK_THROWS_AS(q.parse_scalar("abc"), FieldError);
  CHECK_THROWS_AS(Field::prime(7).parse_scalar("9"), FieldError);
}

TEST_CASE("primitive roots") {
  Field gf7 = Field::prime(7);
  Scalar r = gf7.primitive_root(3);
  CHECK(r == gf7.from_int(2));
  // 2^3 = 8 = 1 and 2, 4 differ from 1
  CHECK(r.pow(3).is_one());
  CHECK(!r.is_one());
  CHECK(!r.pow(2).is_one());

  Field c3 = Field::cyclotomic(3);
  CHECK(c3.primitive_root(3) == c3.generator());
  CHECK_THROWS_AS(Field().primitive_root(3), FieldError);
  CHECK(Field().primitive_root(2) == Field().from_int(-1));
  CHECK_THROWS_AS(gf7.primitive_root(4), FieldError);

  Field c6 = Field::cyclotomic(6);
  for (unsigned n : {1u, 2u, 3u, 6u}) {
    Scalar z = c6.primitive_root(n);
    CHECK(z.pow(n).is_one());
    for (unsigned m = 1; m < n; ++m) CHECK(!z.pow(m).is_one());
  }
  // odd cyclotomic orders also contain the 2n-th roots
  Scalar z6 = c3.primitive_root(6);
  CHECK(z6.pow(6).is_one());
  CHECK(!z6.pow(2).is_one());
  CHECK(!z6.pow(3).is_one());
}

TEST_CASE("cyclotomic text encoding round-trips") {
  Field c5 = Field::cyclotomic(5);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Scalar s = random_scalar(c5, rng);
    CHECK(c5.parse_scalar(s.str()) == s);
    CHECK(c5.parse_scalar(s.str()).str() == s.str());
  }
  Field c3 = Field::cyclotomic(3);
  CHECK(c3.parse_scalar("w^2").str() == "-1-w");
  CHECK(c3.parse_scalar("w^3").str() == "1");
  CHECK(c3.parse_scalar("1/3*w^2").pretty() == "1/3*w^2");
  CHECK(c3.parse_scalar("-2*w").pretty() == "-2*w");
  CHECK(c3.parse_scalar("1+w").pretty() == "-w^2");
  CHECK(c3.parse_scalar("0").str() == "0");
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937 rng(12345);
  for (const char* name : {"q", "gf:7", "gf:13", "cyclo:3", "cyclo:4", "cyclo:6", "cyclo:9"}) {
    Field f = Field::parse(name);
    for (int t = 0; t < 40; ++t) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("tensor flatten round-trip") {
  Tensor t({2, 3, 4});
  for (Index f = 0; f < t.flat_size(); ++f) CHECK(t.flatten(t.unflatten(f)) == f);
  CHECK(t.flatten(std::vector<std::size_t>{1, 2, 3}) == 23);
  CHECK_THROWS_AS(t.flatten(std::vector<std::size_t>{2, 0, 0}), ShapeError);
}

TEST_CASE("permute_legs") {
  Field q;
  std::mt19937 rng(3);
  // involution property, all permutations of arity <= 4
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < m; ++k) dims.push_back(k + 2);
    Tensor shape(dims);
    std::vector<SparseVec::Entry> e;
    for (Index f = 0; f < shape.flat_size(); f += 3) e.emplace_back(f, random_scalar(q, rng));
    Tensor x(dims, SparseVec::from_entries(e));
    std::vector<std::size_t> perm(m);
    for (std::size_t k = 0; k < m; ++k) perm[k] = k + 1;
    do {
      std::vector<std::size_t> inv(m);
      for (std::size_t k = 0; k < m; ++k) inv[perm[k] - 1] = k + 1;
      CHECK(permute_legs(permute_legs(x, perm), inv) == x);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // phi_{312} places X^2 (x) X^3 (x) X^1
  Tensor b = Tensor::basis({2, 3, 4}, {1, 2, 3}, q.one());
  Tensor p = permute_legs(b, {3, 1, 2});
  CHECK(p.dims() == std::vector<std::size_t>{3, 4, 2});
  CHECK(p.at({2, 3, 1}) == q.one());
  // a transposition applied twice
  CHECK(permute_legs(permute_legs(b, {2, 1, 3}), {2, 1, 3}) == b);
  CHECK_THROWS_AS(permute_legs(b, {1, 2}), ShapeError);
}

TEST_CASE("embed_legs and tensor products") {
  Algebra a = kz2();
  Field q = a.field;
  // R = 1/2 (1(x)1 + 1(x)a + a(x)1 - a(x)a), the Z/2 R-matrix
  Field f = Field();
  Scalar h = f.parse_scalar("1/2");
  Tensor R({2, 2}, SparseVec::from_entries({{0, h}, {1, h}, {2, h}, {3, -h}}));
  Tensor r12 = embed_legs(R, {1, 2}, {2, 2, 2}, {a.unit, a.unit, a.unit});
  CHECK(r12 == concat(R, Tensor({2}, a.unit)));
  Tensor one2 = unit_tensor(a, 2);
  CHECK(embed_legs(one2, {1, 3}, {2, 2, 2}, {a.unit, a.unit, a.unit}) == unit_tensor(a, 3));
  CHECK(tensor_power_product(a, R, one2) == R);
  // R is an involution here
  CHECK(tensor_power_product(a, R, R) == one2);
  CHECK(invert_in_algebra(a, R) == R);
  CHECK(invert_in_algebra(a, a.unit) == a.unit);
  CHECK_THROWS_AS(embed_legs(R, {2, 4}, {2, 2, 2}, {a.unit, a.unit, a.unit}), ShapeError);
  CHECK_THROWS_AS(embed_legs(R, {2, 1}, {2, 2, 2}, {a.unit, a.unit, a.unit}), ShapeError);
}

TEST_CASE("invert_in_algebra rejects singular elements") {
  Algebra a = kz2();
  Field q = a.field;
  // 1 + a is a zero divisor
  SparseVec x = SparseVec::from_entries({{0, q.one()}, {1, q.one()}});
  CHECK_THROWS_AS(invert_in_algebra(a, x), SingularError);
  CHECK_THROWS_AS(invert_in_algebra(a, SparseVec()), SingularError);
  // 2 + a is invertible: (2 + a)(2 - a)/3 = 1
  SparseVec y = SparseVec::from_entries({{0, q.from_int(2)}, {1, q.one()}});
  SparseVec yi = invert_in_algebra(a, y);
  CHECK(a.mul(y, yi) == a.unit);
  CHECK(a.mul(yi, y) == a.unit);
  CHECK(yi == SparseVec::from_entries({{0, q.parse_scalar("2/3")}, {1, q.parse_scalar("-1/3")}}));
}

TEST_CASE("solve_and_quotient") {
  Field q;
  Quotient id = solve_and_quotient(4, {});
  CHECK(id.projection(q) == LinearMap::identity(4, q));
  CHECK(id.dim() == 4);

  std::vector<SparseVec> all;
  for (Index i = 0; i < 4; ++i) all.push_back(SparseVec::unit(i, q.from_int(static_cast<long>(i + 2))));
  Quotient zero = solve_and_quotient(4, all);
  CHECK(zero.projection(q) == LinearMap(4, 4));
  CHECK(zero.dim() == 0);

  std::mt19937 rng(99);
  std::vector<SparseVec> rel;
  for (int t = 0; t < 5; ++t) {
    std::vector<SparseVec::Entry> e;
    for (Index i = 0; i < 8; ++i)
      if (rng() % 3 == 0) e.emplace_back(i, random_scalar(q, rng));
    rel.push_back(SparseVec::from_entries(e));
  }
  rel.push_back(rel[0] + rel[1]);  // a dependent relation
  Quotient qt = solve_and_quotient(8, rel);
  LinearMap P = qt.projection(q);
  CHECK(P.compose(P) == P);
  for (const auto& r : rel) CHECK(qt.project(r).empty());
  // the rank does not depend on the row order
  std::vector<SparseVec> rev(rel.rbegin(), rel.rend());
  CHECK(solve_and_quotient(8, rev).relation_rank() == qt.relation_rank());
  CHECK(qt.complement().size() == qt.dim());
  // representatives are stable under adding relation vectors
  SparseVec v = SparseVec::from_entries({{0, q.one()}, {5, q.from_int(3)}, {7, q.from_int(-2)}});
  for (const auto& r : rel) CHECK(qt.project(v + r.scaled(q.from_int(5))) == qt.project(v));
}

TEST_CASE("linear solves and inverses") {
  Field q;
  LinearMap m(2, 2, {SparseVec::from_entries({{0, q.from_int(1)}, {1, q.from_int(3)}}),
                     SparseVec::from_entries({{0, q.from_int(2)}, {1, q.from_int(4)}})});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m.compose(*inv) == LinearMap::identity(2, q));
  CHECK(inv->compose(m) == LinearMap::identity(2, q));
  LinearMap sing(2, 2, {SparseVec::unit(0, q.one()), SparseVec::unit(0, q.from_int(2))});
  CHECK(!inverse(sing));
  // x + y = 1, 2x + 2y = 3 is inconsistent
  std::vector<SparseVec> rows = {SparseVec::from_entries({{0, q.one()}, {1, q.one()}}),
                                 SparseVec::from_entries({{0, q.from_int(2)}, {1, q.from_int(2)}})};
  CHECK(!solve_any(rows, 2, SparseVec::from_entries({{0, q.one()}, {1, q.from_int(3)}})));
  auto x = solve_any(rows, 2, SparseVec::from_entries({{0, q.one()}, {1, q.from_int(2)}}));
  REQUIRE(x);
  CHECK(*x == SparseVec::unit(0, q.one()));
}
