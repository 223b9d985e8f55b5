#include "doctest.h"
#include "hopfkit/algebroid.hpp"
#include "hopfkit/io.hpp"

#include <random>

using namespace hopfkit;
using namespace hopfkit::algebroid;

namespace {

Presentation kg(const std::string& name, const char* field = "q") {
  return hopf::group_algebra(GroupTable::named(name), Field::parse(field));
}

void require_pass(const VerdictReport& r) {
  INFO(r.summary());
  CHECK(r.passed());
}

void require_suites(const VLAlgebroid& a) {
  require_pass(check_bialgebroid(a.p));
  require_pass(check_hopf_algebroid(a.p));
  require_pass(check_vl_identities(a));
}

}  // namespace

TEST_CASE("rank factorization") {
  Presentation k = kg("Z3");
  k.R = k.unit(2);
  const RankFactorization one = rank_factorization(k);
  require_pass(one.report);
  CHECK(one.rank == 1);
  CHECK(one.l.basis() == std::vector<SparseVec>{k.one()});

  const Presentation a = kg("Z2");
  const Presentation D = doubles::drinfeld_double(a);
  const RankFactorization d = rank_factorization(D);
  require_pass(d.report);
  CHECK(d.rank == 2);
  // L = {eps (x) a}
  for (std::size_t i = 0; i < 2; ++i) {
    Accumulator x;
    for (const auto& [p, c] : a.counit) x.add(p * 2 + i, c);
    CHECK(d.l.coords(x.take()).has_value());
  }

  const RankFactorization s3 = rank_factorization(doubles::drinfeld_double(kg("S3")));
  require_pass(s3.report);
  CHECK(s3.rank == 6);

  const Presentation H = hopf::tensor_hopf(D, hopf::variant(D, hopf::Variant::op_cop));
  const RankFactorization big = rank_factorization(H);
  require_pass(big.report);
  CHECK(big.rank == 4);
}

TEST_CASE("a bialgebra is an algebroid over k") {
  for (const Presentation& h : {kg("S3"), hopf::dual_hopf(kg("S3"))}) {
    const HopfAlgebroid p = from_hopf(h);
    CHECK(p.tensor.pair.dim() == h.dim() * h.dim());
    CHECK(p.tensor.pair.relation_rank() == 0);
    require_pass(check_bialgebroid(p));
    const VerdictReport r = check_hopf_algebroid(p);
    require_pass(r);
    CHECK(r.notes().at("eps tau = eps") == "true");
  }
}

TEST_CASE("Lu algebroid over A*") {
  for (const char* g : {"Z2", "Z3"}) {
    CAPTURE(g);
    const ModuleAlgebra m = lu_module(kg(g));
    require_pass(check_module_algebra(m));
    require_pass(check_quantum_commutative(m));
    const VLAlgebroid a = build_VL_algebroid(m);
    require_pass(a.preconditions);
    const std::size_t n = kg(g).dim();
    CHECK(a.p.total.dim == n * n);
    require_suites(a);
  }
  const VLAlgebroid z2 = build_VL_algebroid(lu_module(kg("Z2")));
  CHECK(z2.p.tensor.pair.dim() == 8);
  // the same quotient with the relations inserted in reverse order
  auto rels = balanced_relations(z2.p.total, z2.p.alpha, z2.p.beta, 2);
  std::reverse(rels.begin(), rels.end());
  CHECK(Quotient(16, rels).dim() == 8);
}

TEST_CASE("Lu action is the restricted regular action") {
  const Presentation a = kg("S3");
  const ModuleAlgebra m = lu_module(a);
  const Presentation D = doubles::drinfeld_double(a);
  const star::StarProduct s = star::build_star_product(D);
  const std::size_t n = a.dim();
  // 1 # q sits at index 1_A * n + q of H(A) = D(A)*
  for (std::size_t x = 0; x < D.dim(); ++x)
    for (std::size_t q = 0; q < n; ++q) {
      Accumulator emb;
      for (const auto& [i, c] : a.one()) emb.add(i * n + q, c);
      Accumulator want;
      for (const auto& [k, c] : m.act(D.e(x), m.v.basis_vec(q)))
        for (const auto& [i, c2] : a.one()) want.add(i * n + k, c * c2);
      CHECK(s.left(D.e(x), emb.take()) == want.take());
    }
}

TEST_CASE("algebroid over A with the twisted action") {
  for (const char* g : {"Z2", "Z3", "S3"}) {
    CAPTURE(g);
    const ModuleAlgebra m = remark_module(kg(g));
    require_pass(check_module_algebra(m));
    require_pass(check_quantum_commutative(m));
  }
  const VLAlgebroid a = build_VL_algebroid(remark_module(kg("Z3")));
  require_suites(a);
}

TEST_CASE("noncommutative base") {
  const VLAlgebroid a = build_VL_algebroid(lu_module(kg("S3")));
  require_suites(a);
}

TEST_CASE("L may be replaced by H") {
  const ModuleAlgebra m = lu_module(kg("Z2"));
  const std::size_t n = m.h.dim();
  std::vector<SparseVec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(m.h.e(i));
  const VLAlgebroid a = build_VL_algebroid(m, Subspace(n, all));
  CHECK(a.p.total.dim == 8);
  require_suites(a);
}

TEST_CASE("corollary instance over the Heisenberg double") {
  const CorollaryInstance c = corollary_instance(kg("Z2"));
  require_pass(c.report);
  CHECK(c.algebroid.p.total.dim == 16);
  CHECK(c.algebroid.p.base.dim == 4);
  CHECK(c.report.notes().at("rank") == "4");
  CHECK(c.report.find("(a (x) p).(b # q) = sum p(b1) q2(a) (b2 # q1)")->checked == 16);
  CHECK(c.report.find("hopf algebroid: tau beta = alpha") != nullptr);

  const CorollaryInstance z3 = corollary_instance(kg("Z3"));
  require_pass(z3.report);
  CHECK(z3.algebroid.p.total.dim == 81);
}

TEST_CASE("algebroid bundle files") {
  const VLAlgebroid a = build_VL_algebroid(lu_module(kg("Z2")));
  const std::string dir = "algebroid_bundle_test";
  write_bundle(a.p, dir);
  const Algebra t = io::read_algebra(io::read_file(dir + "/T.json"));
  CHECK(t.table == a.p.total.table);
  CHECK(io::read_algebra(io::read_file(dir + "/B.json")).table == a.p.base.table);
  CHECK(io::read_file(dir + "/maps.json").find("\"tau_inv\"") != std::string::npos);
}

TEST_CASE("balanced tensor projection is stable under relations") {
  const VLAlgebroid a = build_VL_algebroid(lu_module(kg("Z3")));
  const BalancedTensor& bt = a.p.tensor;
  const auto rels = balanced_relations(a.p.total, a.p.alpha, a.p.beta, a.p.base.dim);
  for (const SparseVec& r : rels) CHECK(bt.project(r).empty());
  std::mt19937 rng(7);
  const Field& f = a.p.total.field;
  for (std::size_t t = 0; t < a.p.total.dim; ++t) {
    SparseVec x = a.p.delta[t];
    const SparseVec base = bt.project(x);
    for (int k = 0; k < 4; ++k) x = x + rels[rng() % rels.size()].scaled(f.from_int(static_cast<long>(rng() % 11) - 5));
    CHECK(bt.project(x) == base);
  }
}

TEST_CASE("algebroid negative controls") {
  // beta != alpha here, unlike the Lu instances over group algebras
  const VLAlgebroid good = build_VL_algebroid(remark_module(kg("Z3")));
  REQUIRE(good.p.beta != good.p.alpha);
  SUBCASE("dropping the second leg of Delta") {
    HopfAlgebroid p = good.p;
    for (std::size_t t = 0; t < p.total.dim; ++t) {
      Accumulator acc;
      for (const auto& [j, c] : p.total.unit) acc.add(t * p.total.dim + j, c);
      p.delta[t] = acc.take();
    }
    const VerdictReport r = check_bialgebroid(p);
    // t -> t (x) 1 is still multiplicative
    CHECK(r.passed("Delta(t t') = Delta(t) Delta(t')"));
    CHECK_FALSE(r.passed("Delta(beta(b) t) = (1 (x) beta(b)) Delta(t)"));
    CHECK_FALSE(r.passed("lambda (eps (x) id) Delta = id"));
  }
  SUBCASE("one Delta representative scaled") {
    HopfAlgebroid p = good.p;
    p.delta[4] = p.delta[4].scaled(p.total.field.from_int(2));
    const VerdictReport r = check_bialgebroid(p);
    CHECK_FALSE(r.passed("Delta(t t') = Delta(t) Delta(t')"));
    CHECK_FALSE(r.find("Delta(t t') = Delta(t) Delta(t')")->witness.empty());
    CHECK_FALSE(r.passed("(Delta (x) id) Delta = (id (x) Delta) Delta"));
  }
  SUBCASE("tau replaced by the identity") {
    HopfAlgebroid p = good.p;
    p.tau = LinearMap::identity(p.total.dim, p.total.field);
    p.tau_inv.reset();
    const VerdictReport r = check_hopf_algebroid(p);
    CHECK_FALSE(r.passed("tau beta = alpha"));
    CHECK_FALSE(r.passed("m (tau (x) id) Delta = beta eps tau"));
    CHECK_FALSE(r.passed("m (id (x) tau) gamma Delta = alpha eps"));
  }
  SUBCASE("a non-section gamma") {
    HopfAlgebroid p = good.p;
    p.gamma = *p.gamma + LinearMap::identity(p.total.dim * p.total.dim, p.total.field);
    CHECK_FALSE(check_hopf_algebroid(p).passed("p gamma = id"));
  }
  SUBCASE("a module algebra that is not quantum commutative") {
    ModuleAlgebra m = remark_module(kg("S3"));
    m.h.R = m.h.unit(2);
    CHECK_FALSE(check_quantum_commutative(m).passed());
    CHECK_THROWS_AS(build_VL_algebroid(m), PreconditionError);
  }
}
