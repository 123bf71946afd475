#include "ppl/finite_group.hpp"

#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ppl/errors.hpp"

using namespace ppl;
using namespace ppl::testing;

namespace {

std::set<Elt> as_set(const std::vector<Elt>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("built-in constructors produce the expected groups") {
  auto z6 = make_cyclic(6);
  CHECK(z6->order() == 6);
  CHECK(z6->name() == "Z6");
  CHECK(z6->element_name(0) == "e");
  CHECK(z6->element_name(1) == "a");
  CHECK(z6->element_name(5) == "f");  // letter names skip 'e'
  CHECK(z6->element_by_name("a") == Elt(1));
  CHECK(z6->element_by_name("nope") == std::nullopt);
  CHECK(z6->mul(4, 5) == Elt(3));
  CHECK(z6->inv(2) == Elt(4));

  auto d4 = make_dihedral(4);
  CHECK(d4->order() == 8);
  CHECK(d4->element_order(d4->element_by_name("r1").value()) == 4);
  CHECK(d4->element_order(d4->element_by_name("s0").value()) == 2);

  auto s3 = make_symmetric(3);
  CHECK(s3->order() == 6);
  auto s5 = make_symmetric(5);
  CHECK(s5->order() == 120);

  auto v4 = make_direct_product(make_cyclic(2), make_cyclic(2));
  CHECK(v4->order() == 4);
  CHECK(v4->involutions().size() == 3);
  CHECK(v4->element_name(3) == "(a,a)");

  CHECK_THROWS_AS(make_symmetric(6), Error);
}

TEST_CASE("element orders, involutions, powers") {
  auto z6 = make_cyclic(6);
  CHECK(z6->element_order(2) == 3);
  CHECK(z6->element_order(3) == 2);
  CHECK(z6->element_order(1) == 6);
  CHECK(as_set(z6->involutions()) == std::set<Elt>{3});
  CHECK(make_cyclic(2)->involutions().size() == 1);
  CHECK(make_cyclic(5)->involutions().empty());

  // Repeated squaring matches the n-fold product on every corpus group.
  for (const auto& g : small_corpus()) {
    for (int x = 0; x < g->order(); ++x) {
      for (int n = 0; n <= 20; ++n) {
        CHECK(g->pow(Elt(x), n) == oracle_pow(*g, Elt(x), n));
      }
      CHECK(g->pow(Elt(x), -3) == g->inv(oracle_pow(*g, Elt(x), 3)));
    }
  }
}

TEST_CASE("exponent_divides") {
  CHECK(make_cyclic(5)->exponent_divides(665));
  CHECK_FALSE(make_cyclic(3)->exponent_divides(665));
  CHECK(make_cyclic(3)->exponent_divides(1995));
  CHECK(make_cyclic(1)->exponent_divides(7));  // trivial group satisfies all
  CHECK_FALSE(make_cyclic(1995)->exponent_divides(665));
}

TEST_CASE("subgroup_generated") {
  auto z6 = make_cyclic(6);
  auto h = subgroup_generated(z6, {2});
  CHECK(h.members() == std::vector<Elt>{0, 2, 4});
  CHECK(h.is_normal());

  auto s3 = make_symmetric(3);
  Elt t = s3->element_by_name("p021").value();  // a transposition
  auto ht = subgroup_generated(s3, {t});
  CHECK(ht.order() == 2);
  CHECK_FALSE(ht.is_normal());

  auto trivial = subgroup_generated(z6, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.is_trivial());

  CHECK_THROWS_AS(subgroup_generated(z6, {Elt(9)}), Error);

  // Library closure agrees with the pairwise-product oracle everywhere.
  for (const auto& g : small_corpus()) {
    for (int x = 0; x < g->order(); ++x) {
      for (int y = x; y < g->order(); ++y) {
        auto lib = subgroup_generated(g, {Elt(x), Elt(y)});
        auto ora = oracle_closure(*g, {Elt(x), Elt(y)});
        CHECK(as_set(lib.members()) == ora);
        CHECK(lib.is_normal() == oracle_is_normal(*g, ora));
      }
    }
  }
}

TEST_CASE("normal_closure") {
  auto s3 = make_symmetric(3);
  Elt t = s3->element_by_name("p021").value();   // transposition
  Elt c = s3->element_by_name("p120").value();   // 3-cycle
  CHECK(normal_closure(s3, {t}).order() == 6);   // closure of a transposition
  auto a3 = normal_closure(s3, {c});
  CHECK(a3.members() == std::vector<Elt>{0, s3->element_by_name("p120").value(),
                                         s3->element_by_name("p201").value()});

  for (const auto& g : small_corpus()) {
    for (int x = 0; x < g->order(); ++x) {
      auto lib = normal_closure(g, {Elt(x)});
      auto ora = oracle_normal_closure(*g, {Elt(x)});
      CHECK(as_set(lib.members()) == ora);
      CHECK(lib.is_normal());
    }
  }
}

TEST_CASE("power_subgroup") {
  CHECK(power_subgroup(make_cyclic(3), 665).is_whole_group());
  CHECK(power_subgroup(make_cyclic(5), 665).is_trivial());

  auto big = power_subgroup(make_cyclic(1995), 665);
  CHECK(big.members() == std::vector<Elt>{0, 665, 1330});

  // |Z_r^n| = r / gcd(n, r); spot-check a few small pairs here (the large
  // randomized sweep lives in the acceptance suite).
  for (int r : {2, 3, 4, 7, 12, 20, 35, 99}) {
    for (long long n : {665LL, 1995LL, 3325LL}) {
      CHECK(power_subgroup(make_cyclic(r), n).order() == r / std::gcd<long long>(n, r));
    }
  }

  // Normality asserted by direct conjugation on the corpus.
  for (const auto& g : small_corpus()) {
    auto p = power_subgroup(g, 665);
    for (int x = 0; x < g->order(); ++x) {
      for (Elt m : p.members()) {
        CHECK(p.contains(g->mul(g->mul(Elt(x), m), g->inv(Elt(x)))));
      }
    }
  }
}

TEST_CASE("enumerate_normal_subgroups matches exhaustive search") {
  auto counts = [](const GroupPtr& g) {
    return enumerate_normal_subgroups(g).size();
  };
  CHECK(counts(make_cyclic(12)) == 6);
  CHECK(counts(make_symmetric(3)) == 3);
  CHECK(counts(make_dihedral(4)) == 6);
  CHECK(counts(make_quaternion8()) == 6);

  for (const auto& g : small_corpus()) {
    auto lib = enumerate_normal_subgroups(g);
    std::set<std::set<Elt>> lib_sets;
    int last_order = 0;
    for (const auto& s : lib) {
      CHECK(s.is_normal());
      CHECK(s.order() >= last_order);  // sorted by size
      last_order = s.order();
      lib_sets.insert(as_set(s.members()));
    }
    CHECK(lib_sets.size() == lib.size());  // no duplicates
    CHECK(lib_sets == oracle_normal_subgroups(*g));
  }

  CHECK_THROWS_AS(enumerate_normal_subgroups(make_cyclic(1995)), Error);
  CHECK(enumerate_normal_subgroups(make_cyclic(1995), 2000).size() == 16);
}

TEST_CASE("quotient") {
  auto z9 = make_cyclic(9);
  auto n3 = subgroup_generated(z9, {3});
  auto q = quotient(z9, n3);
  CHECK(q.group->order() == 3);
  for (int x = 0; x < 9; ++x) {
    CHECK(q.projection[x] == Elt(x % 3));  // least-rep cosets of <3> in Z9
  }

  // Quotient by the trivial subgroup is an isomorphic copy, by the whole
  // group the one-element group.
  auto s3 = make_symmetric(3);
  CHECK(quotient(s3, subgroup_generated(s3, {})).group->order() == 6);
  std::vector<Elt> all(6);
  std::iota(all.begin(), all.end(), 0);
  CHECK(quotient(s3, SubgroupSet(s3, all)).group->order() == 1);

  // Non-normal subgroup is rejected.
  Elt t = s3->element_by_name("p021").value();
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, {t})), Error);
}

TEST_CASE("table validation rejects non-groups with a named axiom") {
  // Two elements, a*a = a: associativity holds but a has no inverse.
  {
    std::vector<Elt> table{0, 1, 1, 1};
    try {
      FiniteGroup::from_table("bad", {"e", "a"}, table);
      FAIL("expected NotAGroup");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotAGroup);
      CHECK(std::string(err.what()).find("inverse") != std::string::npos);
    }
  }
  // Constant table: no identity at all.
  {
    std::vector<Elt> table{0, 0, 0, 0};
    try {
      FiniteGroup::from_table("bad", {"e", "a"}, table);
      FAIL("expected NotAGroup");
    } catch (const Error& err) {
      CHECK(std::string(err.what()).find("identity") != std::string::npos);
    }
  }
  // Out-of-range entry.
  {
    std::vector<Elt> table{0, 1, 1, 7};
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", {"e", "a"}, table), Error);
  }
  // Broken associativity in a large table exercises the generator-based
  // (Light) validation path: corrupt one Z300 entry.
  {
    auto z300 = make_cyclic(300);
    std::vector<std::string> names;
    std::vector<Elt> table(300 * 300);
    for (int i = 0; i < 300; ++i) names.push_back(z300->element_name(Elt(i)));
    for (int x = 0; x < 300; ++x) {
      for (int y = 0; y < 300; ++y) table[x * 300 + y] = z300->mul(Elt(x), Elt(y));
    }
    table[1 * 300 + 1] = 5;  // 1+1 "=" 5
    try {
      FiniteGroup::from_table("corrupt", names, table);
      FAIL("expected NotAGroup");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotAGroup);
      CHECK(std::string(err.what()).find("associativity") != std::string::npos);
    }
  }
  // And the same path accepts a genuinely associative large table.
  CHECK(make_cyclic(1995)->order() == 1995);
}
