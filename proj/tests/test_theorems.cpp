#include <doctest.h>

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ppl/errors.hpp"
#include "ppl/family.hpp"
#include "ppl/finite_group.hpp"
#include "ppl/prng.hpp"
#include "ppl/sampling.hpp"
#include "ppl/theorems.hpp"
#include "ppl/word.hpp"

using namespace ppl;

namespace {

FactorFamily pair_family(const GroupPtr& a, const GroupPtr& b,
                         long long n = 665, bool strict = true) {
  return FactorFamily({{"g1", a}, {"g2", b}}, n, strict);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a ppl::Error");
  return ErrorCode::Internal;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_SUITE("decision procedures") {

TEST_CASE("verdict vocabulary is stable") {
  CHECK(std::string(question_name(Question::InheritablyNormal)) ==
        "inheritably_normal");
  CHECK(std::string(question_name(Question::InheritablyFactorizable)) ==
        "inheritably_factorizable");
  CHECK(std::string(question_name(Question::Simple)) == "simple");
  CHECK(std::string(question_name(Question::Hopfian)) == "hopfian");
  CHECK(std::string(answer_name(Answer::Yes)) == "yes");
  CHECK(std::string(answer_name(Answer::No)) == "no");
  CHECK(std::string(answer_name(Answer::Inapplicable)) == "inapplicable");
  CHECK(std::string(answer_name(Answer::Undetermined)) == "undetermined");
}

TEST_CASE("subgroup criterion over the order-1995 cyclic factor") {
  GroupPtr g = make_cyclic(1995);
  FactorFamily fam = pair_family(g, make_cyclic(1995));
  // The n-th power subgroup has order 1995 / gcd(665, 1995) = 3.
  SubgroupSet powers = power_subgroup(g, 665);
  CHECK(powers.order() == 3);

  int yes_count = 0;
  for (long long d : divisors(1995)) {
    if (d == 1) continue;
    SubgroupSet sub = subgroup_generated(g, {Elt(1995 / d)});
    REQUIRE(sub.order() == d);
    Verdict v = inheritably_normal_verdict(fam, 0, sub);
    CHECK(v.citation == "Theorem2");
    const bool expected = d % 3 == 0;
    CHECK((v.answer == Answer::Yes) == expected);
    CHECK((v.answer == Answer::No) == !expected);
    if (v.answer == Answer::Yes) ++yes_count;
  }
  CHECK(yes_count == 8);

  SubgroupSet trivial = subgroup_generated(g, {});
  Verdict v = inheritably_normal_verdict(fam, 0, trivial);
  CHECK(v.answer == Answer::Inapplicable);
  CHECK(v.reason_code == "trivial_subgroup");
}

TEST_CASE("subgroup criterion validates its inputs") {
  GroupPtr s3 = make_symmetric(3);
  FactorFamily fam = pair_family(s3, make_cyclic(3));
  SubgroupSet foreign = subgroup_generated(make_cyclic(4), {1});
  CHECK(code_of([&] { inheritably_normal_verdict(fam, 0, foreign); }) ==
        ErrorCode::BadReference);
  SubgroupSet not_normal =
      subgroup_generated(s3, {*s3->element_by_name("p021")});
  CHECK(code_of([&] { inheritably_normal_verdict(fam, 0, not_normal); }) ==
        ErrorCode::NotNormal);
  SubgroupSet fine = subgroup_generated(s3, {*s3->element_by_name("p120")});
  CHECK(code_of([&] { inheritably_normal_verdict(fam, 7, fine); }) ==
        ErrorCode::BadReference);
}

TEST_CASE("factors with involutions still get subgroup verdicts") {
  GroupPtr s3 = make_symmetric(3);
  FactorFamily fam = pair_family(s3, make_cyclic(3));
  SubgroupSet a3 = subgroup_generated(s3, {*s3->element_by_name("p120")});
  Verdict v = inheritably_normal_verdict(fam, 0, a3);
  // S3^665 = S3, which the order-3 subgroup cannot contain: a genuine no,
  // not an applicability failure.
  CHECK(v.answer == Answer::No);
  CHECK(!v.outside_hypotheses);
}

TEST_CASE("the power subgroup itself is always inheritably normal") {
  for (const GroupPtr& g : testing::small_corpus()) {
    FactorFamily fam = pair_family(g, make_cyclic(3));
    SubgroupSet powers = power_subgroup(g, 665);
    Verdict v = inheritably_normal_verdict(fam, 0, powers);
    if (powers.is_trivial()) {
      CHECK(v.answer == Answer::Inapplicable);
    } else {
      CHECK(v.answer == Answer::Yes);
    }
  }
}

TEST_CASE("the subgroup criterion is monotone under inclusion") {
  for (const GroupPtr& g : testing::small_corpus()) {
    if (g->order() > 24) continue;
    FactorFamily fam = pair_family(g, make_cyclic(3));
    std::vector<SubgroupSet> lattice = enumerate_normal_subgroups(g);
    for (const SubgroupSet& n1 : lattice) {
      if (n1.is_trivial()) continue;
      for (const SubgroupSet& n2 : lattice) {
        if (n2.is_trivial() || !n2.contains_subgroup(n1)) continue;
        Verdict v1 = inheritably_normal_verdict(fam, 0, n1);
        Verdict v2 = inheritably_normal_verdict(fam, 0, n2);
        if (v1.answer == Answer::Yes) CHECK(v2.answer == Answer::Yes);
      }
    }
  }
}

TEST_CASE("lenient families label criterion answers as outside hypotheses") {
  GroupPtr g = make_cyclic(10);
  FactorFamily fam = pair_family(g, make_cyclic(3), 100, false);
  SubgroupSet sub = subgroup_generated(g, {5});
  Verdict v = inheritably_normal_verdict(fam, 0, sub);
  CHECK(v.answer == Answer::Yes);  // the power subgroup at 100 is trivial
  CHECK(v.outside_hypotheses);
}

TEST_CASE("global witness models the extension's membership test") {
  GroupPtr z10 = make_cyclic(10);
  FactorFamily fam = pair_family(z10, make_cyclic(3));
  // Z10^665 = <5>, so N = <5> passes the criterion.
  GlobalNormalWitness witness(fam, 0, subgroup_generated(z10, {5}));
  CHECK(witness.factor() == 0);
  CHECK(witness.subgroup().order() == 2);

  CHECK(witness.membership(Word::identity(fam)));
  CHECK(witness.membership(reduce(fam, {{0, 5}})));
  CHECK(!witness.membership(reduce(fam, {{0, 2}})));
  // The whole other factor sits inside the extension.
  CHECK(witness.membership(reduce(fam, {{1, 1}})));
  // Letters across factors: only the factor-0 retraction decides.
  CHECK(witness.membership(reduce(fam, {{0, 5}, {1, 1}, {0, 10 - 5}, {1, 2}})));
  CHECK(witness.membership(reduce(fam, {{0, 2}, {1, 1}, {0, 3}})));  // 2+3=5
  CHECK(!witness.membership(reduce(fam, {{0, 2}, {1, 1}, {0, 2}})));

  SplitMix64 rng(81);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(fam, rng, int(rng.below(9)));
    Word c = random_word(fam, rng, int(rng.below(7)));
    const bool base = witness.membership(w);
    // Conjugation stability (the extension is normal).
    CHECK(witness.membership(multiply(multiply(c, w), invert(c))) == base);
    // Subgroup closure.
    Word v = random_word(fam, rng, int(rng.below(9)));
    if (base && witness.membership(v)) {
      CHECK(witness.membership(multiply(w, v)));
      CHECK(witness.membership(invert(w)));
    }
  }

  // A subgroup failing the criterion cannot be promoted to a witness.
  CHECK(code_of([&] {
          GlobalNormalWitness(fam, 0, subgroup_generated(z10, {2}));
        }) == ErrorCode::CriterionFails);
}

TEST_CASE("factor-side criterion across shapes") {
  FactorFamily z3 = pair_family(make_cyclic(3), make_cyclic(3));
  CHECK(inheritably_factorizable_verdict(z3, 0).answer == Answer::Yes);
  CHECK(inheritably_factorizable_verdict(z3, 0).citation == "Corollary2");

  FactorFamily q8 = pair_family(testing::make_quaternion8(), make_cyclic(3));
  Verdict v = inheritably_factorizable_verdict(q8, 0);
  CHECK(v.answer == Answer::No);

  FactorFamily big = pair_family(make_cyclic(1995), make_cyclic(3));
  CHECK(code_of([&] { inheritably_factorizable_verdict(big, 0); }) ==
        ErrorCode::BoundExceeded);
  // With the bound raised, the order-5 subgroup misses the power subgroup.
  CHECK(inheritably_factorizable_verdict(big, 0, 2000).answer == Answer::No);
}

TEST_CASE("pinned verdict table") {
  FactorFamily z3z3 = pair_family(make_cyclic(3), make_cyclic(3));
  CHECK(simplicity_verdict(z3z3).answer == Answer::Yes);
  CHECK(simplicity_verdict(z3z3).citation == "Theorem1");
  CHECK(hopfian_verdict(z3z3).answer == Answer::Yes);

  FactorFamily z5z5 = pair_family(make_cyclic(5), make_cyclic(5));
  CHECK(simplicity_verdict(z5z5).answer == Answer::No);

  FactorFamily s3z3 = pair_family(make_symmetric(3), make_cyclic(3));
  Verdict s = simplicity_verdict(s3z3);
  CHECK(s.answer == Answer::Inapplicable);
  CHECK(s.reason_code == "involutions_present");
  CHECK(hopfian_verdict(s3z3).answer == Answer::Inapplicable);

  FactorFamily zbig = pair_family(make_cyclic(1995), make_cyclic(1995));
  CHECK(hopfian_verdict(zbig).answer == Answer::Yes);
  CHECK(hopfian_verdict(zbig).citation == "Theorem4");
  CHECK(simplicity_verdict(zbig).answer == Answer::No);

  FactorFamily z5z7 = pair_family(make_cyclic(5), make_cyclic(7));
  Verdict h = hopfian_verdict(z5z7);
  CHECK(h.answer == Answer::Undetermined);
  CHECK(h.reason_code == "open_question");
  // Both exponents divide 665, so the power subgroups collapse.
  CHECK(simplicity_verdict(z5z7).answer == Answer::No);
}

TEST_CASE("lenient mode computes the bare criterion with a label") {
  FactorFamily s3z3 =
      FactorFamily({{"g1", make_symmetric(3)}, {"g2", make_cyclic(3)}}, 665,
                   false);
  Verdict s = simplicity_verdict(s3z3);
  // S3^665 generates all of S3, so the bare criterion says yes.
  CHECK(s.answer == Answer::Yes);
  CHECK(s.outside_hypotheses);
  Verdict h = hopfian_verdict(s3z3);
  CHECK(h.answer == Answer::Yes);  // exponent 6 does not divide 665
  CHECK(h.outside_hypotheses);

  // 3 divides 99, so the bare criterion fails even though n = 665 says yes.
  FactorFamily small_n = pair_family(make_cyclic(3), make_cyclic(3), 99, false);
  Verdict sn = simplicity_verdict(small_n);
  CHECK(sn.answer == Answer::No);
  CHECK(sn.outside_hypotheses);
}

TEST_CASE("verdicts ignore factor order") {
  std::vector<std::pair<GroupPtr, GroupPtr>> pairs = {
      {make_cyclic(5), make_cyclic(7)},
      {make_symmetric(3), make_cyclic(3)},
      {make_cyclic(1995), make_cyclic(3)},
      {testing::make_quaternion8(), make_cyclic(9)},
  };
  for (const auto& [a, b] : pairs) {
    FactorFamily ab = pair_family(a, b);
    FactorFamily ba = pair_family(b, a);
    CHECK(simplicity_verdict(ab).answer == simplicity_verdict(ba).answer);
    CHECK(hopfian_verdict(ab).answer == hopfian_verdict(ba).answer);
  }
}

TEST_CASE("cyclic bundle: applicable and failed-premise shapes") {
  Corollary3Verdict ok = corollary3_verdict(2, 1995, 665);
  CHECK(ok.applicable());
  CHECK(ok.hopfian == Answer::Yes);
  CHECK(ok.residually_finite == Answer::No);
  CHECK(ok.simple == Answer::No);
  CHECK(!ok.note.has_value());

  Corollary3Verdict even_r = corollary3_verdict(2, 1330, 665);
  CHECK(even_r.applicable());
  CHECK(even_r.note.has_value());

  CHECK(corollary3_verdict(2, 665, 665).reason_code == "n_not_proper_divisor");
  CHECK(corollary3_verdict(1, 1995, 665).reason_code == "m_too_small");
  CHECK(corollary3_verdict(2, 0, 665).reason_code == "nonpositive_parameters");
  CHECK(corollary3_verdict(2, 1995, -5).reason_code ==
        "nonpositive_parameters");
  CHECK(corollary3_verdict(2, 1996, 666).reason_code == "n_even");
  CHECK(corollary3_verdict(2, 1995, 663).reason_code == "n_too_small");
  CHECK(corollary3_verdict(2, 1996, 665).reason_code == "n_not_dividing_r");
  CHECK(corollary3_verdict(3, 5985, 665).applicable());
}

TEST_CASE("involution consistency probe on pinned groups") {
  Corollary1Report z2 = corollary1_scan(make_cyclic(2), 665);
  CHECK(z2.factorizable_criterion);
  CHECK(z2.has_involution);
  CHECK(z2.premise);
  CHECK(z2.unique_involution);
  CHECK(z2.central);
  CHECK(z2.conclusion);
  CHECK(!z2.tension);
  REQUIRE(z2.involution.has_value());
  CHECK(*z2.involution == 1);

  Corollary1Report z4 = corollary1_scan(make_cyclic(4), 665);
  CHECK(!z4.factorizable_criterion);
  CHECK(!z4.premise);
  CHECK(z4.conclusion);  // unique central involution, premise or not
  CHECK(!z4.tension);

  Corollary1Report q8 = corollary1_scan(testing::make_quaternion8(), 665);
  CHECK(!q8.premise);
  CHECK(q8.unique_involution);
  CHECK(q8.central);
  CHECK(!q8.tension);

  // The probe finds no counterexample anywhere in the corpus.
  for (const GroupPtr& g : testing::small_corpus()) {
    if (g->order() > 24) continue;
    CHECK(!corollary1_scan(g, 665).tension);
  }
}

TEST_CASE("congruence check replays the quotient reductions") {
  FactorFamily fam = pair_family(make_cyclic(9), make_cyclic(3));
  SubgroupSet n = subgroup_generated(fam.factor(0), {3});
  // b1^-1 x^3 b1 b2^-1 x^3 b2 x == x mod <x^3>, with b1 = 1, b2 = 2.
  Word w = reduce(fam, {{1, 2}, {0, 3}, {1, 1}, {1, 1}, {0, 3}, {1, 2}, {0, 1}});
  Word v = reduce(fam, {{0, 1}});
  CHECK(congruence_check(w, v, 0, n));
  // b1^-1 x b1 keeps its x: not congruent to the identity.
  Word u = reduce(fam, {{1, 2}, {0, 1}, {1, 1}});
  CHECK(!congruence_check(u, Word::identity(fam), 0, n));

  // The length-8 word over V4 * Z2 collapses onto g b g b g.
  GroupPtr v4 = make_direct_product(make_cyclic(2), make_cyclic(2));
  FactorFamily f4 = pair_family(v4, make_cyclic(2));
  const Elt a = 1, g = 2, ag = 3;
  SubgroupSet na = subgroup_generated(v4, {a});
  Word big = reduce(f4, {{1, 1}, {0, a}, {1, 1}, {0, ag},
                         {1, 1}, {0, g}, {1, 1}, {0, g}});
  Word target = reduce(f4, {{0, g}, {1, 1}, {0, g}, {1, 1}, {0, g}});
  CHECK(congruence_check(big, target, 0, na));

  FactorFamily other = pair_family(make_cyclic(9), make_cyclic(3));
  CHECK(code_of([&] {
          congruence_check(w, reduce(other, {{0, 1}}), 0, n);
        }) == ErrorCode::FamilyMismatch);
}

TEST_CASE("witness-word suite: the four cases end to end") {
  SUBCASE("case 1: second factor of order >= 3") {
    FactorFamily fam = pair_family(make_cyclic(9), make_cyclic(3));
    ProofWordBindings b;
    b.a = 3;
    b.g = 1;
    ProofWordReport r = proof_word_suite(fam, b);
    CHECK(r.case_number == 1);
    CHECK(r.word.length() == 6);
    CHECK(r.subgroup.order() == 3);
    CHECK(r.certified);
    CHECK(r.classification.tag == PeriodTag::CertifiedRank1);
    CHECK(r.congruence_ok);
    CHECK(r.power_congruence_ok);
    CHECK(r.pass);
  }

  SUBCASE("case 2: order-2 factor, closure of a1, a2 of order >= 3") {
    FactorFamily fam = pair_family(make_cyclic(9), make_cyclic(2));
    ProofWordBindings b;
    b.a1 = 3;
    b.a2 = 6;
    b.g = 1;
    ProofWordReport r = proof_word_suite(fam, b);
    CHECK(r.case_number == 2);
    CHECK(r.word.length() == 8);
    CHECK(render_word(r.word) == "g2:a g1:c g2:a g1:c g2:a g1:g g2:a g1:a");
    CHECK(r.subgroup.order() == 3);
    CHECK(r.pass);
  }

  SUBCASE("case 3: closure of order 2 with g^2 != 1") {
    FactorFamily fam = pair_family(make_cyclic(6), make_cyclic(2));
    ProofWordBindings b;
    b.a = 3;
    b.g = 1;
    ProofWordReport r = proof_word_suite(fam, b);
    CHECK(r.case_number == 3);
    CHECK(r.word.length() == 4);
    CHECK(render_word(r.word) == "g2:a g1:c g2:a g1:a");
    CHECK(r.subgroup.order() == 2);
    CHECK(r.pass);
  }

  SUBCASE("case 4: closure of order 2 with g^2 = 1") {
    GroupPtr v4 = make_direct_product(make_cyclic(2), make_cyclic(2));
    FactorFamily fam = pair_family(v4, make_cyclic(2));
    ProofWordBindings b;
    b.a = 1;
    b.g = 2;
    ProofWordReport r = proof_word_suite(fam, b);
    CHECK(r.case_number == 4);
    CHECK(r.word.length() == 8);
    CHECK(r.subgroup.order() == 2);
    CHECK(r.certified);
    CHECK(r.congruence_ok);
    CHECK(r.power_congruence_ok);
    CHECK(r.pass);
    // The image of the word must be an involution in the quotient product.
    CHECK(power(r.image, 2).empty());
  }
}

TEST_CASE("witness-word suite rejects bad bindings precisely") {
  FactorFamily z9z3 = pair_family(make_cyclic(9), make_cyclic(3));
  FactorFamily z9z2 = pair_family(make_cyclic(9), make_cyclic(2));
  FactorFamily z6z2 = pair_family(make_cyclic(6), make_cyclic(2));

  ProofWordBindings empty;
  CHECK(code_of([&] { proof_word_suite(z9z3, empty); }) ==
        ErrorCode::SideConditionViolated);

  ProofWordBindings same_b;
  same_b.a = 3;
  same_b.g = 1;
  same_b.b1 = 1;
  same_b.b2 = 1;
  CHECK(code_of([&] { proof_word_suite(z9z3, same_b); }) ==
        ErrorCode::SideConditionViolated);

  ProofWordBindings trivial_a;
  trivial_a.a = 0;
  trivial_a.g = 1;
  CHECK(code_of([&] { proof_word_suite(z9z3, trivial_a); }) ==
        ErrorCode::SideConditionViolated);

  // Closure of a too large for the |N| = 2 cases: the report must say to
  // bind a1/a2 instead.
  ProofWordBindings big_closure;
  big_closure.a = 3;
  big_closure.g = 1;
  CHECK(code_of([&] { proof_word_suite(z9z2, big_closure); }) ==
        ErrorCode::SideConditionViolated);

  // g == a makes the case-4 word degenerate.
  ProofWordBindings g_is_a;
  g_is_a.a = 3;
  g_is_a.g = 3;
  CHECK(code_of([&] { proof_word_suite(z6z2, g_is_a); }) ==
        ErrorCode::SideConditionViolated);

  // An explicit non-involution b is rejected.
  ProofWordBindings bad_b;
  bad_b.a = 3;
  bad_b.g = 1;
  bad_b.b = 0;
  CHECK(code_of([&] { proof_word_suite(z6z2, bad_b); }) ==
        ErrorCode::SideConditionViolated);

  // Out-of-range bindings are reference errors, not side conditions.
  ProofWordBindings oor;
  oor.a = 100;
  oor.g = 1;
  CHECK(code_of([&] { proof_word_suite(z9z3, oor); }) ==
        ErrorCode::BadReference);

  FactorFamily three({{"f0", make_cyclic(3)},
                      {"f1", make_cyclic(3)},
                      {"f2", make_cyclic(3)}},
                     665, true);
  CHECK(code_of([&] { proof_word_suite(three, empty); }) ==
        ErrorCode::InvalidFamily);
}

TEST_CASE("report flags cohere") {
  FactorFamily fam = pair_family(make_cyclic(9), make_cyclic(3));
  ProofWordBindings b;
  b.a = 3;
  b.g = 1;
  b.b1 = 1;
  b.b2 = 2;
  ProofWordReport r = proof_word_suite(fam, b);
  CHECK(r.certified == (r.classification.tag == PeriodTag::CertifiedRank1));
  CHECK(r.pass == (r.certified && r.congruence_ok && r.power_congruence_ok));
  CHECK(r.congruence_ok == (r.image == r.target));
}

}  // TEST_SUITE
