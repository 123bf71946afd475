#include "ppl/theorems.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppl/errors.hpp"

namespace ppl {

namespace {

void check_factor_index(const FactorFamily& family, int i) {
  if (i < 0 || i >= family.factor_count()) {
    fail(ErrorCode::BadReference,
         "factor index " + std::to_string(i) + " out of range");
  }
}

/// First factor with an involution, with a sample involution, for traces.
std::string involution_trace(const FactorFamily& family) {
  for (int i = 0; i < family.factor_count(); ++i) {
    auto inv = family.factor(i)->involutions();
    if (!inv.empty()) {
      return "factor " + family.factor_name(i) + " contains an involution (" +
             family.factor(i)->element_name(inv.front()) + ")";
    }
  }
  return "no factor contains an involution";
}

/// Shared hypothesis gate.  When the hypotheses fail: strict mode yields
/// the inapplicable verdict; lenient mode computes the bare criterion and
/// labels it.
struct Gate {
  bool hypotheses_met;
  bool label;  ///< set outside_hypotheses on the computed verdict
  std::optional<Verdict> blocked;
};

Gate hypothesis_gate(const FactorFamily& family, Question q,
                     const char* citation, bool need_involution_free) {
  std::string code, why;
  if (need_involution_free && !family.involution_free()) {
    code = "involutions_present";
    why = involution_trace(family) +
          "; the theorem requires involution-free factors";
  } else if (!family.n_in_theorem_range()) {
    code = "small_n";
    why = "n = " + std::to_string(family.n()) +
          " is not an odd number >= 665";
  } else {
    return Gate{true, false, std::nullopt};
  }
  if (family.strict()) {
    return Gate{false, false,
                Verdict{q, Answer::Inapplicable, citation, why, code, false}};
  }
  return Gate{false, true, std::nullopt};
}

std::string subgroup_trace(const SubgroupSet& s) {
  if (s.order() <= 12) return "{" + s.describe_members() + "}";
  return "of order " + std::to_string(s.order());
}

}  // namespace

const char* question_name(Question q) {
  switch (q) {
    case Question::InheritablyNormal:
      return "inheritably_normal";
    case Question::InheritablyFactorizable:
      return "inheritably_factorizable";
    case Question::Simple:
      return "simple";
    case Question::Hopfian:
      return "hopfian";
    case Question::Corollary3Bundle:
      return "corollary3";
  }
  fail(ErrorCode::Internal, "unknown question");
}

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Inapplicable:
      return "inapplicable";
    case Answer::Undetermined:
      return "undetermined";
  }
  fail(ErrorCode::Internal, "unknown answer");
}

Verdict inheritably_normal_verdict(const FactorFamily& family, int i,
                                   const SubgroupSet& n) {
  check_factor_index(family, i);
  const GroupPtr& g = family.factor(i);
  if (n.parent() != g) {
    fail(ErrorCode::BadReference,
         "subgroup does not live in factor " + family.factor_name(i));
  }
  if (!n.is_normal()) {
    fail(ErrorCode::NotNormal,
         "subgroup {" + n.describe_members() + "} is not normal in " +
             family.factor_name(i));
  }
  if (n.is_trivial()) {
    return Verdict{Question::InheritablyNormal, Answer::Inapplicable,
                   "Theorem2",
                   "the criterion addresses nontrivial normal subgroups only",
                   "trivial_subgroup", false};
  }
  Gate gate = hypothesis_gate(family, Question::InheritablyNormal, "Theorem2",
                              /*need_involution_free=*/false);
  if (gate.blocked) return *gate.blocked;

  SubgroupSet powers = power_subgroup(g, family.n());
  for (Elt x : powers.members()) {
    if (!n.contains(x)) {
      return Verdict{Question::InheritablyNormal, Answer::No, "Theorem2",
                     "the power subgroup " + subgroup_trace(powers) +
                         " is not contained in the subgroup (element " +
                         g->element_name(x) + " is missing)",
                     "", gate.label};
    }
  }
  return Verdict{Question::InheritablyNormal, Answer::Yes, "Theorem2",
                 "the subgroup contains the power subgroup " +
                     subgroup_trace(powers),
                 "", gate.label};
}

GlobalNormalWitness::GlobalNormalWitness(const FactorFamily& family, int i,
                                         SubgroupSet n)
    : family_(family), factor_(i), n_(std::move(n)) {
  Verdict v = inheritably_normal_verdict(family_, factor_, n_);
  if (v.answer != Answer::Yes) {
    fail(ErrorCode::CriterionFails,
         std::string("inheritably-normal criterion answered ") +
             answer_name(v.answer) + ": " + v.reason);
  }
  const GroupPtr& g = family_.factor(factor_);
  for (Elt x = 0; x < Elt(g->order()); ++x) {
    Word w = x == g->identity()
                 ? Word::identity(family_)
                 : Word::from_syllables(family_, {Syllable{factor_, x}});
    if (membership(w) != n_.contains(x)) {
      fail(ErrorCode::Internal,
           "membership test disagrees with the subgroup on element " +
               g->element_name(x));
    }
  }
}

bool GlobalNormalWitness::membership(const Word& w) const {
  std::vector<int> kill;
  for (int j = 0; j < family_.factor_count(); ++j) {
    if (j != factor_) kill.push_back(j);
  }
  Word retracted = deletion_retraction(w, kill);
  if (retracted.empty()) return true;
  if (retracted.length() != 1 ||
      retracted.syllables()[0].factor != factor_) {
    fail(ErrorCode::Internal, "retraction left a multi-factor word");
  }
  return n_.contains(retracted.syllables()[0].element);
}

Verdict inheritably_factorizable_verdict(const FactorFamily& family, int i,
                                         int group_bound) {
  check_factor_index(family, i);
  Gate gate = hypothesis_gate(family, Question::InheritablyFactorizable,
                              "Corollary2", /*need_involution_free=*/false);
  if (gate.blocked) return *gate.blocked;

  const GroupPtr& g = family.factor(i);
  std::vector<SubgroupSet> lattice = enumerate_normal_subgroups(g, group_bound);
  SubgroupSet powers = power_subgroup(g, family.n());
  int nontrivial = 0;
  for (const SubgroupSet& sub : lattice) {
    if (sub.is_trivial()) continue;
    ++nontrivial;
    if (!sub.contains_subgroup(powers)) {
      return Verdict{Question::InheritablyFactorizable, Answer::No,
                     "Corollary2",
                     "normal subgroup " + subgroup_trace(sub) +
                         " does not contain the power subgroup " +
                         subgroup_trace(powers),
                     "", gate.label};
    }
  }
  return Verdict{Question::InheritablyFactorizable, Answer::Yes, "Corollary2",
                 "all " + std::to_string(nontrivial) +
                     " nontrivial normal subgroups contain the power "
                     "subgroup " +
                     subgroup_trace(powers),
                 "", gate.label};
}

Verdict simplicity_verdict(const FactorFamily& family) {
  Gate gate = hypothesis_gate(family, Question::Simple, "Theorem1",
                              /*need_involution_free=*/true);
  if (gate.blocked) return *gate.blocked;

  for (int i = 0; i < family.factor_count(); ++i) {
    SubgroupSet powers = power_subgroup(family.factor(i), family.n());
    if (!powers.is_whole_group()) {
      return Verdict{Question::Simple, Answer::No, "Theorem1",
                     "factor " + family.factor_name(i) +
                         " has a proper power subgroup (order " +
                         std::to_string(powers.order()) + " of " +
                         std::to_string(family.factor(i)->order()) + ")",
                     "", gate.label};
    }
  }
  return Verdict{Question::Simple, Answer::Yes, "Theorem1",
                 "every factor satisfies G^n = G", "", gate.label};
}

Verdict hopfian_verdict(const FactorFamily& family) {
  Gate gate = hypothesis_gate(family, Question::Hopfian, "Theorem4",
                              /*need_involution_free=*/true);
  if (gate.blocked) return *gate.blocked;

  for (int i = 0; i < family.factor_count(); ++i) {
    const GroupPtr& g = family.factor(i);
    if (!g->exponent_divides(family.n())) {
      Elt witness = 0;
      for (Elt x = 0; x < Elt(g->order()); ++x) {
        if (family.n() % g->element_order(x) != 0) {
          witness = x;
          break;
        }
      }
      return Verdict{Question::Hopfian, Answer::Yes, "Theorem4",
                     "factor " + family.factor_name(i) +
                         " does not satisfy x^n = 1 (element " +
                         g->element_name(witness) + " has order " +
                         std::to_string(g->element_order(witness)) + ")",
                     "", gate.label};
    }
  }
  return Verdict{Question::Hopfian, Answer::Undetermined, "Theorem4",
                 "every factor satisfies x^n = 1; whether such products "
                 "(free Burnside groups among them) are Hopfian is open",
                 "open_question", gate.label};
}

Corollary3Verdict corollary3_verdict(long long m, long long r, long long n) {
  auto blocked = [&](std::string code, std::string why) {
    Corollary3Verdict v;
    v.reason_code = std::move(code);
    v.reason = std::move(why);
    return v;
  };
  if (m < 2) {
    return blocked("m_too_small",
                   "need at least 2 cyclic factors, got " + std::to_string(m));
  }
  if (r < 1 || n < 1) {
    return blocked("nonpositive_parameters", "r and n must be positive");
  }
  if (n % 2 == 0) {
    return blocked("n_even", "n = " + std::to_string(n) + " is even");
  }
  if (n < 665) {
    return blocked("n_too_small", "n = " + std::to_string(n) + " is below 665");
  }
  if (r % n != 0) {
    return blocked("n_not_dividing_r", "n = " + std::to_string(n) +
                                           " does not divide r = " +
                                           std::to_string(r));
  }
  if (r == n) {
    return blocked("n_not_proper_divisor",
                   "n = r = " + std::to_string(n) +
                       "; n must be a proper divisor of r");
  }
  Corollary3Verdict v;
  v.hopfian = Answer::Yes;
  v.residually_finite = Answer::No;
  v.simple = Answer::No;
  v.reason = "n = " + std::to_string(n) +
             " is an odd proper divisor of r = " + std::to_string(r) +
             " with n >= 665, over " + std::to_string(m) + " cyclic factors";
  if (r % 2 == 0) {
    v.note = "r is even, so the cyclic factors contain an involution";
  }
  return v;
}

Corollary1Report corollary1_scan(const GroupPtr& g, long long n,
                                 int group_bound) {
  Corollary1Report report;
  std::vector<SubgroupSet> lattice = enumerate_normal_subgroups(g, group_bound);
  SubgroupSet powers = power_subgroup(g, n);
  report.factorizable_criterion = true;
  for (const SubgroupSet& sub : lattice) {
    if (sub.is_trivial()) continue;
    if (!sub.contains_subgroup(powers)) {
      report.factorizable_criterion = false;
      report.detail = "normal subgroup " + subgroup_trace(sub) +
                      " does not contain the power subgroup";
      break;
    }
  }
  std::vector<Elt> involutions = g->involutions();
  report.has_involution = !involutions.empty();
  report.premise = report.factorizable_criterion && report.has_involution;
  report.unique_involution = involutions.size() == 1;
  if (report.unique_involution) {
    const Elt t = involutions.front();
    report.involution = t;
    report.central = true;
    for (Elt x = 0; x < Elt(g->order()); ++x) {
      if (g->mul(x, t) != g->mul(t, x)) {
        report.central = false;
        if (report.detail.empty()) {
          report.detail = "involution " + g->element_name(t) +
                          " does not commute with " + g->element_name(x);
        }
        break;
      }
    }
  } else if (report.detail.empty()) {
    report.detail = std::to_string(involutions.size()) + " involutions";
  }
  report.conclusion = report.unique_involution && report.central;
  report.tension = report.premise && !report.conclusion;
  return report;
}

bool congruence_check(const Word& w, const Word& v, int i,
                      const SubgroupSet& n) {
  if (!w.family().same_family(v.family())) {
    fail(ErrorCode::FamilyMismatch,
         "congruence operands belong to different families");
  }
  QuotientWordMap map = induced_quotient_hom(w.family(), i, n);
  return map.apply(w) == map.apply(v);
}

namespace {

Elt require_binding(const std::optional<Elt>& value, const char* name,
                    const GroupPtr& group, int case_number) {
  if (!value) {
    fail(ErrorCode::SideConditionViolated,
         "case " + std::to_string(case_number) + " requires binding '" +
             name + "'");
  }
  if (int(*value) >= group->order()) {
    fail(ErrorCode::BadReference, std::string("binding '") + name +
                                      "' is out of range for " +
                                      group->name());
  }
  return *value;
}

void require_nontrivial(Elt value, const char* name, const GroupPtr& group) {
  if (value == group->identity()) {
    fail(ErrorCode::SideConditionViolated,
         std::string("binding '") + name + "' must be nontrivial");
  }
}

}  // namespace

ProofWordReport proof_word_suite(const FactorFamily& family,
                                 const ProofWordBindings& bindings) {
  if (family.factor_count() != 2) {
    fail(ErrorCode::InvalidFamily,
         "the witness-word suite works over exactly two factors");
  }
  const GroupPtr& g1 = family.factor(0);
  const GroupPtr& g2 = family.factor(1);

  int case_number;
  std::string description;
  std::vector<std::pair<int, Elt>> raw_word;
  std::optional<SubgroupSet> derived;
  // Comparison word for the congruence; cases 1-3 use g itself, case 4
  // uses g b g^n b g and checks it against word^n only.
  std::vector<std::pair<int, Elt>> raw_target;
  bool compare_powers_only = false;

  if (g2->order() >= 3) {
    case_number = 1;
    description = "second factor has order >= 3";
    const Elt a = require_binding(bindings.a, "a", g1, 1);
    const Elt g = require_binding(bindings.g, "g", g1, 1);
    // Unbound b1/b2 default to the first two nontrivial elements; the
    // side conditions only need them nontrivial and distinct.
    auto nth_nontrivial = [&](int skip) {
      int seen = 0;
      for (Elt x = 0; x < g2->order(); ++x) {
        if (x == g2->identity()) continue;
        if (seen == skip) return x;
        ++seen;
      }
      fail(ErrorCode::Internal, "second factor smaller than validated");
    };
    const Elt b1 = bindings.b1 ? require_binding(bindings.b1, "b1", g2, 1)
                               : nth_nontrivial(0);
    const Elt b2 = bindings.b2 ? require_binding(bindings.b2, "b2", g2, 1)
                               : nth_nontrivial(1);
    require_nontrivial(a, "a", g1);
    require_nontrivial(g, "g", g1);
    require_nontrivial(b1, "b1", g2);
    require_nontrivial(b2, "b2", g2);
    if (b1 == b2) {
      fail(ErrorCode::SideConditionViolated, "b1 and b2 must differ");
    }
    derived = normal_closure(g1, {a});
    raw_word = {{1, g2->inv(b1)}, {0, a}, {1, b1}, {1, g2->inv(b2)},
                {0, a},           {1, b2}, {0, g}};
    raw_target = {{0, g}};
  } else {
    // With a second factor of order 2, an unbound b defaults to the only
    // possible choice: its involution.
    const Elt b = bindings.b ? require_binding(bindings.b, "b", g2, 2)
                             : g2->involutions().front();
    if (g2->element_order(b) != 2) {
      fail(ErrorCode::SideConditionViolated, "b must be an involution");
    }
    if (bindings.a1 || bindings.a2) {
      case_number = 2;
      description =
          "second factor has order 2; the closure of a1, a2 has order >= 3";
      const Elt a1 = require_binding(bindings.a1, "a1", g1, 2);
      const Elt a2 = require_binding(bindings.a2, "a2", g1, 2);
      const Elt g = require_binding(bindings.g, "g", g1, 2);
      require_nontrivial(a1, "a1", g1);
      require_nontrivial(a2, "a2", g1);
      require_nontrivial(g, "g", g1);
      if (a1 == a2) {
        fail(ErrorCode::SideConditionViolated, "a1 and a2 must differ");
      }
      derived = normal_closure(g1, {a1, a2});
      raw_word = {{1, b}, {0, a1}, {1, b}, {0, a1},
                  {1, b}, {0, a2}, {1, b}, {0, g}};
      raw_target = {{0, g}};
    } else {
      const Elt a = require_binding(bindings.a, "a", g1, 3);
      const Elt g = require_binding(bindings.g, "g", g1, 3);
      require_nontrivial(a, "a", g1);
      require_nontrivial(g, "g", g1);
      derived = normal_closure(g1, {a});
      if (derived->order() != 2) {
        fail(ErrorCode::SideConditionViolated,
             "the normal closure of a has order " +
                 std::to_string(derived->order()) +
                 "; the short witness words need order 2 (bind a1 and a2 "
                 "for the larger case)");
      }
      if (g1->element_order(g) != 2) {
        case_number = 3;
        description = "closure of a has order 2 and g^2 != 1";
        raw_word = {{1, b}, {0, a}, {1, b}, {0, g}};
        raw_target = {{0, g}};
      } else {
        case_number = 4;
        description = "closure of a has order 2 and g^2 = 1";
        if (g == a) {
          fail(ErrorCode::SideConditionViolated,
               "g must lie outside the closure of a");
        }
        raw_word = {{1, b}, {0, a}, {1, b}, {0, a}, {0, g},
                    {1, b}, {0, g}, {1, b}, {0, g}};
        raw_target = {{0, g}, {1, b}, {0, g1->pow(g, family.n())},
                      {1, b}, {0, g}};
        compare_powers_only = true;
      }
    }
  }

  Word word = reduce(family, raw_word);
  Word target_word = reduce(family, raw_target);
  QuotientWordMap map = induced_quotient_hom(family, 0, *derived);
  PeriodClassification classification = classify_rank1(word);
  const bool certified =
      classification.tag == PeriodTag::CertifiedRank1;

  Word image = map.apply(word);
  Word target = map.apply(target_word);
  // Case 4 has no plain-word comparison; instead its image must square to
  // the identity so that odd powers collapse onto it.
  const bool congruence_ok =
      compare_powers_only ? power(image, 2).empty() : image == target;
  Word power_image = map.apply(power(word, family.n()));
  Word power_target = compare_powers_only
                          ? target
                          : map.apply(power(target_word, family.n()));
  const bool power_congruence_ok = power_image == power_target;

  return ProofWordReport{case_number,
                         std::move(description),
                         std::move(word),
                         std::move(*derived),
                         std::move(classification),
                         certified,
                         std::move(image),
                         std::move(target),
                         congruence_ok,
                         std::move(power_image),
                         std::move(power_target),
                         power_congruence_ok,
                         certified && congruence_ok && power_congruence_ok};
}

}  // namespace ppl
