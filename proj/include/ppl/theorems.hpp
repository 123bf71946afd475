#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppl/family.hpp"
#include "ppl/finite_group.hpp"
#include "ppl/period.hpp"
#include "ppl/word.hpp"

namespace ppl {

enum class Question {
  InheritablyNormal,
  InheritablyFactorizable,
  Simple,
  Hopfian,
  Corollary3Bundle,
};

enum class Answer { Yes, No, Inapplicable, Undetermined };

const char* question_name(Question q);
const char* answer_name(Answer a);

/// A theorem-backed answer.  `citation` names the result the answer rests
/// on (Theorem1, Theorem2, Theorem4, Corollary2, Corollary3).  For
/// inapplicable/undetermined answers `reason_code` is a stable
/// machine-readable token; `reason` is always the human-readable trace.
/// `outside_hypotheses` marks lenient-mode answers computed from the bare
/// algebraic criterion even though the theorem's hypotheses fail; such
/// answers are labeled, never silently upgraded — see the CLI docs.
struct Verdict {
  Question question;
  Answer answer;
  std::string citation;
  std::string reason;
  std::string reason_code;
  bool outside_hypotheses = false;
};

/// The subgroup-side criterion: a nontrivial normal N <= G_i extends to a
/// normal subgroup of the periodic product meeting G_i exactly in N
/// ("inheritably normal") iff N contains the power subgroup G_i^n.
/// Trivial N is outside the theorem's scope in either mode
/// (reason_code=trivial_subgroup).  Throws Error(NotNormal) if N is not
/// normal, Error(BadReference) if N lives in a different group.
Verdict inheritably_normal_verdict(const FactorFamily& family, int i,
                                   const SubgroupSet& n);

/// Free-product-level membership test for the extension N * (everything
/// else): a word belongs iff its retraction onto factor i lands in N.
/// Construction re-runs the criterion (throws Error(CriterionFails) unless
/// the verdict is yes) and verifies the intersection property exhaustively
/// over factor i: membership(g) == (g in N) for every factor element g.
class GlobalNormalWitness {
 public:
  GlobalNormalWitness(const FactorFamily& family, int i, SubgroupSet n);

  int factor() const { return factor_; }
  const SubgroupSet& subgroup() const { return n_; }
  bool membership(const Word& w) const;

 private:
  FactorFamily family_;
  int factor_;
  SubgroupSet n_;
};

/// Factor-side criterion: factor i is inheritably factorizable iff every
/// nontrivial normal subgroup of G_i contains G_i^n.  Enumerates the
/// normal-subgroup lattice (Error(BoundExceeded) above group_bound); a
/// "no" names the first failing subgroup in `reason`.
Verdict inheritably_factorizable_verdict(const FactorFamily& family, int i,
                                         int group_bound = 512);

/// Simplicity of the n-periodic product: hypotheses are involution-free
/// factors and odd n >= 665; then the product is simple iff G_i^n = G_i
/// for every factor.
Verdict simplicity_verdict(const FactorFamily& family);

/// Hopfian property: hypotheses as for simplicity (strict mode treats
/// involution-free as required; the statement's proof route needs it).
/// Yes when some factor violates x^n = 1; otherwise undetermined — for
/// exponent-n factors the question reduces to the open problem for free
/// Burnside groups.
Verdict hopfian_verdict(const FactorFamily& family);

/// Bundle for the n-periodic product of m >= 2 cyclic groups of order r:
/// if n is odd, >= 665, and a proper divisor of r, the product is Hopfian,
/// not residually finite, and not simple.  Premise failures yield the
/// inapplicable bundle with the failed premise named.  Even r is allowed
/// but flagged in `note` (cyclic factors of even order contain an
/// involution, which the Hopfian proof route is sensitive to).
struct Corollary3Verdict {
  Answer hopfian = Answer::Inapplicable;
  Answer residually_finite = Answer::Inapplicable;
  Answer simple = Answer::Inapplicable;
  std::string citation = "Corollary3";
  std::string reason;
  std::string reason_code;  ///< failed premise when inapplicable
  std::optional<std::string> note;
  bool applicable() const { return hopfian != Answer::Inapplicable; }
};

Corollary3Verdict corollary3_verdict(long long m, long long r, long long n);

/// Consistency probe for the unique-central-involution statement: premise
/// P = (factor-side criterion holds for G1 at n) and (G1 has an
/// involution); conclusion C = G1 has exactly one involution and it is
/// central.  P together with not-C is reported as tension, without
/// asserting the implication either way.
struct Corollary1Report {
  bool factorizable_criterion = false;
  bool has_involution = false;
  bool premise = false;
  bool unique_involution = false;
  bool central = false;
  bool conclusion = false;
  bool tension = false;
  std::optional<Elt> involution;  ///< the involution when unique
  std::string detail;             ///< trace of the failing side, if any
};

Corollary1Report corollary1_scan(const GroupPtr& g, long long n,
                                 int group_bound = 512);

/// True iff W and V have equal images under the quotient map that kills N
/// inside factor i (the congruence W == V mod N).
bool congruence_check(const Word& w, const Word& v, int i,
                      const SubgroupSet& n);

/// Element choices for the four witness words over a two-factor family
/// (a-letters in factor 0, b-letters in factor 1).  Only the bindings the
/// selected case needs must be set.
struct ProofWordBindings {
  std::optional<Elt> a, a1, a2, g;  ///< factor-0 elements
  std::optional<Elt> b, b1, b2;     ///< factor-1 elements
};

struct ProofWordReport {
  int case_number;          ///< 1..4
  std::string description;  ///< which hypotheses selected this case
  Word word;                ///< the witness word, in normal form
  SubgroupSet subgroup;     ///< derived N = normal closure of the a-letters
  PeriodClassification classification;
  bool certified;
  Word image;         ///< quotient image of the word
  Word target;        ///< quotient image of the comparison word
  bool congruence_ok;
  Word power_image;   ///< quotient image of word^n
  Word power_target;  ///< quotient image of the comparison power
  bool power_congruence_ok;
  bool pass;
};

/// Replays the existence half of the subgroup-extension proof on concrete
/// bindings: selects the applicable case from the factor shapes, builds
/// the witness word, certifies it as a rank-1 period, and checks the
/// congruence that identifies its image with the target coset.
///   Case 1 (|G2| >= 3):          b1^-1 a b1 b2^-1 a b2 g
///   Case 2 (|G2| = 2, |N| >= 3): b a1 b a1 b a2 b g
///   Case 3 (|N| = 2, g^2 != 1):  b a b g
///   Case 4 (|N| = 2, g^2 = 1):   b a b a g b g b g
/// Cases 1-3 compare against g (and g^n); case 4 compares word^n against
/// g b g^n b g.  Throws Error(SideConditionViolated) naming any unmet
/// binding requirement.
ProofWordReport proof_word_suite(const FactorFamily& family,
                                 const ProofWordBindings& bindings);

}  // namespace ppl
