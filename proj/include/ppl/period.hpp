#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppl/word.hpp"

namespace ppl {

/// A p-periodic repetition covering at least 9 periods.  `start` indexes
/// the canonical syllable sequence (cyclic search) or the given sequence
/// (linear search); `run_length` is the length of the periodic range,
/// capped at the word length in the cyclic case (a fully periodic cycle
/// reports the whole cycle, not the doubled window).
struct NinePower {
  int period = 0;
  int start = 0;
  int run_length = 0;
  bool operator==(const NinePower&) const = default;
};

/// Two interchangeable detectors: the quadratic doubled-sequence scan
/// (default) and a suffix-array/longest-common-extension implementation.
/// They must return bit-identical results.
enum class RepetitionEngine { Scan, Runs };

/// Least (period, start) nine-power among cyclic occurrences: the
/// canonical sequence is doubled, candidate periods run over 2 <= p < |w|
/// ascending, starts over [0, |w|) ascending.  A qualifying range is a
/// maximal p-periodic stretch of length >= 9p.  Period 1 cannot occur in
/// an alternating word (internal assertion).
std::optional<NinePower> find_nine_power(
    const CyclicWord& w, RepetitionEngine engine = RepetitionEngine::Scan);

/// Same search on a plain (non-wrapping) syllable sequence.
std::optional<NinePower> find_nine_power_linear(
    const std::vector<Syllable>& seq,
    RepetitionEngine engine = RepetitionEngine::Scan);

/// Outcome of the rank-1 elementary-period test.  NotCyclicallyReduced is
/// reserved: classify_rank1 always reduces first and classifies the core,
/// so the tag never escapes it.
enum class PeriodTag {
  TooShort,
  NotCyclicallyReduced,
  ProductOfTwoInvolutions,
  ContainsNinePower,
  CertifiedRank1,
};

const char* period_tag_name(PeriodTag tag);

struct PeriodClassification {
  PeriodTag tag = PeriodTag::TooShort;
  /// Cyclically reduced core as a cyclic word; disengaged iff the input
  /// reduces to the identity.
  std::optional<CyclicWord> core;
  /// input = conjugator * core->canonical() * conjugator^-1 (the
  /// canonicalization rotation is already folded in).
  Word conjugator;
  std::optional<TwoInvolutionWitness> witness;  ///< set for the involution tag
  std::optional<NinePower> nine_power;          ///< set for the 9-power tag
};

/// The sufficient criterion: cyclically reduce, then demand length > 1, no
/// two-involution decomposition, and no 9-power of a shorter word.
/// CertifiedRank1 means the criterion holds; any other tag names the first
/// exclusion that fired (checked in that order).  A non-certified word is
/// not thereby proven to be a non-period.
PeriodClassification classify_rank1(
    const Word& w, RepetitionEngine engine = RepetitionEngine::Scan);

/// The defining relation period^n = 1 contributed by a certified period.
struct Relation {
  CyclicWord period;
  long long exponent = 0;
};

/// Certifies the period (throws Error(NotCertified) naming the failing tag
/// otherwise) and pairs it with the family exponent.
Relation relation_for(const CyclicWord& period,
                      RepetitionEngine engine = RepetitionEngine::Scan);

/// Symbolic display "(w)^n = 1"; never materializes the power.
std::string render_relation(const Relation& relation);

struct EnumerationOptions {
  int max_syllables = 4;
  int limit = 0;  ///< stop after this many certified words; 0 = no limit
  long long node_budget = 5'000'000;
  RepetitionEngine engine = RepetitionEngine::Scan;
};

/// All certified canonical cyclic words of length 2..max_syllables, one
/// representative per rotation class, in length-then-lexicographic order.
/// Deterministic.  Throws Error(BoundExceeded) once the search tree
/// exceeds node_budget placements.
std::vector<CyclicWord> enumerate_certified(const FactorFamily& family,
                                            const EnumerationOptions& opts);

namespace detail {

/// Engine cores, shared by the cyclic and linear entry points and exposed
/// for the cross-checking tests.  `seq` is the sequence to scan (already
/// doubled in the cyclic case), periods run over [1, max_period] with
/// period 1 asserted impossible, starts are restricted to < start_bound,
/// and `run_cap` truncates the reported run length when set.
std::optional<NinePower> nine_power_scan(const std::vector<Syllable>& seq,
                                         int max_period, int start_bound,
                                         std::optional<int> run_cap);
std::optional<NinePower> nine_power_runs(const std::vector<Syllable>& seq,
                                         int max_period, int start_bound,
                                         std::optional<int> run_cap);

}  // namespace detail

}  // namespace ppl
