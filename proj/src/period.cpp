#include "ppl/period.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ppl/errors.hpp"

namespace ppl {

namespace detail {

std::optional<NinePower> nine_power_scan(const std::vector<Syllable>& seq,
                                         int max_period, int start_bound,
                                         std::optional<int> run_cap) {
  const int n = int(seq.size());
  for (int p = 1; p <= max_period; ++p) {
    int x = 0;
    while (x < n - p) {
      if (seq[std::size_t(x)] != seq[std::size_t(x + p)]) {
        ++x;
        continue;
      }
      const int u = x;
      while (x < n - p && seq[std::size_t(x)] == seq[std::size_t(x + p)]) ++x;
      const int v = x;  // maximal matching stretch [u, v)
      if (v - u >= 8 * p && u < start_bound) {
        if (p == 1) {
          fail(ErrorCode::Internal,
               "period-1 repetition in an alternating sequence");
        }
        int run = v - u + p;
        if (run_cap) run = std::min(run, *run_cap);
        return NinePower{p, u, run};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

std::optional<NinePower> dispatch(const std::vector<Syllable>& seq,
                                  int max_period, int start_bound,
                                  std::optional<int> run_cap,
                                  RepetitionEngine engine) {
  if (engine == RepetitionEngine::Runs) {
    return detail::nine_power_runs(seq, max_period, start_bound, run_cap);
  }
  return detail::nine_power_scan(seq, max_period, start_bound, run_cap);
}

}  // namespace

std::optional<NinePower> find_nine_power(const CyclicWord& w,
                                         RepetitionEngine engine) {
  const int len = w.length();
  if (len < 2) return std::nullopt;
  std::vector<Syllable> doubled = w.canonical().syllables();
  doubled.insert(doubled.end(), w.canonical().syllables().begin(),
                 w.canonical().syllables().end());
  return dispatch(doubled, len - 1, len, len, engine);
}

std::optional<NinePower> find_nine_power_linear(
    const std::vector<Syllable>& seq, RepetitionEngine engine) {
  const int len = int(seq.size());
  if (len < 2) return std::nullopt;
  return dispatch(seq, len - 1, len, std::nullopt, engine);
}

const char* period_tag_name(PeriodTag tag) {
  switch (tag) {
    case PeriodTag::TooShort:
      return "TooShort";
    case PeriodTag::NotCyclicallyReduced:
      return "NotCyclicallyReduced";
    case PeriodTag::ProductOfTwoInvolutions:
      return "ProductOfTwoInvolutions";
    case PeriodTag::ContainsNinePower:
      return "ContainsNinePower";
    case PeriodTag::CertifiedRank1:
      return "CertifiedRank1";
  }
  fail(ErrorCode::Internal, "unknown period tag");
}

PeriodClassification classify_rank1(const Word& w, RepetitionEngine engine) {
  CyclicReduction cr = cyclic_reduce(w);
  // The exposed core is the canonical rotation, so the canonicalization
  // rotation must be folded into the conjugator for the identity
  // input = conjugator * core * conjugator^-1 to hold as stated.
  Word conjugator = std::move(cr.conjugator);
  if (cr.cyclic && cr.cyclic->rotation() != 0) {
    const auto& s = cr.core.syllables();
    std::vector<Syllable> prefix(s.begin(),
                                 s.begin() + cr.cyclic->rotation());
    conjugator = multiply(
        conjugator, Word::from_syllables(w.family(), std::move(prefix)));
  }
  if (cr.core.length() <= 1) {
    return PeriodClassification{PeriodTag::TooShort, std::move(cr.cyclic),
                                std::move(conjugator), std::nullopt,
                                std::nullopt};
  }
  CyclicWord cw = *cr.cyclic;
  if (auto witness = two_involution_witness(cw)) {
    return PeriodClassification{PeriodTag::ProductOfTwoInvolutions,
                                std::move(cw), std::move(conjugator),
                                witness, std::nullopt};
  }
  if (auto nine = find_nine_power(cw, engine)) {
    return PeriodClassification{PeriodTag::ContainsNinePower, std::move(cw),
                                std::move(conjugator), std::nullopt, nine};
  }
  return PeriodClassification{PeriodTag::CertifiedRank1, std::move(cw),
                              std::move(conjugator), std::nullopt,
                              std::nullopt};
}

Relation relation_for(const CyclicWord& period, RepetitionEngine engine) {
  PeriodClassification c = classify_rank1(period.canonical(), engine);
  if (c.tag != PeriodTag::CertifiedRank1) {
    fail(ErrorCode::NotCertified,
         std::string("word classifies as ") + period_tag_name(c.tag) +
             ", not CertifiedRank1");
  }
  return Relation{period, period.canonical().family().n()};
}

std::string render_relation(const Relation& relation) {
  return "(" + render_word(relation.period.canonical()) + ")^" +
         std::to_string(relation.exponent) + " = 1";
}

namespace {

class CertifiedEnumerator {
 public:
  CertifiedEnumerator(const FactorFamily& family,
                      const EnumerationOptions& opts)
      : family_(family), opts_(opts) {}

  std::vector<CyclicWord> run() {
    for (int len = 2; len <= opts_.max_syllables; ++len) {
      current_.clear();
      if (!extend(len)) break;  // result limit reached
    }
    return std::move(out_);
  }

 private:
  /// Depth-first placement of the remaining syllables; returns false once
  /// the result limit is hit.
  bool extend(int target_len) {
    const int pos = int(current_.size());
    if (pos == target_len) {
      return emit();
    }
    for (int f = 0; f < family_.factor_count(); ++f) {
      if (pos > 0 && f == current_.back().factor) continue;
      if (pos == target_len - 1 && f == current_.front().factor) continue;
      const int order = family_.factor(f)->order();
      const Elt id = family_.factor(f)->identity();
      for (Elt x = 0; x < Elt(order); ++x) {
        if (x == id) continue;
        if (++nodes_ > opts_.node_budget) {
          fail(ErrorCode::BoundExceeded,
               "enumeration exceeded the node budget of " +
                   std::to_string(opts_.node_budget));
        }
        current_.push_back(Syllable{f, x});
        const bool keep_going = extend(target_len);
        current_.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }

  bool emit() {
    Word w = Word::from_syllables(family_, current_);
    CyclicWord cw(w);
    if (cw.rotation() != 0) return true;  // not the canonical representative
    if (classify_rank1(w, opts_.engine).tag == PeriodTag::CertifiedRank1) {
      out_.push_back(std::move(cw));
      if (opts_.limit > 0 && int(out_.size()) >= opts_.limit) return false;
    }
    return true;
  }

  const FactorFamily& family_;
  const EnumerationOptions& opts_;
  std::vector<Syllable> current_;
  std::vector<CyclicWord> out_;
  long long nodes_ = 0;
};

}  // namespace

std::vector<CyclicWord> enumerate_certified(const FactorFamily& family,
                                            const EnumerationOptions& opts) {
  if (opts.max_syllables < 2) {
    fail(ErrorCode::Usage, "enumeration needs max_syllables >= 2");
  }
  return CertifiedEnumerator(family, opts).run();
}

}  // namespace ppl
