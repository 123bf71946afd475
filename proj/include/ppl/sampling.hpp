#pragma once

#include <optional>
#include <vector>

#include "ppl/family.hpp"
#include "ppl/prng.hpp"
#include "ppl/word.hpp"

namespace ppl {

/// Deterministic word samplers used by the scan subcommands and the
/// property tests.  Distributions are simple and unweighted; only
/// reproducibility matters.

/// Uniform nontrivial element of a uniform factor, avoiding
/// `exclude_factor` when it is a valid index.
inline Syllable random_syllable(const FactorFamily& family, SplitMix64& rng,
                                int exclude_factor = -1) {
  int f;
  do {
    f = int(rng.below(std::uint64_t(family.factor_count())));
  } while (f == exclude_factor);
  const auto& g = family.factor(f);
  // Nontrivial element: sample an index among the order-1 non-identities.
  Elt x = Elt(rng.below(std::uint64_t(g->order() - 1)));
  if (x >= g->identity()) x = Elt(x + 1);
  return Syllable{f, x};
}

/// Random reduced word with exactly `length` syllables.
inline Word random_word(const FactorFamily& family, SplitMix64& rng,
                        int length) {
  std::vector<Syllable> syllables;
  syllables.reserve(std::size_t(length));
  int previous = -1;
  for (int i = 0; i < length; ++i) {
    Syllable s = random_syllable(family, rng, previous);
    previous = s.factor;
    syllables.push_back(s);
  }
  return Word::from_syllables(family, std::move(syllables));
}

/// Random cyclically reduced word with exactly `length` syllables (first
/// and last factors distinct), or nullopt when impossible (length >= 2
/// needs >= 2 factors; over exactly 2 factors odd lengths cannot close
/// up).  Builds the interior freely and resamples the last syllable's
/// factor to avoid both neighbours.
inline std::optional<Word> random_cyclic_word(const FactorFamily& family,
                                              SplitMix64& rng, int length) {
  if (length < 1) return std::nullopt;
  if (length == 1) return random_word(family, rng, 1);
  if (family.factor_count() == 2 && length % 2 != 0) return std::nullopt;
  std::vector<Syllable> syllables;
  syllables.reserve(std::size_t(length));
  int previous = -1;
  for (int i = 0; i + 1 < length; ++i) {
    Syllable s = random_syllable(family, rng, previous);
    previous = s.factor;
    syllables.push_back(s);
  }
  // Last syllable must avoid the previous factor and the first factor.
  Syllable s = random_syllable(family, rng, previous);
  while (s.factor == syllables.front().factor) {
    s = random_syllable(family, rng, previous);
  }
  syllables.push_back(s);
  return Word::from_syllables(family, std::move(syllables));
}

}  // namespace ppl
