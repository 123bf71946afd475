#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppl/family.hpp"
#include "ppl/finite_group.hpp"

namespace ppl {

/// One letter of a free-product normal form: a non-identity element of one
/// factor.  Ordered by (factor, element); that order drives canonical
/// rotations and enumeration.
struct Syllable {
  int factor = 0;
  Elt element = 0;
  auto operator<=>(const Syllable&) const = default;
};

/// A reduced word over a factor family: alternating syllables, none equal
/// to a factor identity.  This normal form is unique, so equality of
/// reduced words is equality in the free product.  Immutable.
class Word {
 public:
  static Word identity(const FactorFamily& family);

  /// Wraps an already-reduced syllable sequence; throws Error(Internal) if
  /// the sequence is not alternating or contains identity syllables.
  static Word from_syllables(const FactorFamily& family,
                             std::vector<Syllable> syllables);

  const FactorFamily& family() const { return family_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  int length() const { return int(syllables_.size()); }
  bool empty() const { return syllables_.empty(); }

  bool operator==(const Word& other) const {
    return family_.same_family(other.family_) &&
           syllables_ == other.syllables_;
  }

 private:
  Word(FactorFamily family, std::vector<Syllable> syllables)
      : family_(std::move(family)), syllables_(std::move(syllables)) {}

  FactorFamily family_;
  std::vector<Syllable> syllables_;
};

/// Free reduction of a raw letter sequence (factor index, element pairs):
/// identity letters are dropped and adjacent same-factor letters merged in
/// the factor, cascading.  Throws Error(BadReference) on out-of-range
/// factor or element indices.
Word reduce(const FactorFamily& family,
            const std::vector<std::pair<int, Elt>>& raw);

/// Concatenate and re-reduce.  Both words must belong to the same family
/// instance (Error(FamilyMismatch) otherwise); likewise for all binary
/// word operations below.
Word multiply(const Word& u, const Word& v);

Word invert(const Word& u);

/// u^m by repeated squaring; m may be negative or zero.
Word power(const Word& u, long long m);

/// A cyclically reduced word of length >= 1 considered up to rotation.
/// Stores the lexicographically least rotation (canonical form).
class CyclicWord {
 public:
  /// `w` must be cyclically reduced (first and last syllables in distinct
  /// factors when length >= 2) and nonempty.
  explicit CyclicWord(const Word& w);

  const Word& canonical() const { return canonical_; }
  int length() const { return canonical_.length(); }
  /// Rotation applied to the constructor argument to reach the canonical
  /// form (canonical[i] = input[(i + rotation) mod L]).
  int rotation() const { return rotation_; }

  bool operator==(const CyclicWord& other) const {
    return canonical_ == other.canonical_;
  }

 private:
  Word canonical_;
  int rotation_ = 0;
};

/// Rotation of a cyclically reduced word (index s means the result starts
/// with syllable s of `w`).
Word rotate(const Word& w, int s);

struct CyclicReduction {
  Word core;        ///< cyclically reduced (possibly length 0 or 1)
  Word conjugator;  ///< original = conjugator * core * conjugator^-1
  /// Engaged iff core length >= 1.
  std::optional<CyclicWord> cyclic;
};

/// Peels matching end syllables left to right until the core is cyclically
/// reduced.
CyclicReduction cyclic_reduce(const Word& w);

/// Conjugacy in the free product: cyclically reduced cores of length >= 2
/// are conjugate iff one is a rotation of the other (checked on the
/// doubled sequence); shorter cores must sit in the same factor and be
/// conjugate there.
bool is_conjugate(const Word& u, const Word& v);

struct TorsionCore {
  /// Factor element the word is conjugate to; disengaged means the word is
  /// the identity.
  std::optional<Syllable> element;
  Word conjugator;
};

/// Finite-order criterion at the free-product level: engaged iff w is
/// conjugate into a factor (cyclically reduced core of length <= 1).
std::optional<TorsionCore> torsion_core(const Word& w);

/// True iff w has order exactly 2, i.e. it is conjugate to a factor
/// involution.
bool is_involution(const Word& w);

/// Witness that some rotation of the canonical form reads c1 z c2 z^-1
/// with c1, c2 factor involutions.  Positions index into the canonical
/// sequence.
struct TwoInvolutionWitness {
  int shift = 0;   ///< rotation where the pattern starts
  int half = 0;    ///< k, half the length
  int c1_pos = 0;  ///< == shift
  int c2_pos = 0;  ///< == (shift + half) mod length
};

/// Scans all rotations of the canonical form (ascending shift, first match
/// wins).  Words of odd length never match.  Any product of two involutions
/// whose cyclic reduction has length >= 2 is guaranteed to produce a
/// witness; the reverse reconstruction is `reconstruct_involutions`.
std::optional<TwoInvolutionWitness> two_involution_witness(const CyclicWord& w);

struct InvolutionPair {
  Word c, d;  ///< both involutions with c * d == the canonical word
};

InvolutionPair reconstruct_involutions(const CyclicWord& w,
                                       const TwoInvolutionWitness& witness);

/// Deletes every syllable whose factor is listed in `kill` and re-reduces.
/// This is the retraction of the free product onto the remaining factors.
Word deletion_retraction(const Word& w, const std::vector<int>& kill);

/// Word map induced by quotienting factor `i` by a normal subgroup:
/// factor-i syllables are projected (and dropped when they land on the
/// identity coset), all else passes through, then the image is reduced
/// over the modified family.
class QuotientWordMap {
 public:
  QuotientWordMap(FactorFamily source, FactorFamily target, int factor,
                  std::vector<Elt> projection);

  const FactorFamily& source() const { return source_; }
  const FactorFamily& target() const { return target_; }
  Word apply(const Word& w) const;

 private:
  FactorFamily source_;
  FactorFamily target_;
  int factor_;
  std::vector<Elt> projection_;
};

/// Builds the map for factor i mod N.  N must be a subgroup of that factor
/// (Error(BadReference)) and normal in it (Error(NotNormal)).
QuotientWordMap induced_quotient_hom(const FactorFamily& family, int i,
                                     const SubgroupSet& n);

/// Parses the word-literal syntax: whitespace-separated tokens
/// `factor:element` with an optional `^k` power suffix; element may be a
/// display name or a numeric index; the bare token `1` is the identity.
Word parse_word(const FactorFamily& family, std::string_view literal);

/// Inverse of parse_word on reduced words ("1" for the identity).
std::string render_word(const Word& w);

}  // namespace ppl
