#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ppl/finite_group.hpp"

namespace ppl {

struct FactorInfo {
  std::string name;
  GroupPtr group;
};

/// An ordered list of named finite factor groups together with the period
/// exponent n.  Words and all downstream verdicts are relative to one
/// family; mixing words from different family instances is a hard error
/// (families compare by identity, not by content).
///
/// Validation: at least two factors, unique well-formed names, every factor
/// of order >= 2, n >= 1.  In strict mode n must additionally be odd and
/// >= 665 (the range in which the periodic-product theorems apply);
/// violations throw Error(StrictViolation).  Lenient-mode families carry
/// the flag so verdicts can label results computed outside the theorem
/// hypotheses.
class FactorFamily {
 public:
  FactorFamily(std::vector<FactorInfo> factors, long long n, bool strict);

  int factor_count() const;
  const GroupPtr& factor(int i) const;
  const std::string& factor_name(int i) const;
  /// Index of the named factor, or -1.
  int factor_index(std::string_view name) const;

  long long n() const;
  bool strict() const;

  /// Identity comparison; true only for copies of the same instance.
  bool same_family(const FactorFamily& other) const;

  /// n odd and >= 665 — the hypothesis every theorem here shares.
  bool n_in_theorem_range() const;
  /// No factor contains an involution.
  bool involution_free() const;

  /// Internal: family with factor i swapped out (used for induced quotient
  /// maps; the replacement may be trivial, so validation is relaxed).
  static FactorFamily replace_factor(const FactorFamily& base, int i,
                                     GroupPtr replacement);

 private:
  struct Impl;
  explicit FactorFamily(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace ppl
