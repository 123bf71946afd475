#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ppl {

/// Element index inside a finite group.  Groups are stored as explicit
/// Cayley tables; 16 bits comfortably covers every order this tool accepts.
using Elt = std::uint16_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by a validated multiplication table.
///
/// Construction checks the group axioms on the raw table and throws
/// Error(NotAGroup) with the failing axiom and a witness otherwise:
///   - totality: every entry is a valid element index,
///   - identity: a (necessarily unique) two-sided identity exists,
///   - associativity: exhaustive for small orders, Light's test above
///     (exact either way; see finite_group.cpp),
///   - inverses: every row contains the identity exactly once, and the
///     left/right inverses agree.
///
/// Instances are immutable and shared via GroupPtr.
class FiniteGroup {
 public:
  /// Validates and wraps a raw row-major table.  `table[x * k + y]` is x*y.
  static GroupPtr from_table(std::string name,
                             std::vector<std::string> element_names,
                             std::vector<Elt> table);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  Elt identity() const { return identity_; }

  Elt mul(Elt x, Elt y) const { return table_[std::size_t(x) * order_ + y]; }
  Elt inv(Elt x) const { return inverse_[x]; }

  /// x^m by repeated squaring; m may be negative.
  Elt pow(Elt x, long long m) const;

  /// Multiplicative order of x (least t >= 1 with x^t = e).
  int element_order(Elt x) const;

  /// All x != e with x^2 = e, ascending.
  std::vector<Elt> involutions() const;

  /// True iff x^m = e for every element, i.e. the exponent divides m.
  bool exponent_divides(long long m) const;

  const std::string& element_name(Elt x) const { return element_names_[x]; }
  std::optional<Elt> element_by_name(std::string_view name) const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::vector<std::string> element_names_;
  std::vector<Elt> table_;
  std::vector<Elt> inverse_;
  Elt identity_ = 0;
  int order_ = 0;
};

/// Z_r (additive residues).  Element 0 is named "e"; element i >= 1 gets a
/// short letter name ("a", "b", ..., "z", "aa", ...).
GroupPtr make_cyclic(int r);

/// Dihedral group of the regular m-gon, order 2m.  Rotations are "e",
/// "r1", ..., reflections "s0", "s1", ....
GroupPtr make_dihedral(int m);

/// Symmetric group S_k for k <= 5; elements are permutations in
/// lexicographic one-line order, named "e" / "p<images>".
GroupPtr make_symmetric(int k);

/// Direct product with pairwise element names "(x,y)".
GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b);

/// A subgroup of a fixed parent group: sorted member list plus a
/// membership mask and a cached normality flag.
class SubgroupSet {
 public:
  SubgroupSet(GroupPtr parent, std::vector<Elt> sorted_members);

  const GroupPtr& parent() const { return parent_; }
  int order() const { return int(members_.size()); }
  const std::vector<Elt>& members() const { return members_; }
  bool contains(Elt x) const { return mask_[x]; }
  bool is_normal() const { return is_normal_; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const;

  /// True iff every member of `other` is a member of this subgroup.
  bool contains_subgroup(const SubgroupSet& other) const;

  bool same_members(const SubgroupSet& other) const {
    return members_ == other.members_;
  }

  /// Comma-free display: member names joined by spaces.
  std::string describe_members() const;

 private:
  GroupPtr parent_;
  std::vector<Elt> members_;
  std::vector<bool> mask_;
  bool is_normal_ = false;
};

/// Subgroup generated by `gens` (closure under products; inverses come for
/// free in a finite group).
SubgroupSet subgroup_generated(const GroupPtr& g, const std::vector<Elt>& gens);

/// Least normal subgroup containing `gens` (closure under products and
/// conjugation by all of G).
SubgroupSet normal_closure(const GroupPtr& g, const std::vector<Elt>& gens);

/// <x^n : x in G>; always normal (the generating set is closed under
/// conjugation).
SubgroupSet power_subgroup(const GroupPtr& g, long long n);

/// All normal subgroups, sorted by (order, lexicographic member list).
/// A normal subgroup is a union of conjugacy classes closed under product;
/// we enumerate them as joins of single-class normal closures.  Throws
/// Error(BoundExceeded) when |G| > max_order.
std::vector<SubgroupSet> enumerate_normal_subgroups(const GroupPtr& g,
                                                    int max_order = 512);

struct QuotientResult {
  GroupPtr group;               ///< coset group; elements ordered by least
                                ///< representative index
  std::vector<Elt> projection;  ///< parent element -> coset index
};

/// G/N with canonical (least-index) coset representatives.  The projection
/// is verified to be a homomorphism on all pairs.  Throws Error(NotNormal)
/// if N is not normal.
QuotientResult quotient(const GroupPtr& g, const SubgroupSet& n);

}  // namespace ppl
