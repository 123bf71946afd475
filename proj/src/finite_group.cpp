#include "ppl/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ppl/errors.hpp"

namespace ppl {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::NotAGroup: return "not_a_group";
    case ErrorCode::NotNormal: return "not_normal";
    case ErrorCode::BoundExceeded: return "bound_exceeded";
    case ErrorCode::BadReference: return "bad_reference";
    case ErrorCode::NotCertified: return "not_certified";
    case ErrorCode::CriterionFails: return "criterion_fails";
    case ErrorCode::SideConditionViolated: return "side_condition_violated";
    case ErrorCode::StrictViolation: return "strict_violation";
    case ErrorCode::FamilyMismatch: return "family_mismatch";
    case ErrorCode::InvalidFamily: return "invalid_family";
    case ErrorCode::Usage: return "usage";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

namespace {

// Short letter names in "spreadsheet" style over an alphabet that skips
// 'e' (reserved for the identity): 1 -> a, ..., 4 -> d, 5 -> f, 25 -> z,
// 26 -> aa, ...
std::string alpha_name(int i) {
  static const char alphabet[] = "abcdfghijklmnopqrstuvwxyz";
  std::string s;
  while (i > 0) {
    s.push_back(alphabet[(i - 1) % 25]);
    i = (i - 1) / 25;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// Closure of `start` under right-multiplication by `gens`, using the raw
// table.  Returns the membership mask and appends discovered elements to
// `out` in BFS order.  Works on unvalidated tables (totality must already
// hold); used both by Light's associativity test and by the greedy
// generating-set search.
std::vector<bool> right_closure(const std::vector<Elt>& table, int k,
                                const std::vector<Elt>& start,
                                const std::vector<Elt>& gens,
                                std::vector<Elt>* out = nullptr) {
  std::vector<bool> seen(k, false);
  std::vector<Elt> queue;
  for (Elt s : start) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elt x = queue[head];
    for (Elt g : gens) {
      Elt y = table[std::size_t(x) * k + g];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (out) *out = std::move(queue);
  return seen;
}

// Exhaustive associativity check, O(k^3).
void check_associativity_exhaustive(const std::vector<Elt>& table, int k) {
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      Elt xy = table[std::size_t(x) * k + y];
      const Elt* row_y = &table[std::size_t(y) * k];
      const Elt* row_xy = &table[std::size_t(xy) * k];
      for (int z = 0; z < k; ++z) {
        Elt lhs = row_xy[z];
        Elt rhs = table[std::size_t(x) * k + row_y[z]];
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "associativity fails at (" << x << "," << y << "," << z
              << "): (x*y)*z = " << int(lhs) << " but x*(y*z) = " << int(rhs);
          fail(ErrorCode::NotAGroup, msg.str());
        }
      }
    }
  }
}

// Light's associativity test.  Greedily pick a generating set S (elements
// not yet reachable by left-associated products of S), then verify
// (x*a)*y = x*(a*y) for every a in S and all x, y.  The set of elements a
// satisfying that identity is closed under products, so S generating the
// whole table makes the check complete.  Exact, and far cheaper than the
// cubic scan for large tables with small generating sets.
void check_associativity_light(const std::vector<Elt>& table, int k) {
  std::vector<Elt> gens;
  std::vector<bool> reached(k, false);
  for (int x = 0; x < k; ++x) {
    if (reached[x]) continue;
    gens.push_back(Elt(x));
    reached = right_closure(table, k, gens, gens);
  }
  for (Elt a : gens) {
    const Elt* row_a = &table[std::size_t(a) * k];
    for (int x = 0; x < k; ++x) {
      Elt xa = table[std::size_t(x) * k + a];
      const Elt* row_x = &table[std::size_t(x) * k];
      const Elt* row_xa = &table[std::size_t(xa) * k];
      for (int y = 0; y < k; ++y) {
        if (row_xa[y] != row_x[row_a[y]]) {
          std::ostringstream msg;
          msg << "associativity fails at (" << x << "," << int(a) << "," << y
              << ")";
          fail(ErrorCode::NotAGroup, msg.str());
        }
      }
    }
  }
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::string name,
                                 std::vector<std::string> element_names,
                                 std::vector<Elt> table) {
  const int k = int(element_names.size());
  if (k < 1) {
    fail(ErrorCode::NotAGroup, "group needs at least one element");
  }
  if (table.size() != std::size_t(k) * k) {
    fail(ErrorCode::NotAGroup, "table size is not order^2");
  }

  // Totality.
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] >= k) {
      std::ostringstream msg;
      msg << "table entry out of range at row " << idx / k << ", column "
          << idx % k;
      fail(ErrorCode::NotAGroup, msg.str());
    }
  }

  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      ok = table[std::size_t(e) * k + x] == x && table[std::size_t(x) * k + e] == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    fail(ErrorCode::NotAGroup, "no two-sided identity element");
  }

  // Associativity: exhaustive up to order 128, Light's test beyond.
  if (k <= 128) {
    check_associativity_exhaustive(table, k);
  } else {
    check_associativity_light(table, k);
  }

  // Unique inverses.  With associativity and an identity established, a row
  // containing the identity exactly once pins down a two-sided inverse.
  std::vector<Elt> inverse(k, 0);
  for (int x = 0; x < k; ++x) {
    int found = -1;
    int count = 0;
    for (int y = 0; y < k; ++y) {
      if (table[std::size_t(x) * k + y] == identity) {
        found = y;
        ++count;
      }
    }
    if (count != 1) {
      std::ostringstream msg;
      msg << "element " << element_names[x]
          << (count == 0 ? " has no inverse" : " has multiple inverses");
      fail(ErrorCode::NotAGroup, msg.str());
    }
    if (table[std::size_t(found) * k + x] != identity) {
      std::ostringstream msg;
      msg << "left and right inverses of " << element_names[x] << " disagree";
      fail(ErrorCode::NotAGroup, msg.str());
    }
    inverse[x] = Elt(found);
  }

  // Distinct element names (needed for unambiguous parsing/rendering).
  {
    std::set<std::string> seen;
    for (const auto& n : element_names) {
      if (!seen.insert(n).second) {
        fail(ErrorCode::NotAGroup, "duplicate element name: " + n);
      }
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->element_names_ = std::move(element_names);
  g->table_ = std::move(table);
  g->inverse_ = std::move(inverse);
  g->identity_ = Elt(identity);
  g->order_ = k;
  return g;
}

Elt FiniteGroup::pow(Elt x, long long m) const {
  if (m < 0) {
    x = inv(x);
    m = -m;
  }
  Elt acc = identity_;
  Elt base = x;
  unsigned long long e = (unsigned long long)m;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Elt x) const {
  int t = 1;
  Elt acc = x;
  while (acc != identity_) {
    acc = mul(acc, x);
    ++t;
  }
  return t;
}

std::vector<Elt> FiniteGroup::involutions() const {
  std::vector<Elt> out;
  for (int x = 0; x < order_; ++x) {
    if (Elt(x) != identity_ && mul(Elt(x), Elt(x)) == identity_) {
      out.push_back(Elt(x));
    }
  }
  return out;
}

bool FiniteGroup::exponent_divides(long long m) const {
  for (int x = 0; x < order_; ++x) {
    if (pow(Elt(x), m) != identity_) return false;
  }
  return true;
}

std::optional<Elt> FiniteGroup::element_by_name(std::string_view name) const {
  for (int x = 0; x < order_; ++x) {
    if (element_names_[x] == name) return Elt(x);
  }
  return std::nullopt;
}

GroupPtr make_cyclic(int r) {
  if (r < 1 || r > 60000) {
    fail(ErrorCode::ParseError, "cyclic order out of range: " + std::to_string(r));
  }
  std::vector<std::string> names(r);
  names[0] = "e";
  for (int i = 1; i < r; ++i) names[i] = alpha_name(i);
  std::vector<Elt> table(std::size_t(r) * r);
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < r; ++y) {
      int s = x + y;
      if (s >= r) s -= r;
      table[std::size_t(x) * r + y] = Elt(s);
    }
  }
  return FiniteGroup::from_table("Z" + std::to_string(r), std::move(names),
                                 std::move(table));
}

GroupPtr make_dihedral(int m) {
  if (m < 1 || m > 20000) {
    fail(ErrorCode::ParseError, "dihedral degree out of range: " + std::to_string(m));
  }
  const int k = 2 * m;
  // Element (f, i) with f in {0,1}: f=0 is the rotation r^i, f=1 the
  // reflection s r^i.  Index = f*m + i.  Using r^i s = s r^{-i}:
  //   (0,i)(0,j) = (0, i+j)      (1,i)(0,j) = (1, i+j)
  //   (0,i)(1,j) = (1, j-i)      (1,i)(1,j) = (0, j-i)
  std::vector<std::string> names(k);
  names[0] = "e";
  for (int i = 1; i < m; ++i) names[i] = "r" + std::to_string(i);
  for (int i = 0; i < m; ++i) names[m + i] = "s" + std::to_string(i);
  std::vector<Elt> table(std::size_t(k) * k);
  auto idx = [m](int f, int i) { return Elt(f * m + ((i % m) + m) % m); };
  for (int f1 = 0; f1 < 2; ++f1) {
    for (int i = 0; i < m; ++i) {
      for (int f2 = 0; f2 < 2; ++f2) {
        for (int j = 0; j < m; ++j) {
          Elt lhs = idx(f1, i);
          Elt rhs = idx(f2, j);
          Elt prod = f2 == 0 ? idx(f1, i + j) : idx(1 - f1, j - i);
          table[std::size_t(lhs) * k + rhs] = prod;
        }
      }
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(m), std::move(names),
                                 std::move(table));
}

GroupPtr make_symmetric(int k) {
  if (k < 1 || k > 5) {
    fail(ErrorCode::ParseError,
         "symmetric degree must be between 1 and 5, got " + std::to_string(k));
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int n = int(perms.size());
  std::vector<std::string> names(n);
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) {
    index_of[perms[i]] = i;
    bool is_id = true;
    for (int j = 0; j < k; ++j) is_id = is_id && perms[i][j] == j;
    if (is_id) {
      names[i] = "e";
    } else {
      std::string s = "p";
      for (int j = 0; j < k; ++j) s.push_back(char('0' + perms[i][j]));
      names[i] = s;
    }
  }
  // Composition convention: (p*q)(x) = p(q(x)).
  std::vector<Elt> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      table[std::size_t(a) * n + b] = Elt(index_of[c]);
    }
  }
  return FiniteGroup::from_table("S" + std::to_string(k), std::move(names),
                                 std::move(table));
}

GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int ka = a->order();
  const int kb = b->order();
  const long long k = (long long)ka * kb;
  if (k > 60000) {
    fail(ErrorCode::ParseError, "direct product order too large");
  }
  std::vector<std::string> names(k);
  std::vector<Elt> table(std::size_t(k) * k);
  auto idx = [kb](int x, int y) { return Elt(x * kb + y); };
  for (int x = 0; x < ka; ++x) {
    for (int y = 0; y < kb; ++y) {
      names[idx(x, y)] =
          "(" + a->element_name(Elt(x)) + "," + b->element_name(Elt(y)) + ")";
    }
  }
  for (int x1 = 0; x1 < ka; ++x1) {
    for (int y1 = 0; y1 < kb; ++y1) {
      for (int x2 = 0; x2 < ka; ++x2) {
        for (int y2 = 0; y2 < kb; ++y2) {
          table[std::size_t(idx(x1, y1)) * k + idx(x2, y2)] =
              idx(a->mul(Elt(x1), Elt(x2)), b->mul(Elt(y1), Elt(y2)));
        }
      }
    }
  }
  return FiniteGroup::from_table(a->name() + "x" + b->name(), std::move(names),
                                 std::move(table));
}

namespace {

// Greedy small generating set: scan elements in index order and keep those
// not yet reachable as left-associated products of the kept ones.  At most
// log2 |G| elements.
std::vector<Elt> small_generating_set(const FiniteGroup& g) {
  const int k = g.order();
  std::vector<Elt> gens;
  std::vector<bool> reached(k, false);
  std::vector<Elt> closure{g.identity()};
  reached[g.identity()] = true;
  for (int x = 0; x < k; ++x) {
    if (reached[x]) continue;
    gens.push_back(Elt(x));
    reached[x] = true;
    closure.push_back(Elt(x));
    for (std::size_t head = 0; head < closure.size(); ++head) {
      for (Elt s : gens) {
        Elt y = g.mul(closure[head], s);
        if (!reached[y]) {
          reached[y] = true;
          closure.push_back(y);
        }
      }
    }
  }
  return gens;
}

// Exact normality test.  Small instances run the full conjugation scan;
// larger ones conjugate all members by a generating set of G only (the
// conjugation maps are automorphisms, so that decides normality).
bool check_normal(const FiniteGroup& g, const std::vector<bool>& mask,
                  const std::vector<Elt>& members) {
  const int k = g.order();
  if ((long long)k * (long long)members.size() <= 300'000LL) {
    for (int x = 0; x < k; ++x) {
      Elt xi = g.inv(Elt(x));
      for (Elt m : members) {
        if (!mask[g.mul(g.mul(Elt(x), m), xi)]) return false;
      }
    }
    return true;
  }
  for (Elt x : small_generating_set(g)) {
    Elt xi = g.inv(x);
    for (Elt h : members) {
      if (!mask[g.mul(g.mul(x, h), xi)]) return false;
    }
  }
  return true;
}

// Incremental closure: members/mask already form a subgroup; fold in each
// new generator by BFS over right-multiplication with the accumulated
// generator list.  `gens_used` collects an irredundant generating set.
void close_with_generator(const FiniteGroup& g, std::vector<bool>& mask,
                          std::vector<Elt>& members, std::vector<Elt>& gens_used,
                          Elt x) {
  if (mask[x]) return;
  gens_used.push_back(x);
  std::vector<Elt> frontier = members;  // every old member spawns new cosets
  frontier.push_back(x);
  if (!mask[x]) {
    mask[x] = true;
    members.push_back(x);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Elt cur = frontier[head];
    for (Elt s : gens_used) {
      Elt y = g.mul(cur, s);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
        frontier.push_back(y);
      }
      Elt z = g.mul(s, cur);
      if (!mask[z]) {
        mask[z] = true;
        members.push_back(z);
        frontier.push_back(z);
      }
    }
  }
}

}  // namespace

SubgroupSet::SubgroupSet(GroupPtr parent, std::vector<Elt> sorted_members)
    : parent_(std::move(parent)), members_(std::move(sorted_members)) {
  const FiniteGroup& g = *parent_;
  mask_.assign(g.order(), false);
  for (Elt m : members_) mask_[m] = true;
  if (members_.empty() || !mask_[g.identity()]) {
    fail(ErrorCode::Internal, "subgroup without identity");
  }
  if (g.order() % int(members_.size()) != 0) {
    fail(ErrorCode::Internal, "subgroup size violates Lagrange");
  }
  is_normal_ = check_normal(g, mask_, members_);
}

bool SubgroupSet::is_whole_group() const {
  return int(members_.size()) == parent_->order();
}

bool SubgroupSet::contains_subgroup(const SubgroupSet& other) const {
  for (Elt m : other.members()) {
    if (!mask_[m]) return false;
  }
  return true;
}

std::string SubgroupSet::describe_members() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out.push_back(' ');
    out += parent_->element_name(members_[i]);
  }
  return out;
}

SubgroupSet subgroup_generated(const GroupPtr& g, const std::vector<Elt>& gens) {
  const FiniteGroup& grp = *g;
  for (Elt x : gens) {
    if (x >= grp.order()) {
      fail(ErrorCode::BadReference, "generator index out of range");
    }
  }
  std::vector<bool> mask(grp.order(), false);
  std::vector<Elt> members{grp.identity()};
  mask[grp.identity()] = true;
  std::vector<Elt> used;
  for (Elt x : gens) close_with_generator(grp, mask, members, used, x);
  std::sort(members.begin(), members.end());
  return SubgroupSet(g, std::move(members));
}

SubgroupSet normal_closure(const GroupPtr& g, const std::vector<Elt>& gens) {
  const FiniteGroup& grp = *g;
  const int k = grp.order();
  std::vector<bool> mask(k, false);
  std::vector<Elt> members{grp.identity()};
  mask[grp.identity()] = true;
  std::vector<Elt> used;
  for (Elt x : gens) {
    if (x >= k) fail(ErrorCode::BadReference, "generator index out of range");
    close_with_generator(grp, mask, members, used, x);
  }
  // Repair loop: H is normal iff conjugating its generators by a generating
  // set of G stays inside; any escaping conjugate is folded in and the check
  // restarts.  Every added element is a conjugate of something already in
  // the closure, so the fixed point is exactly the normal closure.
  const std::vector<Elt> parent_gens = small_generating_set(grp);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt p : parent_gens) {
      Elt pi = grp.inv(p);
      for (std::size_t i = 0; i < used.size(); ++i) {
        Elt conj = grp.mul(grp.mul(p, used[i]), pi);
        if (!mask[conj]) {
          close_with_generator(grp, mask, members, used, conj);
          changed = true;
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubgroupSet(g, std::move(members));
}

SubgroupSet power_subgroup(const GroupPtr& g, long long n) {
  const FiniteGroup& grp = *g;
  std::vector<bool> seen(grp.order(), false);
  std::vector<Elt> gens;
  for (int x = 0; x < grp.order(); ++x) {
    Elt p = grp.pow(Elt(x), n);
    if (!seen[p]) {
      seen[p] = true;
      gens.push_back(p);
    }
  }
  SubgroupSet s = subgroup_generated(g, gens);
  if (!s.is_normal()) {
    // The generating set {x^n} is closed under conjugation, so its closure
    // must be normal; reaching this line means the table logic is broken.
    fail(ErrorCode::Internal, "power subgroup not normal");
  }
  return s;
}

std::vector<SubgroupSet> enumerate_normal_subgroups(const GroupPtr& g,
                                                    int max_order) {
  const FiniteGroup& grp = *g;
  const int k = grp.order();
  if (k > max_order) {
    fail(ErrorCode::BoundExceeded,
         "group order " + std::to_string(k) +
             " exceeds enumeration bound " + std::to_string(max_order));
  }

  // Conjugacy classes.
  std::vector<int> class_of(k, -1);
  std::vector<Elt> class_reps;
  for (int x = 0; x < k; ++x) {
    if (class_of[x] >= 0) continue;
    int id = int(class_reps.size());
    class_reps.push_back(Elt(x));
    for (int c = 0; c < k; ++c) {
      Elt y = grp.mul(grp.mul(Elt(c), Elt(x)), grp.inv(Elt(c)));
      class_of[y] = id;
    }
  }

  // Atoms: normal closure of each class representative.  Every normal
  // subgroup is a join of the atoms of the classes it contains.
  std::set<std::vector<Elt>> lattice;
  std::vector<std::vector<Elt>> worklist;
  lattice.insert({grp.identity()});
  worklist.push_back({grp.identity()});
  for (Elt rep : class_reps) {
    std::vector<Elt> m = normal_closure(g, {rep}).members();
    if (lattice.insert(m).second) worklist.push_back(std::move(m));
  }

  // Close under pairwise joins.  For normal A, B the join is the product
  // set AB; we shortcut when one side contains the other.
  std::vector<bool> mask(k);
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::vector<Elt>& a = worklist[i];
      const std::vector<Elt>& b = worklist[j];
      std::fill(mask.begin(), mask.end(), false);
      for (Elt x : a) mask[x] = true;
      bool b_in_a = true;
      for (Elt x : b) b_in_a = b_in_a && mask[x];
      if (b_in_a) continue;
      for (Elt x : a) {
        for (Elt y : b) mask[grp.mul(x, y)] = true;
      }
      std::vector<Elt> join;
      for (int x = 0; x < k; ++x) {
        if (mask[x]) join.push_back(Elt(x));
      }
      if (lattice.insert(join).second) worklist.push_back(std::move(join));
    }
  }

  std::vector<SubgroupSet> out;
  for (const auto& m : lattice) out.emplace_back(g, m);
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  for (const auto& s : out) {
    if (!s.is_normal()) fail(ErrorCode::Internal, "enumerated subgroup not normal");
  }
  return out;
}

QuotientResult quotient(const GroupPtr& g, const SubgroupSet& n) {
  const FiniteGroup& grp = *g;
  if (n.parent().get() != g.get()) {
    fail(ErrorCode::FamilyMismatch, "subgroup belongs to a different group");
  }
  if (!n.is_normal()) {
    fail(ErrorCode::NotNormal, "cannot form quotient by a non-normal subgroup");
  }
  const int k = grp.order();
  std::vector<int> coset_of(k, -1);
  std::vector<Elt> reps;
  // Scanning elements in index order makes every coset representative the
  // least element of its coset, and orders cosets by that representative.
  for (int x = 0; x < k; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(Elt(x));
    for (Elt m : n.members()) {
      coset_of[grp.mul(Elt(x), m)] = id;
    }
  }
  const int q = int(reps.size());
  std::vector<std::string> names(q);
  for (int c = 0; c < q; ++c) names[c] = "[" + grp.element_name(reps[c]) + "]";
  std::vector<Elt> table(std::size_t(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      table[std::size_t(a) * q + b] = Elt(coset_of[grp.mul(reps[a], reps[b])]);
    }
  }
  GroupPtr quot = FiniteGroup::from_table(
      grp.name() + "/N" + std::to_string(n.order()), std::move(names),
      std::move(table));
  std::vector<Elt> projection(k);
  for (int x = 0; x < k; ++x) projection[x] = Elt(coset_of[x]);
  // The projection must be a homomorphism everywhere; check all pairs.
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (projection[grp.mul(Elt(x), Elt(y))] !=
          quot->mul(projection[x], projection[y])) {
        fail(ErrorCode::Internal, "quotient projection is not a homomorphism");
      }
    }
  }
  return QuotientResult{std::move(quot), std::move(projection)};
}

}  // namespace ppl
