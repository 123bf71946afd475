#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "ppl/errors.hpp"
#include "ppl/period.hpp"

// Suffix-array implementation of the nine-power search: longest common
// extensions answer, for each candidate period p and each anchor position
// that is a multiple of p, how far the p-shifted match stretches forward
// and backward.  Any p-periodic range of length >= 9p >= 2p straddles an
// anchor, so per-p minima over anchors recover exactly the maximal
// stretches the quadratic scan walks, and both engines report the same
// least (p, start).

namespace ppl {
namespace {

/// Suffix array (doubling, O(n log^2 n)), LCP (Kasai), and sparse-table
/// RMQ, giving O(1) longest-common-extension queries.
class LceIndex {
 public:
  explicit LceIndex(const std::vector<int>& s) : n_(int(s.size())) {
    build_suffix_array(s);
    build_lcp(s);
    build_rmq();
  }

  /// Length of the longest common prefix of the suffixes at i and j.
  int lce(int i, int j) const {
    if (i == j) return n_ - i;
    int a = rank_[std::size_t(i)];
    int b = rank_[std::size_t(j)];
    if (a > b) std::swap(a, b);
    return range_min(a + 1, b);
  }

 private:
  void build_suffix_array(const std::vector<int>& s) {
    sa_.resize(std::size_t(n_));
    rank_.resize(std::size_t(n_));
    std::iota(sa_.begin(), sa_.end(), 0);
    std::vector<int> key(s.begin(), s.end());
    std::vector<int> next(static_cast<std::size_t>(n_));
    for (int k = 1;; k <<= 1) {
      auto cmp = [&](int a, int b) {
        if (key[std::size_t(a)] != key[std::size_t(b)]) {
          return key[std::size_t(a)] < key[std::size_t(b)];
        }
        const int ra = a + k < n_ ? key[std::size_t(a + k)] : -1;
        const int rb = b + k < n_ ? key[std::size_t(b + k)] : -1;
        return ra < rb;
      };
      std::sort(sa_.begin(), sa_.end(), cmp);
      next[std::size_t(sa_[0])] = 0;
      for (int i = 1; i < n_; ++i) {
        next[std::size_t(sa_[std::size_t(i)])] =
            next[std::size_t(sa_[std::size_t(i - 1)])] +
            (cmp(sa_[std::size_t(i - 1)], sa_[std::size_t(i)]) ? 1 : 0);
      }
      key = next;
      if (key[std::size_t(sa_[std::size_t(n_ - 1)])] == n_ - 1) break;
    }
    for (int i = 0; i < n_; ++i) rank_[std::size_t(sa_[std::size_t(i)])] = i;
  }

  void build_lcp(const std::vector<int>& s) {
    lcp_.assign(std::size_t(n_), 0);
    int h = 0;
    for (int i = 0; i < n_; ++i) {
      if (rank_[std::size_t(i)] == 0) {
        h = 0;
        continue;
      }
      const int j = sa_[std::size_t(rank_[std::size_t(i)] - 1)];
      while (i + h < n_ && j + h < n_ &&
             s[std::size_t(i + h)] == s[std::size_t(j + h)]) {
        ++h;
      }
      lcp_[std::size_t(rank_[std::size_t(i)])] = h;
      if (h > 0) --h;
    }
  }

  void build_rmq() {
    log_.assign(std::size_t(n_) + 1, 0);
    for (int i = 2; i <= n_; ++i) log_[std::size_t(i)] = log_[std::size_t(i / 2)] + 1;
    const int levels = log_[std::size_t(n_)] + 1;
    table_.assign(std::size_t(levels), lcp_);
    for (int lvl = 1; lvl < levels; ++lvl) {
      const int half = 1 << (lvl - 1);
      for (int i = 0; i + (1 << lvl) <= n_; ++i) {
        table_[std::size_t(lvl)][std::size_t(i)] =
            std::min(table_[std::size_t(lvl - 1)][std::size_t(i)],
                     table_[std::size_t(lvl - 1)][std::size_t(i + half)]);
      }
    }
  }

  /// min of lcp_[lo..hi] inclusive; lo <= hi.
  int range_min(int lo, int hi) const {
    const int lvl = log_[std::size_t(hi - lo + 1)];
    return std::min(table_[std::size_t(lvl)][std::size_t(lo)],
                    table_[std::size_t(lvl)][std::size_t(hi - (1 << lvl) + 1)]);
  }

  int n_;
  std::vector<int> sa_, rank_, lcp_, log_;
  std::vector<std::vector<int>> table_;
};

}  // namespace

namespace detail {

std::optional<NinePower> nine_power_runs(const std::vector<Syllable>& seq,
                                         int max_period, int start_bound,
                                         std::optional<int> run_cap) {
  const int n = int(seq.size());
  if (n < 2 || max_period < 1) return std::nullopt;

  std::vector<int> codes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    codes[std::size_t(i)] = seq[std::size_t(i)].factor * 0x10000 +
                            int(seq[std::size_t(i)].element);
  }
  std::vector<int> reversed(codes.rbegin(), codes.rend());
  const LceIndex forward(codes);
  const LceIndex backward(reversed);
  // Longest common suffix of the prefixes ending at i and j (inclusive).
  auto lcs = [&](int i, int j) {
    if (i < 0 || j < 0) return 0;
    return backward.lce(n - 1 - i, n - 1 - j);
  };

  for (int p = 1; p <= max_period; ++p) {
    int best_start = std::numeric_limits<int>::max();
    int best_run = 0;
    for (int i = p; i < n; i += p) {
      const int f = forward.lce(i - p, i);
      const int b = lcs(i - p - 1, i - 1);
      if (f + b < 8 * p) continue;
      const int start = i - p - b;
      if (start < start_bound && start < best_start) {
        best_start = start;
        best_run = f + b + p;
      }
    }
    if (best_start != std::numeric_limits<int>::max()) {
      if (p == 1) {
        fail(ErrorCode::Internal,
             "period-1 repetition in an alternating sequence");
      }
      if (run_cap) best_run = std::min(best_run, *run_cap);
      return NinePower{p, best_start, best_run};
    }
  }
  return std::nullopt;
}

}  // namespace detail
}  // namespace ppl
