#pragma once

// Exhaustive and random generation of ordered trees in the child-count
// encoding.
//
// Valid encodings are the root-to-leaf paths of a prefix tree (the
// genealogy) whose level i holds the digits admissible at position i.
// Walking its leaves left to right gives the ascending order, which is also
// the lexicographic order of the tuples. Moving from one leaf to the next
// rewrites only the suffix below the deepest common ancestor, and the
// total rewrite length over a full sweep is proportional to the number of
// trees.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ordtree/codec.hpp"
#include "ordtree/counting.hpp"

namespace ordtree {

enum class Order { ascending, descending };

/// Accepts "asc"/"ascending" and "desc"/"descending"; throws UsageError otherwise.
Order parse_order(std::string_view name);
std::string_view to_string(Order order);

/// Difference between consecutive trees: keep the first `common_prefix_len`
/// digits of the previous tree, then write `suffix`, then the implicit final 0.
struct TreeDelta {
  std::size_t common_prefix_len = 0;
  std::vector<Digit> suffix;

  friend bool operator==(const TreeDelta&, const TreeDelta&) = default;
};

/// Applies `delta` to `digits` in place. `digits` must already hold n entries.
void apply_delta(std::span<Digit> digits, const TreeDelta& delta);

/// Cursor over the trees of one size in a fixed order. Owns Theta(n) state:
/// the current digits and their prefix sums.
class GenealogyCursor {
 public:
  /// Positioned on the first tree in `order`.
  explicit GenealogyCursor(std::size_t n, Order order = Order::ascending);

  /// Positioned on `start`, which must be valid. Enumeration resumes from there.
  GenealogyCursor(const ChildCountSeq& start, Order order);

  std::size_t size() const noexcept { return n_; }
  Order order() const noexcept { return order_; }

  std::span<const Digit> digits() const noexcept { return digits_; }
  ChildCountSeq tree() const { return ChildCountSeq(digits_); }

  /// Moves to the next tree. Returns false, leaving the cursor unchanged,
  /// when the current tree is the last one.
  bool next();

  /// Digits shared with the previous tree (0 for the starting tree).
  std::size_t common_prefix() const noexcept { return prefix_; }

  /// Digits common_prefix() .. n-2, i.e. the rewritten part without the final 0.
  std::span<const Digit> changed_suffix() const noexcept {
    return std::span<const Digit>(digits_).subspan(prefix_, n_ - 1 - prefix_);
  }

  TreeDelta delta() const;

  /// Digits written since construction, including the initial fill.
  std::uint64_t digit_writes() const noexcept { return writes_; }

  /// Bounds of 0-based position k given the digits before it.
  Bounds bounds_at(std::size_t k) const noexcept;

 private:
  void fill_from(std::size_t k);

  std::size_t n_;
  Order order_;
  std::vector<Digit> digits_;
  std::vector<Digit> sums_;  // sums_[k] = digits_[0] + ... + digits_[k-1]
  std::size_t prefix_ = 0;
  std::uint64_t writes_ = 0;
};

/// First tree: (1, ..., 1, 0) ascending, (n-1, 0, ..., 0) descending.
ChildCountSeq first(std::size_t n, Order order = Order::ascending);

/// The following tree in `order`, or nullopt after the last one.
/// Throws InvalidSequence if `seq` is not valid.
std::optional<ChildCountSeq> successor(const ChildCountSeq& seq, Order order = Order::ascending);

/// Calls visit(std::span<const Digit>) for every n-node tree in order. If the
/// visitor returns bool, returning false stops the sweep.
template <typename Visitor>
void for_each_tree(std::size_t n, Order order, Visitor&& visit) {
  GenealogyCursor cursor(n, order);
  do {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::span<const Digit>>, bool>) {
      if (!visit(cursor.digits())) return;
    } else {
      visit(cursor.digits());
    }
  } while (cursor.next());
}

/// Calls visit(std::size_t common_prefix, std::span<const Digit> suffix) for
/// every tree in order. Same early-exit rule as for_each_tree.
template <typename Visitor>
void for_each_delta(std::size_t n, Order order, Visitor&& visit) {
  GenealogyCursor cursor(n, order);
  do {
    using R = std::invoke_result_t<Visitor&, std::size_t, std::span<const Digit>>;
    if constexpr (std::is_same_v<R, bool>) {
      if (!visit(cursor.common_prefix(), cursor.changed_suffix())) return;
    } else {
      visit(cursor.common_prefix(), cursor.changed_suffix());
    }
  } while (cursor.next());
}

/// Materialized sweeps; intended for small n.
std::vector<ChildCountSeq> iterate_all(std::size_t n, Order order = Order::ascending);
std::vector<TreeDelta> iterate_deltas(std::size_t n, Order order = Order::ascending);

// Sampling. The engine is fixed so that a seed reproduces the same trees on
// every platform; bounded draws use rejection on raw engine output rather
// than std::uniform_int_distribution, whose algorithm is unspecified.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
BigInt uniform_below(Rng& rng, const BigInt& bound);

/// Draws each digit independently and uniformly from its bounds. Always
/// valid, but the distribution over trees is not uniform.
ChildCountSeq sample_bounded(std::size_t n, Rng& rng);
ChildCountSeq sample_bounded(std::size_t n, std::uint64_t seed);

/// Uniform over all n-node trees: unrank of a uniform random rank.
ChildCountSeq sample_uniform(std::size_t n, Rng& rng);
ChildCountSeq sample_uniform(std::size_t n, std::uint64_t seed);

/// Zero-based position of `seq` in the sweep of `order`.
BigInt rank(const ChildCountSeq& seq, Order order = Order::ascending);

/// Inverse of rank(). Throws RankOutOfRange unless 0 <= r < catalan_count(n).
ChildCountSeq unrank(std::size_t n, const BigInt& r, Order order = Order::ascending);

}  // namespace ordtree
