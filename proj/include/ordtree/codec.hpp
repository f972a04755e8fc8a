#pragma once

// Child-count encoding of ordered trees.
//
// A tree with n nodes is the n-tuple (t1, ..., tn) where ti is the number of
// children of the i-th node in preorder. A tuple encodes a tree iff
//   tn = 0,  t1 + ... + tn = n - 1,  and  t1 + ... + ti >= i  for i < n.
// The last condition says that at least one child slot is still open after
// each proper prefix.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordtree {

using Digit = std::int32_t;

#ifndef ORDTREE_MAX_NODES
#define ORDTREE_MAX_NODES 64
#endif

/// Largest node count any operation accepts.
inline constexpr std::size_t kMaxNodes = ORDTREE_MAX_NODES;

/// Throws UsageError unless 1 <= n <= kMaxNodes.
void check_node_count(std::size_t n);

/// Child counts in preorder. Construction does not validate; see validate().
struct ChildCountSeq {
  std::vector<Digit> counts;

  ChildCountSeq() = default;
  explicit ChildCountSeq(std::vector<Digit> c) : counts(std::move(c)) {}
  ChildCountSeq(std::initializer_list<Digit> c) : counts(c) {}

  std::size_t size() const noexcept { return counts.size(); }
  std::span<const Digit> digits() const noexcept { return counts; }

  friend bool operator==(const ChildCountSeq&, const ChildCountSeq&) = default;
  friend auto operator<=>(const ChildCountSeq&, const ChildCountSeq&) = default;
};

/// Admissible digit range [lower, upper] for one position.
struct Bounds {
  Digit lower = 0;
  Digit upper = 0;

  bool contains(Digit d) const noexcept { return lower <= d && d <= upper; }
  Digit width() const noexcept { return upper - lower + 1; }

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Returns a short reason when `counts` is not a valid encoding, nullopt otherwise.
std::optional<std::string> explain_invalid(std::span<const Digit> counts);

bool validate(const ChildCountSeq& seq);

/// Throws UsageError when counts.size() != n.
bool validate(std::size_t n, std::span<const Digit> counts);

/// Throws InvalidSequence carrying the reason from explain_invalid().
void require_valid(std::span<const Digit> counts);

/// Bounds for position prefix.size() + 1 of an n-node tree, in closed form:
///   upper = n - 1 - (t1 + ... + t_{i-1})
///   lower = 1 - sgn(sum_{j=0}^{i-1} (tj - 1)),  t0 = 1
/// and (0, 0) at position n. Every digit in the returned range extends to at
/// least one valid tree. Throws InvalidPrefix if some prefix digit lies outside
/// its own bounds, UsageError if prefix.size() >= n.
Bounds bounds(std::size_t n, std::span<const Digit> prefix);

/// The same bounds computed incrementally, one digit at a time:
///   L_i = 1 - sgn(t_{i-1} + S_{i-1} - 1),  U_i = U_{i-1} - t_{i-1}
/// with S_0 = 0, U_0 = n, t_0 = 1, where S carries the running excess
/// sum_{j<i-1} (tj - 1). Used by the per-digit sampler.
class BoundsRecurrence {
 public:
  explicit BoundsRecurrence(std::size_t n);

  /// Bounds for the next digit. Only meaningful while position() < n.
  Bounds current() const;

  /// Appends a digit. Throws InvalidPrefix if it lies outside current().
  void push(Digit t);

  /// Number of digits consumed so far.
  std::size_t position() const noexcept { return position_; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::size_t position_ = 0;
  Digit previous_ = 1;        // t_{i-1}
  std::int64_t excess_ = 0;   // S_{i-1}
  std::int64_t upper_ = 0;    // U_{i-1}
};

/// Canonical form: all n digits separated by single spaces.
std::string format_seq(std::span<const Digit> counts);

/// Short form: the trailing 0 is omitted.
std::string format_seq_short(std::span<const Digit> counts);

/// Parses the canonical form. With `n` given, a line of n - 1 digits is read
/// as the short form and the trailing 0 restored; any other length is a
/// ParseError. Does not validate.
ChildCountSeq parse_seq(std::string_view line, std::optional<std::size_t> n = std::nullopt);

}  // namespace ordtree
