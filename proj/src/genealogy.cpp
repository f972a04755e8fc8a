#include "ordtree/genealogy.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "ordtree/error.hpp"

namespace ordtree {

Order parse_order(std::string_view name) {
  if (name == "asc" || name == "ascending") return Order::ascending;
  if (name == "desc" || name == "descending") return Order::descending;
  throw UsageError("unknown order '" + std::string(name) + "' (expected asc or desc)");
}

std::string_view to_string(Order order) {
  return order == Order::ascending ? "asc" : "desc";
}

void apply_delta(std::span<Digit> digits, const TreeDelta& delta) {
  if (digits.empty() || delta.common_prefix_len + delta.suffix.size() != digits.size() - 1) {
    throw UsageError("delta does not fit a " + std::to_string(digits.size()) + "-node tree");
  }
  std::copy(delta.suffix.begin(), delta.suffix.end(), digits.begin() + delta.common_prefix_len);
  digits.back() = 0;
}

GenealogyCursor::GenealogyCursor(std::size_t n, Order order)
    : n_(n), order_(order), digits_((check_node_count(n), n), 0), sums_(n + 1, 0) {
  fill_from(0);
}

GenealogyCursor::GenealogyCursor(const ChildCountSeq& start, Order order)
    : n_(start.size()), order_(order), digits_(start.counts), sums_(start.size() + 1, 0) {
  require_valid(start.counts);
  for (std::size_t k = 0; k < n_; ++k) sums_[k + 1] = sums_[k] + digits_[k];
}

Bounds GenealogyCursor::bounds_at(std::size_t k) const noexcept {
  if (k + 1 >= n_) return {0, 0};
  const Digit lower = sums_[k] == static_cast<Digit>(k) ? 1 : 0;
  return {lower, static_cast<Digit>(n_ - 1) - sums_[k]};
}

void GenealogyCursor::fill_from(std::size_t k) {
  const bool ascending = order_ == Order::ascending;
  for (std::size_t j = k; j + 1 < n_; ++j) {
    const Bounds b = bounds_at(j);
    digits_[j] = ascending ? b.lower : b.upper;
    sums_[j + 1] = sums_[j] + digits_[j];
    ++writes_;
  }
}

bool GenealogyCursor::next() {
  if (n_ < 2) return false;
  // Backtrack to the deepest position whose digit can still move, step it,
  // and refill everything after it with the extreme admissible digits.
  for (std::size_t k = n_ - 1; k-- > 0;) {
    const Bounds b = bounds_at(k);
    if (order_ == Order::ascending) {
      if (digits_[k] >= b.upper) continue;
      ++digits_[k];
      ++sums_[k + 1];
    } else {
      if (digits_[k] <= b.lower) continue;
      --digits_[k];
      --sums_[k + 1];
    }
    ++writes_;
    fill_from(k + 1);
    prefix_ = k;
    return true;
  }
  return false;
}

TreeDelta GenealogyCursor::delta() const {
  auto suffix = changed_suffix();
  return {prefix_, std::vector<Digit>(suffix.begin(), suffix.end())};
}

ChildCountSeq first(std::size_t n, Order order) { return GenealogyCursor(n, order).tree(); }

std::optional<ChildCountSeq> successor(const ChildCountSeq& seq, Order order) {
  GenealogyCursor cursor(seq, order);
  if (!cursor.next()) return std::nullopt;
  return cursor.tree();
}

std::vector<ChildCountSeq> iterate_all(std::size_t n, Order order) {
  std::vector<ChildCountSeq> trees;
  for_each_tree(n, order, [&](std::span<const Digit> digits) {
    trees.emplace_back(std::vector<Digit>(digits.begin(), digits.end()));
  });
  return trees;
}

std::vector<TreeDelta> iterate_deltas(std::size_t n, Order order) {
  std::vector<TreeDelta> deltas;
  for_each_delta(n, order, [&](std::size_t prefix, std::span<const Digit> suffix) {
    deltas.push_back({prefix, std::vector<Digit>(suffix.begin(), suffix.end())});
  });
  return deltas;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw UsageError("empty sampling range");
  // 2^64 mod bound; values below it would bias the remainder.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

BigInt uniform_below(Rng& rng, const BigInt& bound) {
  if (bound <= 0) throw UsageError("empty sampling range");
  if (bound == 1) return 0;
  const std::size_t bits = boost::multiprecision::msb(BigInt(bound - 1)) + 1;
  const std::size_t words = (bits + 63) / 64;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      x |= rng();
    }
    x &= mask;
    if (x < bound) return x;
  }
}

ChildCountSeq sample_bounded(std::size_t n, Rng& rng) {
  BoundsRecurrence recurrence(n);
  ChildCountSeq seq;
  seq.counts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Bounds b = recurrence.current();
    const auto offset = uniform_below(rng, static_cast<std::uint64_t>(b.width()));
    const Digit d = b.lower + static_cast<Digit>(offset);
    recurrence.push(d);
    seq.counts.push_back(d);
  }
  return seq;
}

ChildCountSeq sample_bounded(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_bounded(n, rng);
}

ChildCountSeq sample_uniform(std::size_t n, Rng& rng) {
  check_node_count(n);
  return unrank(n, uniform_below(rng, catalan_count(n)), Order::ascending);
}

ChildCountSeq sample_uniform(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_uniform(n, rng);
}

namespace {

// Rank in ascending order. `open` counts unfilled child slots before each
// node; the lower bound is 1 exactly when a single slot is open and nodes
// remain after this one.
BigInt ascending_rank(std::span<const Digit> digits) {
  const auto& table = shared_completions();
  const std::size_t n = digits.size();
  BigInt r = 0;
  std::size_t open = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t remaining = n - i - 1;
    const Digit lower = (remaining > 0 && open == 1) ? 1 : 0;
    for (Digit d = lower; d < digits[i]; ++d) r += table.at(remaining, open - 1 + d);
    open = open - 1 + digits[i];
  }
  return r;
}

}  // namespace

BigInt rank(const ChildCountSeq& seq, Order order) {
  require_valid(seq.counts);
  BigInt r = ascending_rank(seq.counts);
  if (order == Order::descending) r = catalan_count(seq.size()) - 1 - r;
  return r;
}

ChildCountSeq unrank(std::size_t n, const BigInt& r, Order order) {
  check_node_count(n);
  const BigInt total = catalan_count(n);
  if (r < 0 || r >= total) {
    throw RankOutOfRange("rank " + r.str() + " outside [0, " + BigInt(total - 1).str() + "]");
  }
  BigInt left = r;
  if (order == Order::descending) left = total - 1 - r;

  const auto& table = shared_completions();
  ChildCountSeq seq;
  seq.counts.reserve(n);
  std::size_t open = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t remaining = n - i - 1;
    const Digit lower = (remaining > 0 && open == 1) ? 1 : 0;
    const auto upper = static_cast<Digit>(remaining + 1 - open);
    Digit chosen = upper;
    for (Digit d = lower; d < upper; ++d) {
      const BigInt& block = table.at(remaining, open - 1 + d);
      if (left < block) {
        chosen = d;
        break;
      }
      left -= block;
    }
    seq.counts.push_back(chosen);
    open = open - 1 + chosen;
  }
  assert(left < table.at(0, 0) && validate(seq));
  return seq;
}

}  // namespace ordtree
