#include "ordtree/codec.hpp"

#include <limits>

#include "ordtree/error.hpp"
#include "ordtree/text.hpp"

namespace ordtree {

namespace {

int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

}  // namespace

void check_node_count(std::size_t n) {
  if (n == 0) throw UsageError("node count must be at least 1");
  if (n > kMaxNodes) {
    throw UsageError("node count " + std::to_string(n) + " exceeds the limit of " +
                     std::to_string(kMaxNodes));
  }
}

std::optional<std::string> explain_invalid(std::span<const Digit> counts) {
  const std::size_t n = counts.size();
  if (n == 0) return "empty sequence";
  if (n > kMaxNodes) return "more than " + std::to_string(kMaxNodes) + " nodes";

  const auto max_digit = static_cast<std::int64_t>(n) - 1;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] < 0 || counts[i] > max_digit) {
      return "digit " + std::to_string(i + 1) + " out of range [0, " + std::to_string(max_digit) +
             "]";
    }
    sum += counts[i];
    // Proper prefixes must leave at least one open child slot.
    if (i + 1 < n && sum < static_cast<std::int64_t>(i + 1)) {
      return "no open slot after node " + std::to_string(i + 1);
    }
  }
  if (counts[n - 1] != 0) return "last digit must be 0";
  if (sum != max_digit) {
    return "digit sum " + std::to_string(sum) + " != " + std::to_string(max_digit);
  }
  return std::nullopt;
}

bool validate(const ChildCountSeq& seq) { return !explain_invalid(seq.counts).has_value(); }

bool validate(std::size_t n, std::span<const Digit> counts) {
  if (counts.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " digits, got " +
                     std::to_string(counts.size()));
  }
  return !explain_invalid(counts).has_value();
}

void require_valid(std::span<const Digit> counts) {
  if (auto reason = explain_invalid(counts)) throw InvalidSequence("invalid tree: " + *reason);
}

Bounds bounds(std::size_t n, std::span<const Digit> prefix) {
  check_node_count(n);
  if (prefix.size() >= n) {
    throw UsageError("prefix of length " + std::to_string(prefix.size()) +
                     " leaves no position in a " + std::to_string(n) + "-node tree");
  }

  std::int64_t sum = 0;
  std::int64_t excess = 0;  // t0 - 1 = 0
  auto at = [&](std::size_t len) -> Bounds {
    if (len == n - 1) return {0, 0};
    if (excess < 0) {
      throw InvalidPrefix("prefix closes the tree after node " + std::to_string(len));
    }
    return {static_cast<Digit>(1 - sgn(excess)),
            static_cast<Digit>(static_cast<std::int64_t>(n) - 1 - sum)};
  };

  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const Bounds b = at(i);
    if (!b.contains(prefix[i])) {
      throw InvalidPrefix("digit " + std::to_string(i + 1) + " = " + std::to_string(prefix[i]) +
                          " outside [" + std::to_string(b.lower) + ", " +
                          std::to_string(b.upper) + "]");
    }
    sum += prefix[i];
    excess += prefix[i] - 1;
  }
  return at(prefix.size());
}

BoundsRecurrence::BoundsRecurrence(std::size_t n) : n_(n), upper_(static_cast<std::int64_t>(n)) {
  check_node_count(n);
}

Bounds BoundsRecurrence::current() const {
  if (position_ + 1 >= n_) return {0, 0};
  const std::int64_t arg = previous_ + excess_ - 1;
  if (arg < 0) throw InvalidPrefix("prefix closes the tree early");
  return {static_cast<Digit>(1 - sgn(arg)), static_cast<Digit>(upper_ - previous_)};
}

void BoundsRecurrence::push(Digit t) {
  if (position_ >= n_) throw InvalidPrefix("tree already complete");
  const Bounds b = current();
  if (!b.contains(t)) {
    throw InvalidPrefix("digit " + std::to_string(position_ + 1) + " = " + std::to_string(t) +
                        " outside [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) +
                        "]");
  }
  excess_ = previous_ + excess_ - 1;
  upper_ -= previous_;
  previous_ = t;
  ++position_;
}

std::string format_seq(std::span<const Digit> counts) {
  std::string out;
  text::append_joined(out, counts);
  return out;
}

std::string format_seq_short(std::span<const Digit> counts) {
  return format_seq(counts.empty() ? counts : counts.first(counts.size() - 1));
}

ChildCountSeq parse_seq(std::string_view line, std::optional<std::size_t> n) {
  const auto values = text::parse_int_list(line);
  ChildCountSeq seq;
  seq.counts.reserve(values.size() + 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < std::numeric_limits<Digit>::min() ||
        values[i] > std::numeric_limits<Digit>::max()) {
      throw ParseError("token " + std::to_string(i) + " out of range", i);
    }
    seq.counts.push_back(static_cast<Digit>(values[i]));
  }
  if (n) {
    check_node_count(*n);
    if (seq.size() + 1 == *n) {
      seq.counts.push_back(0);
    } else if (seq.size() != *n) {
      throw ParseError("expected " + std::to_string(*n) + " digits (or " +
                           std::to_string(*n - 1) + " without the trailing 0), got " +
                           std::to_string(seq.size()),
                       seq.size());
    }
  }
  return seq;
}

}  // namespace ordtree
