#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordtree {

using BigInt = boost::multiprecision::cpp_int;

/// Number of ordered trees with n nodes: (1/n) * C(2(n-1), n-1).
/// Throws UsageError for n = 0.
BigInt catalan_count(std::size_t n);

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

/// N(m, o): the number of ways to finish a partial encoding that has m nodes
/// left to place and o open child slots. Built from
///   N(0, 0) = 1,  N(m, 0) = 0 (m > 0),  N(0, o) = 0 (o > 0),
///   N(m, o) = sum_t N(m - 1, o - 1 + t)  over 0 <= o - 1 + t <= m - 1.
/// N(n, 1) is the number of n-node trees.
class CompletionsTable {
 public:
  explicit CompletionsTable(std::size_t max_nodes);

  std::size_t max_nodes() const noexcept { return max_nodes_; }

  /// Zero for o > m. Requires m <= max_nodes().
  const BigInt& at(std::size_t m, std::size_t o) const;

 private:
  std::size_t max_nodes_;
  std::vector<BigInt> cells_;  // (max_nodes + 1)^2, row m, column o
};

/// Process-wide table covering m <= kMaxNodes, built once on first use.
/// Safe to call from multiple threads.
const CompletionsTable& shared_completions();

/// N(m, o). Uses the shared table when m <= kMaxNodes, otherwise builds a
/// temporary one.
BigInt completions(std::size_t m, std::size_t o);

}  // namespace ordtree
