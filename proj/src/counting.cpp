#include "ordtree/counting.hpp"

#include <cassert>
#include <stdexcept>

#include "ordtree/codec.hpp"
#include "ordtree/error.hpp"

namespace ordtree {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result * (n - i) is divisible by (i + 1) at every step.
  for (std::size_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt catalan_count(std::size_t n) {
  if (n == 0) throw UsageError("node count must be at least 1");
  const BigInt central = binomial(2 * (n - 1), n - 1);
  assert(central % n == 0);
  return central / n;
}

CompletionsTable::CompletionsTable(std::size_t max_nodes)
    : max_nodes_(max_nodes), cells_((max_nodes + 1) * (max_nodes + 1)) {
  const std::size_t width = max_nodes_ + 1;
  cells_[0] = 1;
  for (std::size_t m = 1; m <= max_nodes_; ++m) {
    // N(m, 0) stays zero: nodes remain but no slot can hold them.
    for (std::size_t o = 1; o <= m; ++o) {
      BigInt sum = 0;
      // Next state o' = o - 1 + t ranges over [0, m - 1].
      for (std::size_t next = 0; next + 1 <= m; ++next) {
        if (next + 1 < o) continue;  // t = next + 1 - o would be negative
        sum += cells_[(m - 1) * width + next];
      }
      cells_[m * width + o] = std::move(sum);
    }
  }
}

const BigInt& CompletionsTable::at(std::size_t m, std::size_t o) const {
  if (m > max_nodes_) throw std::out_of_range("completions table too small");
  static const BigInt zero = 0;
  if (o > m) return zero;
  return cells_[m * (max_nodes_ + 1) + o];
}

const CompletionsTable& shared_completions() {
  static const CompletionsTable table(kMaxNodes);
  return table;
}

BigInt completions(std::size_t m, std::size_t o) {
  if (m <= kMaxNodes) return shared_completions().at(m, o);
  return CompletionsTable(m).at(m, o);
}

}  // namespace ordtree
