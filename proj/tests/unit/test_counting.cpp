#include "doctest.h"
#include "oracle.hpp"
#include "ordtree/counting.hpp"
#include "ordtree/error.hpp"

using namespace ordtree;

TEST_CASE("catalan_count: known values") {
  CHECK(catalan_count(1) == 1);
  CHECK(catalan_count(4) == 5);
  CHECK(catalan_count(6) == 42);
  CHECK(catalan_count(15) == 2674440);
  CHECK_THROWS_AS(catalan_count(0), UsageError);
}

TEST_CASE("catalan_count matches the convolution recurrence up to the node cap") {
  for (std::size_t n = 1; n <= kMaxNodes; ++n) {
    CHECK(catalan_count(n) == oracle::trees_by_convolution(n));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(126, 63).str() == "6034934435761406706427864636568328000");
}

TEST_CASE("completions: boundary values") {
  CHECK(completions(0, 0) == 1);
  CHECK(completions(3, 0) == 0);
  CHECK(completions(0, 2) == 0);
  CHECK(completions(4, 1) == 5);
  CHECK(completions(3, 1) == 2);
  CHECK(completions(3, 5) == 0);
}

TEST_CASE("completions(n, 1) counts all n-node trees") {
  for (std::size_t n = 1; n <= 20; ++n) CHECK(completions(n, 1) == catalan_count(n));
  CHECK(completions(kMaxNodes, 1) == catalan_count(kMaxNodes));
}

TEST_CASE("completions agree with brute-force search for m <= 8") {
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t o = 0; o <= m + 1; ++o) {
      INFO("m=" << m << " o=" << o);
      CHECK(completions(m, o) == oracle::brute_completions(m, o));
    }
  }
}

TEST_CASE("completions beyond the shared table") {
  CHECK(completions(kMaxNodes + 2, 1) == oracle::trees_by_convolution(kMaxNodes + 2));
}

TEST_CASE("CompletionsTable bounds") {
  CompletionsTable table(5);
  CHECK(table.at(5, 1) == 14);
  CHECK(table.at(2, 4) == 0);
  CHECK_THROWS(table.at(6, 1));
}
