// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// Usage: acceptance <path-to-ordtree-cli>

#include <fcntl.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ordtree/bench.hpp"
#include "ordtree/bijections.hpp"
#include "ordtree/cli.hpp"
#include "ordtree/codec.hpp"
#include "ordtree/counting.hpp"
#include "ordtree/genealogy.hpp"

using namespace ordtree;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string cli_path;

Outcome counting() {
  const std::vector<int> expected{1, 1, 2, 5, 14, 42};
  std::ostringstream got;
  bool ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    got << catalan_count(n) << (n < 6 ? "," : "");
    ok = ok && catalan_count(n) == expected[n - 1];
  }
  return {ok, "T1..T6 = " + got.str()};
}

Outcome exhaustiveness() {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto expected = oracle::brute_force(n, [n](const oracle::Tuple& t) { return validate(n, t); });
    std::set<oracle::Tuple> produced;
    std::size_t emitted = 0;
    for_each_tree(n, Order::ascending, [&](std::span<const Digit> d) {
      produced.emplace(d.begin(), d.end());
      ++emitted;
    });
    if (emitted != produced.size()) return {false, "duplicates at n=" + std::to_string(n)};
    if (produced != expected) return {false, "set mismatch at n=" + std::to_string(n)};
  }
  return {true, "n=1..8 set-equal to brute force, no duplicates"};
}

Outcome worked_example() {
  const auto trees = iterate_all(4);
  const bool trees_ok = trees.size() >= 3 && trees[0] == ChildCountSeq{1, 1, 1, 0} &&
                        trees[1] == ChildCountSeq{1, 2, 0, 0} && trees[2] == ChildCountSeq{2, 0, 1, 0};
  std::istringstream in;
  std::ostringstream out, err;
  cli::run({"gen", "--n", "4", "--format", "delta", "--limit", "3"}, in, out, err);
  const bool lines_ok = out.str() == "1 1 1\n2 0\n2 0 1\n";
  return {trees_ok && lines_ok, "delta lines: " + std::string(lines_ok ? "\"1 1 1\" / \"2 0\" / \"2 0 1\"" : out.str())};
}

Outcome sweep_totals() {
  const auto records = bench::run_sweep({.max_n = 15, .runs = 10});
  std::map<std::size_t, std::uint64_t> per_run;
  for (const auto& r : records) per_run[r.run_id] += r.trees;
  bool ok = records.size() == 150 && per_run.size() == 10;
  std::uint64_t protocol_total = 0;
  for (const auto& [run, trees] : per_run) {
    ok = ok && trees == 3707852;
    protocol_total += trees;
  }
  const std::uint64_t four_machines = 4 * protocol_total;
  ok = ok && four_machines == 148314080;
  return {ok, "one sweep = " + std::to_string(per_run.begin()->second) +
                  ", 10 runs x 4 = " + std::to_string(four_machines)};
}

Outcome cat_property() {
  const auto records = bench::run_sweep({.max_n = 15, .runs = 10});
  const double ratio = bench::mean_ratio(records, 15, 10);
  std::uint64_t slowest_n15 = 0;
  double mean_n15 = 0.0;
  for (const auto& r : records) {
    if (r.n != 15) continue;
    slowest_n15 = std::max(slowest_n15, r.total_ns);
    mean_n15 += r.avg_ns_per_tree / 10.0;
  }
  const bool ok = ratio <= 2.0 && ratio >= 0.5 && slowest_n15 < 60'000'000'000ULL;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "mean ns/tree n15/n10 = %.3f, slowest n=15 sweep = %.3f s, n=15 mean %.1f ns/tree "
                "(reference figure 1e5 ns, not asserted)",
                ratio, static_cast<double>(slowest_n15) * 1e-9, mean_n15);
  return {ok, buf};
}

Outcome bijection_suite() {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : iterate_all(n)) {
      if (from_dyck(to_dyck(t)) != t || from_lattice_path(to_lattice_path(t)) != t ||
          from_parent_array(to_parent_array(t)) != t) {
        return {false, "round trip failed for " + format_seq(t.counts)};
      }
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> words;
    std::set<oracle::Tuple> paths;
    std::set<std::vector<std::size_t>> parents;
    for (const auto& t : iterate_all(n)) {
      words.insert(to_dyck(t).text);
      paths.insert(to_lattice_path(t).heights);
      parents.insert(to_parent_array(t).parent);
    }
    if (words != oracle::all_dyck_words(n - 1) || paths != oracle::all_lattice_heights(n) ||
        parents != oracle::all_preorder_parent_arrays(n)) {
      return {false, "image is not the full class at n=" + std::to_string(n)};
    }
  }
  return {true, "round trips n<=8, surjective n<=6 (dyck, lattice, parents)"};
}

Outcome rank_unrank() {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t position = 0;
    for (const auto& t : iterate_all(n)) {
      const BigInt r = rank(t);
      if (r != position || unrank(n, r) != t) {
        return {false, "mismatch at " + format_seq(t.counts)};
      }
      ++position;
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " trees, rank == stream position"};
}

Outcome sampler_distributions() {
  constexpr int kDraws = 100000;
  const ChildCountSeq star{3, 0, 0, 0};
  auto frequency = [&](auto&& draw, std::uint64_t seed) {
    Rng rng(seed);
    int hits = 0;
    for (int i = 0; i < kDraws; ++i) hits += draw(rng) == star;
    return static_cast<double>(hits) / kDraws;
  };
  auto bounded = [](Rng& rng) { return sample_bounded(4, rng); };
  auto uniform = [](Rng& rng) { return sample_uniform(4, rng); };
  const double f_bounded = frequency(bounded, 31337);
  const double f_uni = frequency(uniform, 31337);

  bool reproducible = true;
  Rng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    reproducible = reproducible && sample_bounded(10, a) == sample_bounded(10, b) &&
                   sample_uniform(10, a) == sample_uniform(10, b);
  }

  const bool ok = std::abs(f_bounded - 1.0 / 3.0) <= 0.01 && std::abs(f_uni - 0.2) <= 0.01 && reproducible;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "bounded P(3 0 0 0) = %.4f (1/3 +- 0.01), uniform = %.4f (1/5 +- 0.01), reproducible=%s",
                f_bounded, f_uni, reproducible ? "yes" : "no");
  return {ok, buf};
}

struct ChildRun {
  int status = -1;
  long max_rss_kib = 0;
};

ChildRun run_cli_limited(const std::vector<std::string>& args, rlim_t address_space) {
  const pid_t pid = fork();
  if (pid == 0) {
    rlimit limit{address_space, address_space};
    setrlimit(RLIMIT_AS, &limit);
    const int devnull = open("/dev/null", O_WRONLY);
    dup2(devnull, STDOUT_FILENO);
    std::vector<char*> argv{const_cast<char*>(cli_path.c_str())};
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execv(cli_path.c_str(), argv.data());
    _exit(127);
  }
  ChildRun result;
  int status = 0;
  rusage usage{};
  wait4(pid, &status, 0, &usage);
  result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.max_rss_kib = usage.ru_maxrss;
  return result;
}

Outcome space_bound() {
  constexpr rlim_t kCeiling = 32ull << 20;
  const auto small = run_cli_limited({"gen", "--n", "18", "--limit", "1000"}, kCeiling);
  const auto large = run_cli_limited({"gen", "--n", "18", "--limit", "1000000"}, kCeiling);
  // A process that kept every emitted tree would need at least 10^6 * 18 * 4 bytes.
  const long growth = large.max_rss_kib - small.max_rss_kib;
  const bool ok = small.status == 0 && large.status == 0 && growth < 1024;
  return {ok, "10^6 trees at n=18 under a 32 MiB address-space cap: exit " +
                  std::to_string(large.status) + ", peak RSS " + std::to_string(large.max_rss_kib) +
                  " KiB (" + std::to_string(growth) + " KiB above a 10^3-tree run)"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <ordtree-cli>\n", argv[0]);
    return 2;
  }
  cli_path = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 counting", counting},
      {"2 exhaustiveness", exhaustiveness},
      {"3 worked example", worked_example},
      {"4 sweep totals", sweep_totals},
      {"5 constant amortized time", cat_property},
      {"6 bijections", bijection_suite},
      {"7 rank/unrank", rank_unrank},
      {"8 sampler distributions", sampler_distributions},
      {"9 space bound", space_bound},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
    failures += !outcome.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
