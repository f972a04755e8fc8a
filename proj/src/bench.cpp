#include "ordtree/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <ostream>

#include "ordtree/codec.hpp"
#include "ordtree/counting.hpp"
#include "ordtree/error.hpp"
#include "ordtree/genealogy.hpp"
#include "ordtree/text.hpp"

namespace ordtree::bench {

namespace {

volatile std::uint64_t g_sink = 0;

struct SweepResult {
  std::uint64_t trees = 0;
  std::uint64_t checksum = 0;
};

SweepResult sweep(std::size_t n, Mode mode) {
  SweepResult result;
  GenealogyCursor cursor(n, Order::ascending);
  if (mode == Mode::generation_only) {
    do {
      ++result.trees;
      result.checksum += cursor.common_prefix() + static_cast<std::uint64_t>(cursor.digits()[0]);
    } while (cursor.next());
  } else {
    std::string line;
    line.reserve(3 * n + 1);
    do {
      ++result.trees;
      line.clear();
      text::append_joined(line, cursor.digits());
      line.push_back('\n');
      result.checksum += line.size();
    } while (cursor.next());
  }
  return result;
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::generation_only ? "generation-only" : "generation+serialization";
}

Mode parse_mode(std::string_view name) {
  if (name == "generation-only" || name == "gen") return Mode::generation_only;
  if (name == "generation+serialization" || name == "ser") return Mode::generation_serialization;
  throw UsageError("unknown bench mode '" + std::string(name) + "'");
}

BenchRecord time_sweep(std::size_t n, Mode mode, std::size_t run_id) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const SweepResult result = sweep(n, mode);
  const auto stop = Clock::now();
  g_sink = g_sink + result.checksum;

  if (BigInt(result.trees) != catalan_count(n)) {
    throw CountMismatch("sweep for n = " + std::to_string(n) + " produced " +
                        std::to_string(result.trees) + " trees, expected " +
                        catalan_count(n).str());
  }

  BenchRecord record;
  record.n = n;
  record.trees = result.trees;
  record.total_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  record.avg_ns_per_tree = static_cast<double>(record.total_ns) / static_cast<double>(record.trees);
  record.run_id = run_id;
  record.mode = mode;
  return record;
}

std::vector<BenchRecord> run_sweep(const SweepOptions& options) {
  check_node_count(options.max_n);
  if (options.max_n > kMaxBenchNodes) {
    throw UsageError("bench supports n <= " + std::to_string(kMaxBenchNodes));
  }
  if (options.runs == 0) throw UsageError("runs must be at least 1");

  auto measure = [&](std::size_t n) {
    std::vector<BenchRecord> records;
    records.reserve(options.runs);
    g_sink = g_sink + sweep(n, options.mode).checksum;  // warm-up
    for (std::size_t run = 1; run <= options.runs; ++run) {
      records.push_back(time_sweep(n, options.mode, run));
    }
    return records;
  };

  std::vector<BenchRecord> all;
  all.reserve(options.max_n * options.runs);
  if (options.parallel) {
    std::vector<std::future<std::vector<BenchRecord>>> pending;
    for (std::size_t n = 1; n <= options.max_n; ++n) {
      pending.push_back(std::async(std::launch::async, measure, n));
    }
    for (auto& f : pending) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    for (std::size_t n = 1; n <= options.max_n; ++n) {
      auto part = measure(n);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return all;
}

namespace {

std::map<std::size_t, std::vector<double>> per_tree_by_n(const std::vector<BenchRecord>& records) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const auto& r : records) by_n[r.n].push_back(r.avg_ns_per_tree);
  return by_n;
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

}  // namespace

ConstancyReport constancy_report(const std::vector<BenchRecord>& records, double threshold,
                                 std::size_t from_n) {
  const auto by_n = per_tree_by_n(records);
  if (by_n.empty() || by_n.rbegin()->first < from_n) {
    throw std::invalid_argument("constancy report needs records up to at least n = " +
                                std::to_string(from_n));
  }

  ConstancyReport report;
  report.from_n = from_n;
  report.to_n = by_n.rbegin()->first;
  report.threshold = threshold;
  for (std::size_t n = from_n; n <= report.to_n; ++n) {
    auto it = by_n.find(n);
    if (it == by_n.end()) {
      throw std::invalid_argument("no records for n = " + std::to_string(n));
    }
    const double m = mean(it->second);
    double var = 0.0;
    for (double x : it->second) var += (x - m) * (x - m);
    var /= static_cast<double>(it->second.size());
    report.mean_ns.push_back(m);
    report.dispersion.push_back(m > 0.0 ? std::sqrt(var) / m : 0.0);
  }

  const auto [lo, hi] = std::minmax_element(report.mean_ns.begin(), report.mean_ns.end());
  report.ratio = *lo > 0.0 ? *hi / *lo : 1.0;
  report.within_threshold = report.ratio <= threshold;
  return report;
}

double mean_ratio(const std::vector<BenchRecord>& records, std::size_t n_num, std::size_t n_den) {
  const auto by_n = per_tree_by_n(records);
  auto num = by_n.find(n_num);
  auto den = by_n.find(n_den);
  if (num == by_n.end() || den == by_n.end()) {
    throw std::invalid_argument("records missing for n = " + std::to_string(n_num) + " or " +
                                std::to_string(n_den));
  }
  return mean(num->second) / mean(den->second);
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << '\n';
  char avg[64];
  for (const auto& r : records) {
    std::snprintf(avg, sizeof(avg), "%.3f", r.avg_ns_per_tree);
    out << r.n << ',' << r.trees << ',' << r.total_ns << ',' << avg << ',' << r.run_id << ','
        << to_string(r.mode) << '\n';
  }
}

std::string format_report(const ConstancyReport& report) {
  std::string out;
  char buf[128];
  for (std::size_t i = 0; i < report.mean_ns.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "n=%zu mean_ns_per_tree=%.3f cv=%.3f\n", report.from_n + i,
                  report.mean_ns[i], report.dispersion[i]);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "ratio(max/min, n=%zu..%zu)=%.3f threshold=%.3f %s\n",
                report.from_n, report.to_n, report.ratio, report.threshold,
                report.within_threshold ? "ok" : "exceeded");
  out += buf;
  return out;
}

}  // namespace ordtree::bench
