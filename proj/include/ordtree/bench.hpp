#pragma once

// Timed full sweeps over n = 1..max_n.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordtree::bench {

enum class Mode {
  generation_only,           // trees are folded into a checksum and discarded
  generation_serialization,  // every tree is also rendered in tuple text form
};

/// "generation-only" / "generation+serialization"; parse also takes "gen" / "ser".
std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name);

struct BenchRecord {
  std::size_t n = 0;
  std::uint64_t trees = 0;
  std::uint64_t total_ns = 0;
  double avg_ns_per_tree = 0.0;
  std::size_t run_id = 0;  // 1-based
  Mode mode = Mode::generation_only;
};

/// Raised when a sweep produced a different number of trees than
/// catalan_count(n); no timing is reported in that case.
class CountMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest n whose tree count fits the 64-bit `trees` column.
inline constexpr std::size_t kMaxBenchNodes = 36;

struct SweepOptions {
  std::size_t max_n = 15;
  std::size_t runs = 10;
  Mode mode = Mode::generation_only;
  /// Runs the sizes concurrently, one thread per n. Timings then include
  /// contention and are meant for throughput only.
  bool parallel = false;
};

/// One record per (n, run), ordered by n then run. Each n gets an untimed
/// warm-up sweep first.
std::vector<BenchRecord> run_sweep(const SweepOptions& options);

/// Times a single sweep of n-node trees; exposed for tests.
BenchRecord time_sweep(std::size_t n, Mode mode, std::size_t run_id);

struct ConstancyReport {
  std::size_t from_n = 0;
  std::size_t to_n = 0;
  std::vector<double> mean_ns;        // per n in [from_n, to_n]
  std::vector<double> dispersion;     // coefficient of variation across runs, per n
  double ratio = 1.0;                 // max(mean_ns) / min(mean_ns)
  double threshold = 2.0;
  bool within_threshold = true;
};

/// Compares mean per-tree time across n in [from_n, max n in records].
/// Throws std::invalid_argument when some n in that range has no records or
/// the records stop below from_n.
ConstancyReport constancy_report(const std::vector<BenchRecord>& records, double threshold = 2.0,
                                 std::size_t from_n = 8);

/// mean avg_ns_per_tree at n_num divided by that at n_den.
double mean_ratio(const std::vector<BenchRecord>& records, std::size_t n_num, std::size_t n_den);

inline constexpr std::string_view kCsvHeader = "n,trees,total_ns,avg_ns_per_tree,run_id,mode";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::string format_report(const ConstancyReport& report);

}  // namespace ordtree::bench
