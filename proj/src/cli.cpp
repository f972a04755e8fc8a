#include "ordtree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "ordtree/bench.hpp"
#include "ordtree/bijections.hpp"
#include "ordtree/codec.hpp"
#include "ordtree/counting.hpp"
#include "ordtree/error.hpp"
#include "ordtree/genealogy.hpp"
#include "ordtree/text.hpp"

namespace ordtree::cli {

Format parse_format(std::string_view name) {
  if (name == "tuple") return Format::tuple;
  if (name == "delta") return Format::delta;
  if (name == "dyck") return Format::dyck;
  if (name == "lattice") return Format::lattice;
  if (name == "parents") return Format::parents;
  if (name == "dot") return Format::dot;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::tuple: return "tuple";
    case Format::delta: return "delta";
    case Format::dyck: return "dyck";
    case Format::lattice: return "lattice";
    case Format::parents: return "parents";
    case Format::dot: return "dot";
  }
  return "?";
}

namespace {

const std::vector<std::string> kFormatNames = {"tuple", "delta", "dyck", "lattice", "parents", "dot"};

/// Buffered serializer for a stream of trees of one size.
class TreeWriter {
 public:
  TreeWriter(Format format, std::ostream& out) : format_(format), out_(out) {
    buffer_.reserve(kFlushAt + 256);
  }
  ~TreeWriter() { flush(); }

  /// `prefix` is the digit count shared with the previous tree when the
  /// caller already knows it; otherwise it is recomputed for delta output.
  void write(std::span<const Digit> digits, std::optional<std::size_t> prefix = std::nullopt) {
    switch (format_) {
      case Format::tuple:
        text::append_joined(buffer_, digits);
        break;
      case Format::delta: {
        const std::size_t p = prefix ? *prefix : common_prefix(digits);
        text::append_joined(buffer_, digits.subspan(p, digits.size() - 1 - p));
        previous_.assign(digits.begin(), digits.end());
        break;
      }
      case Format::dyck:
        buffer_ += to_dyck(ChildCountSeq(to_vector(digits))).text;
        break;
      case Format::lattice:
        buffer_ += format_lattice(to_lattice_path(ChildCountSeq(to_vector(digits))));
        break;
      case Format::parents:
        buffer_ += format_parents(to_parent_array(ChildCountSeq(to_vector(digits))));
        break;
      case Format::dot:
        buffer_ += to_dot(ChildCountSeq(to_vector(digits)));
        if (!buffer_.empty()) buffer_.pop_back();  // the newline below closes the block
        break;
    }
    buffer_.push_back('\n');
    if (buffer_.size() >= kFlushAt) flush();
  }

  void flush() {
    if (buffer_.empty()) return;
    out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    buffer_.clear();
  }

  bool good() const { return out_.good(); }

 private:
  static constexpr std::size_t kFlushAt = 1 << 16;

  static std::vector<Digit> to_vector(std::span<const Digit> d) { return {d.begin(), d.end()}; }

  std::size_t common_prefix(std::span<const Digit> digits) const {
    if (previous_.size() != digits.size()) return 0;
    std::size_t p = 0;
    while (p + 1 < digits.size() && previous_[p] == digits[p]) ++p;
    return p;
  }

  Format format_;
  std::ostream& out_;
  std::string buffer_;
  std::vector<Digit> previous_;
};

/// Reconstructs full trees from delta lines of a fixed node count.
class DeltaReader {
 public:
  explicit DeltaReader(std::size_t n) : digits_(n, 0) {}

  ChildCountSeq read(std::string_view line) {
    const auto values = text::parse_int_list(line);
    const std::size_t n = digits_.size();
    if (values.size() > n - 1) {
      throw ParseError("delta has " + std::to_string(values.size()) + " digits, at most " +
                           std::to_string(n - 1) + " allowed",
                       n - 1);
    }
    TreeDelta delta;
    delta.common_prefix_len = n - 1 - values.size();
    if (first_ && delta.common_prefix_len != 0) {
      throw ParseError("first delta must carry all " + std::to_string(n - 1) + " digits", 0);
    }
    for (auto v : values) delta.suffix.push_back(static_cast<Digit>(v));
    apply_delta(digits_, delta);
    first_ = false;
    require_valid(digits_);
    return ChildCountSeq(digits_);
  }

 private:
  std::vector<Digit> digits_;
  bool first_ = true;
};

BigInt parse_rank(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("'" + std::string(s) + "' is not an integer", 0);
  }
  return BigInt(std::string(s));
}

/// Runs `handle` on every input line, reporting failures as "line k: ...".
/// Returns the number of lines that failed.
std::size_t for_each_line(std::istream& in, std::ostream& err,
                          const std::function<void(std::string_view)>& handle) {
  std::size_t failures = 0;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    try {
      handle(text::chomp(line));
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      err << "line " << number << ": " << e.what() << '\n';
      ++failures;
    } catch (const std::out_of_range& e) {
      err << "line " << number << ": " << e.what() << '\n';
      ++failures;
    }
  }
  return failures;
}

struct Options {
  std::size_t n = 0;
  std::string order = "asc";
  std::string format = "tuple";
  std::optional<std::uint64_t> limit;
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::size_t k = 1;
  std::size_t runs = 10;
  std::string out_path;
  std::string from = "tuple";
  std::string to = "tuple";
  std::string positional;
  bool parallel = false;
  double threshold = 2.0;
};

int cmd_gen(const Options& o, std::ostream& out) {
  check_node_count(o.n);
  TreeWriter writer(parse_format(o.format), out);
  std::uint64_t emitted = 0;
  const std::uint64_t limit = o.limit.value_or(UINT64_MAX);
  if (limit == 0) return kSuccess;
  GenealogyCursor cursor(o.n, parse_order(o.order));
  do {
    writer.write(cursor.digits(), cursor.common_prefix());
    if (!writer.good()) break;
  } while (++emitted < limit && cursor.next());
  return kSuccess;
}

int cmd_count(const Options& o, std::ostream& out) {
  check_node_count(o.n);
  out << catalan_count(o.n).str() << '\n';
  return kSuccess;
}

int cmd_sample(const Options& o, std::ostream& out) {
  check_node_count(o.n);
  if (!o.seed) throw UsageError("--seed is required");
  if (o.k == 0) throw UsageError("--k must be at least 1");
  const std::string mode = o.mode.empty() ? "bounded" : o.mode;
  if (mode != "bounded" && mode != "uniform") {
    throw UsageError("unknown sample mode '" + mode + "' (expected bounded or uniform)");
  }
  Rng rng(*o.seed);
  TreeWriter writer(Format::tuple, out);
  for (std::size_t i = 0; i < o.k; ++i) {
    const ChildCountSeq seq = mode == "bounded" ? sample_bounded(o.n, rng) : sample_uniform(o.n, rng);
    writer.write(seq.counts);
  }
  return kSuccess;
}

std::optional<std::size_t> optional_n(const Options& o) {
  if (o.n == 0) return std::nullopt;
  check_node_count(o.n);
  return o.n;
}

int cmd_rank(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Order order = parse_order(o.order);
  const auto n = optional_n(o);
  auto handle = [&](std::string_view line) {
    const ChildCountSeq seq = parse_seq(line, n);
    out << rank(seq, order).str() << '\n';
  };
  if (!o.positional.empty()) {
    handle(o.positional);
    return kSuccess;
  }
  return for_each_line(in, err, handle) == 0 ? kSuccess : kInvalidData;
}

int cmd_unrank(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  check_node_count(o.n);
  const Order order = parse_order(o.order);
  auto handle = [&](std::string_view line) {
    out << format_seq(unrank(o.n, parse_rank(line), order).counts) << '\n';
  };
  if (!o.positional.empty()) {
    handle(o.positional);
    return kSuccess;
  }
  return for_each_line(in, err, handle) == 0 ? kSuccess : kInvalidData;
}

int cmd_convert(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Format from = parse_format(o.from);
  const Format to = parse_format(o.to);
  const auto n = optional_n(o);
  if (from == Format::dot) throw UsageError("dot is an output-only format");
  if (from == Format::delta && !n) throw UsageError("--n is required to read delta lines");

  std::optional<DeltaReader> deltas;
  if (from == Format::delta) deltas.emplace(*n);

  TreeWriter writer(to, out);
  auto handle = [&](std::string_view line) {
    ChildCountSeq seq;
    switch (from) {
      case Format::tuple:
        seq = parse_seq(line, n);
        require_valid(seq.counts);
        break;
      case Format::delta:
        seq = deltas->read(line);
        break;
      case Format::dyck:
        seq = from_dyck(DyckWord{std::string(line)});
        break;
      case Format::lattice:
        seq = from_lattice_path(parse_lattice(line));
        break;
      case Format::parents:
        seq = from_parent_array(parse_parents(line));
        break;
      case Format::dot:
        break;
    }
    if (n && seq.size() != *n) {
      throw InvalidSequence("tree has " + std::to_string(seq.size()) + " nodes, expected " +
                            std::to_string(*n));
    }
    writer.write(seq.counts);
  };
  const std::size_t failures = for_each_line(in, err, handle);
  writer.flush();
  return failures == 0 ? kSuccess : kInvalidData;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const auto n = optional_n(o);
  bool all_valid = true;
  std::string line;
  while (std::getline(in, line)) {
    std::optional<std::string> reason;
    try {
      reason = explain_invalid(parse_seq(text::chomp(line), n).counts);
    } catch (const ParseError& e) {
      reason = e.what();
    }
    if (reason) {
      out << "invalid:" << *reason << '\n';
      all_valid = false;
    } else {
      out << "valid\n";
    }
  }
  return all_valid ? kSuccess : kInvalidData;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  bench::SweepOptions sweep;
  sweep.max_n = o.n == 0 ? 15 : o.n;
  sweep.runs = o.runs;
  sweep.mode = o.mode.empty() ? bench::Mode::generation_only : bench::parse_mode(o.mode);
  sweep.parallel = o.parallel;

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw UsageError("cannot open '" + o.out_path + "' for writing");
  }

  const auto records = bench::run_sweep(sweep);
  std::ostream& csv = o.out_path.empty() ? out : file;
  std::ostream& summary = o.out_path.empty() ? err : out;
  bench::write_csv(csv, records);

  std::uint64_t total = 0;
  for (const auto& r : records) total += r.trees;
  summary << "records=" << records.size() << " trees=" << total << '\n';
  if (sweep.max_n >= 8) {
    summary << bench::format_report(bench::constancy_report(records, o.threshold));
  } else {
    summary << "constancy report skipped: needs n >= 8\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generate, count, rank and convert ordered trees in child-count encoding", "ordtree"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Stream every n-node tree in order");
  gen->add_option("--n", o.n, "Node count")->required();
  gen->add_option("--order", o.order, "asc or desc")->check(CLI::IsMember({"asc", "desc", "ascending", "descending"}));
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember(kFormatNames));
  gen->add_option("--limit", o.limit, "Stop after this many trees");

  auto* count = app.add_subcommand("count", "Number of n-node trees");
  count->add_option("--n", o.n, "Node count")->required();

  auto* sample = app.add_subcommand("sample", "Draw random trees");
  sample->add_option("--n", o.n, "Node count")->required();
  sample->add_option("--k", o.k, "Number of trees");
  sample->add_option("--mode", o.mode, "bounded (per-digit bounds) or uniform");
  sample->add_option("--seed", o.seed, "RNG seed")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Position of a tree in the sweep");
  rank_cmd->add_option("seq", o.positional, "Tree digits; read from stdin when omitted");
  rank_cmd->add_option("--n", o.n, "Node count, enables input without the trailing 0");
  rank_cmd->add_option("--order", o.order, "asc or desc");

  auto* unrank_cmd = app.add_subcommand("unrank", "Tree at a position of the sweep");
  unrank_cmd->add_option("r", o.positional, "Rank; read from stdin when omitted");
  unrank_cmd->add_option("--n", o.n, "Node count")->required();
  unrank_cmd->add_option("--order", o.order, "asc or desc");

  auto* convert = app.add_subcommand("convert", "Convert trees between text formats");
  convert->add_option("--from", o.from, "Input format")->check(CLI::IsMember(kFormatNames));
  convert->add_option("--to", o.to, "Output format")->check(CLI::IsMember(kFormatNames));
  convert->add_option("--n", o.n, "Node count (needed for delta input)");

  auto* validate_cmd = app.add_subcommand("validate", "Check tuple lines from stdin");
  validate_cmd->add_option("--n", o.n, "Expected node count");

  auto* bench_cmd = app.add_subcommand("bench", "Time full sweeps for n = 1..N");
  bench_cmd->add_option("--n", o.n, "Largest node count (default 15)");
  bench_cmd->add_option("--runs", o.runs, "Timed runs per n");
  bench_cmd->add_option("--mode", o.mode, "generation-only or generation+serialization");
  bench_cmd->add_option("--out", o.out_path, "CSV path (stdout when omitted)");
  bench_cmd->add_option("--threshold", o.threshold, "Allowed max/min ratio of per-tree time");
  bench_cmd->add_flag("--parallel", o.parallel, "Run sizes concurrently (throughput only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (rank_cmd->parsed()) return cmd_rank(o, in, out, err);
    if (unrank_cmd->parsed()) return cmd_unrank(o, in, out, err);
    if (convert->parsed()) return cmd_convert(o, in, out, err);
    if (validate_cmd->parsed()) return cmd_validate(o, in, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidData;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidData;
  } catch (const bench::CountMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidData;
  }
  return kUsage;
}

}  // namespace ordtree::cli
