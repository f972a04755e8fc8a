#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordtree/bench.hpp"
#include "ordtree/bijections.hpp"
#include "ordtree/codec.hpp"
#include "ordtree/counting.hpp"
#include "ordtree/error.hpp"
#include "ordtree/genealogy.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ordtree;

namespace {

py::tuple as_tuple(std::span<const Digit> digits) {
  py::tuple out(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) out[i] = digits[i];
  return out;
}

py::int_ to_py(const BigInt& value) { return py::int_(py::str(value.str())); }

BigInt from_py(const py::int_& value) { return BigInt(std::string(py::str(static_cast<py::handle>(value)))); }

ChildCountSeq checked(std::vector<Digit> digits) {
  require_valid(digits);
  return ChildCountSeq(std::move(digits));
}

// Python iterator over the trees of one size, optionally as deltas.
class TreeStream {
 public:
  TreeStream(std::size_t n, Order order, bool deltas) : cursor_(n, order), deltas_(deltas) {}

  py::object next() {
    if (started_ && !cursor_.next()) throw py::stop_iteration();
    started_ = true;
    if (deltas_) return py::make_tuple(cursor_.common_prefix(), as_tuple(cursor_.changed_suffix()));
    return as_tuple(cursor_.digits());
  }

 private:
  GenealogyCursor cursor_;
  bool deltas_;
  bool started_ = false;
};

}  // namespace

PYBIND11_MODULE(_ordtree, m) {
  m.doc() = "Ordered trees as child-count sequences: generation, counting, ranking and sampling.";
  m.attr("MAX_NODES") = kMaxNodes;

  m.def("validate", [](const std::vector<Digit>& t) { return !explain_invalid(t).has_value(); }, "t"_a);
  m.def("explain_invalid", [](const std::vector<Digit>& t) { return explain_invalid(t); }, "t"_a,
        "Reason the sequence is not a tree, or None.");
  m.def(
      "bounds",
      [](std::size_t n, const std::vector<Digit>& prefix) {
        const Bounds b = bounds(n, prefix);
        return py::make_tuple(b.lower, b.upper);
      },
      "n"_a, "prefix"_a, "Inclusive (lower, upper) range for the digit after prefix.");

  m.def("count", [](std::size_t n) { return to_py(catalan_count(n)); }, "n"_a);
  m.def("completions", [](std::size_t m_, std::size_t o) { return to_py(completions(m_, o)); }, "m"_a,
        "open_slots"_a);

  m.def(
      "first", [](std::size_t n, std::string_view order) { return as_tuple(first(n, parse_order(order)).counts); },
      "n"_a, "order"_a = "asc");
  m.def(
      "successor",
      [](std::vector<Digit> t, std::string_view order) -> py::object {
        const auto next = successor(checked(std::move(t)), parse_order(order));
        if (!next) return py::none();
        return as_tuple(next->counts);
      },
      "t"_a, "order"_a = "asc");

  py::class_<TreeStream>(m, "TreeStream")
      .def("__iter__", [](TreeStream& s) -> TreeStream& { return s; })
      .def("__next__", &TreeStream::next);
  m.def(
      "trees",
      [](std::size_t n, std::string_view order) { return TreeStream(n, parse_order(order), false); },
      "n"_a, "order"_a = "asc", "Lazy iterator over all trees with n nodes.");
  m.def(
      "deltas",
      [](std::size_t n, std::string_view order) { return TreeStream(n, parse_order(order), true); },
      "n"_a, "order"_a = "asc", "Lazy iterator of (common_prefix_len, suffix) pairs.");

  m.def(
      "sample",
      [](std::size_t n, std::size_t k, std::uint64_t seed, std::string_view mode) {
        if (mode != "bounded" && mode != "uniform") throw std::invalid_argument("mode must be bounded or uniform");
        Rng rng(seed);
        py::list out;
        for (std::size_t i = 0; i < k; ++i) {
          out.append(as_tuple((mode == "bounded" ? sample_bounded(n, rng) : sample_uniform(n, rng)).counts));
        }
        return out;
      },
      "n"_a, "k"_a, "seed"_a, "mode"_a = "bounded");

  m.def(
      "rank",
      [](std::vector<Digit> t, std::string_view order) { return to_py(rank(checked(std::move(t)), parse_order(order))); },
      "t"_a, "order"_a = "asc");
  m.def(
      "unrank",
      [](std::size_t n, const py::int_& r, std::string_view order) {
        if (r < py::int_(0)) throw RankOutOfRange("rank must be non-negative");
        return as_tuple(unrank(n, from_py(r), parse_order(order)).counts);
      },
      "n"_a, "r"_a, "order"_a = "asc");

  m.def("to_dyck", [](std::vector<Digit> t) { return to_dyck(checked(std::move(t))).text; }, "t"_a);
  m.def("from_dyck", [](std::string w) { return as_tuple(from_dyck({std::move(w)}).counts); }, "word"_a);
  m.def("to_lattice_path", [](std::vector<Digit> t) { return to_lattice_path(checked(std::move(t))).heights; },
        "t"_a);
  m.def(
      "from_lattice_path",
      [](std::vector<Digit> heights) {
        const std::size_t n = heights.size() + 1;
        return as_tuple(from_lattice_path({n, std::move(heights)}).counts);
      },
      "heights"_a);
  m.def("to_parent_array", [](std::vector<Digit> t) { return to_parent_array(checked(std::move(t))).parent; },
        "t"_a, "1-based parents in preorder, 0 for the root.");
  m.def(
      "from_parent_array",
      [](std::vector<std::size_t> parents) { return as_tuple(from_parent_array({std::move(parents)}).counts); },
      "parents"_a);
  m.def("to_dot", [](std::vector<Digit> t) { return to_dot(checked(std::move(t))); }, "t"_a);

  m.def(
      "bench",
      [](std::size_t max_n, std::size_t runs, std::string_view mode) {
        std::vector<bench::BenchRecord> records;
        {
          py::gil_scoped_release release;
          records = bench::run_sweep({.max_n = max_n, .runs = runs, .mode = bench::parse_mode(mode)});
        }
        py::list out;
        for (const auto& r : records) {
          out.append(py::dict("n"_a = r.n, "trees"_a = r.trees, "total_ns"_a = r.total_ns,
                              "avg_ns_per_tree"_a = r.avg_ns_per_tree, "run_id"_a = r.run_id,
                              "mode"_a = std::string(bench::to_string(r.mode))));
        }
        return out;
      },
      "max_n"_a = 15, "runs"_a = 10, "mode"_a = "generation-only");
}
