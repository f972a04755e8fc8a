#include "ordtree/bijections.hpp"

#include <utility>

#include "ordtree/error.hpp"
#include "ordtree/text.hpp"

namespace ordtree {

LatticePath to_lattice_path(const ChildCountSeq& seq) {
  require_valid(seq.counts);
  LatticePath path;
  path.n = seq.size();
  path.heights.reserve(path.n - 1);
  Digit height = 0;
  for (std::size_t i = 0; i + 1 < path.n; ++i) {
    height += seq.counts[i];
    path.heights.push_back(height);
  }
  return path;
}

ChildCountSeq from_lattice_path(const LatticePath& path) {
  check_node_count(path.n);
  if (path.heights.size() != path.n - 1) {
    throw InvalidSequence("lattice path for " + std::to_string(path.n) + " nodes needs " +
                          std::to_string(path.n - 1) + " heights");
  }
  const auto top = static_cast<Digit>(path.n - 1);
  ChildCountSeq seq;
  seq.counts.reserve(path.n);
  Digit previous = 0;
  for (std::size_t i = 0; i < path.heights.size(); ++i) {
    const Digit h = path.heights[i];
    if (h < previous) throw InvalidSequence("heights decrease at column " + std::to_string(i + 1));
    if (h < static_cast<Digit>(i + 1)) {
      throw InvalidSequence("height below the diagonal at column " + std::to_string(i + 1));
    }
    if (h > top) throw InvalidSequence("height above the grid at column " + std::to_string(i + 1));
    seq.counts.push_back(h - previous);
    previous = h;
  }
  if (previous != top) throw InvalidSequence("path must end at height " + std::to_string(top));
  seq.counts.push_back(0);
  return seq;
}

DyckWord to_dyck(const ChildCountSeq& seq) {
  require_valid(seq.counts);
  DyckWord word;
  word.text.reserve(2 * (seq.size() - 1) + 1);
  for (Digit t : seq.counts) {
    word.text.append(static_cast<std::size_t>(t), '(');
    word.text.push_back(')');
  }
  word.text.pop_back();
  return word;
}

ChildCountSeq from_dyck(const DyckWord& word) {
  const std::string& w = word.text;
  if (w.size() % 2 != 0) throw ParseError("odd length " + std::to_string(w.size()), w.size());
  if (w.size() / 2 + 1 > kMaxNodes) {
    throw UsageError("word encodes more than " + std::to_string(kMaxNodes) + " nodes");
  }

  ChildCountSeq seq;
  seq.counts.reserve(w.size() / 2 + 1);
  std::size_t depth = 0;
  Digit run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '(') {
      ++depth;
      ++run;
    } else if (w[i] == ')') {
      if (depth == 0) throw ParseError("unmatched ')' at position " + std::to_string(i), i);
      --depth;
      seq.counts.push_back(run);
      run = 0;
    } else {
      throw ParseError("unexpected character at position " + std::to_string(i), i);
    }
  }
  if (depth != 0) {
    throw ParseError(std::to_string(depth) + " unclosed '(' at end of word", w.size());
  }
  seq.counts.push_back(run);
  return seq;
}

ParentArray to_parent_array(const ChildCountSeq& seq) {
  require_valid(seq.counts);
  const std::size_t n = seq.size();
  ParentArray result;
  result.parent.assign(n, 0);

  // (label, children not yet attached)
  std::vector<std::pair<std::size_t, Digit>> stack;
  stack.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      auto& top = stack.back();
      result.parent[i] = top.first;
      if (--top.second == 0) stack.pop_back();
    }
    if (seq.counts[i] > 0) stack.emplace_back(i + 1, seq.counts[i]);
  }
  return result;
}

ChildCountSeq from_parent_array(const ParentArray& parents) {
  const std::size_t n = parents.size();
  check_node_count(n);
  if (parents.parent[0] != 0) throw InvalidSequence("node 1 must be the root (parent 0)");

  ChildCountSeq seq;
  seq.counts.assign(n, 0);
  // Labels on the path from the root to the most recent node.
  std::vector<std::size_t> path{1};
  path.reserve(n);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t p = parents.parent[i];
    if (p == 0 || p > i) {
      throw InvalidSequence("node " + std::to_string(i + 1) + " has parent " + std::to_string(p) +
                            ", expected a label in [1, " + std::to_string(i) + "]");
    }
    while (!path.empty() && path.back() != p) path.pop_back();
    if (path.empty()) {
      throw InvalidSequence("node " + std::to_string(i + 1) +
                            " breaks preorder: its parent is not an ancestor of node " +
                            std::to_string(i));
    }
    ++seq.counts[p - 1];
    path.push_back(i + 1);
  }
  return seq;
}

std::string format_lattice(const LatticePath& path) {
  std::string out;
  text::append_joined(out, std::span<const Digit>(path.heights));
  return out;
}

LatticePath parse_lattice(std::string_view line) {
  const auto values = text::parse_int_list(line);
  LatticePath path;
  path.n = values.size() + 1;
  path.heights.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > static_cast<std::int64_t>(kMaxNodes)) {
      throw ParseError("height " + std::to_string(i + 1) + " out of range", i);
    }
    path.heights.push_back(static_cast<Digit>(values[i]));
  }
  return path;
}

std::string format_parents(const ParentArray& parents) {
  std::string out;
  text::append_joined(out, std::span<const std::size_t>(parents.parent));
  return out;
}

ParentArray parse_parents(std::string_view line) {
  const auto values = text::parse_int_list(line);
  ParentArray parents;
  parents.parent.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw ParseError("negative parent label", i);
    parents.parent.push_back(static_cast<std::size_t>(values[i]));
  }
  return parents;
}

std::string to_dot(const ChildCountSeq& seq) {
  const ParentArray parents = to_parent_array(seq);
  std::string out = "digraph tree {\n";
  if (parents.size() == 1) out += "  1;\n";
  for (std::size_t i = 1; i < parents.size(); ++i) {
    out += "  ";
    text::append_int(out, parents.parent[i]);
    out += " -> ";
    text::append_int(out, i + 1);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ordtree
