#pragma once

// Correspondences between child-count sequences and other Catalan families.
//
//   lattice path   heights h_i = t_1 + ... + t_i for i < n; a monotone
//                  column-height path weakly above the diagonal of an
//                  (n-1) x (n-1) grid.
//   Dyck word      t_i '(' followed by ')' for every node, final ')' dropped.
//   parent array   preorder labels 1..n, parent[1] = 0 (none).
//
// The single-node tree maps to the empty path and the empty word.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ordtree/codec.hpp"

namespace ordtree {

struct LatticePath {
  std::size_t n = 1;
  std::vector<Digit> heights;  // n - 1 entries

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

struct DyckWord {
  std::string text;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
};

struct ParentArray {
  std::vector<std::size_t> parent;  // parent[0] == 0 for the root; labels are 1-based

  std::size_t size() const noexcept { return parent.size(); }
  friend bool operator==(const ParentArray&, const ParentArray&) = default;
};

LatticePath to_lattice_path(const ChildCountSeq& seq);

/// Throws InvalidSequence for non-monotone, below-diagonal, or wrongly
/// terminated heights.
ChildCountSeq from_lattice_path(const LatticePath& path);

DyckWord to_dyck(const ChildCountSeq& seq);

/// Throws ParseError at the first position where the word stops being a
/// prefix of a balanced word (or at the end, if it is unbalanced there).
ChildCountSeq from_dyck(const DyckWord& word);

/// One left-to-right pass with a stack of (node, children still to attach).
ParentArray to_parent_array(const ChildCountSeq& seq);

/// Throws InvalidSequence unless the array is a preorder labelling: each
/// node's parent lies on the path from the root to its predecessor.
ChildCountSeq from_parent_array(const ParentArray& parents);

// Text forms: lattice paths and parent arrays as space-separated integers
// (0 = no parent), Dyck words as '(' and ')'.
std::string format_lattice(const LatticePath& path);
LatticePath parse_lattice(std::string_view line);
std::string format_parents(const ParentArray& parents);
ParentArray parse_parents(std::string_view line);

/// Graphviz digraph with one edge per parent -> child, nodes labelled 1..n
/// in preorder.
std::string to_dot(const ChildCountSeq& seq);

}  // namespace ordtree
