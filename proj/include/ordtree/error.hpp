#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordtree {

/// A precondition unrelated to tree content was violated: n = 0, n above the
/// node cap, or a length that disagrees with the declared node count.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A digit sequence passed where a valid ordered tree was required.
class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A prefix containing a digit outside the bounds of its own position.
class InvalidPrefix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed text. `position()` is the 0-based offset of the first offending
/// character (or token, for integer lists).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ordtree
