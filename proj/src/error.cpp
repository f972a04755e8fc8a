#include "ordtree/error.hpp"

namespace ordtree {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what), position_(position) {}

}  // namespace ordtree
