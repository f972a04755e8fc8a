#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ordtree::cli {

enum class Format { tuple, delta, dyck, lattice, parents, dot };

Format parse_format(std::string_view name);
std::string_view to_string(Format format);

enum ExitCode : int { kSuccess = 0, kInvalidData = 1, kUsage = 2 };

/// Runs one command line (program name excluded). Reads data lines from
/// `in`, writes results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ordtree::cli
