#pragma once

#include "commgraph/group.hpp"

#include <iosfwd>
#include <string_view>

namespace commgraph::cli {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kMismatch = 1;  // verify found discrepancies
constexpr int kError = 2;     // bad arguments, unreadable input, guard violations

// Selector grammar: Zn, Dn, Dicm, Sk, Ak, Q8, products joined by 'x'
// (e.g. D4xZ2), or @path for a Cayley-table file. Throws
// std::invalid_argument, GroupError or ParseError.
FiniteGroup parse_group_selector(std::string_view selector);

// Runs the command line `argv` (argv[0] is the program name). Normal output
// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commgraph::cli
