#pragma once

#include "skm/structure.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace skm {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kLawFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kPrecondition = 4;
}  // namespace exit_code

/// q0 | c0 | h0 | m2q0 | fp:<p> | table:<path> | prod:<sel>,<sel>,...
/// Throws UsageError for anything else, TableError for unreadable tables.
StructurePtr parse_structure(std::string_view selector);

/// The skm command line. Never throws; failures map to the exit codes above.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skm
