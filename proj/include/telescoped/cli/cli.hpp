#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace telescoped::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_precondition = 3,
    exit_undetermined = 4,
};

struct DegreeRange {
    int lo = 0;
    int hi = 0;
};

/// "a..b" (0 <= a <= b) or a single degree "a". Throws ParseError with the
/// offending offset.
DegreeRange parse_range(const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// args excludes the program name. Reads TELESCOPED_PROBE_DEPTH from the
/// environment; --probe-depth wins over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace telescoped::cli
