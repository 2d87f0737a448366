#pragma once
// Command-line surface: validated dispatch from a flat key=value config to
// the library modules, with CSV/SVG/JSON artifacts written per subcommand.
//
// Exit codes: 0 success, 1 verification-suite failure, 2 validation error,
// 3 numerical failure. Validation and numerical errors additionally emit a
// machine-readable JSON record (stderr, and error.json in the output
// directory when writable).

#include <map>
#include <set>
#include <string>

namespace elastica::cli {

struct RunConfig {
    std::string subcommand;  // trace|pendulum|smkdv|flow|minimize|verify|classify
    std::map<std::string, std::string> params;
    std::string output_dir = ".";
    std::set<std::string> formats = {"csv", "svg", "json"};
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

int run(const RunConfig& config);

}  // namespace elastica::cli
