#pragma once
// Named invariant suites, one per module, aggregated by the CLI `verify`
// subcommand. Each check carries the measured value and its threshold so the
// JSON report is self-describing.

#include <string>
#include <vector>

#include "elastica/io.hpp"

namespace elastica {

std::vector<std::string> verification_suite_names();

// Runs one suite ("curve-core", "quadrature", "euler-chain", "ode",
// "gp-flow", "minimizer") or, for "all", every suite concatenated.
SuiteReport run_verification_suite(const std::string& name);

}  // namespace elastica
