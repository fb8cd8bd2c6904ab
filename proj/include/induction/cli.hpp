#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "induction/distributions.hpp"

namespace induction::cli {

enum ExitCode : int {
  kSuccess = 0,
  kReproductionFailed = 1,
  kUsageError = 2,
};

/// Runs the command line; args excludes the program name. Records go to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// laplace | jeffreys-mixture | jeffreys-continuous | haldane | induced-right |
/// induced-left | beta:<alpha>,<beta>
std::optional<PriorSpec> parse_prior(std::string_view text);

}  // namespace induction::cli
