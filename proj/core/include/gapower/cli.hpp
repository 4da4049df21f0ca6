#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gapower {

/// Command-line driver behind the `gapower` binary, callable in-process.
/// `args` holds the arguments without the program name. Output goes to
/// `out`, diagnostics to `err`.
///
/// Subcommands: analyze | compensate | waveform, each taking a circuit file.
/// Exit codes: 0 success (including help), 2 invalid input, 3 computation
/// error, 4 infeasible compensator design.
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

} // namespace gapower
