#pragma once

#include <ostream>

#include "lkweld/scenario.hpp"

namespace lkweld {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

// Full command-line entry point: evolve, map-interior, map-exterior,
// weld-oracle, weld-asymptotic, verify-theorem1, verify-theoremA, verify-theoremB,
// verify-duality, verify-lebedev. Settings are layered defaults < --config
// file < LKWELD_* environment < command-line flags.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            EnvLookup env = nullptr);

// Runs one subcommand on a validated scenario, writing files under
// scenario.out_dir and a human-readable summary to out. Throws the library
// exceptions; run_cli maps them to exit codes.
void run_command(const std::string& command, const Scenario& scenario, std::ostream& out);

}  // namespace lkweld
