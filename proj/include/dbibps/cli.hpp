// Command implementations behind the dbibps executable.
#pragma once

#include <ostream>

#include "dbibps/config.hpp"

namespace dbibps {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidConfig = 1,
  kExitNoSoliton = 2,
  kExitVerifyFailed = 3,
  kExitOptimizerFailed = 4,
};

// Each command writes its artifacts under cfg.out and a JSON summary to `out`.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses `<command> [--flags]`, merges flags > --config file > defaults and
// dispatches.  Exceptions become exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dbibps
