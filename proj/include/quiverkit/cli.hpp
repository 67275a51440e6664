#pragma once

#include "quiverkit/serialize.hpp"

#include <string>
#include <vector>

namespace quiverkit {

struct CommandResult {
    Json report;        // written to stdout
    std::string human;  // written to stderr
    int exit_code = 0;  // 0 ok, 1 input/validation, 2 property failure, 3 internal
};

// Commands: build, verify-action, quotient, skew, coset, relation, classify,
// roundtrip, iso, components, ktheory, presentation, report. `names` refers
// to workspace objects or construction requests (iso takes two names).
CommandResult run_command(const Workspace& ws, const std::string& command,
                          const std::vector<std::string>& names);

}  // namespace quiverkit
