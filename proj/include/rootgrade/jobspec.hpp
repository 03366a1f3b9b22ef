#pragma once

#include "rootgrade/rootsys.hpp"

#include <string>
#include <vector>

namespace rootgrade {

/// Schema or limit violation in an input spec file; maps to exit code 2.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematical precondition failure (e.g. not-in-big-cell); exit code 3.
struct MathPreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobOptions {
    RootSystemConfig rs_config;
    bool pretty = false;
};

struct JobResult {
    int exit_code = 0;
    std::string document; // JSON text, or plain text for `explain`
};

const std::vector<std::string> &job_commands();

/// Parses the spec text, dispatches the command, and serializes the result
/// document. Never throws: schema errors, precondition failures and internal
/// errors are mapped to exit codes 2, 3 and 1 with an error document.
JobResult run_job(const std::string &command, const std::string &spec_text,
                  const JobOptions &opts = {});

} // namespace rootgrade
