#pragma once

namespace aspectsim::cli {

/// Exit codes: 0 ok, 1 runtime failure, 2 usage error.
int run(int argc, char** argv);

}  // namespace aspectsim::cli
