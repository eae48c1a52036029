#pragma once

namespace anet::cli {

/// Full command-line front end; returns the process exit code.
/// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource cap.
int run(int argc, const char* const* argv);

} // namespace anet::cli
