#pragma once

#include "superroot/io.hpp"

#include <ostream>

namespace superroot {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 all checks pass, 1 a check failed (witness in the report),
/// 2 usage or input error, 3 inconclusive (truncation / size limits).
enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInconclusive = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The three worked-example certificates printed by `replay-examples`.
Json replay_two_isotropic_subroot_system();
Json replay_isotropic_affine_pair();
Json replay_pi_system_closure_smaller();

} // namespace superroot
