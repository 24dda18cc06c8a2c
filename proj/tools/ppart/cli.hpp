#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ppart/poset.hpp"
#include "ppart/report.hpp"

namespace ppart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

/// Every identity the library can check on a single poset, with brute
/// oracles where the poset is small enough.
Report verify_suite(const LabeledPoset& P);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppart::cli
