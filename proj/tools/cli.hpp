#pragma once

#include <ostream>

namespace uqd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalFailure = 3;

inline constexpr const char* kRecordHeader = "name,total,aleatoric,epistemic,alea_lower,alea_upper,error_bound";
inline constexpr const char* kCurveHeader = "n,total,aleatoric,epistemic,total_minus_epistemic";

/// Runs one command line. Results go to `out` (or to --out), diagnostics
/// to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uqd::cli
