#pragma once

// Self-verification suite: twelve numbered checks of the closed forms
// against their limits, the Lorentz kernel, and the independent oracles.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hypack {

struct VerifyOptions {
  std::uint64_t mc_samples = 10'000'000;
  std::uint64_t seed = 42;
  /// Nonzero: shift the reference constant of that check so it must fail.
  int tamper = 0;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCheckCount = 12;

/// Runs every check in order; on_result (if set) sees each result as soon as
/// it is available.
std::vector<CheckResult> run_checks(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result = {});

/// Runs a single check, 1 <= id <= kCheckCount.
CheckResult run_check(int id, const VerifyOptions& options);

}  // namespace hypack
