#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moddev {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, if any
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Exact-identity suite: martingale reconstruction, the kappa' expansion,
/// incremental vs rescanned conditional means, oracle means and structured
/// counters. `quick` shrinks every case count.
VerifyReport run_identity_suite(bool quick, std::uint64_t seed);

}  // namespace moddev
