#pragma once

// Randomized invariant suite behind `kdwork verify`.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kdwork {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t draws = 0;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

/// draws per randomized check: 100 for "quick", 10000 for "full".
std::size_t draws_for_level(const std::string &level);
/// Runs every check; writes one line per check to `log` when non-null.
VerifyResult run_verify(std::size_t draws, std::uint64_t seed, std::ostream *log = nullptr);

} // namespace kdwork
