#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fent {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // worst deviation or failure description
};

/// Cross-module invariant suite (sign conventions, mapping isometry,
/// closed-form agreement, optimizer maxima, coincidence equivalence, ...).
/// Deterministic for a given seed.
std::vector<CheckResult> verification_suite(std::uint64_t seed);

}  // namespace fent
