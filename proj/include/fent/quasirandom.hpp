#pragma once

#include <cstdint>
#include <vector>

#include "fent/types.hpp"

namespace fent {

/// Deterministic low-discrepancy sequence of unit vectors in C^dim.
///
/// Points come from the additive recurrence u_k = frac(u_0 + k * alpha)
/// with alpha built from the generalized golden ratio, pushed through
/// Box-Muller onto the sphere. Streams with different seeds start at
/// different offsets and are reproducible across runs.
class SphereSequence {
 public:
  SphereSequence(int complex_dim, std::uint64_t seed);

  /// Next unit vector of the stream.
  Vector next();

  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<double> alpha_;
  std::vector<double> state_;
};

}  // namespace fent
