#pragma once

#include <vector>

#include "fent/firstq.hpp"
#include "fent/types.hpp"

namespace fent {

/// One block of the antisymmetric canonical form: the state contributes
/// amplitude * (orbital_a (x) orbital_b - orbital_b (x) orbital_a).
struct CanonicalPair {
  double amplitude;
  Vector orbital_a;
  Vector orbital_b;
};

struct SlaterAnalysis {
  int rank = 0;
  /// |w01*w23 - w02*w13 + w03*w12| when dim == 4 (zero iff rank 1),
  /// NaN otherwise.
  double pfaffian_residual = 0.0;
  std::vector<CanonicalPair> canonical_pairs;
};

/// Canonical decomposition of the antisymmetric amplitude matrix; rank is
/// the number of pair amplitudes above tol * ||w||_F.
SlaterAnalysis slater_rank(const TwoParticleWavefunction& psi, double tol = 1e-9);

/// True when the state is (reducible to) one Slater determinant.
bool is_single_slater(const TwoParticleWavefunction& psi, double tol = 1e-9);

}  // namespace fent
