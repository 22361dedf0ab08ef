#pragma once

#include "fent/firstq.hpp"
#include "fent/fock.hpp"

namespace fent {

/// Uniform 1-d grid of detector cells; delta functions become cell
/// indicators divided by the cell width.
struct SpatialGrid {
  int n_cells;
  double delta = 1.0;
};

/// Orbital sampled on the grid, normalized so sum |u(k)|^2 delta = 1.
class GridOrbital {
 public:
  GridOrbital(SpatialGrid grid, Vector amplitudes);

  const SpatialGrid& grid() const { return grid_; }
  const Vector& amplitudes() const { return amps_; }
  Complex at(int cell) const { return amps_(cell); }

  /// Gaussian profile centered on `center` (cell units), normalized.
  static GridOrbital gaussian(const SpatialGrid& grid, double center, double width);

 private:
  SpatialGrid grid_;
  Vector amps_;
};

/// (w0 + w1)/norm for two Gaussian site profiles at 30% / 70% of the grid.
GridOrbital bonding_orbital(const SpatialGrid& grid);

/// Labeled single-particle space (cell, spin), index = 2*cell + spin.
SingleParticleSpace grid_space(const SpatialGrid& grid);

inline int grid_mode(int cell, Spin spin) { return 2 * cell + static_cast<int>(spin); }

/// Both electrons in orbital u with opposite spins: u(r1)u(r2) x singlet.
TwoParticleWavefunction doubly_occupied(const GridOrbital& u);

/// Antisymmetric spatial pair with aligned spins (triplet component).
TwoParticleWavefunction aligned_spin_pair(const GridOrbital& phi1, const GridOrbital& phi2);

/// Single-particle matrix of the discretized spin density at cell k:
/// (cell-k projector / delta) x sigma^z.
Matrix spin_density_single(const SpatialGrid& grid, int cell);

/// s(R_k) as a permutation-symmetric two-particle observable,
/// sum_i s_i^z 1[r_i in cell k]/delta.
ParticleObservable spin_density_op(const SpatialGrid& grid, int cell);

/// The same observable built from field-operator bilinears,
/// (n_{k,up} - n_{k,down})/delta on a two-particle Fock sector over the
/// grid modes. Agrees element-wise with the compression of
/// spin_density_op onto that sector.
Operator spin_density_op_fock(const SpatialGrid& grid, int cell, const FockBasis& basis);

struct Coincidence {
  double numerator;    // cross-particle part of <s(R_k) s(R_k')>
  double denominator;  // same with spins replaced by 1 (joint density)
  double conditional;  // numerator / denominator
};

/// Conditional spin-spin average given one particle at each detector cell.
/// Throws ZeroDensity when the joint density vanishes at the pair.
Coincidence coincidence_correlator(const TwoParticleWavefunction& psi,
                                   const SpatialGrid& grid, int cell_a, int cell_b);

}  // namespace fent
