#include "fent/spindensity.hpp"

#include <cmath>

namespace fent {

namespace {

void check_grid(const SpatialGrid& grid) {
  if (grid.n_cells < 2) throw DimensionMismatch("SpatialGrid: n_cells must be >= 2");
  if (!(grid.delta > 0.0)) throw DimensionMismatch("SpatialGrid: delta must be > 0");
}

void check_cell(const SpatialGrid& grid, int cell) {
  if (cell < 0 || cell >= grid.n_cells) throw DimensionMismatch("cell index out of range");
}

/// Embed an orbital and a spin into the (cell, spin) space as a unit vector.
Vector embed(const GridOrbital& u, Spin spin) {
  const SpatialGrid& grid = u.grid();
  Vector v = Vector::Zero(2 * grid.n_cells);
  const double root_delta = std::sqrt(grid.delta);
  for (int k = 0; k < grid.n_cells; ++k) v(grid_mode(k, spin)) = u.at(k) * root_delta;
  return v;
}

}  // namespace

GridOrbital::GridOrbital(SpatialGrid grid, Vector amplitudes)
    : grid_(grid), amps_(std::move(amplitudes)) {
  check_grid(grid_);
  if (amps_.size() != grid_.n_cells)
    throw DimensionMismatch("GridOrbital: amplitude count != n_cells");
  const double total = amps_.squaredNorm() * grid_.delta;
  if (std::abs(total - 1.0) > 1e-12)
    throw NotNormalized("GridOrbital: sum |u|^2 delta != 1");
}

GridOrbital GridOrbital::gaussian(const SpatialGrid& grid, double center, double width) {
  check_grid(grid);
  if (!(width > 0.0)) throw Error("GridOrbital::gaussian: width must be > 0");
  Vector v(grid.n_cells);
  for (int k = 0; k < grid.n_cells; ++k) {
    const double z = (static_cast<double>(k) - center) / width;
    v(k) = std::exp(-0.5 * z * z);
  }
  v /= v.norm() * std::sqrt(grid.delta);
  return GridOrbital(grid, std::move(v));
}

GridOrbital bonding_orbital(const SpatialGrid& grid) {
  check_grid(grid);
  const double span = grid.n_cells - 1.0;
  const GridOrbital w0 = GridOrbital::gaussian(grid, 0.3 * span, 0.2 * grid.n_cells);
  const GridOrbital w1 = GridOrbital::gaussian(grid, 0.7 * span, 0.2 * grid.n_cells);
  Vector v = w0.amplitudes() + w1.amplitudes();
  v /= v.norm() * std::sqrt(grid.delta);
  return GridOrbital(grid, std::move(v));
}

SingleParticleSpace grid_space(const SpatialGrid& grid) {
  check_grid(grid);
  return SingleParticleSpace::orbital_spin(grid.n_cells, 2);
}

TwoParticleWavefunction doubly_occupied(const GridOrbital& u) {
  return slater_determinant(grid_space(u.grid()), embed(u, Spin::up), embed(u, Spin::down));
}

TwoParticleWavefunction aligned_spin_pair(const GridOrbital& phi1, const GridOrbital& phi2) {
  if (phi1.grid().n_cells != phi2.grid().n_cells)
    throw DimensionMismatch("aligned_spin_pair: grids differ");
  return slater_determinant(grid_space(phi1.grid()), embed(phi1, Spin::up),
                            embed(phi2, Spin::up));
}

Matrix spin_density_single(const SpatialGrid& grid, int cell) {
  check_grid(grid);
  check_cell(grid, cell);
  Matrix m = Matrix::Zero(2 * grid.n_cells, 2 * grid.n_cells);
  m(grid_mode(cell, Spin::up), grid_mode(cell, Spin::up)) = 1.0 / grid.delta;
  m(grid_mode(cell, Spin::down), grid_mode(cell, Spin::down)) = -1.0 / grid.delta;
  return m;
}

ParticleObservable spin_density_op(const SpatialGrid& grid, int cell) {
  const Matrix m = spin_density_single(grid, cell);
  return ParticleObservable::on_first(m) + ParticleObservable::on_second(m);
}

Operator spin_density_op_fock(const SpatialGrid& grid, int cell, const FockBasis& basis) {
  check_grid(grid);
  check_cell(grid, cell);
  if (basis.n_modes() != 2 * grid.n_cells)
    throw BasisMismatch("spin_density_op_fock: basis does not match grid modes");
  const int up = grid_mode(cell, Spin::up);
  const int down = grid_mode(cell, Spin::down);
  const Operator nu = bilinear(basis, up, up);
  const Operator nd = bilinear(basis, down, down);
  return Complex(1.0 / grid.delta) * (nu - nd);
}

Coincidence coincidence_correlator(const TwoParticleWavefunction& psi, const SpatialGrid& grid,
                                   int cell_a, int cell_b) {
  check_grid(grid);
  check_cell(grid, cell_a);
  check_cell(grid, cell_b);
  if (cell_a == cell_b) throw Error("coincidence_correlator: cells must differ");
  if (psi.dim() != 2 * grid.n_cells)
    throw DimensionMismatch("coincidence_correlator: state does not match grid");

  const Matrix sa = spin_density_single(grid, cell_a);
  const Matrix sb = spin_density_single(grid, cell_b);
  Matrix da = Matrix::Zero(psi.dim(), psi.dim());
  Matrix db = Matrix::Zero(psi.dim(), psi.dim());
  for (Spin s : {Spin::up, Spin::down}) {
    da(grid_mode(cell_a, s), grid_mode(cell_a, s)) = 1.0 / grid.delta;
    db(grid_mode(cell_b, s), grid_mode(cell_b, s)) = 1.0 / grid.delta;
  }

  const ParticleObservable num_op =
      ParticleObservable::product(sa, sb) + ParticleObservable::product(sb, sa);
  const ParticleObservable den_op =
      ParticleObservable::product(da, db) + ParticleObservable::product(db, da);

  Coincidence out;
  out.numerator = particle_expectation(psi, num_op).real();
  out.denominator = particle_expectation(psi, den_op).real();
  if (out.denominator < 1e-14)
    throw ZeroDensity("coincidence_correlator: no joint density at this cell pair");
  out.conditional = out.numerator / out.denominator;
  return out;
}

}  // namespace fent
