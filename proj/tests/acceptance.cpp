// Acceptance suite: end-to-end checks of every pinned result, one line per
// criterion. Exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "fent/entangle.hpp"
#include "fent/hubbard.hpp"
#include "fent/slater.hpp"
#include "fent/spindensity.hpp"
#include "fent/sweep.hpp"
#include "test_support.hpp"

using namespace fent;

namespace {

int failures = 0;

void report(int index, bool pass, const char* what, double worst) {
  std::printf("[%d/8] %s  %s (worst %.3e)\n", index, pass ? "PASS" : "FAIL", what, worst);
  if (!pass) ++failures;
}

std::vector<double> acceptance_grid() { return sweep_grid(0.0, 100.0, 25, false); }

void criterion_1_electron_spin_correlation() {
  double worst = 0.0;
  for (double x : acceptance_grid())
    worst = std::max(worst,
                     std::abs(pair_correlation(x, ObservablePair::electron_spins) + 1.0));
  report(1, worst <= 1e-10, "electron-spin correlation is -1 across the grid", worst);
}

void criterion_2_site_spin_closed_form() {
  double worst = 0.0;
  for (double x : acceptance_grid()) {
    const double c = pair_correlation(x, ObservablePair::site_spins).real();
    worst = std::max(worst, std::abs(c - closed_form(x).c_site_spins));
  }
  const double at0 = pair_correlation(0.0, ObservablePair::site_spins).real();
  const bool pass = worst <= 1e-9 && std::abs(at0 + 0.5) <= 1e-9;
  report(2, pass, "site-spin correlation matches -1/(1+f^2), -1/2 at x=0", worst);
}

void criterion_3_bonding_degree(const PairMaxima& maxima) {
  double worst = 0.0;
  double e0 = 0.0, e100 = 0.0;
  for (double x : acceptance_grid()) {
    const double e = std::abs(pair_correlation(x, ObservablePair::bonding_numbers)) /
                     maxima.bonding_numbers.max_abs;
    worst = std::max(worst, std::abs(e - closed_form(x).e_bonding_numbers));
    if (x == 0.0) e0 = e;
    if (x == 100.0) e100 = e;
  }
  const bool pass = worst <= 1e-6 && e0 <= 1e-10 && e100 > 0.99;
  report(3, pass, "bonding-number degree matches 4g(1-g), 0 at x=0, >0.99 at x=100", worst);
}

void criterion_4_site_number_closed_form() {
  double worst = 0.0;
  for (double x : acceptance_grid()) {
    const double c = pair_correlation(x, ObservablePair::site_numbers).real();
    worst = std::max(worst, std::abs(c - closed_form(x).c_site_numbers));
  }
  const double at0 = pair_correlation(0.0, ObservablePair::site_numbers).real();
  const double far = std::abs(pair_correlation(1e4, ObservablePair::site_numbers));
  const bool pass = worst <= 1e-9 && std::abs(at0 + 0.5) <= 1e-9 && far < 1e-4;
  report(4, pass, "site-number correlation matches -f^2/(1+f^2), small at x=1e4", worst);
}

void criterion_5_normalizing_maxima(const PairMaxima& maxima) {
  const double stated[] = {1.0, 1.0, 0.25, 1.0};
  const MaxResult* results[] = {&maxima.electron_spins, &maxima.site_spins,
                                &maxima.bonding_numbers, &maxima.site_numbers};
  double worst = 0.0;
  bool pass = true;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(results[i]->max_abs - stated[i]));
    if (std::abs(results[i]->max_abs - stated[i]) > 1e-6) pass = false;
    if (results[i]->diagnostics.oracle_gap < -1e-6) pass = false;
  }
  report(5, pass, "optimizer maxima equal {1, 1, 1/4, 1} and beat the sampling oracle",
         worst);
}

void criterion_6_inconsistency_exhibit() {
  const auto gs0 = ground_state(build_hamiltonian(HubbardParams::from_x(0.0)));
  const auto d0 = from_second_quantized(gs0.state, hubbard_labeled_space());
  const SlaterAnalysis rank0 = slater_rank(d0);
  const double c_spin =
      std::abs(correlation(d0, electron_spin_z(1), electron_spin_z(2)));

  const auto gs_far = ground_state(build_hamiltonian(HubbardParams::from_x(1e4)));
  const auto psi_far = from_second_quantized(gs_far.state, hubbard_labeled_space());
  const SlaterAnalysis rank_far = slater_rank(psi_far);
  const FockBasis basis = hubbard_basis();
  const double c_number = std::abs(correlation(
      gs_far.state, site_number(basis, 0), site_number(basis, 1)));

  const bool pass = rank0.rank == 1 && rank0.pfaffian_residual <= 1e-12 &&
                    std::abs(c_spin - 1.0) <= 1e-10 && rank_far.rank == 2 &&
                    c_number <= 1e-4;
  report(6, pass, "rank-1 state with |C_spin| = 1; rank-2 state with |C_number| ~ 0",
         std::max(std::abs(c_spin - 1.0), rank0.pfaffian_residual));
}

void criterion_7_epr_coincidence() {
  const SpatialGrid grid{16, 1.0};
  const auto d0 = doubly_occupied(bonding_orbital(grid));
  double lo = 1e300, hi = -1e300;
  for (int a = 0; a < grid.n_cells; ++a) {
    for (int b = 0; b < grid.n_cells; ++b) {
      if (a == b) continue;
      const double c = coincidence_correlator(d0, grid, a, b).conditional;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const double worst = std::max(std::abs(lo + 1.0), std::abs(hi + 1.0));
  report(7, worst <= 1e-10 && (hi - lo) <= 1e-10,
         "conditional coincidence equals -1, independent of the detector pair", worst);
}

void criterion_8_property_suite() {
  testing::Rng rng(42);
  const FockBasis basis(4, 2);
  bool pass = true;
  double worst = 0.0;

  // Conjugate symmetry of the correlation, 200 random triples.
  for (int rep = 0; rep < 200; ++rep) {
    StateVector psi(basis, testing::random_unit(rng, 6));
    const Operator a(basis, testing::random_hermitian(rng, 6));
    const Operator b(basis, testing::random_hermitian(rng, 6));
    const double dev =
        std::abs(correlation(psi, a, b) - std::conj(correlation(psi, b, a)));
    worst = std::max(worst, dev);
    if (dev > 1e-12) pass = false;
  }

  // Eigenstate of A implies |C| below 10 * tol * ||B||, 100 cases.
  const double tol = 1e-10;
  for (int rep = 0; rep < 100; ++rep) {
    const Matrix am = testing::random_hermitian(rng, 6);
    const Operator a(basis, am);
    const Operator b(basis, testing::random_hermitian(rng, 6));
    const Eigen::SelfAdjointEigenSolver<Matrix> es(am);
    StateVector psi(basis, es.eigenvectors().col(rep % 6));
    if (!is_eigenstate(psi, a, tol)) {
      pass = false;
      continue;
    }
    if (std::abs(correlation(psi, a, b)) > 10.0 * tol * b.matrix().norm()) pass = false;
  }

  // Analytic gradient against central differences, 100 random points.
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 4 + 2 * (rep % 2);
    const Matrix a = testing::random_hermitian(rng, n);
    const Matrix b = testing::random_hermitian(rng, n);
    const Matrix g = a * b;
    RealVector v(2 * n);
    for (int i = 0; i < 2 * n; ++i) v(i) = normal(rng);
    v.normalize();
    const RealVector grad = correlation_objective_gradient(g, a, b, v);
    RealVector fd(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      RealVector vp = v, vm = v;
      vp(i) += 1e-5;
      vm(i) -= 1e-5;
      fd(i) = (correlation_objective(g, a, b, vp) - correlation_objective(g, a, b, vm)) /
              2e-5;
    }
    const double rel = (grad - fd).norm() / std::max(grad.norm(), 1e-12);
    worst = std::max(worst, rel);
    if (rel > 1e-6) pass = false;
  }

  // Antisymmetry and isometry of the labeled-particle mapping, 50 states.
  for (int rep = 0; rep < 50; ++rep) {
    const Vector u = testing::random_unit(rng, 6);
    const Vector v = testing::random_unit(rng, 6);
    const auto wu = from_second_quantized(StateVector(basis, u));
    const auto wv = from_second_quantized(StateVector(basis, v));
    if ((wu.w() + wu.w().transpose()).norm() > 1e-12) pass = false;
    const Complex sector = u.dot(v);
    const Complex labeled = (wu.w().conjugate().cwiseProduct(wv.w())).sum();
    if (std::abs(sector - labeled) > 1e-12) pass = false;
  }

  // Slater-rank invariance under 20 random mode unitaries.
  const SingleParticleSpace space = SingleParticleSpace::plain(4);
  const Matrix raw = testing::random_complex_matrix(rng, 4);
  Matrix w0 = raw - raw.transpose();
  w0 /= w0.norm();
  const int base_rank = slater_rank(TwoParticleWavefunction(space, w0)).rank;
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix u = testing::random_unitary(rng, 4);
    const int rank =
        slater_rank(TwoParticleWavefunction(space, u * w0 * u.transpose())).rank;
    if (rank != base_rank) pass = false;
  }

  report(8, pass, "property suite (symmetry, eigenstates, gradient, mapping, rank)", worst);
}

}  // namespace

int main() {
  MaxOptions options;
  options.seed = 42;
  const PairMaxima maxima = compute_pair_maxima(options);

  criterion_1_electron_spin_correlation();
  criterion_2_site_spin_closed_form();
  criterion_3_bonding_degree(maxima);
  criterion_4_site_number_closed_form();
  criterion_5_normalizing_maxima(maxima);
  criterion_6_inconsistency_exhibit();
  criterion_7_epr_coincidence();
  criterion_8_property_suite();

  std::printf("%d/8 acceptance criteria passed\n", 8 - failures);
  return failures;
}
