#include "fent/verify.hpp"

#include <cmath>
#include <random>

#include "fent/entangle.hpp"
#include "fent/hubbard.hpp"
#include "fent/jacobi.hpp"
#include "fent/slater.hpp"
#include "fent/spindensity.hpp"
#include "fent/sweep.hpp"

namespace fent {

namespace {

using Rng = std::mt19937_64;

Vector random_gaussian_vector(Rng& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v;
}

Vector random_unit(Rng& rng, int n) {
  Vector v = random_gaussian_vector(rng, n);
  return v / v.norm();
}

Matrix random_complex_matrix(Rng& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

Matrix random_hermitian(Rng& rng, int n) {
  const Matrix m = random_complex_matrix(rng, n);
  return 0.5 * (m + m.adjoint());
}

Matrix random_unitary(Rng& rng, int n) {
  const Eigen::HouseholderQR<Matrix> qr(random_complex_matrix(rng, n));
  Matrix q = qr.householderQ();
  return q;
}

Matrix random_antisymmetric(Rng& rng, int n) {
  const Matrix m = random_complex_matrix(rng, n);
  Matrix w = m - m.transpose();
  return w / w.norm();
}

std::pair<Vector, Vector> random_orthonormal_pair(Rng& rng, int n) {
  Vector a = random_unit(rng, n);
  Vector b = random_gaussian_vector(rng, n);
  b -= a * a.dot(b);
  b /= b.norm();
  return {a, b};
}

CheckResult make(const std::string& name, bool pass, double worst) {
  return {name, pass, "worst deviation " + format_number(worst)};
}

CheckResult check_creation_anticommutation() {
  double worst = 0.0;
  bool pass = true;
  for (std::uint32_t occ = 0; occ < 16; ++occ) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (a == b) continue;
        const auto fa = apply_creation(occ, a);
        const auto ab = fa ? apply_creation(fa->occ, b) : std::optional<SignedState>{};
        const auto fb = apply_creation(occ, b);
        const auto ba = fb ? apply_creation(fb->occ, a) : std::optional<SignedState>{};
        if (ab.has_value() != ba.has_value()) pass = false;
        if (ab && ba) {
          if (ab->occ != ba->occ) pass = false;
          const int s1 = fa->sign * ab->sign;
          const int s2 = fb->sign * ba->sign;
          if (s1 != -s2) pass = false;
        }
      }
    }
  }
  return make("fock-creation-anticommutation", pass, worst);
}

CheckResult check_roundtrip() {
  bool pass = true;
  for (std::uint32_t occ = 0; occ < 16; ++occ) {
    for (int m = 0; m < 4; ++m) {
      const auto ann = apply_annihilation(occ, m);
      if (!ann) continue;
      const auto cre = apply_creation(ann->occ, m);
      if (!cre || cre->occ != occ || ann->sign * cre->sign != 1) pass = false;
    }
  }
  return make("fock-annihilate-create-roundtrip", pass, 0.0);
}

CheckResult check_basis_deterministic() {
  const FockBasis a(6, 3);
  const FockBasis b(6, 3);
  bool pass = a.size() == 20 && b.size() == 20;
  for (int i = 0; pass && i < a.size(); ++i) pass = a.state(i) == b.state(i);
  return make("fock-basis-deterministic", pass, 0.0);
}

CheckResult check_bilinear_adjoint() {
  const FockBasis basis(4, 2);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      worst = std::max(worst, (adjoint(bilinear(basis, a, b)).matrix() -
                               bilinear(basis, b, a).matrix()).norm());
  return make("fock-bilinear-adjoint", worst <= 1e-12, worst);
}

CheckResult check_hermitian_expectation_real(Rng& rng) {
  const FockBasis basis(4, 2);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    StateVector psi(basis, random_unit(rng, basis.size()));
    const Operator a(basis, random_hermitian(rng, basis.size()));
    worst = std::max(worst, std::abs(expectation(psi, a).imag()));
  }
  return make("fock-hermitian-expectation-real", worst <= 1e-12, worst);
}

CheckResult check_antisymmetry_preserved(Rng& rng) {
  double worst = 0.0;
  const FockBasis basis(4, 2);
  for (int rep = 0; rep < 50; ++rep) {
    const auto w = antisymmetrize(SingleParticleSpace::plain(5), random_complex_matrix(rng, 5));
    worst = std::max(worst, (w.w() + w.w().transpose()).norm());
    const auto m = from_second_quantized(StateVector(basis, random_unit(rng, basis.size())));
    worst = std::max(worst, (m.w() + m.w().transpose()).norm());
  }
  return make("firstq-antisymmetry-preserved", worst <= 1e-12, worst);
}

CheckResult check_mapping_isometry(Rng& rng) {
  const FockBasis basis(4, 2);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const Vector u = random_unit(rng, basis.size());
    const Vector v = random_unit(rng, basis.size());
    const auto wu = from_second_quantized(StateVector(basis, u));
    const auto wv = from_second_quantized(StateVector(basis, v));
    const Complex lhs = u.dot(v);
    const Complex rhs = (wu.w().conjugate().cwiseProduct(wv.w())).sum();
    worst = std::max(worst, std::abs(lhs - rhs));
    worst = std::max(worst, std::abs(wu.norm() - 1.0));
  }
  return make("firstq-mapping-isometry", worst <= 1e-12, worst);
}

CheckResult check_exchange_symmetry(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const TwoParticleWavefunction psi(SingleParticleSpace::plain(4),
                                      random_antisymmetric(rng, 4));
    const Matrix m = random_hermitian(rng, 4);
    const Complex e1 = particle_expectation(psi, ParticleObservable::on_first(m));
    const Complex e2 = particle_expectation(psi, ParticleObservable::on_second(m));
    worst = std::max(worst, std::abs(e1 - e2));
  }
  return make("firstq-exchange-symmetry", worst <= 1e-12, worst);
}

CheckResult check_slater_rdm(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto [a, b] = random_orthonormal_pair(rng, 6);
    const auto d = slater_determinant(SingleParticleSpace::plain(6), a, b);
    const EigenSystem es = jacobi_hermitian(one_body_rdm(d));
    for (int i = 0; i < 6; ++i) {
      const double expect = (i >= 4) ? 0.5 : 0.0;
      worst = std::max(worst, std::abs(es.values(i) - expect));
    }
  }
  return make("firstq-slater-rdm-two-half-eigenvalues", worst <= 1e-10, worst);
}

CheckResult check_closed_forms(const PairMaxima& maxima) {
  double worst = 0.0;
  for (double x : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0, 100.0}) {
    const SweepRow row = evaluate_sweep_row(x, maxima);
    worst = std::max(worst, row.err_max);
  }
  return make("hubbard-closed-form-agreement", worst <= 1e-9, worst);
}

CheckResult check_ground_residuals(Rng& rng) {
  std::uniform_real_distribution<double> td(0.05, 2.0), ud(0.0, 10.0);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const GroundStateResult gs = ground_state(build_hamiltonian({td(rng), ud(rng)}));
    worst = std::max(worst, gs.residual);
  }
  return make("hubbard-ground-state-residual", worst <= 1e-10, worst);
}

CheckResult check_site_swap(Rng& rng) {
  // Signed permutation that relabels site 0 <-> site 1 commutes with H.
  const FockBasis basis = hubbard_basis();
  Matrix p = Matrix::Zero(basis.size(), basis.size());
  const auto perm = [](int m) { return (m + 2) % 4; };
  for (int j = 0; j < basis.size(); ++j) {
    const std::uint32_t occ = basis.state(j);
    int modes[2], k = 0;
    for (int m = 0; m < 4; ++m)
      if (occ & (1u << m)) modes[k++] = m;
    int a = perm(modes[0]), b = perm(modes[1]);
    double sign = 1.0;
    if (a > b) {
      std::swap(a, b);
      sign = -1.0;
    }
    const int i = basis.index_of((1u << a) | (1u << b));
    p(i, j) = sign;
  }
  std::uniform_real_distribution<double> ud(0.0, 10.0);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix h = build_hamiltonian({1.0, ud(rng)}).matrix();
    worst = std::max(worst, (p.adjoint() * h * p - h).norm());
  }
  return make("hubbard-site-swap-invariance", worst <= 1e-12, worst);
}

CheckResult check_ground_factorization() {
  // w of the ground state = (symmetric spatial) x singlet.
  double worst = 0.0;
  const Matrix chi = singlet().w();
  for (double x : {0.0, 0.5, 1.0, 3.0, 50.0}) {
    const GroundStateResult gs = ground_state(build_hamiltonian(HubbardParams::from_x(x)));
    const Matrix w = from_second_quantized(gs.state, hubbard_labeled_space()).w();
    Matrix spatial(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        spatial(i, j) = w(hubbard_mode(i, Spin::up), hubbard_mode(j, Spin::down)) /
                        chi(0, 1);
    worst = std::max(worst, (spatial - spatial.transpose()).norm());
    Matrix rebuilt(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            rebuilt(2 * i + s, 2 * j + t) = spatial(i, j) * chi(s, t);
    worst = std::max(worst, (rebuilt - w).norm());
  }
  return make("hubbard-ground-state-spatial-times-singlet", worst <= 1e-10, worst);
}

CheckResult check_e_bonding_monotone(const PairMaxima& maxima) {
  double prev = -1.0;
  bool pass = true;
  for (double x : sweep_grid(0.0, 20.0, 41, false)) {
    const double e = std::abs(pair_correlation(x, ObservablePair::bonding_numbers)) /
                     maxima.bonding_numbers.max_abs;
    if (e < prev - 1e-10) pass = false;
    prev = e;
  }
  return make("hubbard-degree-bonding-monotone", pass, 0.0);
}

CheckResult check_conjugate_symmetry(Rng& rng) {
  const FockBasis basis(4, 2);
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    StateVector psi(basis, random_unit(rng, basis.size()));
    const Operator a(basis, random_hermitian(rng, basis.size()));
    const Operator b(basis, random_hermitian(rng, basis.size()));
    worst = std::max(worst,
                     std::abs(correlation(psi, a, b) - std::conj(correlation(psi, b, a))));
  }
  return make("entangle-conjugate-symmetry", worst <= 1e-12, worst);
}

CheckResult check_eigenstate_zero(Rng& rng) {
  const FockBasis basis(4, 2);
  const double tol = 1e-10;
  double worst = 0.0;
  bool pass = true;
  for (int rep = 0; rep < 100; ++rep) {
    const Matrix am = random_hermitian(rng, basis.size());
    const EigenSystem es = jacobi_hermitian(am);
    const Operator a(basis, am);
    const Operator b(basis, random_hermitian(rng, basis.size()));
    StateVector psi(basis, es.vectors.col(rep % basis.size()));
    if (!is_eigenstate(psi, a, tol)) {
      pass = false;
      continue;
    }
    const double bound = 10.0 * tol * b.matrix().norm();
    const double c = std::abs(correlation(psi, a, b));
    worst = std::max(worst, c / bound);
    if (c > bound) pass = false;
  }
  return {"entangle-eigenstate-implies-uncorrelated", pass,
          "worst |C|/bound " + format_number(worst)};
}

CheckResult check_gradient(Rng& rng) {
  const double h = 1e-5;
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = (rep % 2 == 0) ? 4 : 6;
    const Matrix a = random_hermitian(rng, n);
    const Matrix b = random_hermitian(rng, n);
    const Matrix g = a * b;
    RealVector v(2 * n);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < 2 * n; ++i) v(i) = normal(rng);
    v.normalize();
    const RealVector grad = correlation_objective_gradient(g, a, b, v);
    RealVector fd(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      RealVector vp = v, vm = v;
      vp(i) += h;
      vm(i) -= h;
      fd(i) = (correlation_objective(g, a, b, vp) - correlation_objective(g, a, b, vm)) /
              (2.0 * h);
    }
    const double scale = std::max(grad.norm(), 1e-12);
    worst = std::max(worst, (grad - fd).norm() / scale);
  }
  return {"entangle-gradient-matches-finite-difference", worst <= 1e-6,
          "worst relative error " + format_number(worst)};
}

CheckResult check_stated_maxima(const PairMaxima& maxima) {
  const double expect[] = {1.0, 1.0, 0.25, 1.0};
  const MaxResult* results[] = {&maxima.electron_spins, &maxima.site_spins,
                                &maxima.bonding_numbers, &maxima.site_numbers};
  double worst = 0.0;
  bool pass = true;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(results[i]->max_abs - expect[i]));
    if (std::abs(results[i]->max_abs - expect[i]) > 1e-6) pass = false;
    if (results[i]->diagnostics.oracle_gap < -1e-6) pass = false;
    if (!results[i]->diagnostics.converged) pass = false;
  }
  return make("entangle-optimizer-stated-maxima", pass, worst);
}

CheckResult check_scale_covariance(Rng& rng) {
  const FockBasis basis(4, 2);
  std::uniform_real_distribution<double> sd(0.25, 4.0);
  double worst = 0.0;
  MaxOptions opts;
  opts.restarts = 24;
  opts.oracle_samples = 2000;
  for (int rep = 0; rep < 5; ++rep) {
    StateVector psi(basis, random_unit(rng, basis.size()));
    const Matrix am = random_hermitian(rng, basis.size());
    const Matrix bm = random_hermitian(rng, basis.size());
    const double alpha = sd(rng), beta = sd(rng);
    const Operator a(basis, am), b(basis, bm);
    const Operator as(basis, alpha * am), bs(basis, beta * bm);
    const Complex c = correlation(psi, a, b);
    const Complex cs = correlation(psi, as, bs);
    worst = std::max(worst, std::abs(cs - alpha * beta * c));
    const double m = max_abs_correlation(a, b, opts).max_abs;
    const double ms = max_abs_correlation(as, bs, opts).max_abs;
    worst = std::max(worst, std::abs(ms - alpha * beta * m) / std::max(1.0, alpha * beta * m));
  }
  return make("entangle-scale-covariance", worst <= 1e-8, worst);
}

CheckResult check_slater_basis_invariance(Rng& rng) {
  double worst = 0.0;
  bool pass = true;
  const SingleParticleSpace space = SingleParticleSpace::plain(4);
  for (int rep = 0; rep < 20; ++rep) {
    const TwoParticleWavefunction psi(space, random_antisymmetric(rng, 4));
    const SlaterAnalysis base = slater_rank(psi);
    const Matrix u = random_unitary(rng, 4);
    const TwoParticleWavefunction rotated(space, u * psi.w() * u.transpose());
    const SlaterAnalysis rot = slater_rank(rotated);
    if (rot.rank != base.rank) pass = false;
    for (size_t i = 0; i < base.canonical_pairs.size() && i < rot.canonical_pairs.size(); ++i)
      worst = std::max(worst, std::abs(base.canonical_pairs[i].amplitude -
                                       rot.canonical_pairs[i].amplitude));
  }
  return make("slater-rank-basis-invariance", pass && worst <= 1e-9, worst);
}

CheckResult check_slater_pfaffian(Rng& rng) {
  const SingleParticleSpace space = SingleParticleSpace::plain(4);
  bool pass = true;
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto [a, b] = random_orthonormal_pair(rng, 4);
    const SlaterAnalysis one = slater_rank(slater_determinant(space, a, b));
    worst = std::max(worst, one.pfaffian_residual);
    if (one.rank != 1 || one.pfaffian_residual > 1e-12) pass = false;
    const TwoParticleWavefunction generic(space, random_antisymmetric(rng, 4));
    const SlaterAnalysis two = slater_rank(generic);
    if (two.pfaffian_residual > 1e-6 && two.rank != 2) pass = false;
  }
  return make("slater-pfaffian-rank-consistency", pass, worst);
}

CheckResult check_coincidence_routes() {
  const SpatialGrid grid{16, 1.0};
  const auto d0 = doubly_occupied(bonding_orbital(grid));
  const SingleParticleSpace space = grid_space(grid);
  Matrix sz = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < grid.n_cells; ++k) {
    sz(grid_mode(k, Spin::up), grid_mode(k, Spin::up)) = 1.0;
    sz(grid_mode(k, Spin::down), grid_mode(k, Spin::down)) = -1.0;
  }
  const Complex labeled = particle_expectation(
      d0, ParticleObservable::product(sz, sz));
  double lo = 1e300, hi = -1e300;
  for (int a = 0; a < grid.n_cells; ++a) {
    for (int b = 0; b < grid.n_cells; ++b) {
      if (a == b) continue;
      const double c = coincidence_correlator(d0, grid, a, b).conditional;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const double worst = std::max(std::abs(lo - labeled.real()), std::abs(hi - labeled.real()));
  const bool pass = worst <= 1e-10 && (hi - lo) <= 1e-10;
  return {"spindensity-coincidence-equals-labeled-spins", pass,
          "worst deviation " + format_number(worst) + ", spread " + format_number(hi - lo)};
}

CheckResult check_field_operator_equivalence() {
  double worst = 0.0;
  {
    const SpatialGrid grid{4, 0.7};
    const FockBasis basis(2 * grid.n_cells, 2);
    for (int k = 0; k < grid.n_cells; ++k) {
      const Matrix first = to_sector_operator(spin_density_op(grid, k), basis).matrix();
      const Matrix second = spin_density_op_fock(grid, k, basis).matrix();
      worst = std::max(worst, (first - second).cwiseAbs().maxCoeff());
    }
  }
  {
    const SpatialGrid grid{16, 1.0};
    const FockBasis basis(2 * grid.n_cells, 2);
    const Matrix first = to_sector_operator(spin_density_op(grid, 7), basis).matrix();
    const Matrix second = spin_density_op_fock(grid, 7, basis).matrix();
    worst = std::max(worst, (first - second).cwiseAbs().maxCoeff());
  }
  return make("spindensity-field-operator-equivalence", worst <= 1e-12, worst);
}

CheckResult check_density_completeness(Rng& rng) {
  const SpatialGrid grid{8, 0.5};
  const SingleParticleSpace space = grid_space(grid);
  Matrix total = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < grid.n_cells; ++k)
    total += grid.delta * spin_density_single(grid, k);
  Matrix sz = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < grid.n_cells; ++k) {
    sz(grid_mode(k, Spin::up), grid_mode(k, Spin::up)) = 1.0;
    sz(grid_mode(k, Spin::down), grid_mode(k, Spin::down)) = -1.0;
  }
  double worst = (total - sz).cwiseAbs().maxCoeff();
  // Exchange symmetry of the summed two-particle observable.
  const ParticleObservable op = spin_density_op(grid, 3);
  const Matrix w = random_complex_matrix(rng, space.dim);
  worst = std::max(worst,
                   (op.apply(w.transpose()).transpose() - op.apply(w)).cwiseAbs().maxCoeff());
  return make("spindensity-cell-completeness-and-symmetry", worst <= 1e-12, worst);
}

}  // namespace

std::vector<CheckResult> verification_suite(std::uint64_t seed) {
  Rng rng(seed);
  const PairMaxima maxima = compute_pair_maxima(MaxOptions{seed, 64, 1000000, 1e-10, 4000});

  std::vector<CheckResult> results;
  results.push_back(check_creation_anticommutation());
  results.push_back(check_roundtrip());
  results.push_back(check_basis_deterministic());
  results.push_back(check_bilinear_adjoint());
  results.push_back(check_hermitian_expectation_real(rng));
  results.push_back(check_antisymmetry_preserved(rng));
  results.push_back(check_mapping_isometry(rng));
  results.push_back(check_exchange_symmetry(rng));
  results.push_back(check_slater_rdm(rng));
  results.push_back(check_closed_forms(maxima));
  results.push_back(check_ground_residuals(rng));
  results.push_back(check_site_swap(rng));
  results.push_back(check_ground_factorization());
  results.push_back(check_e_bonding_monotone(maxima));
  results.push_back(check_conjugate_symmetry(rng));
  results.push_back(check_eigenstate_zero(rng));
  results.push_back(check_gradient(rng));
  results.push_back(check_stated_maxima(maxima));
  results.push_back(check_scale_covariance(rng));
  results.push_back(check_slater_basis_invariance(rng));
  results.push_back(check_slater_pfaffian(rng));
  results.push_back(check_coincidence_routes());
  results.push_back(check_field_operator_equivalence());
  results.push_back(check_density_completeness(rng));
  return results;
}

}  // namespace fent
