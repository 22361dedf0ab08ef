#include <doctest.h>

#include <array>

#include "fent/entangle.hpp"
#include "fent/hubbard.hpp"
#include "fent/jacobi.hpp"
#include "test_support.hpp"

using namespace fent;

namespace {

// Singlet-sector ground energy by hand: E = U/2 - sqrt((U/2)^2 + 4 t^2).
double exact_ground_energy(double t, double u) {
  return 0.5 * u - std::sqrt(0.25 * u * u + 4.0 * t * t);
}

}  // namespace

TEST_CASE("noninteracting ground state fills the bonding orbital") {
  const Operator h = build_hamiltonian({1.0, 0.0});
  CHECK(h.hermitian());
  const GroundStateResult gs = ground_state(h);
  CHECK(std::abs(gs.energy + 2.0) <= 1e-12);
  CHECK_FALSE(gs.degenerate);

  const StateVector d0 = testing::bonding_determinant_state(hubbard_basis());
  const Complex overlap = d0.amplitudes().dot(gs.state.amplitudes());
  CHECK(std::abs(std::abs(overlap) - 1.0) <= 1e-12);
}

TEST_CASE("zero hopping leaves a degenerate ground manifold") {
  const GroundStateResult gs = ground_state(build_hamiltonian({0.0, 3.0}));
  CHECK(gs.degenerate);
  CHECK(std::abs(gs.energy) <= 1e-12);
}

TEST_CASE("ground energy matches the closed 2x2 reduction") {
  testing::Rng rng(21);
  std::uniform_real_distribution<double> td(0.05, 2.0), ud(0.0, 10.0);
  for (int rep = 0; rep < 50; ++rep) {
    const double t = td(rng), u = ud(rng);
    const GroundStateResult gs = ground_state(build_hamiltonian({t, u}));
    CHECK(std::abs(gs.energy - exact_ground_energy(t, u)) <= 1e-11);
    CHECK(gs.residual <= 1e-10);
  }
}

TEST_CASE("spectrum is invariant under site relabeling") {
  for (double u : {0.0, 1.0, 7.3}) {
    const EigenSystem direct = jacobi_hermitian(build_hamiltonian({1.0, u}).matrix());
    // Relabel sites by swapping hopping roles; the Hamiltonian is identical,
    // so compare against an independently assembled swapped version.
    const FockBasis basis = hubbard_basis();
    Matrix swapped = Matrix::Zero(6, 6);
    for (Spin s : {Spin::up, Spin::down}) {
      const Matrix hop = bilinear(basis, hubbard_mode(1, s), hubbard_mode(0, s)).matrix();
      swapped -= 1.0 * (hop + hop.adjoint());
    }
    for (int site : {1, 0}) {
      const Matrix nu =
          bilinear(basis, hubbard_mode(site, Spin::up), hubbard_mode(site, Spin::up)).matrix();
      const Matrix nd = bilinear(basis, hubbard_mode(site, Spin::down),
                                 hubbard_mode(site, Spin::down)).matrix();
      swapped += u * (nu * nd);
    }
    const EigenSystem other = jacobi_hermitian(swapped);
    for (int i = 0; i < 6; ++i)
      CHECK(std::abs(direct.values(i) - other.values(i)) <= 1e-12);
  }
}

TEST_CASE("strong coupling pins one electron per site") {
  const GroundStateResult gs = ground_state(build_hamiltonian(HubbardParams::from_x(1e4)));
  CHECK(gs.residual <= 1e-10);  // tightest case: ||H|| ~ 6e4
  const FockBasis basis = hubbard_basis();
  CHECK(std::abs(expectation(gs.state, site_number(basis, 0)).real() - 1.0) <= 1e-7);
  CHECK(std::abs(expectation(gs.state, site_number(basis, 1)).real() - 1.0) <= 1e-7);
  const Complex c = expectation(gs.state, site_number(basis, 0) * site_number(basis, 1)) -
                    expectation(gs.state, site_number(basis, 0)) *
                        expectation(gs.state, site_number(basis, 1));
  CHECK(std::abs(c) < 1e-4);
}

TEST_CASE("total site spin annihilates the singlet-sector ground state") {
  const FockBasis basis = hubbard_basis();
  const Operator total = site_spin_z(basis, 0) + site_spin_z(basis, 1);
  for (double x : {0.0, 0.5, 2.0}) {
    const GroundStateResult gs = ground_state(build_hamiltonian(HubbardParams::from_x(x)));
    CHECK((total.matrix() * gs.state.amplitudes()).norm() <= 1e-12);
  }
}

TEST_CASE("occupation-number bookkeeping on the sector") {
  const FockBasis basis = hubbard_basis();
  // Bonding + antibonding occupations exhaust the two electrons.
  Matrix anti = Matrix::Zero(6, 6);
  for (Spin s : {Spin::up, Spin::down}) {
    const int m0 = hubbard_mode(0, s), m1 = hubbard_mode(1, s);
    anti += 0.5 * (bilinear(basis, m0, m0).matrix() + bilinear(basis, m1, m1).matrix() -
                   bilinear(basis, m0, m1).matrix() - bilinear(basis, m1, m0).matrix());
  }
  const Matrix bonding = bonding_number(basis, Spin::up).matrix() +
                         bonding_number(basis, Spin::down).matrix();
  CHECK((bonding + anti - 2.0 * Matrix::Identity(6, 6)).norm() <= 1e-12);

  const EigenSystem n1 = jacobi_hermitian(site_number(basis, 0).matrix());
  RealVector expected(6);
  expected << 0, 1, 1, 1, 1, 2;
  for (int i = 0; i < 6; ++i) CHECK(std::abs(n1.values(i) - expected(i)) <= 1e-12);
}

TEST_CASE("closed forms at pinned couplings") {
  const ClosedForm at0 = closed_form(0.0);
  CHECK(at0.f == 1.0);
  CHECK(std::abs(at0.c_site_spins + 0.5) <= 1e-15);
  CHECK(std::abs(at0.e_bonding_numbers) <= 1e-15);
  CHECK(std::abs(at0.c_site_numbers + 0.5) <= 1e-15);

  // x = 1 values fixed from sqrt(2) arithmetic: f = sqrt(2) - 1,
  // C_site = -(2+sqrt(2))/4, C_number = C_site + 1, E_bonding = 1/2.
  const ClosedForm at1 = closed_form(1.0);
  CHECK(std::abs(at1.f - 0.41421356237309515) <= 1e-15);
  CHECK(std::abs(at1.c_site_spins + 0.85355339059327373) <= 1e-15);
  CHECK(std::abs(at1.c_site_numbers + 0.14644660940672624) <= 1e-15);
  CHECK(std::abs(at1.e_bonding_numbers - 0.5) <= 1e-14);
  CHECK(std::abs(at1.g - 0.85355339059327373) <= 1e-15);

  const ClosedForm far = closed_form(100.0);
  CHECK(far.e_bonding_numbers > 0.99);
  CHECK(std::abs(far.c_site_numbers) < 1e-4);

  double prev = -1.0;
  for (double x = 0.0; x <= 50.0; x += 0.5) {
    const double e = closed_form(x).e_bonding_numbers;
    CHECK(e >= prev - 1e-12);
    prev = e;
  }
}

TEST_CASE("results are invariant under an alternative mode ordering") {
  // Spin-major ordering instead of the canonical site-major one.
  const auto alt_mode = [](int site, Spin s) { return site + 2 * static_cast<int>(s); };
  const FockBasis basis(4, 2);
  for (double x : {0.0, 1.0, 5.0}) {
    const HubbardParams p = HubbardParams::from_x(x);
    Matrix h = Matrix::Zero(6, 6);
    for (Spin s : {Spin::up, Spin::down}) {
      const Matrix hop = bilinear(basis, alt_mode(0, s), alt_mode(1, s)).matrix();
      h -= p.t * (hop + hop.adjoint());
    }
    std::array<Matrix, 2> number;
    for (int site : {0, 1}) {
      const Matrix nu =
          bilinear(basis, alt_mode(site, Spin::up), alt_mode(site, Spin::up)).matrix();
      const Matrix nd =
          bilinear(basis, alt_mode(site, Spin::down), alt_mode(site, Spin::down)).matrix();
      h += p.u * (nu * nd);
      number[static_cast<size_t>(site)] = nu + nd;
    }
    const GroundStateResult alt = ground_state(Operator(basis, h));
    const GroundStateResult canonical = ground_state(build_hamiltonian(p));
    CHECK(std::abs(alt.energy - canonical.energy) <= 1e-12);

    const Operator n0(basis, number[0]);
    const Operator n1(basis, number[1]);
    const Complex c_alt = correlation(alt.state, n0, n1);
    const Complex c_canonical = correlation(canonical.state, site_number(basis, 0),
                                            site_number(basis, 1));
    CHECK(std::abs(c_alt - c_canonical) <= 1e-12);
  }
}

TEST_CASE("parameter plumbing") {
  CHECK(HubbardParams::from_x(2.5).u == doctest::Approx(10.0));
  const HubbardParams balanced{2.0, 4.0};
  CHECK(balanced.x() == doctest::Approx(0.5));
  const HubbardParams no_hopping{0.0, 1.0};
  CHECK_THROWS_AS((void)no_hopping.x(), Error);
  CHECK_THROWS_AS((void)HubbardParams::from_x(-1.0), Error);
  CHECK_THROWS_AS((void)closed_form(-0.5), Error);
}
