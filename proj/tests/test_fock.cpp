#include <doctest.h>

#include "fent/fock.hpp"
#include "fent/hubbard.hpp"
#include "test_support.hpp"

using namespace fent;

TEST_CASE("creation on the vacuum and Pauli exclusion") {
  const auto made = apply_creation(0b0000u, 0);
  REQUIRE(made.has_value());
  CHECK(made->sign == 1);
  CHECK(made->occ == 0b0001u);
  CHECK_FALSE(apply_creation(0b0001u, 0).has_value());
}

TEST_CASE("annihilation mirrors creation") {
  const auto gone = apply_annihilation(0b0001u, 0);
  REQUIRE(gone.has_value());
  CHECK(gone->sign == 1);
  CHECK(gone->occ == 0b0000u);
  CHECK_FALSE(apply_annihilation(0b0000u, 0).has_value());
}

TEST_CASE("opposite creation orders give opposite signs, all 4-mode states") {
  for (std::uint32_t occ = 0; occ < 16; ++occ) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (a == b) continue;
        const auto fa = apply_creation(occ, a);
        const auto ab = fa ? apply_creation(fa->occ, b) : std::optional<SignedState>{};
        const auto fb = apply_creation(occ, b);
        const auto ba = fb ? apply_creation(fb->occ, a) : std::optional<SignedState>{};
        REQUIRE(ab.has_value() == ba.has_value());
        if (ab) {
          CHECK(ab->occ == ba->occ);
          CHECK(fa->sign * ab->sign == -(fb->sign * ba->sign));
        }
      }
    }
  }
}

TEST_CASE("annihilate-then-create round trip is the identity") {
  for (std::uint32_t occ = 0; occ < 16; ++occ) {
    for (int m = 0; m < 4; ++m) {
      const auto ann = apply_annihilation(occ, m);
      if (!ann) continue;
      const auto cre = apply_creation(ann->occ, m);
      REQUIRE(cre.has_value());
      CHECK(cre->occ == occ);
      CHECK(ann->sign * cre->sign == 1);
    }
  }
}

TEST_CASE("basis enumeration is deterministic and canonically ordered") {
  const FockBasis a(4, 2);
  const FockBasis b(4, 2);
  REQUIRE(a.size() == 6);
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a.state(i) == b.state(i));
    if (i > 0) CHECK(a.state(i - 1) < a.state(i));
    CHECK(a.index_of(a.state(i)) == i);
  }
  CHECK(a.index_of(0b1111u) == -1);
  CHECK(FockBasis(6, 3).size() == 20);
  CHECK(FockBasis(32, 2).size() == 496);
}

TEST_CASE("number operator is diagonal occupancy") {
  const FockBasis basis(4, 2);
  const Operator n0 = bilinear(basis, 0, 0);
  CHECK(n0.hermitian());
  for (int j = 0; j < basis.size(); ++j) {
    const double occupied = (basis.state(j) & 1u) ? 1.0 : 0.0;
    CHECK(std::abs(n0.matrix()(j, j) - occupied) == 0.0);
    for (int i = 0; i < basis.size(); ++i)
      if (i != j) CHECK(std::abs(n0.matrix()(i, j)) == 0.0);
  }
}

TEST_CASE("bilinear adjoint swaps the mode pair") {
  const FockBasis basis(4, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK((adjoint(bilinear(basis, a, b)).matrix() - bilinear(basis, b, a).matrix())
                .norm() == 0.0);
}

TEST_CASE("anticommutator {c_a^dag, c_b} = delta_ab inside the sector") {
  const FockBasis basis(4, 2);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      // c_b c_a^dag assembled state by state.
      Matrix reversed = Matrix::Zero(basis.size(), basis.size());
      for (int j = 0; j < basis.size(); ++j) {
        const auto cre = apply_creation(basis.state(j), a);
        if (!cre) continue;
        const auto ann = apply_annihilation(cre->occ, b);
        if (!ann) continue;
        reversed(basis.index_of(ann->occ), j) +=
            static_cast<double>(cre->sign * ann->sign);
      }
      const Matrix anticommutator = bilinear(basis, a, b).matrix() + reversed;
      Matrix expected = Matrix::Zero(basis.size(), basis.size());
      if (a == b) expected = Matrix::Identity(basis.size(), basis.size());
      CHECK((anticommutator - expected).norm() <= 1e-14);
    }
  }
}

TEST_CASE("operator algebra identities") {
  testing::Rng rng(7);
  const FockBasis basis(4, 2);
  const Operator a(basis, testing::random_complex_matrix(rng, basis.size()));
  const Operator b(basis, testing::random_complex_matrix(rng, basis.size()));
  CHECK((adjoint(a * b).matrix() - (adjoint(b) * adjoint(a)).matrix()).norm() <= 1e-12);
  const Operator zero(basis, Matrix::Zero(basis.size(), basis.size()));
  CHECK(((a + zero).matrix() - a.matrix()).norm() == 0.0);

  const Operator n1 = site_number(basis, 0);
  const Operator n2 = site_number(basis, 1);
  CHECK((n1 * n2).hermitian());
  CHECK_FALSE(Operator(basis, testing::random_complex_matrix(rng, basis.size())).hermitian());
}

TEST_CASE("expectation values") {
  testing::Rng rng(11);
  const FockBasis basis(4, 2);
  StateVector psi(basis, testing::random_unit(rng, basis.size()));
  CHECK(std::abs(expectation(psi, identity_op(basis)) - 1.0) <= 1e-12);

  // One electron per site on average in the bonding-orbital determinant.
  const StateVector d0 = testing::bonding_determinant_state(basis);
  CHECK(std::abs(d0.norm() - 1.0) <= 1e-12);
  CHECK(std::abs(expectation(d0, site_number(basis, 0)) - 1.0) <= 1e-12);
  CHECK(std::abs(expectation(d0, site_number(basis, 1)) - 1.0) <= 1e-12);
}

TEST_CASE("basis mismatch is rejected") {
  const FockBasis small(4, 2);
  const FockBasis large(6, 2);
  StateVector psi(small, Vector::Unit(6, 0));
  CHECK_THROWS_AS((void)expectation(psi, identity_op(large)), BasisMismatch);
  CHECK_THROWS_AS((void)(identity_op(small) + identity_op(large)), BasisMismatch);
  CHECK_THROWS_AS((void)bilinear(small, 0, 5), DimensionMismatch);
}

TEST_CASE("normalize rescales and rejects the zero vector") {
  const FockBasis basis(4, 2);
  StateVector psi(basis, Vector::Constant(6, Complex(2.0, 0.0)));
  psi.normalize();
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-15);
  StateVector zero(basis, Vector::Zero(6));
  CHECK_THROWS_AS(zero.normalize(), NotNormalized);
}
