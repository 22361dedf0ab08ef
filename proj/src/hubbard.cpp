#include "fent/hubbard.hpp"

#include <cmath>

#include "fent/jacobi.hpp"

namespace fent {

double HubbardParams::x() const {
  if (t <= 0.0) throw Error("HubbardParams::x: requires t > 0");
  return u / (4.0 * t);
}

HubbardParams HubbardParams::from_x(double x) {
  if (x < 0.0) throw Error("HubbardParams::from_x: x must be >= 0");
  return {1.0, 4.0 * x};
}

FockBasis hubbard_basis() { return FockBasis(4, 2); }

Operator build_hamiltonian(const HubbardParams& p) {
  if (p.t < 0.0 || p.u < 0.0) throw Error("build_hamiltonian: t, U must be >= 0");
  const FockBasis basis = hubbard_basis();
  Matrix h = Matrix::Zero(basis.size(), basis.size());
  for (Spin s : {Spin::up, Spin::down}) {
    const int m0 = hubbard_mode(0, s);
    const int m1 = hubbard_mode(1, s);
    const Matrix hop = bilinear(basis, m0, m1).matrix();
    h -= p.t * (hop + hop.adjoint());
  }
  for (int site : {0, 1}) {
    const Matrix nu = bilinear(basis, hubbard_mode(site, Spin::up), hubbard_mode(site, Spin::up)).matrix();
    const Matrix nd = bilinear(basis, hubbard_mode(site, Spin::down), hubbard_mode(site, Spin::down)).matrix();
    h += p.u * (nu * nd);
  }
  return Operator(basis, std::move(h));
}

GroundStateResult ground_state(const Operator& h) {
  if (!h.hermitian()) throw NonHermitianObservable("ground_state: Hamiltonian not Hermitian");
  const EigenSystem es = jacobi_hermitian(h.matrix());
  const int n = static_cast<int>(es.values.size());

  Vector psi = es.vectors.col(0);
  // Deterministic phase: largest-|amplitude| entry made real positive.
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(psi(i)) > std::abs(psi(imax)) + 1e-12) imax = i;
  const Complex a = psi(imax);
  if (std::abs(a) > 0.0) psi *= std::conj(a) / std::abs(a);

  GroundStateResult out{es.values(0), StateVector(h.basis(), psi), false, 0.0};
  out.residual = (h.matrix() * psi - es.values(0) * psi).norm();
  if (n > 1) out.degenerate = (es.values(1) - es.values(0)) < 1e-9 * h.matrix().norm();
  return out;
}

Operator site_spin_z(const FockBasis& basis, int site) {
  const Operator nu = bilinear(basis, hubbard_mode(site, Spin::up), hubbard_mode(site, Spin::up));
  const Operator nd = bilinear(basis, hubbard_mode(site, Spin::down), hubbard_mode(site, Spin::down));
  return nu - nd;
}

Operator site_number(const FockBasis& basis, int site) {
  const Operator nu = bilinear(basis, hubbard_mode(site, Spin::up), hubbard_mode(site, Spin::up));
  const Operator nd = bilinear(basis, hubbard_mode(site, Spin::down), hubbard_mode(site, Spin::down));
  return nu + nd;
}

Operator bonding_number(const FockBasis& basis, Spin spin) {
  const int m0 = hubbard_mode(0, spin);
  const int m1 = hubbard_mode(1, spin);
  Matrix m = bilinear(basis, m0, m0).matrix() + bilinear(basis, m1, m1).matrix() +
             bilinear(basis, m0, m1).matrix() + bilinear(basis, m1, m0).matrix();
  return Operator(basis, 0.5 * m);
}

SingleParticleSpace hubbard_labeled_space() { return SingleParticleSpace::orbital_spin(2, 2); }

Matrix electron_spin_z_matrix() {
  Matrix sz = Matrix::Zero(4, 4);
  for (int site : {0, 1}) {
    sz(hubbard_mode(site, Spin::up), hubbard_mode(site, Spin::up)) = 1.0;
    sz(hubbard_mode(site, Spin::down), hubbard_mode(site, Spin::down)) = -1.0;
  }
  return sz;
}

ParticleObservable electron_spin_z(int particle) {
  if (particle == 1) return ParticleObservable::on_first(electron_spin_z_matrix());
  if (particle == 2) return ParticleObservable::on_second(electron_spin_z_matrix());
  throw Error("electron_spin_z: particle must be 1 or 2");
}

ClosedForm closed_form(double x) {
  if (x < 0.0) throw Error("closed_form: x must be >= 0");
  const double f = std::sqrt(1.0 + x * x) - x;
  const double f2 = f * f;
  const double g = (1.0 + f) * (1.0 + f) / (2.0 * (1.0 + f2));
  ClosedForm cf;
  cf.f = f;
  cf.g = g;
  cf.c_electron_spins = -1.0;
  cf.c_site_spins = -1.0 / (1.0 + f2);
  cf.e_bonding_numbers = 4.0 * g * (1.0 - g);
  cf.c_site_numbers = -f2 / (1.0 + f2);
  return cf;
}

}  // namespace fent
