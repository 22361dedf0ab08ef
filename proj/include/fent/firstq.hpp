#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fent/fock.hpp"
#include "fent/types.hpp"

namespace fent {

/// One-particle state space; optionally factorized as orbital x spin with
/// index = spin_dim * orbital + spin.
struct SingleParticleSpace {
  int dim;
  std::optional<std::pair<int, int>> factors;  // (orbital_dim, spin_dim)

  static SingleParticleSpace plain(int dim) { return {dim, std::nullopt}; }
  static SingleParticleSpace orbital_spin(int orbital_dim, int spin_dim = 2) {
    return {orbital_dim * spin_dim, std::make_pair(orbital_dim, spin_dim)};
  }
  bool operator==(const SingleParticleSpace& o) const { return dim == o.dim; }
};

/// Two labeled fermions: amplitude matrix w with Psi(xi1=a, xi2=b) = w(a,b).
/// Antisymmetry w = -w^T is enforced on construction; the norm is whatever
/// the caller supplies (factories produce unit Frobenius norm).
class TwoParticleWavefunction {
 public:
  TwoParticleWavefunction(SingleParticleSpace space, Matrix w);

  const SingleParticleSpace& space() const { return space_; }
  const Matrix& w() const { return w_; }
  int dim() const { return space_.dim; }
  double norm() const { return w_.norm(); }
  void normalize();

 private:
  SingleParticleSpace space_;
  Matrix w_;
};

/// Observable on labeled particles: a sum of product terms A (x) B, where
/// A acts on particle 1 and B on particle 2. Single-particle observables
/// are terms with an identity on the other slot.
class ParticleObservable {
 public:
  struct Term {
    Matrix first;
    Matrix second;
  };

  static ParticleObservable on_first(const Matrix& m);
  static ParticleObservable on_second(const Matrix& m);
  static ParticleObservable product(const Matrix& a, const Matrix& b);

  ParticleObservable operator+(const ParticleObservable& other) const;
  ParticleObservable operator*(Complex scale) const;

  /// Operator product: (sum A_i (x) B_i)(sum C_j (x) D_j).
  ParticleObservable times(const ParticleObservable& other) const;

  /// Action on an amplitude matrix: sum_i A_i w B_i^T.
  Matrix apply(const Matrix& w) const;

  /// Materialized dim^2 x dim^2 matrix (row index = dim*a + b).
  Matrix full_matrix() const;

  bool hermitian(double tol = 1e-12) const;

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  explicit ParticleObservable(int dim) : dim_(dim) {}
  int dim_;
  std::vector<Term> terms_;
};

/// w = f - f^T, normalized. Throws ZeroAfterAntisymmetrization when f is
/// symmetric to within 1e-12.
TwoParticleWavefunction antisymmetrize(const SingleParticleSpace& space, const Matrix& f);

/// (a (x) b - b (x) a)/sqrt(2) for orthonormal one-particle vectors a, b.
TwoParticleWavefunction slater_determinant(const SingleParticleSpace& space,
                                           const Vector& a, const Vector& b);

/// The two-spin singlet on the spin-only space (dim 2).
TwoParticleWavefunction singlet();

/// Exact map from a 2-particle Fock sector state to labeled amplitudes:
/// psi = sum_{a<b} c_ab c_a^dag c_b^dag |0>  ->  w(a,b) = c_ab/sqrt(2).
/// Preserves norms and inner products.
TwoParticleWavefunction from_second_quantized(const StateVector& psi);
TwoParticleWavefunction from_second_quantized(const StateVector& psi,
                                              const SingleParticleSpace& space);

/// <Psi|O|Psi> evaluated in the full labeled tensor-product space.
Complex particle_expectation(const TwoParticleWavefunction& psi, const ParticleObservable& o);

/// Apply an observable to the labeled state (result may leave the
/// antisymmetric sector; returned as a raw amplitude matrix).
Matrix apply(const ParticleObservable& o, const TwoParticleWavefunction& psi);

/// One-body reduced density matrix W W^dag, trace-1 for unit states.
Matrix one_body_rdm(const TwoParticleWavefunction& psi);

/// Compression of a labeled observable onto the antisymmetric sector
/// spanned by the images of the Fock basis states. Expectations of the
/// result in sector coordinates equal particle_expectation on the images.
Operator to_sector_operator(const ParticleObservable& o, const FockBasis& basis);

}  // namespace fent
