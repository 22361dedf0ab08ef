#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fent/errors.hpp"
#include "fent/types.hpp"

namespace fent {

enum class Spin : int { up = 0, down = 1 };

/// Lattice-model mode labeling. Modes are ordered (site0,up), (site0,down),
/// (site1,up), ... so the index map is a bijection for any site count.
struct ModeLabel {
  int site;
  Spin spin;
};

inline int mode_index(const ModeLabel& label) {
  return 2 * label.site + static_cast<int>(label.spin);
}

/// Occupation-number basis of a fixed-particle-number sector.
///
/// States are bit patterns (bit m = occupancy of mode m), enumerated in
/// ascending pattern value. Two bases with the same (n_modes, n_particles)
/// enumerate identically.
class FockBasis {
 public:
  FockBasis(int n_modes, int n_particles);

  int n_modes() const { return n_modes_; }
  int n_particles() const { return n_particles_; }
  int size() const { return static_cast<int>(states_.size()); }
  std::uint32_t state(int i) const { return states_[static_cast<size_t>(i)]; }
  const std::vector<std::uint32_t>& states() const { return states_; }

  /// Position of a pattern in the enumeration, -1 if not in the sector.
  int index_of(std::uint32_t occ) const;

  bool operator==(const FockBasis& other) const {
    return n_modes_ == other.n_modes_ && n_particles_ == other.n_particles_;
  }

 private:
  int n_modes_;
  int n_particles_;
  std::vector<std::uint32_t> states_;
};

struct SignedState {
  int sign;  // +1 or -1
  std::uint32_t occ;
};

/// c_m^dagger acting on an occupation pattern. Empty result = annihilated
/// to zero (Pauli exclusion). Sign is the parity of occupied modes below m.
std::optional<SignedState> apply_creation(std::uint32_t occ, int mode);

/// c_m acting on an occupation pattern; mirror of apply_creation.
std::optional<SignedState> apply_annihilation(std::uint32_t occ, int mode);

/// Dense operator on a Fock sector. The hermitian flag is recomputed from
/// the matrix on every construction, never taken from the caller.
class Operator {
 public:
  Operator(FockBasis basis, Matrix m);

  const FockBasis& basis() const { return basis_; }
  const Matrix& matrix() const { return mat_; }
  bool hermitian() const { return hermitian_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  FockBasis basis_;
  Matrix mat_;
  bool hermitian_;
};

/// Matrix of c_a^dagger c_b in the sector; the number operator when a == b.
Operator bilinear(const FockBasis& basis, int a, int b);

Operator identity_op(const FockBasis& basis);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);
Operator adjoint(const Operator& a);

/// Normalized amplitude vector over a Fock sector.
class StateVector {
 public:
  StateVector(FockBasis basis, Vector amplitudes);

  const FockBasis& basis() const { return basis_; }
  const Vector& amplitudes() const { return amps_; }
  double norm() const { return amps_.norm(); }

  /// Rescale to unit norm; throws on (numerically) zero vectors.
  void normalize();

 private:
  FockBasis basis_;
  Vector amps_;
};

Complex expectation(const StateVector& psi, const Operator& a);
StateVector apply(const Operator& a, const StateVector& psi);

}  // namespace fent
