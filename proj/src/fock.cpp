#include "fent/fock.hpp"

#include <algorithm>
#include <bit>

namespace fent {

namespace {

int parity_below(std::uint32_t occ, int mode) {
  const std::uint32_t mask = (mode == 0) ? 0u : ((1u << mode) - 1u);
  return (std::popcount(occ & mask) & 1) ? -1 : +1;
}

void check_mode(int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) throw DimensionMismatch("mode index out of range");
}

void check_same_basis(const FockBasis& a, const FockBasis& b, const char* where) {
  if (!(a == b)) throw BasisMismatch(std::string(where) + ": basis mismatch");
}

}  // namespace

FockBasis::FockBasis(int n_modes, int n_particles)
    : n_modes_(n_modes), n_particles_(n_particles) {
  if (n_modes < 1 || n_modes > 32) throw DimensionMismatch("FockBasis: n_modes out of range");
  if (n_particles < 0 || n_particles > n_modes)
    throw DimensionMismatch("FockBasis: bad particle number");
  if (n_particles == 0) {
    states_.push_back(0u);
    return;
  }
  // Gosper's hack: ascending enumeration of patterns with fixed popcount.
  std::uint64_t v = (1ULL << n_particles) - 1ULL;
  const std::uint64_t limit = 1ULL << n_modes;
  while (v < limit) {
    states_.push_back(static_cast<std::uint32_t>(v));
    const std::uint64_t t = v | (v - 1ULL);
    v = (t + 1ULL) | (((~t & (t + 1ULL)) - 1ULL) >> (std::countr_zero(v) + 1));
  }
}

int FockBasis::index_of(std::uint32_t occ) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), occ);
  if (it == states_.end() || *it != occ) return -1;
  return static_cast<int>(it - states_.begin());
}

std::optional<SignedState> apply_creation(std::uint32_t occ, int mode) {
  const std::uint32_t bit = 1u << mode;
  if (occ & bit) return std::nullopt;
  return SignedState{parity_below(occ, mode), occ | bit};
}

std::optional<SignedState> apply_annihilation(std::uint32_t occ, int mode) {
  const std::uint32_t bit = 1u << mode;
  if (!(occ & bit)) return std::nullopt;
  return SignedState{parity_below(occ, mode), occ & ~bit};
}

Operator::Operator(FockBasis basis, Matrix m) : basis_(std::move(basis)), mat_(std::move(m)) {
  if (mat_.rows() != basis_.size() || mat_.cols() != basis_.size())
    throw DimensionMismatch("Operator: matrix does not match basis size");
  hermitian_ = is_hermitian(mat_);
}

Operator bilinear(const FockBasis& basis, int a, int b) {
  check_mode(a, basis.n_modes());
  check_mode(b, basis.n_modes());
  Matrix m = Matrix::Zero(basis.size(), basis.size());
  for (int j = 0; j < basis.size(); ++j) {
    const auto ann = apply_annihilation(basis.state(j), b);
    if (!ann) continue;
    const auto cre = apply_creation(ann->occ, a);
    if (!cre) continue;
    const int i = basis.index_of(cre->occ);
    m(i, j) += static_cast<double>(ann->sign * cre->sign);
  }
  return Operator(basis, std::move(m));
}

Operator identity_op(const FockBasis& basis) {
  return Operator(basis, Matrix::Identity(basis.size(), basis.size()));
}

Operator operator+(const Operator& a, const Operator& b) {
  check_same_basis(a.basis(), b.basis(), "operator+");
  return Operator(a.basis(), a.matrix() + b.matrix());
}

Operator operator-(const Operator& a, const Operator& b) {
  check_same_basis(a.basis(), b.basis(), "operator-");
  return Operator(a.basis(), a.matrix() - b.matrix());
}

Operator operator*(const Operator& a, const Operator& b) {
  check_same_basis(a.basis(), b.basis(), "operator*");
  return Operator(a.basis(), a.matrix() * b.matrix());
}

Operator operator*(Complex scale, const Operator& a) {
  return Operator(a.basis(), scale * a.matrix());
}

Operator adjoint(const Operator& a) {
  return Operator(a.basis(), a.matrix().adjoint());
}

StateVector::StateVector(FockBasis basis, Vector amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
  if (amps_.size() != basis_.size())
    throw DimensionMismatch("StateVector: amplitude count does not match basis size");
}

void StateVector::normalize() {
  const double n = amps_.norm();
  if (n < 1e-300) throw NotNormalized("StateVector::normalize: zero vector");
  amps_ /= n;
}

Complex expectation(const StateVector& psi, const Operator& a) {
  check_same_basis(psi.basis(), a.basis(), "expectation");
  return psi.amplitudes().dot(a.matrix() * psi.amplitudes());
}

StateVector apply(const Operator& a, const StateVector& psi) {
  check_same_basis(psi.basis(), a.basis(), "apply");
  return StateVector(psi.basis(), a.matrix() * psi.amplitudes());
}

}  // namespace fent
