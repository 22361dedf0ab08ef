#include "fent/firstq.hpp"

#include <bit>
#include <cmath>

namespace fent {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

void check_square(const Matrix& m, int dim, const char* where) {
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionMismatch(std::string(where) + ": matrix dimension mismatch");
}

std::pair<int, int> occupied_pair(std::uint32_t occ) {
  const int a = std::countr_zero(occ);
  const int b = std::countr_zero(occ & (occ - 1u));
  return {a, b};  // a < b
}

}  // namespace

TwoParticleWavefunction::TwoParticleWavefunction(SingleParticleSpace space, Matrix w)
    : space_(space), w_(std::move(w)) {
  check_square(w_, space_.dim, "TwoParticleWavefunction");
  const double defect = (w_ + w_.transpose()).norm();
  if (defect > 1e-12 * std::max(1.0, w_.norm()))
    throw NotAntisymmetric("TwoParticleWavefunction: w + w^T norm = " + std::to_string(defect));
}

void TwoParticleWavefunction::normalize() {
  const double n = w_.norm();
  if (n < 1e-300) throw NotNormalized("TwoParticleWavefunction::normalize: zero state");
  w_ /= n;
}

ParticleObservable ParticleObservable::on_first(const Matrix& m) {
  ParticleObservable o(static_cast<int>(m.rows()));
  check_square(m, o.dim_, "ParticleObservable::on_first");
  o.terms_.push_back({m, Matrix::Identity(o.dim_, o.dim_)});
  return o;
}

ParticleObservable ParticleObservable::on_second(const Matrix& m) {
  ParticleObservable o(static_cast<int>(m.rows()));
  check_square(m, o.dim_, "ParticleObservable::on_second");
  o.terms_.push_back({Matrix::Identity(o.dim_, o.dim_), m});
  return o;
}

ParticleObservable ParticleObservable::product(const Matrix& a, const Matrix& b) {
  ParticleObservable o(static_cast<int>(a.rows()));
  check_square(a, o.dim_, "ParticleObservable::product");
  check_square(b, o.dim_, "ParticleObservable::product");
  o.terms_.push_back({a, b});
  return o;
}

ParticleObservable ParticleObservable::operator+(const ParticleObservable& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("ParticleObservable::operator+");
  ParticleObservable o(dim_);
  o.terms_ = terms_;
  o.terms_.insert(o.terms_.end(), other.terms_.begin(), other.terms_.end());
  return o;
}

ParticleObservable ParticleObservable::operator*(Complex scale) const {
  ParticleObservable o(dim_);
  o.terms_ = terms_;
  for (auto& t : o.terms_) t.first *= scale;
  return o;
}

ParticleObservable ParticleObservable::times(const ParticleObservable& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("ParticleObservable::times");
  ParticleObservable o(dim_);
  for (const auto& t : terms_)
    for (const auto& s : other.terms_)
      o.terms_.push_back({t.first * s.first, t.second * s.second});
  return o;
}

Matrix ParticleObservable::apply(const Matrix& w) const {
  check_square(w, dim_, "ParticleObservable::apply");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const auto& t : terms_) out += t.first * w * t.second.transpose();
  return out;
}

Matrix ParticleObservable::full_matrix() const {
  const int d = dim_;
  Matrix out = Matrix::Zero(d * d, d * d);
  for (const auto& t : terms_)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int ap = 0; ap < d; ++ap)
          for (int bp = 0; bp < d; ++bp)
            out(d * a + b, d * ap + bp) += t.first(a, ap) * t.second(b, bp);
  return out;
}

bool ParticleObservable::hermitian(double tol) const {
  return is_hermitian(full_matrix(), tol);
}

TwoParticleWavefunction antisymmetrize(const SingleParticleSpace& space, const Matrix& f) {
  check_square(f, space.dim, "antisymmetrize");
  Matrix w = f - f.transpose();
  if (w.norm() < 1e-12)
    throw ZeroAfterAntisymmetrization("antisymmetrize: input is symmetric");
  w /= w.norm();
  return TwoParticleWavefunction(space, std::move(w));
}

TwoParticleWavefunction slater_determinant(const SingleParticleSpace& space,
                                           const Vector& a, const Vector& b) {
  if (a.size() != space.dim || b.size() != space.dim)
    throw DimensionMismatch("slater_determinant: orbital dimension mismatch");
  const double overlap = std::abs(a.dot(b));
  if (overlap > 1e-10 || std::abs(a.norm() - 1.0) > 1e-10 || std::abs(b.norm() - 1.0) > 1e-10)
    throw NonOrthonormalOrbitals("slater_determinant: orbitals not orthonormal");
  Matrix w = (a * b.transpose() - b * a.transpose()) / kSqrt2;
  return TwoParticleWavefunction(space, std::move(w));
}

TwoParticleWavefunction singlet() {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = 1.0 / kSqrt2;
  w(1, 0) = -1.0 / kSqrt2;
  return TwoParticleWavefunction(SingleParticleSpace::plain(2), std::move(w));
}

TwoParticleWavefunction from_second_quantized(const StateVector& psi) {
  return from_second_quantized(psi, SingleParticleSpace::plain(psi.basis().n_modes()));
}

TwoParticleWavefunction from_second_quantized(const StateVector& psi,
                                              const SingleParticleSpace& space) {
  const FockBasis& basis = psi.basis();
  if (basis.n_particles() != 2)
    throw WrongParticleNumber("from_second_quantized: basis must hold 2 particles");
  if (space.dim != basis.n_modes())
    throw DimensionMismatch("from_second_quantized: space does not match mode count");
  Matrix w = Matrix::Zero(space.dim, space.dim);
  for (int j = 0; j < basis.size(); ++j) {
    const auto [a, b] = occupied_pair(basis.state(j));
    const Complex c = psi.amplitudes()(j) / kSqrt2;
    w(a, b) = c;
    w(b, a) = -c;
  }
  return TwoParticleWavefunction(space, std::move(w));
}

Complex particle_expectation(const TwoParticleWavefunction& psi, const ParticleObservable& o) {
  if (o.dim() != psi.dim()) throw DimensionMismatch("particle_expectation");
  const Matrix& w = psi.w();
  Complex total = 0.0;
  for (const auto& t : o.terms())
    total += (w.conjugate().cwiseProduct(t.first * w * t.second.transpose())).sum();
  return total;
}

Matrix apply(const ParticleObservable& o, const TwoParticleWavefunction& psi) {
  return o.apply(psi.w());
}

Matrix one_body_rdm(const TwoParticleWavefunction& psi) {
  return psi.w() * psi.w().adjoint();
}

Operator to_sector_operator(const ParticleObservable& o, const FockBasis& basis) {
  if (basis.n_particles() != 2)
    throw WrongParticleNumber("to_sector_operator: basis must hold 2 particles");
  if (o.dim() != basis.n_modes())
    throw DimensionMismatch("to_sector_operator: observable does not match mode count");
  const int n = basis.size();
  Matrix m = Matrix::Zero(n, n);
  // Basis images have two entries (+-1/sqrt(2)), so each matrix element of
  // sum_t A w B^T reduces to four products per term.
  std::vector<std::pair<int, int>> pairs(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) pairs[static_cast<size_t>(j)] = occupied_pair(basis.state(j));
  for (const auto& t : o.terms()) {
    const Matrix& A = t.first;
    const Matrix& B = t.second;
    for (int i = 0; i < n; ++i) {
      const auto [ai, bi] = pairs[static_cast<size_t>(i)];
      for (int j = 0; j < n; ++j) {
        const auto [aj, bj] = pairs[static_cast<size_t>(j)];
        m(i, j) += 0.5 * (A(ai, aj) * B(bi, bj) - A(ai, bj) * B(bi, aj) -
                          A(bi, aj) * B(ai, bj) + A(bi, bj) * B(ai, aj));
      }
    }
  }
  return Operator(basis, std::move(m));
}

}  // namespace fent
