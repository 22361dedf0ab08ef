#include "fent/slater.hpp"

#include <cmath>
#include <limits>

#include "fent/jacobi.hpp"

namespace fent {

SlaterAnalysis slater_rank(const TwoParticleWavefunction& psi, double tol) {
  const Matrix& w0 = psi.w();
  const int dim = static_cast<int>(w0.rows());
  const double scale = w0.norm();
  const double cutoff = tol * std::max(scale, 1e-300);

  SlaterAnalysis out;
  if (dim == 4) {
    out.pfaffian_residual = std::abs(w0(0, 1) * w0(2, 3) - w0(0, 2) * w0(1, 3) +
                                     w0(0, 3) * w0(1, 2));
  } else {
    out.pfaffian_residual = std::numeric_limits<double>::quiet_NaN();
  }

  // Peel canonical blocks one at a time: the conjugate of any top
  // eigenvector of w^dag w spans a block together with w y / sigma, and
  // subtracting the block leaves the remaining spectrum untouched.
  Matrix w = w0;
  for (int k = 0; k < dim / 2; ++k) {
    const EigenSystem es = jacobi_hermitian(w.adjoint() * w);
    const double lambda = es.values(dim - 1);
    const double sigma = std::sqrt(std::max(lambda, 0.0));
    if (sigma <= cutoff) break;
    const Vector y = es.vectors.col(dim - 1);
    const Vector u = (w * y) / sigma;
    const Vector v = y.conjugate();
    w -= sigma * (u * v.transpose() - v * u.transpose());
    out.canonical_pairs.push_back({sigma, u, v});
  }
  out.rank = static_cast<int>(out.canonical_pairs.size());
  return out;
}

bool is_single_slater(const TwoParticleWavefunction& psi, double tol) {
  return slater_rank(psi, tol).rank == 1;
}

}  // namespace fent
