#include "fent/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fent/errors.hpp"

namespace fent {

namespace {

double offdiag_norm(const Matrix& m) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenSystem jacobi_hermitian(Matrix m, double tol, int max_sweeps) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("jacobi_hermitian: matrix not square");
  if (hermiticity_defect(m) > 1e-10 * std::max(1.0, m.norm()))
    throw NonHermitianObservable("jacobi_hermitian: matrix not Hermitian");

  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(m.norm(), 1e-300);
  const double threshold = tol * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(m) <= threshold) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex gamma = m(p, q);
        const double g = std::abs(gamma);
        if (g <= 1e-300) continue;

        // Absorb the phase of m(p,q) into column/row q so the 2x2 pivot
        // block becomes real symmetric.
        const Complex u = gamma / g;
        m.col(q) *= std::conj(u);
        m.row(q) *= u;
        v.col(q) *= std::conj(u);

        const double alpha = m(p, p).real();
        const double beta = m(q, q).real();
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Real Givens rotation on (p,q).
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex mkp = m(k, p);
          const Complex mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex mpk = m(p, k);
          const Complex mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return m(a, a).real() < m(b, b).real();
  });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sys.values(k) = m(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
    sys.vectors.col(k) = v.col(order[static_cast<size_t>(k)]);
  }
  return sys;
}

}  // namespace fent
