#include "fent/entangle.hpp"

#include <cmath>

#include "fent/quasirandom.hpp"

namespace fent {

namespace {

void check_unit(double norm, const char* where) {
  if (std::abs(norm - 1.0) > 1e-9)
    throw NotNormalized(std::string(where) + ": state not normalized");
}

Vector to_complex(const RealVector& v) {
  const int n = static_cast<int>(v.size()) / 2;
  Vector phi(n);
  for (int i = 0; i < n; ++i) phi(i) = Complex(v(i), v(n + i));
  return phi;
}

RealVector to_real(const Vector& phi) {
  const int n = static_cast<int>(phi.size());
  RealVector v(2 * n);
  for (int i = 0; i < n; ++i) {
    v(i) = phi(i).real();
    v(n + i) = phi(i).imag();
  }
  return v;
}

Complex raw_correlation(const Matrix& g, const Matrix& a, const Matrix& b, const Vector& phi) {
  const double n2 = phi.squaredNorm();
  const Complex qg = phi.dot(g * phi);
  const Complex qa = phi.dot(a * phi);
  const Complex qb = phi.dot(b * phi);
  return qg / n2 - qa * qb / (n2 * n2);
}

}  // namespace

Complex correlation(const StateVector& psi, const Operator& a, const Operator& b) {
  if (!(psi.basis() == a.basis()) || !(psi.basis() == b.basis()))
    throw BasisMismatch("correlation: basis mismatch");
  check_unit(psi.norm(), "correlation");
  const Complex ab = expectation(psi, a * b);
  return ab - expectation(psi, a) * expectation(psi, b);
}

Complex correlation(const TwoParticleWavefunction& psi, const ParticleObservable& a,
                    const ParticleObservable& b) {
  if (a.dim() != psi.dim() || b.dim() != psi.dim())
    throw DimensionMismatch("correlation: observable dimension mismatch");
  check_unit(psi.norm(), "correlation");
  const Complex ab = particle_expectation(psi, a.times(b));
  return ab - particle_expectation(psi, a) * particle_expectation(psi, b);
}

std::optional<Complex> is_eigenstate(const StateVector& psi, const Operator& a, double tol) {
  if (!(psi.basis() == a.basis())) throw BasisMismatch("is_eigenstate: basis mismatch");
  const Complex lambda = expectation(psi, a);
  const double residual = (a.matrix() * psi.amplitudes() - lambda * psi.amplitudes()).norm();
  if (residual <= tol) return lambda;
  return std::nullopt;
}

std::optional<Complex> is_eigenstate(const TwoParticleWavefunction& psi,
                                     const ParticleObservable& a, double tol) {
  if (a.dim() != psi.dim()) throw DimensionMismatch("is_eigenstate: dimension mismatch");
  const Complex lambda = particle_expectation(psi, a);
  const double residual = (a.apply(psi.w()) - lambda * psi.w()).norm();
  if (residual <= tol) return lambda;
  return std::nullopt;
}

double correlation_objective(const Matrix& g, const Matrix& a, const Matrix& b,
                             const RealVector& v) {
  return std::norm(raw_correlation(g, a, b, to_complex(v)));
}

RealVector correlation_objective_gradient(const Matrix& g, const Matrix& a, const Matrix& b,
                                          const RealVector& v) {
  const Vector phi = to_complex(v);
  const double n2 = phi.squaredNorm();
  const Vector gphi = g * phi;
  const Vector ghphi = g.adjoint() * phi;
  const Vector aphi = a * phi;
  const Vector bphi = b * phi;
  const Complex qg = phi.dot(gphi);
  const Complex qa = phi.dot(aphi);
  const Complex qb = phi.dot(bphi);
  const Complex c = qg / n2 - qa * qb / (n2 * n2);

  const double n4 = n2 * n2;
  const double n6 = n4 * n2;
  // Wirtinger derivative of c (A, B Hermitian so qa, qb are real up to
  // rounding, but the conjugates are kept for clarity of the pairing).
  const Vector dc = gphi / n2 - (qg / n4) * phi - (qb * aphi + qa * bphi) / n4 +
                    (2.0 * qa * qb / n6) * phi;
  const Vector dcbar = ghphi / n2 - (std::conj(qg) / n4) * phi -
                       (std::conj(qb) * aphi + std::conj(qa) * bphi) / n4 +
                       (2.0 * std::conj(qa * qb) / n6) * phi;
  const Vector grad = std::conj(c) * dc + c * dcbar;

  const int n = static_cast<int>(phi.size());
  RealVector out(2 * n);
  for (int i = 0; i < n; ++i) {
    out(i) = 2.0 * grad(i).real();
    out(n + i) = 2.0 * grad(i).imag();
  }
  return out;
}

MaxResult maximize_abs_correlation(const Matrix& g, const Matrix& a, const Matrix& b,
                                   const MaxOptions& options) {
  const int n = static_cast<int>(g.rows());
  if (a.rows() != n || b.rows() != n || g.cols() != n || a.cols() != n || b.cols() != n)
    throw DimensionMismatch("maximize_abs_correlation: operator dimensions differ");

  MaxResult best;
  best.argmax = Vector::Zero(n);
  double best_f = -1.0;
  bool best_converged = false;
  long total_iters = 0;

  SphereSequence starts(n, options.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  for (int r = 0; r < options.restarts; ++r) {
    RealVector v = to_real(starts.next());
    v.normalize();
    double f = correlation_objective(g, a, b, v);
    double step = 1.0;
    double last_accepted = 1.0;
    bool converged = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      ++total_iters;
      RealVector grad = correlation_objective_gradient(g, a, b, v);
      grad -= grad.dot(v) * v;  // tangent projection
      double gnorm = grad.norm();
      if (gnorm <= options.grad_tol) {
        converged = true;
        break;
      }
      // Step-halving line search with an Armijo sufficient-increase bar.
      step = std::min(step * 2.0, 1.0e3);
      bool accepted = false;
      while (step > 1e-18) {
        RealVector trial = (v + step * grad).normalized();
        const double ft = correlation_objective(g, a, b, trial);
        if (ft >= f + 0.5 * step * gnorm * gnorm && ft > f) {
          v = trial;
          f = ft;
          accepted = true;
          last_accepted = step;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        // The objective has hit its floating-point plateau: improvements
        // are below resolution while the gradient is still above tol.
        // Small fixed steps keep contracting the gradient, so finish by
        // tracking the gradient norm alone.
        double s = 0.5 * last_accepted;
        for (int p = 0; p < 3000 && it < options.max_iterations; ++p, ++it) {
          ++total_iters;
          RealVector pg = correlation_objective_gradient(g, a, b, v);
          pg -= pg.dot(v) * v;
          const double pn = pg.norm();
          if (pn <= options.grad_tol) {
            converged = true;
            break;
          }
          if (pn > gnorm) {
            s *= 0.5;
            if (s < 1e-14) break;
          }
          gnorm = pn;
          v = (v + s * pg).normalized();
        }
        f = correlation_objective(g, a, b, v);
        break;
      }
    }
    // Converged restarts win fp-noise ties against unconverged ones.
    const double margin = 1e-12 * std::max(1.0, std::abs(best_f));
    bool better;
    if (converged == best_converged)
      better = f > best_f;
    else if (converged)
      better = f >= best_f - margin;
    else
      better = f > best_f + margin;
    if (better) {
      best_f = f;
      best.argmax = to_complex(v);
      best_converged = converged;
    }
  }

  // Sampling oracle: a deterministic stream of quasi-random unit states.
  double oracle_f = 0.0;
  SphereSequence oracle(n, options.seed ^ 0x5ee05ee05ee05ee0ULL);
  for (long s = 0; s < options.oracle_samples; ++s) {
    const double f = std::norm(raw_correlation(g, a, b, oracle.next()));
    if (f > oracle_f) oracle_f = f;
  }

  best.max_abs = std::sqrt(std::max(best_f, 0.0));
  best.oracle_max = std::sqrt(oracle_f);
  best.diagnostics.restarts = options.restarts;
  best.diagnostics.iterations = total_iters;
  best.diagnostics.converged = best_converged;
  best.diagnostics.oracle_gap = best.max_abs - best.oracle_max;

  // Phase fix for reproducible reporting.
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(best.argmax(i)) > std::abs(best.argmax(imax)) + 1e-12) imax = i;
  const Complex amp = best.argmax(imax);
  if (std::abs(amp) > 0.0) best.argmax *= std::conj(amp) / std::abs(amp);
  return best;
}

MaxResult max_abs_correlation(const Operator& a, const Operator& b, const MaxOptions& options) {
  if (!(a.basis() == b.basis())) throw BasisMismatch("max_abs_correlation: basis mismatch");
  if (!a.hermitian() || !b.hermitian())
    throw NonHermitianObservable("max_abs_correlation: observables must be Hermitian");
  return maximize_abs_correlation(a.matrix() * b.matrix(), a.matrix(), b.matrix(), options);
}

MaxResult max_abs_correlation(const ParticleObservable& a, const ParticleObservable& b,
                              const MaxOptions& options) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_correlation: dimension mismatch");
  if (!a.hermitian() || !b.hermitian())
    throw NonHermitianObservable("max_abs_correlation: observables must be Hermitian");
  const FockBasis sector(a.dim(), 2);
  const Operator ca = to_sector_operator(a, sector);
  const Operator cb = to_sector_operator(b, sector);
  const Operator cab = to_sector_operator(a.times(b), sector);
  return maximize_abs_correlation(cab.matrix(), ca.matrix(), cb.matrix(), options);
}

namespace {

CorrelationReport make_report(Complex c, MaxResult max, FockBasis basis) {
  CorrelationReport rep{c, std::abs(c), max.max_abs, 0.0, 0.0,
                        StateVector(std::move(basis), max.argmax), max.diagnostics};
  if (rep.max_abs > 0.0) {
    rep.e = rep.abs_c / rep.max_abs;
    if (rep.e > 1.0) {
      rep.clamp = rep.e - 1.0;
      rep.e = 1.0;
    }
  } else if (rep.abs_c > 1e-12) {
    throw Error("degree: zero maximum with nonzero correlation");
  }
  return rep;
}

}  // namespace

CorrelationReport degree(const StateVector& psi, const Operator& a, const Operator& b,
                         const MaxOptions& options) {
  const Complex c = correlation(psi, a, b);
  MaxResult max = max_abs_correlation(a, b, options);
  return make_report(c, std::move(max), a.basis());
}

CorrelationReport degree(const TwoParticleWavefunction& psi, const ParticleObservable& a,
                         const ParticleObservable& b, const MaxOptions& options) {
  const Complex c = correlation(psi, a, b);
  MaxResult max = max_abs_correlation(a, b, options);
  return make_report(c, std::move(max), FockBasis(a.dim(), 2));
}

}  // namespace fent
