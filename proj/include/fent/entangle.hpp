#pragma once

#include <cstdint>
#include <optional>

#include "fent/firstq.hpp"
#include "fent/fock.hpp"

namespace fent {

/// C_AB = <psi|AB|psi> - <psi|A|psi><psi|B|psi>. A state is entangled with
/// respect to A and B exactly when this is nonzero.
Complex correlation(const StateVector& psi, const Operator& a, const Operator& b);

/// Labeled-particle version; the product AB is evaluated as a single
/// observable in the full tensor space.
Complex correlation(const TwoParticleWavefunction& psi, const ParticleObservable& a,
                    const ParticleObservable& b);

/// Returns the eigenvalue <psi|A|psi> when ||A psi - lambda psi|| <= tol.
/// An eigenstate of A is unentangled with respect to A and any B.
std::optional<Complex> is_eigenstate(const StateVector& psi, const Operator& a,
                                     double tol = 1e-10);
std::optional<Complex> is_eigenstate(const TwoParticleWavefunction& psi,
                                     const ParticleObservable& a, double tol = 1e-10);

struct MaxOptions {
  std::uint64_t seed = 42;
  int restarts = 64;
  long oracle_samples = 1000000;
  double grad_tol = 1e-10;
  int max_iterations = 4000;
};

struct OptimizerDiagnostics {
  int restarts = 0;
  long iterations = 0;   // summed over restarts
  bool converged = false;
  double oracle_gap = 0.0;  // optimizer max - oracle max (>= 0 expected)
};

struct MaxResult {
  double max_abs = 0.0;
  Vector argmax;  // unit vector in the maximization space, phase fixed
  double oracle_max = 0.0;
  OptimizerDiagnostics diagnostics;
};

/// Scale-invariant objective |C(phi)|^2 where phi = v[0:n] + i v[n:2n]
/// normalized, C = <G>/|phi|^2 - <A><B>/|phi|^4. G is the operator whose
/// expectation plays <AB>. Exposed so the analytic gradient can be checked
/// against finite differences.
double correlation_objective(const Matrix& g, const Matrix& a, const Matrix& b,
                             const RealVector& v);
RealVector correlation_objective_gradient(const Matrix& g, const Matrix& a,
                                          const Matrix& b, const RealVector& v);

/// Maximize |C| over unit vectors by seeded-restart projected gradient
/// ascent with step-halving, cross-checked against a quasi-random sampling
/// oracle. Hermiticity of A and B is required by the callers below.
MaxResult maximize_abs_correlation(const Matrix& g, const Matrix& a, const Matrix& b,
                                   const MaxOptions& options = {});

/// max_phi |C_AB^phi| over the full sector.
MaxResult max_abs_correlation(const Operator& a, const Operator& b,
                              const MaxOptions& options = {});

/// max over the antisymmetric two-particle space of labeled observables.
MaxResult max_abs_correlation(const ParticleObservable& a, const ParticleObservable& b,
                              const MaxOptions& options = {});

struct CorrelationReport {
  Complex c;
  double abs_c = 0.0;
  double max_abs = 0.0;
  double e = 0.0;       // |C| / max, clamped to [0, 1]
  double clamp = 0.0;   // amount removed by clamping (0 when none)
  StateVector argmax_state;
  OptimizerDiagnostics optimizer;
};

/// Degree of entanglement E = |C_AB^psi| / max_phi |C_AB^phi|.
CorrelationReport degree(const StateVector& psi, const Operator& a, const Operator& b,
                         const MaxOptions& options = {});
CorrelationReport degree(const TwoParticleWavefunction& psi, const ParticleObservable& a,
                         const ParticleObservable& b, const MaxOptions& options = {});

}  // namespace fent
