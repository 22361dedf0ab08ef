#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fent/entangle.hpp"
#include "fent/hubbard.hpp"
#include "fent/slater.hpp"
#include "fent/spindensity.hpp"
#include "fent/sweep.hpp"

namespace py = pybind11;
using namespace fent;

namespace {

MaxOptions make_options(std::uint64_t seed, int restarts, long oracle_samples) {
  MaxOptions o;
  o.seed = seed;
  o.restarts = restarts;
  o.oracle_samples = oracle_samples;
  return o;
}

GroundStateResult solve_ground_state(double x) {
  return ground_state(build_hamiltonian(HubbardParams::from_x(x)));
}

SlaterAnalysis analyze_ground_state(double x) {
  const GroundStateResult gs = solve_ground_state(x);
  return slater_rank(from_second_quantized(gs.state, hubbard_labeled_space()));
}

SlaterAnalysis analyze_amplitudes(const Matrix& w, double tol) {
  return slater_rank(TwoParticleWavefunction(SingleParticleSpace::plain(
                                                 static_cast<int>(w.rows())),
                                             w),
                     tol);
}

MaxResult maximize_pair(ObservablePair pair, std::uint64_t seed, int restarts,
                        long oracle_samples) {
  const MaxOptions opts = make_options(seed, restarts, oracle_samples);
  const FockBasis basis = hubbard_basis();
  switch (pair) {
    case ObservablePair::electron_spins:
      return max_abs_correlation(electron_spin_z(1), electron_spin_z(2), opts);
    case ObservablePair::site_spins:
      return max_abs_correlation(site_spin_z(basis, 0), site_spin_z(basis, 1), opts);
    case ObservablePair::bonding_numbers:
      return max_abs_correlation(bonding_number(basis, Spin::up),
                                 bonding_number(basis, Spin::down), opts);
    case ObservablePair::site_numbers:
      return max_abs_correlation(site_number(basis, 0), site_number(basis, 1), opts);
  }
  throw Error("maximize_pair: bad pair");
}

double degree_pair(double x, ObservablePair pair, std::uint64_t seed, int restarts,
                   long oracle_samples) {
  const MaxResult m = maximize_pair(pair, seed, restarts, oracle_samples);
  return std::abs(pair_correlation(x, pair)) / m.max_abs;
}

std::vector<double> epr_conditionals(int n_cells) {
  const SpatialGrid grid{n_cells, 1.0};
  const auto d0 = doubly_occupied(bonding_orbital(grid));
  std::vector<double> out;
  for (int a = 0; a < n_cells; ++a)
    for (int b = 0; b < n_cells; ++b)
      if (a != b) out.push_back(coincidence_correlator(d0, grid, a, b).conditional);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Observable correlations and entanglement analysis for two-fermion systems";

  py::enum_<ObservablePair>(m, "ObservablePair")
      .value("electron_spins", ObservablePair::electron_spins)
      .value("site_spins", ObservablePair::site_spins)
      .value("bonding_numbers", ObservablePair::bonding_numbers)
      .value("site_numbers", ObservablePair::site_numbers);

  py::class_<ClosedForm>(m, "ClosedForm")
      .def_readonly("f", &ClosedForm::f)
      .def_readonly("g", &ClosedForm::g)
      .def_readonly("c_electron_spins", &ClosedForm::c_electron_spins)
      .def_readonly("c_site_spins", &ClosedForm::c_site_spins)
      .def_readonly("e_bonding_numbers", &ClosedForm::e_bonding_numbers)
      .def_readonly("c_site_numbers", &ClosedForm::c_site_numbers)
      .def("__repr__", [](const ClosedForm& cf) {
        return "ClosedForm(f=" + format_number(cf.f) + ", g=" + format_number(cf.g) + ")";
      });

  py::class_<GroundStateResult>(m, "GroundState")
      .def_readonly("energy", &GroundStateResult::energy)
      .def_readonly("degenerate", &GroundStateResult::degenerate)
      .def_readonly("residual", &GroundStateResult::residual)
      .def_property_readonly("amplitudes", [](const GroundStateResult& gs) {
        return Vector(gs.state.amplitudes());
      });

  py::class_<OptimizerDiagnostics>(m, "OptimizerDiagnostics")
      .def_readonly("restarts", &OptimizerDiagnostics::restarts)
      .def_readonly("iterations", &OptimizerDiagnostics::iterations)
      .def_readonly("converged", &OptimizerDiagnostics::converged)
      .def_readonly("oracle_gap", &OptimizerDiagnostics::oracle_gap);

  py::class_<MaxResult>(m, "MaxResult")
      .def_readonly("max_abs", &MaxResult::max_abs)
      .def_readonly("oracle_max", &MaxResult::oracle_max)
      .def_readonly("argmax", &MaxResult::argmax)
      .def_readonly("diagnostics", &MaxResult::diagnostics);

  py::class_<CanonicalPair>(m, "CanonicalPair")
      .def_readonly("amplitude", &CanonicalPair::amplitude)
      .def_readonly("orbital_a", &CanonicalPair::orbital_a)
      .def_readonly("orbital_b", &CanonicalPair::orbital_b);

  py::class_<SlaterAnalysis>(m, "SlaterAnalysis")
      .def_readonly("rank", &SlaterAnalysis::rank)
      .def_readonly("pfaffian_residual", &SlaterAnalysis::pfaffian_residual)
      .def_readonly("canonical_pairs", &SlaterAnalysis::canonical_pairs)
      .def("__repr__", [](const SlaterAnalysis& a) {
        return "SlaterAnalysis(rank=" + std::to_string(a.rank) + ")";
      });

  m.def("closed_form", &closed_form, py::arg("x"),
        "Exact ground-state correlation values at coupling x = U/(4t)");
  m.def("ground_state", &solve_ground_state, py::arg("x"),
        "Exact-diagonalization ground state of the two-site model");
  m.def("correlation", &pair_correlation, py::arg("x"), py::arg("pair"),
        "C_AB = <AB> - <A><B> in the ground state at coupling x");
  m.def("degree", &degree_pair, py::arg("x"), py::arg("pair"), py::arg("seed") = 42,
        py::arg("restarts") = 64, py::arg("oracle_samples") = 100000,
        "Degree of entanglement |C| / max|C| in the ground state");
  m.def("max_abs_correlation", &maximize_pair, py::arg("pair"), py::arg("seed") = 42,
        py::arg("restarts") = 64, py::arg("oracle_samples") = 100000,
        "Normalizing maximum of |C_AB| over the two-particle sector");
  m.def("max_abs_correlation_dense",
        [](const Matrix& a, const Matrix& b, std::uint64_t seed, int restarts,
           long oracle_samples) {
          if (!is_hermitian(a) || !is_hermitian(b))
            throw NonHermitianObservable("max_abs_correlation_dense: inputs must be "
                                         "Hermitian");
          return maximize_abs_correlation(a * b, a, b,
                                          make_options(seed, restarts, oracle_samples));
        },
        py::arg("a"), py::arg("b"), py::arg("seed") = 42, py::arg("restarts") = 64,
        py::arg("oracle_samples") = 100000,
        "Maximize |<AB> - <A><B>| over unit vectors for dense Hermitian matrices");
  m.def("slater_analysis", &analyze_ground_state, py::arg("x"),
        "Slater-rank analysis of the ground state at coupling x");
  m.def("slater_rank", &analyze_amplitudes, py::arg("w"), py::arg("tol") = 1e-9,
        "Slater-rank analysis of an antisymmetric amplitude matrix");
  m.def("epr_conditionals", &epr_conditionals, py::arg("n_cells") = 16,
        "Conditional spin-spin coincidence for every ordered detector pair");

  py::register_exception<Error>(m, "FentError");
}
