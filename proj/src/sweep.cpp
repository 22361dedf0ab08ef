#include "fent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fent {

const char* pair_name(ObservablePair pair) {
  switch (pair) {
    case ObservablePair::electron_spins: return "s1s2";
    case ObservablePair::site_spins: return "S1S2";
    case ObservablePair::bonding_numbers: return "nn";
    case ObservablePair::site_numbers: return "N1N2";
  }
  throw Error("pair_name: bad pair");
}

Complex pair_correlation(double x, ObservablePair pair) {
  const GroundStateResult gs = ground_state(build_hamiltonian(HubbardParams::from_x(x)));
  if (gs.degenerate) throw Error("pair_correlation: degenerate ground state");
  const FockBasis basis = hubbard_basis();
  switch (pair) {
    case ObservablePair::electron_spins: {
      const TwoParticleWavefunction psi =
          from_second_quantized(gs.state, hubbard_labeled_space());
      return correlation(psi, electron_spin_z(1), electron_spin_z(2));
    }
    case ObservablePair::site_spins:
      return correlation(gs.state, site_spin_z(basis, 0), site_spin_z(basis, 1));
    case ObservablePair::bonding_numbers:
      return correlation(gs.state, bonding_number(basis, Spin::up),
                         bonding_number(basis, Spin::down));
    case ObservablePair::site_numbers:
      return correlation(gs.state, site_number(basis, 0), site_number(basis, 1));
  }
  throw Error("pair_correlation: bad pair");
}

const MaxResult& PairMaxima::get(ObservablePair pair) const {
  switch (pair) {
    case ObservablePair::electron_spins: return electron_spins;
    case ObservablePair::site_spins: return site_spins;
    case ObservablePair::bonding_numbers: return bonding_numbers;
    case ObservablePair::site_numbers: return site_numbers;
  }
  throw Error("PairMaxima::get: bad pair");
}

PairMaxima compute_pair_maxima(const MaxOptions& options) {
  const FockBasis basis = hubbard_basis();
  PairMaxima m{
      max_abs_correlation(electron_spin_z(1), electron_spin_z(2), options),
      max_abs_correlation(site_spin_z(basis, 0), site_spin_z(basis, 1), options),
      max_abs_correlation(bonding_number(basis, Spin::up), bonding_number(basis, Spin::down),
                          options),
      max_abs_correlation(site_number(basis, 0), site_number(basis, 1), options),
  };
  return m;
}

SweepRow evaluate_sweep_row(double x, const PairMaxima& maxima) {
  SweepRow row{};
  row.x = x;
  row.c_s1s2 = pair_correlation(x, ObservablePair::electron_spins).real();
  row.c_S1S2 = pair_correlation(x, ObservablePair::site_spins).real();
  row.c_nn = pair_correlation(x, ObservablePair::bonding_numbers).real();
  row.c_N1N2 = pair_correlation(x, ObservablePair::site_numbers).real();
  row.e_s1s2 = std::abs(row.c_s1s2) / maxima.electron_spins.max_abs;
  row.e_S1S2 = std::abs(row.c_S1S2) / maxima.site_spins.max_abs;
  row.e_nn = std::abs(row.c_nn) / maxima.bonding_numbers.max_abs;
  row.e_N1N2 = std::abs(row.c_N1N2) / maxima.site_numbers.max_abs;

  const ClosedForm cf = closed_form(x);
  row.cf_c_S1S2 = cf.c_site_spins;
  row.cf_e_nn = cf.e_bonding_numbers;
  row.cf_c_N1N2 = cf.c_site_numbers;
  row.err_max = std::max({std::abs(row.c_s1s2 - cf.c_electron_spins),
                          std::abs(row.c_S1S2 - cf.c_site_spins),
                          std::abs(row.e_nn - cf.e_bonding_numbers),
                          std::abs(row.c_N1N2 - cf.c_site_numbers)});
  return row;
}

std::vector<double> sweep_grid(double x_min, double x_max, int n_points, bool log_scale) {
  if (x_min < 0.0) throw Error("sweep_grid: x_min must be >= 0");
  if (x_max < x_min) throw Error("sweep_grid: x_max must be >= x_min");
  if (n_points < 1) throw Error("sweep_grid: n_points must be >= 1");
  if (log_scale && x_min <= 0.0) throw Error("sweep_grid: log scale needs x_min > 0");
  std::vector<double> xs;
  xs.reserve(static_cast<size_t>(n_points));
  if (n_points == 1) {
    xs.push_back(x_min);
    return xs;
  }
  for (int i = 0; i < n_points; ++i) {
    const double t = static_cast<double>(i) / (n_points - 1);
    xs.push_back(log_scale ? std::exp(std::log(x_min) + t * (std::log(x_max) - std::log(x_min)))
                           : x_min + t * (x_max - x_min));
  }
  return xs;
}

const char* const kSweepCsvHeader =
    "x,C_s1s2,E_s1s2,C_S1S2,E_S1S2,C_nn,E_nn,C_N1N2,E_N1N2,cf_C_S1S2,cf_E_nn,cf_C_N1N2,err_max";

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << "\n";
  for (const SweepRow& r : rows) {
    os << format_number(r.x) << ',' << format_number(r.c_s1s2) << ','
       << format_number(r.e_s1s2) << ',' << format_number(r.c_S1S2) << ','
       << format_number(r.e_S1S2) << ',' << format_number(r.c_nn) << ','
       << format_number(r.e_nn) << ',' << format_number(r.c_N1N2) << ','
       << format_number(r.e_N1N2) << ',' << format_number(r.cf_c_S1S2) << ','
       << format_number(r.cf_e_nn) << ',' << format_number(r.cf_c_N1N2) << ','
       << format_number(r.err_max) << "\n";
  }
}

namespace {

void json_max(std::ostream& os, const char* name, const MaxResult& m, bool last = false) {
  os << "    \"" << name << "\": {\"max_abs\": " << format_number(m.max_abs)
     << ", \"oracle_max\": " << format_number(m.oracle_max)
     << ", \"oracle_gap\": " << format_number(m.diagnostics.oracle_gap)
     << ", \"restarts\": " << m.diagnostics.restarts
     << ", \"iterations\": " << m.diagnostics.iterations
     << ", \"converged\": " << (m.diagnostics.converged ? "true" : "false") << "}"
     << (last ? "\n" : ",\n");
}

}  // namespace

void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows,
                      const PairMaxima& maxima, std::uint64_t seed) {
  os << "{\n  \"seed\": " << seed << ",\n  \"maxima\": {\n";
  json_max(os, "s1s2", maxima.electron_spins);
  json_max(os, "S1S2", maxima.site_spins);
  json_max(os, "nn", maxima.bonding_numbers);
  json_max(os, "N1N2", maxima.site_numbers, true);
  os << "  },\n  \"rows\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    os << "    {\"x\": " << format_number(r.x)
       << ", \"C_s1s2\": " << format_number(r.c_s1s2)
       << ", \"E_s1s2\": " << format_number(r.e_s1s2)
       << ", \"C_S1S2\": " << format_number(r.c_S1S2)
       << ", \"E_S1S2\": " << format_number(r.e_S1S2)
       << ", \"C_nn\": " << format_number(r.c_nn)
       << ", \"E_nn\": " << format_number(r.e_nn)
       << ", \"C_N1N2\": " << format_number(r.c_N1N2)
       << ", \"E_N1N2\": " << format_number(r.e_N1N2)
       << ", \"cf_C_S1S2\": " << format_number(r.cf_c_S1S2)
       << ", \"cf_E_nn\": " << format_number(r.cf_e_nn)
       << ", \"cf_C_N1N2\": " << format_number(r.cf_c_N1N2)
       << ", \"err_C_s1s2\": " << format_number(std::abs(r.c_s1s2 + 1.0))
       << ", \"err_C_S1S2\": " << format_number(std::abs(r.c_S1S2 - r.cf_c_S1S2))
       << ", \"err_E_nn\": " << format_number(std::abs(r.e_nn - r.cf_e_nn))
       << ", \"err_C_N1N2\": " << format_number(std::abs(r.c_N1N2 - r.cf_c_N1N2))
       << ", \"err_max\": " << format_number(r.err_max) << "}"
       << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
}

}  // namespace fent
