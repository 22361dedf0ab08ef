#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fent/entangle.hpp"
#include "fent/hubbard.hpp"
#include "fent/slater.hpp"
#include "fent/spindensity.hpp"
#include "fent/sweep.hpp"
#include "fent/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;

using fent::format_number;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FENT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 42;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw fent::Error("cannot open output file: " + path);
  return file;
}

int cmd_sweep(double x_min, double x_max, int n_points, const std::string& scale,
              const std::string& out, const std::string& format, std::uint64_t seed) {
  if (x_min < 0.0) {
    std::cerr << "sweep: x_min must be >= 0\n";
    return kExitUsage;
  }
  if (x_max < x_min || n_points < 1) {
    std::cerr << "sweep: need x_max >= x_min and n_points >= 1\n";
    return kExitUsage;
  }
  const bool log_scale = scale == "log";
  if (log_scale && x_min <= 0.0) {
    std::cerr << "sweep: log scale needs x_min > 0\n";
    return kExitUsage;
  }

  fent::MaxOptions opts;
  opts.seed = seed;
  const fent::PairMaxima maxima = fent::compute_pair_maxima(opts);
  std::vector<fent::SweepRow> rows;
  for (double x : fent::sweep_grid(x_min, x_max, n_points, log_scale))
    rows.push_back(fent::evaluate_sweep_row(x, maxima));

  std::ofstream file;
  std::ostream& os = open_output(file, out);
  if (format == "json")
    fent::write_sweep_json(os, rows, maxima, seed);
  else
    fent::write_sweep_csv(os, rows);
  os.flush();

  int bad = 0;
  for (const fent::SweepRow& r : rows) {
    if (r.err_max > 1e-8) {
      ++bad;
      std::cerr << "tolerance failure at x=" << format_number(r.x)
                << " err_max=" << format_number(r.err_max) << "\n";
    }
  }
  return bad == 0 ? kExitOk : kExitTolerance;
}

int cmd_verify(std::uint64_t seed) {
  const auto results = fent::verification_suite(seed);
  size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name
              << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitTolerance;
}

int cmd_epr(int n_cells, const std::string& out) {
  if (n_cells < 2) {
    std::cerr << "epr: n_cells must be >= 2\n";
    return kExitUsage;
  }
  const fent::SpatialGrid grid{n_cells, 1.0};
  const auto d0 = fent::doubly_occupied(fent::bonding_orbital(grid));

  std::ofstream file;
  std::ostream& os = open_output(file, out);
  os << "k,kp,numerator,denominator,conditional\n";
  double lo = 1e300, hi = -1e300;
  for (int a = 0; a < n_cells; ++a) {
    for (int b = 0; b < n_cells; ++b) {
      if (a == b) continue;
      const fent::Coincidence c = fent::coincidence_correlator(d0, grid, a, b);
      os << a << ',' << b << ',' << format_number(c.numerator) << ','
         << format_number(c.denominator) << ',' << format_number(c.conditional) << "\n";
      lo = std::min(lo, c.conditional);
      hi = std::max(hi, c.conditional);
    }
  }
  os.flush();
  const double spread = hi - lo;
  const double worst = std::max(std::abs(lo + 1.0), std::abs(hi + 1.0));
  std::cerr << "conditional in [" << format_number(lo) << ", " << format_number(hi)
            << "], spread " << format_number(spread) << "\n";
  return (spread <= 1e-10 && worst <= 1e-10) ? kExitOk : kExitTolerance;
}

int cmd_slater(double x) {
  if (x < 0.0) {
    std::cerr << "slater: x must be >= 0\n";
    return kExitUsage;
  }
  const auto gs = fent::ground_state(fent::build_hamiltonian(fent::HubbardParams::from_x(x)));
  if (gs.degenerate) {
    std::cerr << "slater: degenerate ground state, refusing to report\n";
    return kExitTolerance;
  }
  const auto psi = fent::from_second_quantized(gs.state, fent::hubbard_labeled_space());
  const fent::SlaterAnalysis analysis = fent::slater_rank(psi);
  const fent::Complex c_spin =
      fent::correlation(psi, fent::electron_spin_z(1), fent::electron_spin_z(2));
  const fent::FockBasis basis = fent::hubbard_basis();
  const fent::Complex c_number = fent::correlation(gs.state, fent::site_number(basis, 0),
                                                   fent::site_number(basis, 1));
  std::cout << "x                 " << format_number(x) << "\n"
            << "ground_energy     " << format_number(gs.energy) << "\n"
            << "slater_rank       " << analysis.rank << "\n"
            << "pfaffian_residual " << format_number(analysis.pfaffian_residual) << "\n"
            << "single_slater     " << (analysis.rank == 1 ? "yes" : "no") << "\n"
            << "C_s1s2            " << format_number(c_spin.real()) << "\n"
            << "C_N1N2            " << format_number(c_number.real()) << "\n";
  for (const auto& pair : analysis.canonical_pairs)
    std::cout << "pair_amplitude    " << format_number(pair.amplitude) << "\n";
  return kExitOk;
}

int cmd_maximize(const std::string& pair, std::uint64_t seed, int restarts, long samples) {
  fent::ObservablePair which;
  if (pair == "s1s2")
    which = fent::ObservablePair::electron_spins;
  else if (pair == "S1S2")
    which = fent::ObservablePair::site_spins;
  else if (pair == "nn")
    which = fent::ObservablePair::bonding_numbers;
  else if (pair == "N1N2")
    which = fent::ObservablePair::site_numbers;
  else {
    std::cerr << "maximize: unknown pair '" << pair << "'\n";
    return kExitUsage;
  }

  fent::MaxOptions opts;
  opts.seed = seed;
  opts.restarts = restarts;
  opts.oracle_samples = samples;
  const fent::FockBasis basis = fent::hubbard_basis();
  fent::MaxResult result;
  switch (which) {
    case fent::ObservablePair::electron_spins:
      result = fent::max_abs_correlation(fent::electron_spin_z(1), fent::electron_spin_z(2),
                                         opts);
      break;
    case fent::ObservablePair::site_spins:
      result = fent::max_abs_correlation(fent::site_spin_z(basis, 0),
                                         fent::site_spin_z(basis, 1), opts);
      break;
    case fent::ObservablePair::bonding_numbers:
      result = fent::max_abs_correlation(fent::bonding_number(basis, fent::Spin::up),
                                         fent::bonding_number(basis, fent::Spin::down), opts);
      break;
    case fent::ObservablePair::site_numbers:
      result = fent::max_abs_correlation(fent::site_number(basis, 0),
                                         fent::site_number(basis, 1), opts);
      break;
  }

  std::cout << "pair        " << pair << "\n"
            << "max_abs     " << format_number(result.max_abs) << "\n"
            << "oracle_max  " << format_number(result.oracle_max) << "\n"
            << "oracle_gap  " << format_number(result.diagnostics.oracle_gap) << "\n"
            << "restarts    " << result.diagnostics.restarts << "\n"
            << "iterations  " << result.diagnostics.iterations << "\n"
            << "converged   " << (result.diagnostics.converged ? "yes" : "no") << "\n"
            << "argmax      ";
  for (int i = 0; i < result.argmax.size(); ++i) {
    const fent::Complex a = result.argmax(i);
    std::cout << (i ? " " : "") << format_number(a.real()) << (a.imag() < 0 ? "-" : "+")
              << format_number(std::abs(a.imag())) << "i";
  }
  std::cout << "\n";
  const bool ok = result.diagnostics.converged && result.diagnostics.oracle_gap >= -1e-6;
  return ok ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observable correlations, degree of entanglement, and Slater-rank "
               "analysis for two-fermion systems"};
  app.require_subcommand(1);

  double x_min = 0.0, x_max = 4.0;
  int n_points = 17;
  std::string scale = "linear", out, format = "csv";
  std::uint64_t seed = default_seed();
  auto* sweep = app.add_subcommand("sweep", "Ground-state sweep over x = U/(4t) "
                                            "checked against closed forms");
  sweep->add_option("--x-min", x_min, "Smallest x (>= 0)");
  sweep->add_option("--x-max", x_max, "Largest x");
  sweep->add_option("--points", n_points, "Number of grid points");
  sweep->add_option("--scale", scale, "Grid spacing")
      ->check(CLI::IsMember({"linear", "log"}));
  sweep->add_option("--out", out, "Output path (default stdout)");
  sweep->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--seed", seed, "Optimizer seed (env FENT_SEED, flag wins)");

  auto* verify = app.add_subcommand("verify", "Run the cross-module invariant suite");
  verify->add_option("--seed", seed, "Suite seed (env FENT_SEED, flag wins)");

  int n_cells = 16;
  std::string epr_out;
  auto* epr = app.add_subcommand("epr", "Conditional coincidence table for the "
                                        "doubly occupied determinant");
  epr->add_option("--cells", n_cells, "Detector cells on the grid");
  epr->add_option("--out", epr_out, "Output path (default stdout)");

  double slater_x = 0.0;
  auto* slater = app.add_subcommand("slater", "Slater rank and spin correlation of "
                                              "the ground state");
  slater->add_option("--x", slater_x, "Coupling x = U/(4t)");

  std::string pair = "s1s2";
  int restarts = 64;
  long samples = 1000000;
  auto* maximize = app.add_subcommand("maximize", "Maximize |C_AB| over the state space "
                                                  "for one observable pair");
  maximize->add_option("--pair", pair, "One of s1s2, S1S2, nn, N1N2");
  maximize->add_option("--seed", seed, "Optimizer seed (env FENT_SEED, flag wins)");
  maximize->add_option("--restarts", restarts, "Gradient-ascent restarts");
  maximize->add_option("--samples", samples, "Sampling-oracle size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(x_min, x_max, n_points, scale, out, format, seed);
    if (verify->parsed()) return cmd_verify(seed);
    if (epr->parsed()) return cmd_epr(n_cells, epr_out);
    if (slater->parsed()) return cmd_slater(slater_x);
    if (maximize->parsed()) return cmd_maximize(pair, seed, restarts, samples);
  } catch (const fent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
