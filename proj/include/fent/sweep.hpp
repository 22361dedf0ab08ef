#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fent/entangle.hpp"
#include "fent/hubbard.hpp"

namespace fent {

/// The four observable pairs the sweep reports on.
enum class ObservablePair {
  electron_spins,   // s_1^z, s_2^z (labeled particles)
  site_spins,       // S_1^z, S_2^z
  bonding_numbers,  // n_up, n_down
  site_numbers,     // N_1, N_2
};

const char* pair_name(ObservablePair pair);

/// C_AB for the Hubbard ground state at coupling x.
Complex pair_correlation(double x, ObservablePair pair);

/// State-independent normalizing maxima, one optimizer run per pair.
struct PairMaxima {
  MaxResult electron_spins;
  MaxResult site_spins;
  MaxResult bonding_numbers;
  MaxResult site_numbers;

  const MaxResult& get(ObservablePair pair) const;
};

PairMaxima compute_pair_maxima(const MaxOptions& options = {});

struct SweepRow {
  double x;
  double c_s1s2, e_s1s2;
  double c_S1S2, e_S1S2;
  double c_nn, e_nn;
  double c_N1N2, e_N1N2;
  double cf_c_S1S2, cf_e_nn, cf_c_N1N2;
  double err_max;  // worst |numeric - closed form| across the row
};

/// Evaluate one grid point against the closed forms, reusing precomputed
/// maxima for the E columns.
SweepRow evaluate_sweep_row(double x, const PairMaxima& maxima);

std::vector<double> sweep_grid(double x_min, double x_max, int n_points, bool log_scale);

extern const char* const kSweepCsvHeader;

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows,
                      const PairMaxima& maxima, std::uint64_t seed);

/// 15-significant-digit, locale-independent number formatting used by all
/// machine-readable output.
std::string format_number(double v);

}  // namespace fent
