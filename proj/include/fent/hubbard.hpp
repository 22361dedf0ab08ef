#pragma once

#include "fent/firstq.hpp"
#include "fent/fock.hpp"

namespace fent {

/// Two-site, two-electron Hubbard model. The dimensionless coupling is
/// x = U/(4t); sweeps use t = 1, U = 4x.
struct HubbardParams {
  double t = 1.0;
  double u = 0.0;

  double x() const;
  static HubbardParams from_x(double x);
};

/// The 6-dimensional 2-particle sector over modes
/// (site0,up)=0, (site0,down)=1, (site1,up)=2, (site1,down)=3.
FockBasis hubbard_basis();

inline int hubbard_mode(int site, Spin spin) { return mode_index({site, spin}); }

/// H = -t sum_s (c_0s^dag c_1s + h.c.) + U sum_i n_iu n_id on the sector.
Operator build_hamiltonian(const HubbardParams& p);

struct GroundStateResult {
  double energy;
  StateVector state;       // phase fixed: largest-|amplitude| entry real positive
  bool degenerate;         // two lowest eigenvalues within 1e-9 * ||H||_F
  double residual;         // ||H psi - E psi||_2
};

GroundStateResult ground_state(const Operator& h);

// Model observable pairs ------------------------------------------------------

/// Site spin S_i^z = N_iu - N_id (sector operator).
Operator site_spin_z(const FockBasis& basis, int site);

/// Site occupation N_i = N_iu + N_id.
Operator site_number(const FockBasis& basis, int site);

/// Bonding-orbital occupation n_s = a_s^dag a_s, a_s = (c_0s + c_1s)/sqrt(2).
Operator bonding_number(const FockBasis& basis, Spin spin);

/// Labeled space for the model: 2 orbitals x 2 spins, index = 2*site + spin.
SingleParticleSpace hubbard_labeled_space();

/// Single-particle s^z with eigenvalues +-1 (Pauli convention) on the
/// labeled space.
Matrix electron_spin_z_matrix();

/// s_1^z or s_2^z as a labeled-particle observable (particle = 1 or 2).
ParticleObservable electron_spin_z(int particle);

// Closed forms ---------------------------------------------------------------

/// Exact ground-state values as functions of x:
///   f = sqrt(1+x^2) - x
///   g = (1+f)^2 / (2(1+f^2))
///   C_{s1z,s2z} = -1
///   C_{S1z,S2z} = -1/(1+f^2)
///   E_{nu,nd}   = 4g(1-g)           (normalizing maximum 1/4)
///   C_{N1,N2}   = -f^2/(1+f^2)
struct ClosedForm {
  double f;
  double g;
  double c_electron_spins;
  double c_site_spins;
  double e_bonding_numbers;
  double c_site_numbers;
};

ClosedForm closed_form(double x);

}  // namespace fent
