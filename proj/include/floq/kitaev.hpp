#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floq/spin_chain.hpp"

namespace floq {

// ---------------------------------------------------------------------------
// Free-fermion (Bogoliubov-de Gennes) solver for the fermionized chain,
//
//   H_K = -sum_n mu_n (a+_n a_n - 1/2) - sum_b J_b (a+_n a_{n+1} + h.c.)
//                                      - sum_b F_b (a+_n a+_{n+1} + h.c.),
//
// open boundary.  With A the symmetric hopping/chemical-potential block and
// B the antisymmetric pairing block, the excitation energies are the
// singular values of M = A - B (equivalently the non-negative square roots
// of the spectrum of (A-B)(A+B) = M M^T).  The Jordan-Wigner string runs
// left to right with site 0 leftmost; fermion number = number of up spins.
// ---------------------------------------------------------------------------

struct KitaevParams {
  Eigen::VectorXd mu;  // length L
  Eigen::VectorXd J;   // length L-1
  Eigen::VectorXd F;   // length L-1

  int L() const { return static_cast<int>(mu.size()); }
  static KitaevParams uniform(int L, double mu, double J, double F);
};

void validate(const KitaevParams& p);

// Fermion image of a spin chain; the parameter dictionary is the identity
// (mu_n = omegaF/2 - omega0_n, J_b = Jxx0_b + Jyy_b, F_b = F_amp_b).
KitaevParams to_kitaev(const ChainParams& c);

// A - B and A + B blocks (real L x L).
Eigen::MatrixXd bdg_m_minus(const KitaevParams& p);
Eigen::MatrixXd bdg_m_plus(const KitaevParams& p);

struct BdgSpectrum {
  Eigen::VectorXd energies;   // L non-negative excitation energies, ascending
  Eigen::MatrixXd phi;        // column m: left (A-B)(A+B) eigenvector of mode m
  Eigen::MatrixXd psi;        // column m: partner vector, psi = M^T phi / eps
  Eigen::MatrixXd u, v;       // particle/hole amplitudes, u = (phi+psi)/2, v = (phi-psi)/2
  double ground_energy = 0.0; // -1/2 sum_m eps_m
  int vacuum_parity = +1;     // sign of det(A - B); parity of the Bogoliubov vacuum
};

// Symmetric-product eigensolve with an automatic switch to the singular-value
// route when the smallest squared energy sits within 1e-16 of zero relative
// to the matrix scale; squaring loses exactly the digits the edge modes live in.
BdgSpectrum bdg_diagonalize(const KitaevParams& p);

// Per-site Majorana weight of the lowest mode plus an exponential-decay fit.
struct EdgeProfile {
  Eigen::VectorXd weight;       // w_n = (phi_n^2 + psi_n^2)/2, sums to 1
  double xi = 0.0;              // localization length from the folded log-linear fit
  double fit_r2 = 0.0;
  double end_to_end_ratio = 1.0;  // w_0 / w_{L-1}
  double end_mass = 0.0;          // weight on the two outermost sites per end
  bool edge_localized = false;
};

EdgeProfile edge_mode_profile(const BdgSpectrum& spec);

enum class TopoPhase { topological, trivial, boundary };

// Uniform chains only: |mu| < 2|J| is topological, equality (within 1e-12) is
// the boundary.  Disordered input is refused; scan the spectral gap instead.
TopoPhase phase_classifier(const KitaevParams& p);

const char* to_string(TopoPhase phase);

// eps1 versus chain length with a log-linear decay fit.  Non-monotone decay
// (the small-F regime, where the splitting amplitude oscillates through zero)
// is flagged and the dips counted.
struct GapScan {
  std::vector<int> lengths;
  std::vector<double> eps1;
  double decay_rate = 0.0;  // -d ln eps1 / dL; +inf when eps1 vanishes identically
  double fit_r2 = 0.0;
  bool oscillatory = false;
  int sign_changes = 0;  // inferred zero crossings of the splitting amplitude
};

GapScan gap_scaling_scan(double J, double F, double mu, const std::vector<int>& lengths);

// Disorder ensemble: per-seed Gaussian perturbations mu_n += site_sigma*N(0,1),
// J_b/F_b += bond_sigma*N(0,1).  Deterministic for a fixed seed list.
struct DisorderStats {
  std::vector<std::uint64_t> seeds;
  std::vector<double> eps1;
  std::vector<double> xi;
  std::vector<bool> edge_localized;
  double eps1_median = 0.0, eps1_q25 = 0.0, eps1_q75 = 0.0;
  double xi_median = 0.0;
  double edge_fraction = 1.0;   // fraction of seeds classified edge-localized
  bool classification_stable = true;  // all seeds agree with the clean chain
};

DisorderStats disorder_ensemble(const KitaevParams& base, double site_sigma, double bond_sigma,
                                const std::vector<std::uint64_t>& seeds);

// Many-body spectrum reconstructed from single-particle energies: all sums
// sum_m (+-eps_m/2) with parity vacuum_parity * (-1)^(occupied modes).
struct ManyBodySpectrum {
  Eigen::VectorXd energies;
  Eigen::VectorXi parities;
};

ManyBodySpectrum many_body_from_bdg(const BdgSpectrum& spec);

// Master correctness gate: spin ED versus BdG reconstruction, parities included.
struct JwReport {
  bool passed = false;
  double max_energy_diff = 0.0;
  int parity_mismatches = 0;
  std::string diff;  // first few offending entries when the check fails
};

JwReport compare_many_body(const ChainSpectrum& ed, const ManyBodySpectrum& mb, double tol = 1e-9);

JwReport jordan_wigner_check(const ChainParams& c, double tol = 1e-9);

}  // namespace floq
