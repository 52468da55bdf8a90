#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>

#include "floq/errors.hpp"

namespace floq {

// ---------------------------------------------------------------------------
// Exact diagonalization of the resonantly modulated qubit chain in the
// rotating frame,
//
//   H = -1/2 sum_n mu_n sz_n - sum_b J_b (S+_n S-_{n+1} + h.c.)
//                            - sum_b F_b (S+_n S+_{n+1} + S-_{n+1} S-_n),
//
// where mu_n = omegaF/2 - omega0_n, J_b = Jxx0_b + Jyy_b, and S+- are the
// standard raising/lowering operators (the 1/4 prefactors of the sigma+-
// convention sigma+- = sx +- i sy are absorbed here).  Basis ordering is
// little-endian: site 0 is the least significant bit of the basis index,
// bit value 1 = spin up.
// ---------------------------------------------------------------------------

struct ChainParams {
  Eigen::VectorXd omega0;  // per-site transition frequencies, length L
  Eigen::VectorXd Jxx0;    // per-bond static xx coupling, length L-1
  Eigen::VectorXd Jyy;     // per-bond yy coupling, length L-1
  Eigen::VectorXd F_amp;   // per-bond modulation amplitude, length L-1
  double omegaF = 0.0;     // modulation frequency, close to 2*omega0

  int L() const { return static_cast<int>(omega0.size()); }
  Eigen::VectorXd mu() const { return Eigen::VectorXd::Constant(L(), omegaF / 2) - omega0; }
  Eigen::VectorXd J() const { return Jxx0 + Jyy; }

  static ChainParams uniform(int L, double omega0, double Jxx0, double Jyy, double F_amp,
                             double omegaF);
};

void validate(const ChainParams& c);

inline constexpr int kDefaultChainLMax = 14;

// Dense 2^L x 2^L rotating-frame Hamiltonian (real symmetric in this basis).
Eigen::MatrixXd build_rwa_chain_hamiltonian(const ChainParams& c, int L_max = kDefaultChainLMax);

// Diagonal of the parity operator P = exp[-i pi/2 sum_n (sz_n + 1)]:
// entry b = (-1)^(number of up spins in b).
Eigen::VectorXd parity_operator(int L);

// Full spectrum with parity labels; each eigenvector is a parity eigenstate
// (the solve runs inside the parity blocks, so this holds under degeneracy).
struct ChainSpectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::VectorXi parities;      // +-1 per eigenstate
  Eigen::MatrixXd eigenvectors;  // column j = eigenstate j
};

ChainSpectrum chain_spectrum(const ChainParams& c, int L_max = kDefaultChainLMax);

// Analytic two-qubit solution: eps = (+r, -r, -J, +J) with r = sqrt(mu^2+F^2),
// even-parity states cos(phi_j)|00> + sin(phi_j)|11> with
// tan(phi_j) = (mu - eps_j)/F (principal branch; F -> 0 by continuity).
struct TwoQubitSolution {
  std::array<double, 4> eps{};
  std::array<double, 2> phi{};
  std::array<int, 4> parity{+1, +1, -1, -1};
};

TwoQubitSolution two_qubit_eigensystem(double mu, double F, double J);

// Modulation amplitude where the even- and odd-sector levels cross:
// F* = sqrt(J^2 - mu^2) when |mu| < |J|, otherwise no crossing exists.
std::optional<double> crossing_amplitude(double mu, double J);

// Stroboscopic lab-frame expectation values <psi_lab(kT)|O|psi_lab(kT)> for
// k = 0..k_max, with T the modulation period.  The frame transformation
// contributes exactly one parity factor P per period.
Eigen::VectorXd stroboscopic_observables(const ChainParams& c, const Eigen::VectorXcd& psi_init,
                                         const Eigen::MatrixXcd& observable, long k_max,
                                         int L_max = kDefaultChainLMax);

// Single-site operator embedded in the chain (little-endian bit convention).
Eigen::MatrixXcd site_operator(int L, int site, const Eigen::Matrix2cd& op);

}  // namespace floq
