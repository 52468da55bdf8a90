#include "floq/spin_chain.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "floq/numeric.hpp"

namespace floq {

namespace {

int popcount(int b) { return __builtin_popcount(static_cast<unsigned>(b)); }

}  // namespace

ChainParams ChainParams::uniform(int L, double omega0, double Jxx0, double Jyy, double F_amp,
                                 double omegaF) {
  ChainParams c;
  c.omega0 = Eigen::VectorXd::Constant(L, omega0);
  c.Jxx0 = Eigen::VectorXd::Constant(L - 1, Jxx0);
  c.Jyy = Eigen::VectorXd::Constant(L - 1, Jyy);
  c.F_amp = Eigen::VectorXd::Constant(L - 1, F_amp);
  c.omegaF = omegaF;
  return c;
}

void validate(const ChainParams& c) {
  const int L = c.L();
  if (L < 2) throw std::invalid_argument("ChainParams: L must be >= 2");
  if (c.Jxx0.size() != L - 1 || c.Jyy.size() != L - 1 || c.F_amp.size() != L - 1)
    throw std::invalid_argument("ChainParams: coupling arrays must have length L-1");
  if (!c.omega0.allFinite() || !c.Jxx0.allFinite() || !c.Jyy.allFinite() || !c.F_amp.allFinite())
    throw std::invalid_argument("ChainParams: parameters must be finite");
}

Eigen::MatrixXd build_rwa_chain_hamiltonian(const ChainParams& c, int L_max) {
  validate(c);
  const int L = c.L();
  if (L > L_max)
    throw capacity_error("build_rwa_chain_hamiltonian: L exceeds the dense ED budget (L_max = " +
                         std::to_string(L_max) + ")");
  const Eigen::VectorXd mu = c.mu();
  const Eigen::VectorXd J = c.J();
  const Eigen::VectorXd& F = c.F_amp;

  const int dim = 1 << L;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int n = 0; n < L; ++n) diag += -0.5 * mu(n) * (((b >> n) & 1) ? 1.0 : -1.0);
    H(b, b) += diag;
    for (int n = 0; n < L - 1; ++n) {
      const int sn = (b >> n) & 1, sn1 = (b >> (n + 1)) & 1;
      if (sn != sn1) {
        H(b ^ (1 << n) ^ (1 << (n + 1)), b) += -J(n);  // S+S- exchange
      } else if (sn == 0) {
        H(b | (1 << n) | (1 << (n + 1)), b) += -F(n);  // pair creation
      } else {
        H(b & ~(1 << n) & ~(1 << (n + 1)), b) += -F(n);  // pair annihilation
      }
    }
  }
  return H;
}

Eigen::VectorXd parity_operator(int L) {
  if (L < 1) throw std::invalid_argument("parity_operator: L must be >= 1");
  const int dim = 1 << L;
  Eigen::VectorXd p(dim);
  for (int b = 0; b < dim; ++b) p(b) = (popcount(b) % 2 == 0) ? 1.0 : -1.0;
  return p;
}

ChainSpectrum chain_spectrum(const ChainParams& c, int L_max) {
  const Eigen::MatrixXd H = build_rwa_chain_hamiltonian(c, L_max);
  const int dim = static_cast<int>(H.rows());
  const Eigen::VectorXd pv = parity_operator(c.L());

  ChainSpectrum out;
  out.eigenvalues.resize(dim);
  out.parities.resize(dim);
  out.eigenvectors = Eigen::MatrixXd::Zero(dim, dim);

  // Solve inside each parity block so every eigenvector is a parity eigenstate
  // even when the sectors are degenerate.
  int filled = 0;
  for (int parity : {+1, -1}) {
    std::vector<int> idx;
    for (int b = 0; b < dim; ++b)
      if ((pv(b) > 0) == (parity > 0)) idx.push_back(b);
    const int m = static_cast<int>(idx.size());
    Eigen::MatrixXd block(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) block(i, j) = H(idx[i], idx[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    for (int j = 0; j < m; ++j) {
      out.eigenvalues(filled) = solver.eigenvalues()(j);
      out.parities(filled) = parity;
      for (int i = 0; i < m; ++i) out.eigenvectors(idx[i], filled) = solver.eigenvectors()(i, j);
      ++filled;
    }
  }

  // global ascending order, parity label as tiebreaker for reproducibility
  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (out.eigenvalues(a) != out.eigenvalues(b)) return out.eigenvalues(a) < out.eigenvalues(b);
    return out.parities(a) > out.parities(b);
  });
  ChainSpectrum sorted;
  sorted.eigenvalues.resize(dim);
  sorted.parities.resize(dim);
  sorted.eigenvectors.resize(dim, dim);
  for (int j = 0; j < dim; ++j) {
    sorted.eigenvalues(j) = out.eigenvalues(order[j]);
    sorted.parities(j) = out.parities(order[j]);
    sorted.eigenvectors.col(j) = out.eigenvectors.col(order[j]);
  }
  return sorted;
}

TwoQubitSolution two_qubit_eigensystem(double mu, double F, double J) {
  TwoQubitSolution s;
  const double r = std::hypot(mu, F);
  s.eps = {r, -r, -J, +J};
  for (int j = 0; j < 2; ++j) {
    // tan(phi_j) = (mu - eps_j)/F on the principal branch; the F -> 0 limit
    // follows by continuity (phi in [0, pi/2] up to sign conventions).
    double phi = std::atan2(mu - s.eps[j], F);
    if (phi > pi / 2) phi -= pi;
    if (phi <= -pi / 2) phi += pi;
    s.phi[j] = phi;
  }
  return s;
}

std::optional<double> crossing_amplitude(double mu, double J) {
  if (!(std::abs(mu) < std::abs(J))) return std::nullopt;
  return std::sqrt(J * J - mu * mu);
}

Eigen::MatrixXcd site_operator(int L, int site, const Eigen::Matrix2cd& op) {
  if (site < 0 || site >= L) throw std::invalid_argument("site_operator: site out of range");
  const int dim = 1 << L;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const int s = (b >> site) & 1;
    for (int sp = 0; sp < 2; ++sp) {
      const std::complex<double> el = op(sp, s);
      if (el == std::complex<double>(0, 0)) continue;
      const int bp = (b & ~(1 << site)) | (sp << site);
      M(bp, b) += el;
    }
  }
  return M;
}

Eigen::VectorXd stroboscopic_observables(const ChainParams& c, const Eigen::VectorXcd& psi_init,
                                         const Eigen::MatrixXcd& observable, long k_max,
                                         int L_max) {
  if (std::abs(psi_init.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("stroboscopic_observables: psi_init must be normalized");
  if (!(c.omegaF > 0))
    throw std::invalid_argument("stroboscopic_observables: omegaF must be positive");
  const ChainSpectrum spec = chain_spectrum(c, L_max);
  const double T = two_pi / c.omegaF;
  const Eigen::VectorXd pv = parity_operator(c.L());

  const Eigen::VectorXcd coeff = spec.eigenvectors.transpose().cast<std::complex<double>>() * psi_init;

  Eigen::VectorXd series(k_max + 1);
  for (long k = 0; k <= k_max; ++k) {
    Eigen::VectorXcd phase(coeff.size());
    for (int j = 0; j < coeff.size(); ++j)
      phase(j) = coeff(j) * std::exp(std::complex<double>(0, -spec.eigenvalues(j) * k * T));
    Eigen::VectorXcd psi = spec.eigenvectors.cast<std::complex<double>>() * phase;
    if (k % 2 == 1) psi = pv.cast<std::complex<double>>().asDiagonal() * psi;  // P^k frame factor
    series(k) = std::real(psi.dot(observable * psi));
  }
  return series;
}

}  // namespace floq
