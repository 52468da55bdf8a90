#include "cli/verify.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <iomanip>
#include <vector>

#include "floq/kitaev.hpp"
#include "floq/numeric.hpp"
#include "floq/qubit_floquet.hpp"
#include "floq/spin_chain.hpp"

namespace floq::cli {

namespace {

struct Line {
  const char* name;
  double worst;
  double tol;
  bool passed;
};

Line check(const char* name, double worst, double tol) { return {name, worst, tol, worst <= tol}; }

double unitarity_worst(int trials) {
  Rng rng(11);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double T = rng.uniform(0.1, 10.0);
    const auto q = rwa_from_angles(rng.uniform(0.0, 8.0) / T, rng.uniform(0.0, 15.0),
                                   rng.uniform(-pi / 2, pi / 2));
    const auto u = monodromy_matrix(q, T, rng.uniform(0.01, 0.99) * T);
    worst = std::max(worst, (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double closed_form_worst(int trials) {
  Rng rng(23);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double T = rng.uniform(0.1, 10.0);
    const auto q = rwa_from_angles(rng.uniform(0.0, 8.0) / T, rng.uniform(0.0, 15.0),
                                   rng.uniform(-pi / 2, pi / 2));
    const auto pair = floquet_eigensystem(q, T, rng.uniform(0.01, 0.99) * T);
    if (pair.degenerate) continue;
    const auto eps = closed_form_quasienergy(q, T);
    worst = std::max(worst, std::abs(pair.eps[0] - eps[0]) * T);
  }
  return worst;
}

double t0_independence_worst(int trials) {
  Rng rng(37);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double T = rng.uniform(0.1, 10.0);
    const auto q = rwa_from_angles(rng.uniform(0.0, 8.0) / T, rng.uniform(0.0, 15.0),
                                   rng.uniform(-pi / 2, pi / 2));
    const auto a = floquet_eigensystem(q, T, 0.1 * T);
    const auto b = floquet_eigensystem(q, T, 0.5 * T);
    const auto c = floquet_eigensystem(q, T, 0.9 * T);
    worst = std::max({worst, std::abs(a.eps[0] - b.eps[0]) * T, std::abs(b.eps[0] - c.eps[0]) * T});
  }
  return worst;
}

double folding_worst() {
  double worst = 0.0;
  const double T = 2.7;
  for (int i = -7; i <= 7; ++i) {
    const double eps = i * pi / (8 * T);
    // even rule is the identity
    worst = std::max(worst, std::abs(lab_frame_quasienergy(eps, T, 4) - eps));
    // odd rule applied twice returns the input
    const double once = lab_frame_quasienergy(eps, T, 5);
    worst = std::max(worst, std::abs(lab_frame_quasienergy(once, T, 5) - eps));
  }
  return worst;
}

double g_periodicity_worst(int trials) {
  Rng rng(41);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double T = rng.uniform(0.1, 10.0);
    const double Om = rng.uniform(0.0, 8.0) / T;
    const double g = rng.uniform(0.0, four_pi);
    const double th = rng.uniform(-pi / 2, pi / 2);
    const auto e1 = closed_form_quasienergy(rwa_from_angles(Om, g, th), T);
    const auto e2 = closed_form_quasienergy(rwa_from_angles(Om, g + four_pi, th), T);
    const auto e3 = closed_form_quasienergy(rwa_from_angles(Om + four_pi / T, g, th), T);
    worst = std::max({worst, std::abs(e1[0] - e2[0]) * T, std::abs(e1[0] - e3[0]) * T});
  }
  return worst;
}

double parity_conservation_worst(int trials) {
  Rng rng(53);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const int L = 2 + static_cast<int>(rng.uniform() * 4.0);
    ChainParams c = ChainParams::uniform(L, 100.0, rng.uniform(-1, 1), rng.uniform(-1, 1),
                                         rng.uniform(-1, 1), 200.0 + rng.uniform(-2, 2));
    const ChainSpectrum spec = chain_spectrum(c);
    const Eigen::VectorXd pv = parity_operator(L);
    const int dim = 1 << L;
    Eigen::VectorXcd psi(dim);
    for (int b = 0; b < dim; ++b) psi(b) = std::complex<double>(rng.normal(), rng.normal());
    psi.normalize();
    const Eigen::VectorXcd coeff = spec.eigenvectors.transpose().cast<std::complex<double>>() * psi;
    const double p0 = std::real(psi.dot(pv.cast<std::complex<double>>().asDiagonal() * psi));
    for (const double t : {0.37, 1.9, 13.4}) {
      Eigen::VectorXcd evolved = Eigen::VectorXcd::Zero(dim);
      for (int j = 0; j < dim; ++j)
        evolved += coeff(j) * std::exp(std::complex<double>(0, -spec.eigenvalues(j) * t)) *
                   spec.eigenvectors.col(j).cast<std::complex<double>>();
      const double pt = std::real(evolved.dot(pv.cast<std::complex<double>>().asDiagonal() * evolved));
      worst = std::max(worst, std::abs(pt - p0));
    }
  }
  return worst;
}

double ed_bdg_worst(int trials) {
  Rng rng(67);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const int L = 2 + static_cast<int>(rng.uniform() * 7.0);  // 2..8
    const double w0 = 50.0;
    ChainParams c;
    c.omega0.resize(L);
    c.Jxx0.resize(L - 1);
    c.Jyy.resize(L - 1);
    c.F_amp.resize(L - 1);
    const bool disordered = rng.uniform() < 0.5;
    for (int n = 0; n < L; ++n) c.omega0(n) = w0 + (disordered ? rng.uniform(-1, 1) : 0.0);
    for (int b = 0; b < L - 1; ++b) {
      c.Jxx0(b) = rng.uniform(-1, 1);
      c.Jyy(b) = rng.uniform(-1, 1);
      c.F_amp(b) = rng.uniform(-1, 1);
    }
    c.omegaF = 2 * w0 + rng.uniform(-2, 2);
    const JwReport rep = jordan_wigner_check(c);
    worst = std::max(worst, rep.max_energy_diff + (rep.parity_mismatches > 0 ? 1.0 : 0.0));
  }
  return worst;
}

double particle_hole_worst(int trials) {
  Rng rng(79);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const int L = 4 + static_cast<int>(rng.uniform() * 13.0);
    KitaevParams p;
    p.mu.resize(L);
    p.J.resize(L - 1);
    p.F.resize(L - 1);
    for (int n = 0; n < L; ++n) p.mu(n) = rng.uniform(-2, 2);
    for (int b = 0; b < L - 1; ++b) {
      p.J(b) = rng.uniform(-2, 2);
      p.F(b) = rng.uniform(-2, 2);
    }
    const Eigen::MatrixXd M = bdg_m_minus(p);
    Eigen::MatrixXd big = Eigen::MatrixXd::Zero(2 * L, 2 * L);
    big.topRightCorner(L, L) = M / 2;
    big.bottomLeftCorner(L, L) = M.transpose() / 2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(big);
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    for (int m = 0; m < 2 * L; ++m)
      worst = std::max(worst,
                       std::abs(es.eigenvalues()(m) + es.eigenvalues()(2 * L - 1 - m)) / scale);
  }
  return worst;
}

double fig3_threshold_worst(double FoJ) {
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double mu = -1.0 + 2.0 * i / 200.0;
    const auto spec = bdg_diagonalize(KitaevParams::uniform(16, mu, 1.0, FoJ));
    worst = std::max(worst, spec.energies(0));
  }
  return worst;
}

}  // namespace

int verify_all(std::ostream& os, double tol_override) {
  const auto tol = [&](double def) { return tol_override > 0 ? tol_override : def; };

  std::vector<Line> lines;
  lines.push_back(check("monodromy_unitarity", unitarity_worst(200), tol(1e-12)));
  lines.push_back(check("closed_form_vs_monodromy", closed_form_worst(1000), tol(1e-10)));
  lines.push_back(check("quasienergy_t0_independence", t0_independence_worst(200), tol(1e-10)));
  lines.push_back(check("brillouin_folding_involution", folding_worst(), tol(1e-15)));
  lines.push_back(check("g_and_Omega_periodicity", g_periodicity_worst(100), tol(1e-12)));
  lines.push_back(check("chain_parity_conservation", parity_conservation_worst(20), tol(1e-10)));
  lines.push_back(check("ed_bdg_oracle_L_le_8", ed_bdg_worst(200), tol(1e-9)));
  lines.push_back(check("bdg_particle_hole_symmetry", particle_hole_worst(50), tol(1e-12)));
  // Quoted 16-site edge-mode bounds.  These are kept strict even though the
  // computed maxima exceed them at L = 16 (they hold from L = 33 on); the
  // numbers below report the measured maxima honestly.
  lines.push_back(check("fig3_eps1_bound_F0.3", fig3_threshold_worst(0.3), 4e-5));
  lines.push_back(check("fig3_eps1_bound_F1.2", fig3_threshold_worst(1.2), 2e-7));

  int failed = 0;
  os << std::left;
  for (const auto& l : lines) {
    os << (l.passed ? "[PASS] " : "[FAIL] ") << std::setw(34) << l.name << " worst "
       << std::scientific << std::setprecision(3) << l.worst << "  tol " << l.tol
       << std::defaultfloat << "\n";
    if (!l.passed) ++failed;
  }
  os << (failed == 0 ? "verify: all checks passed\n"
                     : "verify: " + std::to_string(failed) + " check(s) failed\n");
  return failed;
}

}  // namespace floq::cli
