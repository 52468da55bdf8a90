#include "floq/kitaev.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "floq/numeric.hpp"

namespace floq {

namespace {

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const double pos = q * (static_cast<double>(v.size()) - 1);
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  const double f = pos - static_cast<double>(i);
  return v[i] * (1 - f) + v[i + 1] * f;
}

// least squares y = a + b x; returns (a, b, r2)
struct LinFit {
  double a = 0, b = 0, r2 = 0;
};

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  LinFit out;
  const std::size_t n = x.size();
  if (n < 2) return out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double d = n * sxx - sx * sx;
  if (d == 0) return out;
  out.b = (n * sxy - sx * sy) / d;
  out.a = (sy - out.b * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ym = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = out.a + out.b * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - ym) * (y[i] - ym);
  }
  out.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return out;
}

}  // namespace

KitaevParams KitaevParams::uniform(int L, double mu, double J, double F) {
  KitaevParams p;
  p.mu = Eigen::VectorXd::Constant(L, mu);
  p.J = Eigen::VectorXd::Constant(L - 1, J);
  p.F = Eigen::VectorXd::Constant(L - 1, F);
  return p;
}

void validate(const KitaevParams& p) {
  const int L = p.L();
  if (L < 2) throw std::invalid_argument("KitaevParams: L must be >= 2");
  if (p.J.size() != L - 1 || p.F.size() != L - 1)
    throw std::invalid_argument("KitaevParams: bond arrays must have length L-1");
  if (!p.mu.allFinite() || !p.J.allFinite() || !p.F.allFinite())
    throw std::invalid_argument("KitaevParams: parameters must be finite");
}

KitaevParams to_kitaev(const ChainParams& c) {
  validate(c);
  KitaevParams p;
  p.mu = c.mu();
  p.J = c.J();
  p.F = c.F_amp;
  return p;
}

Eigen::MatrixXd bdg_m_minus(const KitaevParams& p) {
  validate(p);
  const int L = p.L();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(L, L);
  for (int n = 0; n < L; ++n) M(n, n) = -p.mu(n);
  for (int n = 0; n < L - 1; ++n) {
    M(n, n + 1) = -p.J(n) + p.F(n);  // A - B, upper
    M(n + 1, n) = -p.J(n) - p.F(n);  // A - B, lower
  }
  return M;
}

Eigen::MatrixXd bdg_m_plus(const KitaevParams& p) {
  return bdg_m_minus(p).transpose();  // (A - B)^T = A + B
}

BdgSpectrum bdg_diagonalize(const KitaevParams& p) {
  const int L = p.L();
  const Eigen::MatrixXd M = bdg_m_minus(p);
  const double scale = std::max(M.cwiseAbs().maxCoeff(), 1e-300);

  BdgSpectrum out;
  out.energies.resize(L);
  out.phi.resize(L, L);
  out.psi.resize(L, L);

  // Primary route: (A-B)(A+B) = M M^T is symmetric positive semidefinite.
  const Eigen::MatrixXd MMt = M * M.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(MMt);
  const Eigen::VectorXd ev2 = solver.eigenvalues().cwiseMax(0.0);

  const bool near_zero = ev2(0) < 1e-16 * scale * scale;
  if (near_zero) {
    // The squared spectrum has lost half the digits near zero; the singular
    // values of M carry full relative accuracy there.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // JacobiSVD returns singular values descending; store ascending.
    for (int m = 0; m < L; ++m) {
      const int src = L - 1 - m;
      out.energies(m) = svd.singularValues()(src);
      out.phi.col(m) = svd.matrixU().col(src);
      out.psi.col(m) = svd.matrixV().col(src);
    }
  } else {
    for (int m = 0; m < L; ++m) {
      out.energies(m) = std::sqrt(ev2(m));
      out.phi.col(m) = solver.eigenvectors().col(m);
      // psi = M^T phi / eps pairs the particle and hole halves consistently.
      out.psi.col(m) = M.transpose() * out.phi.col(m) / out.energies(m);
    }
  }

  // Deterministic sign convention: largest-magnitude phi entry positive.
  for (int m = 0; m < L; ++m) {
    int imax = 0;
    out.phi.col(m).cwiseAbs().maxCoeff(&imax);
    if (out.phi(imax, m) < 0) {
      out.phi.col(m) *= -1;
      out.psi.col(m) *= -1;
    }
  }

  out.u = (out.phi + out.psi) / 2;
  out.v = (out.phi - out.psi) / 2;
  out.ground_energy = -0.5 * out.energies.sum();

  // Parity of the Bogoliubov vacuum.  det M = det(U) det(V) * prod(singular
  // values); its sign tracks how many negative quasiparticle levels were
  // folded up, which is exactly the vacuum fermion parity.
  const double det = M.determinant();
  out.vacuum_parity = det >= 0 ? +1 : -1;
  return out;
}

EdgeProfile edge_mode_profile(const BdgSpectrum& spec) {
  const int L = static_cast<int>(spec.energies.size());
  EdgeProfile prof;
  prof.weight = 0.5 * (spec.phi.col(0).array().square() + spec.psi.col(0).array().square());

  const double wsum = prof.weight.sum();
  if (wsum > 0) prof.weight /= wsum;

  const double w0 = prof.weight(0), wl = prof.weight(L - 1);
  prof.end_to_end_ratio = wl > 0 ? w0 / wl : std::numeric_limits<double>::infinity();
  prof.end_mass = w0 + wl + (L > 3 ? prof.weight(1) + prof.weight(L - 2) : 0.0);

  // Fold the two tails onto one profile decaying from the edge; the fold is
  // symmetric, so it does not matter which end carries which Majorana.
  std::vector<double> xs, ys;
  for (int n = 0; n < L / 2; ++n) {
    const double f = prof.weight(n) + prof.weight(L - 1 - n);
    if (f > 1e-30) {
      xs.push_back(n);
      ys.push_back(std::log(f));
    }
  }
  if (xs.size() >= 2) {
    const LinFit fit = linear_fit(xs, ys);
    prof.fit_r2 = fit.r2;
    prof.xi = fit.b < 0 ? -2.0 / fit.b : std::numeric_limits<double>::infinity();
  } else {
    // all weight on the first site(s): perfectly localized
    prof.xi = 0.0;
    prof.fit_r2 = 1.0;
  }

  double mid_max = 0.0;
  for (int n = L / 3; n < L - L / 3; ++n) mid_max = std::max(mid_max, prof.weight(n));
  prof.edge_localized = prof.weight(0) + prof.weight(L - 1) > 10.0 * mid_max;
  return prof;
}

TopoPhase phase_classifier(const KitaevParams& p) {
  validate(p);
  const double mu0 = p.mu(0), J0 = p.J(0), F0 = p.F(0);
  const bool uniform = (p.mu.array() == mu0).all() && (p.J.array() == J0).all() &&
                       (p.F.array() == F0).all();
  if (!uniform)
    throw std::invalid_argument(
        "phase_classifier: disordered parameters have no sharp phase label; "
        "use a spectral gap scan instead");
  const double d = std::abs(mu0) - 2.0 * std::abs(J0);
  if (std::abs(d) < 1e-12) return TopoPhase::boundary;
  return d < 0 ? TopoPhase::topological : TopoPhase::trivial;
}

const char* to_string(TopoPhase phase) {
  switch (phase) {
    case TopoPhase::topological: return "topological";
    case TopoPhase::trivial: return "trivial";
    case TopoPhase::boundary: return "boundary";
  }
  return "unknown";
}

GapScan gap_scaling_scan(double J, double F, double mu, const std::vector<int>& lengths) {
  GapScan scan;
  scan.lengths = lengths;
  scan.eps1.reserve(lengths.size());
  for (int L : lengths) {
    const BdgSpectrum s = bdg_diagonalize(KitaevParams::uniform(L, mu, J, F));
    scan.eps1.push_back(s.energies(0));
  }

  const double floor_eps = 1e-280;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < scan.eps1.size(); ++i) {
    if (scan.eps1[i] > floor_eps) {
      xs.push_back(scan.lengths[i]);
      ys.push_back(std::log(scan.eps1[i]));
    }
  }
  if (xs.size() < 2) {
    // splitting identically zero (e.g. the F = J, mu = 0 sweet spot)
    scan.decay_rate = std::numeric_limits<double>::infinity();
    scan.fit_r2 = 1.0;
    return scan;
  }
  const LinFit fit = linear_fit(xs, ys);
  scan.decay_rate = -fit.b;
  scan.fit_r2 = fit.r2;

  // Non-monotone decay means the splitting amplitude passes through zero
  // between sampled lengths; count the inferred sign changes.
  for (std::size_t i = 1; i + 1 < scan.eps1.size(); ++i) {
    if (scan.eps1[i] < scan.eps1[i - 1] && scan.eps1[i] < scan.eps1[i + 1]) ++scan.sign_changes;
  }
  scan.oscillatory = scan.sign_changes > 0;
  return scan;
}

DisorderStats disorder_ensemble(const KitaevParams& base, double site_sigma, double bond_sigma,
                                const std::vector<std::uint64_t>& seeds) {
  if (site_sigma < 0 || bond_sigma < 0)
    throw std::invalid_argument("disorder_ensemble: sigmas must be >= 0");
  validate(base);

  const BdgSpectrum clean = bdg_diagonalize(base);
  const bool clean_edge = edge_mode_profile(clean).edge_localized;

  DisorderStats stats;
  stats.seeds = seeds;
  for (const auto seed : seeds) {
    Rng rng(seed);
    KitaevParams p = base;
    for (int n = 0; n < p.L(); ++n) p.mu(n) += site_sigma * rng.normal();
    for (int b = 0; b < p.L() - 1; ++b) {
      p.J(b) += bond_sigma * rng.normal();
      p.F(b) += bond_sigma * rng.normal();
    }
    const BdgSpectrum s = bdg_diagonalize(p);
    const EdgeProfile prof = edge_mode_profile(s);
    stats.eps1.push_back(s.energies(0));
    stats.xi.push_back(prof.xi);
    stats.edge_localized.push_back(prof.edge_localized);
  }

  stats.eps1_median = quantile(stats.eps1, 0.5);
  stats.eps1_q25 = quantile(stats.eps1, 0.25);
  stats.eps1_q75 = quantile(stats.eps1, 0.75);
  stats.xi_median = quantile(stats.xi, 0.5);
  std::size_t agree = 0, edge = 0;
  for (const bool e : stats.edge_localized) {
    if (e == clean_edge) ++agree;
    if (e) ++edge;
  }
  stats.edge_fraction = seeds.empty() ? 1.0 : static_cast<double>(edge) / seeds.size();
  stats.classification_stable = agree == stats.edge_localized.size();
  return stats;
}

ManyBodySpectrum many_body_from_bdg(const BdgSpectrum& spec) {
  const int L = static_cast<int>(spec.energies.size());
  if (L > 26) throw capacity_error("many_body_from_bdg: 2^L reconstruction too large");
  const long dim = 1L << L;

  ManyBodySpectrum mb;
  mb.energies.resize(dim);
  mb.parities.resize(dim);
  for (long occ = 0; occ < dim; ++occ) {
    double e = 0.0;
    int nocc = 0;
    for (int m = 0; m < L; ++m) {
      if ((occ >> m) & 1) {
        e += 0.5 * spec.energies(m);
        ++nocc;
      } else {
        e -= 0.5 * spec.energies(m);
      }
    }
    mb.energies(occ) = e;
    mb.parities(occ) = spec.vacuum_parity * ((nocc % 2 == 0) ? +1 : -1);
  }

  // sort by (energy, parity) to match the ED ordering convention
  std::vector<long> order(dim);
  for (long i = 0; i < dim; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](long a, long b) {
    if (mb.energies(a) != mb.energies(b)) return mb.energies(a) < mb.energies(b);
    return mb.parities(a) > mb.parities(b);
  });
  ManyBodySpectrum sorted;
  sorted.energies.resize(dim);
  sorted.parities.resize(dim);
  for (long j = 0; j < dim; ++j) {
    sorted.energies(j) = mb.energies(order[j]);
    sorted.parities(j) = mb.parities(order[j]);
  }
  return sorted;
}

JwReport compare_many_body(const ChainSpectrum& ed, const ManyBodySpectrum& mb, double tol) {
  JwReport rep;
  const long dim = ed.eigenvalues.size();
  if (mb.energies.size() != dim) {
    rep.diff = "dimension mismatch";
    return rep;
  }

  // Compare per parity sector: sector-resolved sorting removes the label
  // ambiguity of cross-sector degeneracies.
  std::ostringstream diff;
  for (int parity : {+1, -1}) {
    std::vector<double> e_ed, e_mb;
    for (long i = 0; i < dim; ++i) {
      if (ed.parities(i) == parity) e_ed.push_back(ed.eigenvalues(i));
      if (mb.parities(i) == parity) e_mb.push_back(mb.energies(i));
    }
    if (e_ed.size() != e_mb.size()) {
      rep.parity_mismatches += static_cast<int>(
          std::max(e_ed.size(), e_mb.size()) - std::min(e_ed.size(), e_mb.size()));
      diff << "sector " << (parity > 0 ? "+1" : "-1") << ": ED has " << e_ed.size()
           << " states, BdG reconstruction has " << e_mb.size() << "\n";
      continue;
    }
    std::sort(e_ed.begin(), e_ed.end());
    std::sort(e_mb.begin(), e_mb.end());
    for (std::size_t i = 0; i < e_ed.size(); ++i) {
      const double d = std::abs(e_ed[i] - e_mb[i]);
      rep.max_energy_diff = std::max(rep.max_energy_diff, d);
      if (d > tol && diff.tellp() < 2000) {
        diff << "sector " << (parity > 0 ? "+1" : "-1") << " level " << i << ": ED "
             << e_ed[i] << " vs BdG " << e_mb[i] << " (diff " << d << ")\n";
      }
    }
  }

  rep.passed = rep.max_energy_diff <= tol && rep.parity_mismatches == 0;
  if (!rep.passed) rep.diff = diff.str();
  return rep;
}

JwReport jordan_wigner_check(const ChainParams& c, double tol) {
  if (c.L() > 10) throw capacity_error("jordan_wigner_check: L must be <= 10");
  const ChainSpectrum ed = chain_spectrum(c);
  const ManyBodySpectrum mb = many_body_from_bdg(bdg_diagonalize(to_kitaev(c)));
  return compare_many_body(ed, mb, tol);
}

}  // namespace floq
