#include "floq/lab_frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace floq {

namespace {

using Eigen::Vector2cd;
using C = std::complex<double>;

// unit-area Gaussian comb centered on integer multiples of T
double pulse_comb(double t, double T, double sigma) {
  const double kc = std::round(t / T);
  double val = 0.0;
  for (double k = kc - 1; k <= kc + 1; ++k) {
    const double x = (t - k * T) / sigma;
    val += std::exp(-0.5 * x * x);
  }
  return val / (sigma * std::sqrt(two_pi));
}

inline void apply_z(Vector2cd& psi, double angle) {  // exp(-i angle sz / 2)
  psi(0) *= std::exp(C(0, -angle / 2));
  psi(1) *= std::exp(C(0, angle / 2));
}

inline void apply_x(Vector2cd& psi, double angle) {  // exp(-i angle sx / 2)
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const C a = c * psi(0) - C(0, s) * psi(1);
  const C b = -C(0, s) * psi(0) + c * psi(1);
  psi(0) = a;
  psi(1) = b;
}

}  // namespace

LabTrajectory lab_frame_integrate(const PulseTrain& p, const Eigen::Vector2cd& psi_init,
                                  double t_span, double dt, double t_start) {
  require_lab_frame_ready(p);
  const double T = p.period();
  if (!(dt > 0) || dt >= 0.05 * std::min(two_pi / p.omega0, p.sigma))
    throw std::invalid_argument("lab_frame_integrate: dt must be below 0.05*min(2*pi/omega0, sigma)");
  if (std::abs(psi_init.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("lab_frame_integrate: psi_init must be normalized");
  if (!(t_span >= 0)) throw std::invalid_argument("lab_frame_integrate: t_span must be >= 0");

  const long nsteps = static_cast<long>(std::ceil(t_span / dt));
  const double h = nsteps > 0 ? t_span / static_cast<double>(nsteps) : dt;

  LabTrajectory traj;
  traj.times.reserve(nsteps + 1);
  traj.states.reserve(nsteps + 1);
  traj.times.push_back(t_start);
  traj.states.push_back(psi_init);

  Vector2cd psi = psi_init;
  for (long i = 0; i < nsteps; ++i) {
    const double t = t_start + i * h;
    // Strang split: half z, full x, half z, coefficients at sub-interval midpoints.
    const double a1 = p.omega0 + p.nu1 * pulse_comb(t + 0.25 * h, T, p.sigma);
    const double tm = t + 0.5 * h;
    const double b = (p.F0 + p.F1 * pulse_comb(tm, T, p.sigma)) * std::cos(p.omegaF * tm);
    const double a2 = p.omega0 + p.nu1 * pulse_comb(t + 0.75 * h, T, p.sigma);
    apply_z(psi, a1 * h / 2);
    apply_x(psi, 2 * b * h);  // H_x = b * sx, rotation angle 2*b*h
    apply_z(psi, a2 * h / 2);
    traj.times.push_back(t + h);
    traj.states.push_back(psi);
  }

  // Fidelity against the rotating-frame prediction over whole periods.
  const long k = static_cast<long>(std::floor((t_span + 0.5 * h) / T));
  if (k >= 1 && std::abs(k * T - t_span) < 1e-9 * T && t_start > 0 && t_start < T) {
    const Vector2cd pred = rwa_lab_prediction(p, psi_init, t_start, k);
    traj.rwa_fidelity = std::norm(pred.dot(psi));
  } else {
    traj.rwa_fidelity = std::numeric_limits<double>::quiet_NaN();
  }
  return traj;
}

LabTrajectory lab_frame_integrate(const PulseTrain& p, const Eigen::Vector2cd& psi_init,
                                  double t_span, double dt) {
  return lab_frame_integrate(p, psi_init, t_span, dt, p.period() / 2);
}

Eigen::Vector2cd rwa_lab_prediction(const PulseTrain& p, const Eigen::Vector2cd& psi_lab_init,
                                    double t_start, long k_periods) {
  validate(p);
  const double T = p.period();
  if (!(t_start > 0 && t_start < T))
    throw std::domain_error("rwa_lab_prediction: t_start must lie inside (0, T)");
  const RwaQubit q = derive_rwa(p);

  // lab -> rotating frame at omegaF, then into the tilted basis V = exp(-i phi sy / 2)
  Eigen::Matrix2cd V;
  const double c = std::cos(q.phi / 2), s = std::sin(q.phi / 2);
  V << c, -s, s, c;

  Vector2cd psi = V.adjoint() * psi_lab_init;
  apply_z(psi, -p.omegaF * t_start);  // U(t)^dagger = exp(+i omegaF t sz/2)

  const Eigen::Matrix2cd m = monodromy_matrix(q, T, t_start);
  for (long i = 0; i < k_periods; ++i) psi = m * psi;

  const double t_end = t_start + k_periods * T;
  apply_z(psi, p.omegaF * t_end);
  return V * psi;
}

std::vector<double> simulate_ramsey_protocol(const PulseTrain& p, long k_max, double dt) {
  PulseTrain pp = p;
  pp.F0 = 0.0;
  pp.F1 = 0.0;  // level-spacing pulses only
  const double T = pp.period();
  const double t_i = T / 2;

  // first ideal pi/2 pulse about y applied to |0> = (0, 1)
  const double r = 1.0 / std::sqrt(2.0);
  Vector2cd psi(-r, r);

  std::vector<double> pops;
  pops.reserve(k_max + 1);
  Vector2cd cur = psi;
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) {
      const auto traj = lab_frame_integrate(pp, cur, T, dt, t_i + (k - 1) * T);
      cur = traj.states.back();
    }
    // analysis frame co-rotating at omega0, second pi/2 pulse, |1> projection
    Vector2cd ref = cur;
    apply_z(ref, -pp.omega0 * (k * T));
    const C amp1 = r * (ref(0) - ref(1));
    pops.push_back(std::norm(amp1));
  }
  return pops;
}

std::vector<double> simulate_resonant_protocol(const PulseTrain& p, long k_max, double dt) {
  PulseTrain pp = p;
  pp.nu1 = 0.0;
  pp.F0 = 0.0;  // amplitude pulses only
  const double T = pp.period();
  const double t_i = T / 2;

  Vector2cd cur(0.0, 1.0);  // ground state |0>
  std::vector<double> pops;
  pops.reserve(k_max + 1);
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) {
      const auto traj = lab_frame_integrate(pp, cur, T, dt, t_i + (k - 1) * T);
      cur = traj.states.back();
    }
    pops.push_back(std::norm(cur(0)));
  }
  return pops;
}

}  // namespace floq
