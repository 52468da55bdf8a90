#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "floq/numeric.hpp"

namespace floq {

// ---------------------------------------------------------------------------
// Drive protocol and derived rotating-frame parameters for a single qubit.
//
// The drive is a static resonant amplitude F0 plus periodic smoothed-delta
// pulses: the level spacing receives kicks of dimensionless area nu1 and the
// drive amplitude kicks of area F1, all repeated with period
// T = 2*pi*periods_per_T / omegaF.  hbar = 1 throughout; angles in radians.
// ---------------------------------------------------------------------------

template <class Scalar = double>
struct PulseTrainT {
  Scalar omega0{};        // qubit transition frequency
  Scalar omegaF{};        // drive carrier frequency
  int periods_per_T = 1;  // n >= 1, T = 2*pi*n/omegaF
  Scalar nu1{};           // level-spacing pulse area (dimensionless)
  Scalar F1{};            // drive-amplitude pulse area (dimensionless)
  Scalar F0{};            // static resonant drive amplitude
  Scalar sigma{};         // pulse smoothing width; used only by the lab-frame integrator

  Scalar period() const { return Scalar(two_pi) * Scalar(periods_per_T) / omegaF; }
};

using PulseTrain = PulseTrainT<double>;

template <class Scalar>
void validate(const PulseTrainT<Scalar>& p) {
  if (p.periods_per_T < 1) throw std::invalid_argument("PulseTrain: periods_per_T must be >= 1");
  if (!(p.omegaF > Scalar(0))) throw std::invalid_argument("PulseTrain: omegaF must be positive");
}

// Conditions the integrator needs: 1/omegaF << sigma << T.
template <class Scalar>
void require_lab_frame_ready(const PulseTrainT<Scalar>& p) {
  validate(p);
  if (!(p.sigma * p.omegaF > Scalar(10)))
    throw std::invalid_argument("PulseTrain: sigma*omegaF must exceed 10 for lab-frame integration");
  if (!(p.sigma < p.period() / Scalar(10)))
    throw std::invalid_argument("PulseTrain: sigma must be below T/10 for lab-frame integration");
}

// Soft sanity conditions (the rotating-frame reduction assumes near resonance).
template <class Scalar>
std::vector<std::string> warnings(const PulseTrainT<Scalar>& p) {
  std::vector<std::string> w;
  if (std::abs(p.omegaF - p.omega0) > Scalar(0.1) * p.omegaF)
    w.push_back("detuning |omegaF - omega0| is not small against omegaF");
  return w;
}

// Rotating-frame parameters after the rotation that aligns the static
// effective field with the z axis:  tan(phi) = F0/Delta,
// Omega = sqrt(Delta^2 + F0^2), and the kick vector rotates as
// g_z + i g_x = exp(-i phi) (nu1 + i F1).  theta is the kick-basis angle,
// tan(theta) = g_x / (g + g_z).
template <class Scalar = double>
struct RwaQubitT {
  Scalar delta{};  // omega0 - omegaF
  Scalar F0{};
  Scalar Omega{};
  Scalar phi{};
  Scalar g_x{}, g_z{};  // rotated kick vector components
  Scalar g{};           // kick magnitude
  Scalar theta{};
};

using RwaQubit = RwaQubitT<double>;

namespace detail {

// Half the polar angle of the kick vector; theta = pi/2 when the kick is
// anti-aligned with the rotated z axis (continuity convention).
template <class Scalar>
Scalar kick_angle(Scalar g_x, Scalar g_z, Scalar g) {
  if (g == Scalar(0)) return Scalar(0);
  if (std::abs(g + g_z) <= Scalar(1e-15) * g && std::abs(g_x) <= Scalar(1e-15) * g)
    return Scalar(pi) / Scalar(2);
  return std::atan2(g_x, g + g_z);
}

}  // namespace detail

template <class Scalar>
RwaQubitT<Scalar> derive_rwa(const PulseTrainT<Scalar>& p) {
  RwaQubitT<Scalar> q;
  q.delta = p.omega0 - p.omegaF;
  q.F0 = p.F0;
  q.Omega = std::hypot(q.delta, q.F0);
  q.phi = (q.delta == Scalar(0) && q.F0 == Scalar(0)) ? Scalar(0) : std::atan2(q.F0, q.delta);
  const Scalar c = std::cos(q.phi), s = std::sin(q.phi);
  q.g_z = c * p.nu1 + s * p.F1;
  q.g_x = c * p.F1 - s * p.nu1;
  q.g = std::hypot(p.nu1, p.F1);
  q.theta = detail::kick_angle(q.g_x, q.g_z, q.g);
  return q;
}

// Build a consistent RwaQubit directly from the effective parameters
// (Omega, g, theta); the static field is placed along z (phi = 0).
template <class Scalar>
RwaQubitT<Scalar> rwa_from_angles(Scalar Omega, Scalar g, Scalar theta) {
  RwaQubitT<Scalar> q;
  q.delta = Omega;
  q.F0 = Scalar(0);
  q.Omega = Omega;
  q.phi = Scalar(0);
  q.g = g;
  q.theta = theta;
  q.g_x = g * std::sin(Scalar(2) * theta);
  q.g_z = g * std::cos(Scalar(2) * theta);
  return q;
}

// Real coefficients of the kick eigenvectors psi_pm in the (|1~>, |0~>) basis:
// zeta_+ + i zeta_- = exp(-i theta),  i eta_+ + eta_- = exp(i theta).
template <class Scalar = double>
struct KickBasisT {
  Scalar zeta_p{}, zeta_m{}, eta_p{}, eta_m{};
};

using KickBasis = KickBasisT<double>;

template <class Scalar>
KickBasisT<Scalar> kick_basis(Scalar theta) {
  KickBasisT<Scalar> b;
  b.zeta_p = std::cos(theta);
  b.zeta_m = -std::sin(theta);
  b.eta_p = std::sin(theta);
  b.eta_m = std::cos(theta);
  return b;
}

}  // namespace floq
