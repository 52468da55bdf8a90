#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "floq/pulse_train.hpp"
#include "floq/qubit_floquet.hpp"

namespace floq {

// ---------------------------------------------------------------------------
// Full lab-frame dynamics H(t) = [omega0 + nu(t)] sz/2 + F(t) sx cos(omegaF t)
// with the pulse comb realized as unit-area Gaussians of width sigma.  This
// is the numerical oracle against which the rotating-frame reduction is
// checked; the stepper is a Strang splitting of exact 2x2 exponentials, so
// the norm is preserved for any step size.
// ---------------------------------------------------------------------------

struct LabTrajectory {
  std::vector<double> times;
  std::vector<Eigen::Vector2cd> states;   // coefficients (|1>, |0>)
  double rwa_fidelity = 0.0;              // |<psi_rwa | psi_num>|^2 at the final time
};

// Integrate from t_start over t_span.  Requires dt < 0.05 * min(2*pi/omega0, sigma)
// and a normalized initial state.  Pulse centers sit at integer multiples of T.
LabTrajectory lab_frame_integrate(const PulseTrain& p, const Eigen::Vector2cd& psi_init,
                                  double t_span, double dt, double t_start);

// Overload starting mid-period (t_start = T/2), away from any pulse center.
LabTrajectory lab_frame_integrate(const PulseTrain& p, const Eigen::Vector2cd& psi_init,
                                  double t_span, double dt);

// Rotating-frame prediction of the lab state: frame in, k monodromy
// applications, frame out.  t_start must lie strictly inside a period.
Eigen::Vector2cd rwa_lab_prediction(const PulseTrain& p, const Eigen::Vector2cd& psi_lab_init,
                                    double t_start, long k_periods);

// Protocol simulations built on the integrator; both return the excited-state
// population after k = 0..k_max periods, measured the way the corresponding
// pulse protocol measures it.

// Level-spacing pulses only; ideal pi/2 analysis pulses referenced to omega0.
std::vector<double> simulate_ramsey_protocol(const PulseTrain& p, long k_max, double dt);

// Resonant amplitude pulses from the ground state; direct |1> projection.
std::vector<double> simulate_resonant_protocol(const PulseTrain& p, long k_max, double dt);

}  // namespace floq
