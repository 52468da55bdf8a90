#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "floq/numeric.hpp"
#include "floq/pulse_train.hpp"

namespace floq {

// ---------------------------------------------------------------------------
// One-period (monodromy) analysis of the pulsed qubit in the rotating frame.
//
// Between pulses the state precesses under Omega*sz/2; each pulse applies
// exp(-i g.s/2) with the kick vector g = g (sin 2theta, 0, cos 2theta) in the
// rotated basis.  Quasienergies are the eigenphases of the one-period
// propagator, folded into the Brillouin zone [-pi/T, pi/T).
// ---------------------------------------------------------------------------

template <class Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <class Scalar>
using Vector2c = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

// Two quasienergies with the eigenstate coefficients (alpha, beta) in the
// (|1~>, |0~>) basis at the reference phase t0.  eps[0] >= eps[1] except at
// the zone boundary, where both fold to -pi/T and `degenerate` is set.
template <class Scalar = double>
struct FloquetPairT {
  std::array<Scalar, 2> eps{};
  Matrix2c<Scalar> states;  // column j = state j
  Scalar t0{};
  bool degenerate = false;
};

using FloquetPair = FloquetPairT<double>;

// eps_{1,2} = +-(1/T) arccos[cos(g/2)cos(Omega T/2) - cos(2 theta) sin(g/2) sin(Omega T/2)].
// g and Omega*T are reduced mod 4*pi first, which makes the 4*pi periodicity
// in both arguments exact at the bit level.
template <class Scalar>
std::array<Scalar, 2> closed_form_quasienergy(const RwaQubitT<Scalar>& q, Scalar T) {
  if (!(T > Scalar(0))) throw std::domain_error("closed_form_quasienergy: T must be positive");
  const Scalar g = detail::reduce_mod(q.g, Scalar(four_pi));
  const Scalar ot = detail::reduce_mod(q.Omega * T, Scalar(four_pi));
  const Scalar arg = std::cos(g / 2) * std::cos(ot / 2) -
                     std::cos(2 * q.theta) * std::sin(g / 2) * std::sin(ot / 2);
  const Scalar e1 = detail::acos_clamped(arg) / T;
  return {e1, -e1};
}

namespace detail {

template <class Scalar>
Matrix2c<Scalar> free_evolution(Scalar Omega, Scalar tau) {
  using C = std::complex<Scalar>;
  Matrix2c<Scalar> u = Matrix2c<Scalar>::Zero();
  u(0, 0) = std::exp(C(0, -Omega * tau / 2));
  u(1, 1) = std::exp(C(0, Omega * tau / 2));
  return u;
}

template <class Scalar>
Matrix2c<Scalar> kick_unitary(Scalar g, Scalar theta) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(g / 2), s = std::sin(g / 2);
  const Scalar nx = std::sin(2 * theta), nz = std::cos(2 * theta);
  Matrix2c<Scalar> k;
  k(0, 0) = C(c, -s * nz);
  k(0, 1) = C(0, -s * nx);
  k(1, 0) = C(0, -s * nx);
  k(1, 1) = C(c, s * nz);
  return k;
}

}  // namespace detail

// Propagator over one period starting at phase t0 in (0, T): free evolution
// to the pulse, the kick, then free evolution to T + t0.
template <class Scalar>
Matrix2c<Scalar> monodromy_matrix(const RwaQubitT<Scalar>& q, Scalar T, Scalar t0) {
  if (!(t0 > Scalar(0) && t0 < T))
    throw std::domain_error("monodromy_matrix: t0 must lie strictly inside (0, T)");
  return detail::free_evolution(q.Omega, t0) * detail::kick_unitary(q.g, q.theta) *
         detail::free_evolution(q.Omega, T - t0);
}

// Fold an eigenphase angle (radians) into [-pi, pi).
template <class Scalar>
Scalar fold_phase(Scalar x) {
  Scalar r = detail::reduce_mod(x + Scalar(pi), Scalar(two_pi)) - Scalar(pi);
  if (r >= Scalar(pi)) r -= Scalar(two_pi);  // guard the rounding edge
  return r;
}

// Diagonalize the monodromy matrix.  Eigenvalues are exp(-i eps T); the
// quasienergies are independent of t0, the states are not.
template <class Scalar>
FloquetPairT<Scalar> floquet_eigensystem(const RwaQubitT<Scalar>& q, Scalar T, Scalar t0) {
  const Matrix2c<Scalar> u = monodromy_matrix(q, T, t0);
  Eigen::ComplexEigenSolver<Matrix2c<Scalar>> solver(u);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("floquet_eigensystem: eigensolver failed");

  FloquetPairT<Scalar> out;
  out.t0 = t0;

  const auto lam = solver.eigenvalues();
  out.degenerate = std::abs(lam(0) - lam(1)) < Scalar(1e-12);
  if (out.degenerate) {
    // Any orthonormal basis spans the eigenspace; keep the computational one.
    out.states = Matrix2c<Scalar>::Identity();
    const Scalar e = fold_phase(-std::arg(lam(0))) / T;
    out.eps = {e, e};
    return out;
  }

  std::array<Scalar, 2> eps{};
  for (int j = 0; j < 2; ++j) eps[j] = fold_phase(-std::arg(lam(j))) / T;
  const int hi = eps[0] >= eps[1] ? 0 : 1;
  out.eps = {eps[hi], eps[1 - hi]};
  out.states.col(0) = solver.eigenvectors().col(hi).normalized();
  out.states.col(1) = solver.eigenvectors().col(1 - hi).normalized();
  return out;
}

// Projection of a rotating-frame quasienergy onto the lab-frame Brillouin
// zone: unchanged for even n, shifted by half the zone for odd n
// (sgn 0 = +1 so eps = 0 maps to -pi/T).
template <class Scalar>
Scalar lab_frame_quasienergy(Scalar eps, Scalar T, int n) {
  if (n % 2 == 0) return eps;
  const Scalar sign = eps >= Scalar(0) ? Scalar(1) : Scalar(-1);
  return eps - sign * Scalar(pi) / T;
}

// Ramsey-fringe population after k drive periods of level-spacing pulses.
template <class Scalar>
Scalar ramsey_population(Scalar nu1, long k) {
  if (k < 0) throw std::domain_error("ramsey_population: k must be >= 0");
  const Scalar x = std::cos(nu1 * Scalar(k) / 2);
  return x * x;
}

// Excited-state population after k periods of resonant amplitude pulses.
template <class Scalar>
Scalar resonant_population(Scalar F1, long k) {
  if (k < 0) throw std::domain_error("resonant_population: k must be >= 0");
  const Scalar x = std::sin(F1 * Scalar(k) / 2);
  return x * x;
}

// Detect (eps1 - eps2) T / (2 pi) = M/N with coprime integers, N > |M| >= 1.
// Returns the smallest N <= max_N admitting |x - M/N| <= tol, i.e. the
// smallest-denominator fraction in the tolerance interval intersected with
// the open unit interval; nullopt when none qualifies.
inline std::optional<std::pair<long, long>> detect_period_multiplicity(
    double eps1, double eps2, double T, long max_N, double tol) {
  if (max_N < 2) throw std::domain_error("detect_period_multiplicity: max_N must be >= 2");
  if (!(tol > 0)) throw std::domain_error("detect_period_multiplicity: tol must be positive");
  const double x = (eps1 - eps2) * T / two_pi;
  const double ax = std::abs(x);
  // Constrain to fractions strictly inside (0, 1).
  const double lo = std::max(ax - tol, std::nextafter(0.0, 1.0));
  const double hi = std::min(ax + tol, std::nextafter(1.0, 0.0));
  const auto frac = simplest_rational_in(lo, hi);
  if (!frac) return std::nullopt;
  auto [m, n] = *frac;
  if (n > max_N || m < 1 || m >= n) return std::nullopt;
  if (x < 0) m = -m;
  return std::make_pair(m, n);
}

}  // namespace floq
