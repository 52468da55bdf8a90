#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "floq/numeric.hpp"
#include "floq/pulse_train.hpp"
#include "floq/qubit_floquet.hpp"

using namespace floq;

namespace {

PulseTrain make_train(double omega0, double omegaF, double nu1, double F1, double F0) {
  PulseTrain p;
  p.omega0 = omega0;
  p.omegaF = omegaF;
  p.periods_per_T = 100;
  p.nu1 = nu1;
  p.F1 = F1;
  p.F0 = F0;
  p.sigma = p.period() / 20;
  return p;
}

}  // namespace

TEST_CASE("derive_rwa: resonant pulsed-amplitude point") {
  // Delta = 0, F0 = 0, nu1 = 0, F1 = 2*pi: Omega = 0, phi = 0, theta = pi/4, g = 2*pi
  const auto q = derive_rwa(make_train(1.0, 1.0, 0.0, two_pi, 0.0));
  CHECK(q.Omega == doctest::Approx(0.0));
  CHECK(q.phi == doctest::Approx(0.0));
  CHECK(q.g == doctest::Approx(two_pi));
  CHECK(q.theta == doctest::Approx(pi / 4));
}

TEST_CASE("derive_rwa: no-pulse limit and Pythagorean triple") {
  const auto q0 = derive_rwa(make_train(1.3, 1.0, 0.0, 0.0, 0.0));
  CHECK(q0.g == 0.0);
  CHECK(q0.theta == 0.0);

  const auto q = derive_rwa(make_train(4.0, 1.0, 0.5, 0.5, 4.0));  // Delta = 3, F0 = 4
  CHECK(q.Omega == doctest::Approx(5.0));
  CHECK(std::tan(q.phi) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("derive_rwa invariants over random pulse trains") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto p = make_train(rng.uniform(0.5, 2.0), 1.0, rng.uniform(-6, 6), rng.uniform(-6, 6),
                              rng.uniform(-3, 3));
    const auto q = derive_rwa(p);
    CHECK(q.Omega * q.Omega == doctest::Approx(q.delta * q.delta + q.F0 * q.F0).epsilon(1e-14));
    CHECK(q.g * q.g == doctest::Approx(q.g_x * q.g_x + q.g_z * q.g_z).epsilon(1e-13));
    CHECK(q.g == doctest::Approx(std::hypot(p.nu1, p.F1)));
    // rotation consistency: g~z + i g~x = exp(-i phi)(nu1 + i F1)
    const std::complex<double> lhs(q.g_z, q.g_x);
    const std::complex<double> rhs =
        std::exp(std::complex<double>(0, -q.phi)) * std::complex<double>(p.nu1, p.F1);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, q.g));
    // half-angle identity: tan(theta) = g~x / (g + g~z)
    if (q.g > 0 && q.g + q.g_z > 1e-12 * q.g)
      CHECK(std::tan(q.theta) == doctest::Approx(q.g_x / (q.g + q.g_z)).epsilon(1e-11));
  }
}

TEST_CASE("derive_rwa: phi conventions at the singular points") {
  CHECK(derive_rwa(make_train(1.0, 1.0, 0, 0, 2.0)).phi == doctest::Approx(pi / 2));
  CHECK(derive_rwa(make_train(1.0, 1.0, 0, 0, -2.0)).phi == doctest::Approx(-pi / 2));
  CHECK(derive_rwa(make_train(1.0, 1.0, 1.0, 0, 0)).phi == 0.0);
  // kick anti-aligned with the rotated z axis: theta = pi/2 by continuity
  CHECK(detail::kick_angle(0.0, -1.0, 1.0) == doctest::Approx(pi / 2));
}

TEST_CASE("kick basis identities") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const double theta = rng.uniform(-pi / 2, pi / 2);
    const auto b = kick_basis(theta);
    // zeta_+ + i zeta_- = exp(-i theta), i eta_+ + eta_- = exp(i theta)
    CHECK(std::abs(std::complex<double>(b.zeta_p, b.zeta_m) -
                   std::exp(std::complex<double>(0, -theta))) < 1e-15);
    CHECK(std::abs(std::complex<double>(b.eta_m, b.eta_p) -
                   std::exp(std::complex<double>(0, theta))) < 1e-15);
    // orthonormality
    CHECK(b.zeta_p * b.zeta_p + b.eta_p * b.eta_p == doctest::Approx(1.0));
    CHECK(b.zeta_m * b.zeta_m + b.eta_m * b.eta_m == doctest::Approx(1.0));
    CHECK(b.zeta_p * b.zeta_m + b.eta_p * b.eta_m == doctest::Approx(0.0));
    // eigenvector property: (g~.s~) psi_pm = +-g psi_pm with g = 1
    const double gx = std::sin(2 * theta), gz = std::cos(2 * theta);
    Eigen::Matrix2d gs;
    gs << gz, gx, gx, -gz;
    const Eigen::Vector2d plus(b.zeta_p, b.eta_p), minus(b.zeta_m, b.eta_m);
    CHECK((gs * plus - plus).norm() < 1e-14);
    CHECK((gs * minus + minus).norm() < 1e-14);
  }
}

TEST_CASE("closed-form quasienergy: limiting cases") {
  const double T = 2.0;
  // Omega = 0, theta = pi/4: eps = +-arccos(cos(F1/2))/T
  for (const double F1 : {0.3, 2.0, 5.0, 11.0}) {
    const auto eps = closed_form_quasienergy(rwa_from_angles(0.0, F1, pi / 4), T);
    CHECK(eps[0] == doctest::Approx(std::acos(std::cos(F1 / 2)) / T).epsilon(1e-14));
    CHECK(eps[1] == doctest::Approx(-eps[0]));
  }
  // g = 0: eps = +-arccos(cos(Omega T/2))/T regardless of theta
  for (const double Om : {0.2, 1.0, 2.6}) {
    const auto eps = closed_form_quasienergy(rwa_from_angles(Om, 0.0, 0.7), T);
    CHECK(eps[0] == doctest::Approx(std::acos(std::cos(Om * T / 2)) / T).epsilon(1e-14));
  }
}

TEST_CASE("closed-form quasienergy matches the monodromy oracle over a g sweep") {
  const double T = 1.0;
  const auto q_of_g = [&](double g) { return rwa_from_angles(2.0 / T, g, pi / 4); };
  for (int i = 0; i <= 400; ++i) {
    const double g = four_pi * i / 400.0;
    const auto eps = closed_form_quasienergy(q_of_g(g), T);
    const auto pair = floquet_eigensystem(q_of_g(g), T, 0.5 * T);
    if (pair.degenerate) continue;
    CHECK(std::abs(eps[0] - pair.eps[0]) <= 1e-10);
    // periodicity in g with period 4*pi
    const auto eps2 = closed_form_quasienergy(q_of_g(g + four_pi), T);
    CHECK(std::abs(eps[0] - eps2[0]) <= 1e-12);
  }
}

TEST_CASE("acos clamp tolerates rounding but rejects real excursions") {
  CHECK(detail::acos_clamped(1.0 + 1e-13) == 0.0);
  CHECK(detail::acos_clamped(-1.0 - 1e-13) == doctest::Approx(pi));
  CHECK_THROWS_AS(detail::acos_clamped(1.0 + 1e-11), std::runtime_error);
}

TEST_CASE("monodromy matrix: free, kick-only, and generic cases") {
  const double T = 1.5;

  // g = 0: pure free evolution diag(e^{-i Omega T/2}, e^{+i Omega T/2})
  const auto u_free = monodromy_matrix(rwa_from_angles(1.1, 0.0, 0.0), T, 0.4 * T);
  CHECK(std::abs(u_free(0, 0) - std::exp(std::complex<double>(0, -1.1 * T / 2))) < 1e-14);
  CHECK(std::abs(u_free(1, 1) - std::exp(std::complex<double>(0, 1.1 * T / 2))) < 1e-14);
  CHECK(std::abs(u_free(0, 1)) < 1e-15);

  // Omega = 0, theta = pi/4, g = pi: rotation by pi about x~, purely off-diagonal
  const auto u_kick = monodromy_matrix(rwa_from_angles(0.0, pi, pi / 4), T, 0.4 * T);
  CHECK(std::abs(u_kick(0, 0)) < 1e-15);
  CHECK(std::abs(u_kick(1, 1)) < 1e-15);
  CHECK(std::abs(u_kick(0, 1) - std::complex<double>(0, -1)) < 1e-14);

  // generic parameters: eigenphases match the closed form
  const auto q = rwa_from_angles(1.3 / T, 2.1, 0.4);
  const auto pair = floquet_eigensystem(q, T, 0.25 * T);
  const auto eps = closed_form_quasienergy(q, T);
  CHECK(std::abs(pair.eps[0] - eps[0]) <= 1e-10);
  CHECK(std::abs(pair.eps[1] - eps[1]) <= 1e-10);

  CHECK_THROWS_AS(monodromy_matrix(q, T, -0.1), std::domain_error);
  CHECK_THROWS_AS(monodromy_matrix(q, T, T), std::domain_error);
}

TEST_CASE("monodromy unitarity over random parameters") {
  Rng rng(13);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const double T = rng.uniform(0.1, 10.0);
    const auto q = rwa_from_angles(rng.uniform(0.0, 8.0) / T, rng.uniform(0.0, 15.0),
                                   rng.uniform(-pi / 2, pi / 2));
    const auto u = monodromy_matrix(q, T, rng.uniform(0.01, 0.99) * T);
    worst = std::max(worst, (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-13);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("floquet eigensystem: free-evolution states and resonant kick states") {
  const double T = 3.0;

  // g = 0: states are |1~>, |0~> with eps = +-Omega/2 folded
  const auto pair0 = floquet_eigensystem(rwa_from_angles(0.8, 0.0, 0.0), T, 0.5 * T);
  CHECK(pair0.eps[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(pair0.eps[1] == doctest::Approx(-0.4).epsilon(1e-12));
  CHECK(std::abs(pair0.states(0, 0)) == doctest::Approx(1.0));  // |1~> carries eps > 0
  CHECK(std::abs(pair0.states(1, 1)) == doctest::Approx(1.0));

  // Omega = 0, theta = pi/4: states (|0~> +- |1~>)/sqrt(2)
  const auto pair1 = floquet_eigensystem(rwa_from_angles(0.0, 1.3, pi / 4), T, 0.5 * T);
  for (int j = 0; j < 2; ++j) {
    CHECK(std::abs(pair1.states(0, j)) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(pair1.states(1, j)) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  }

  // folding: Omega/2 beyond the zone edge wraps around
  const double Om = 1.9 * two_pi / T;  // Omega/2 = 0.95 * 2pi/T folds to -0.05 * 2pi/T
  const auto pairf = floquet_eigensystem(rwa_from_angles(Om, 0.0, 0.0), T, 0.5 * T);
  CHECK(pairf.eps[0] == doctest::Approx(0.1 * pi / T).epsilon(1e-10));
}

TEST_CASE("floquet eigensystem properties: oracle match, t0 independence, orthonormality") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const double T = rng.uniform(0.1, 8.0);
    const auto q = rwa_from_angles(rng.uniform(0.0, 8.0) / T, rng.uniform(0.0, 15.0),
                                   rng.uniform(-pi / 2, pi / 2));
    const auto pair = floquet_eigensystem(q, T, 0.5 * T);
    if (pair.degenerate) continue;

    const auto eps = closed_form_quasienergy(q, T);
    CHECK(std::abs(pair.eps[0] - eps[0]) * T <= 1e-10);

    for (const double f : {0.1, 0.9}) {
      const auto other = floquet_eigensystem(q, T, f * T);
      CHECK(std::abs(other.eps[0] - pair.eps[0]) * T <= 1e-10);
    }

    // states are normalized eigenvectors of the monodromy with the right phase
    const auto u = monodromy_matrix(q, T, 0.5 * T);
    for (int j = 0; j < 2; ++j) {
      CHECK(pair.states.col(j).norm() == doctest::Approx(1.0).epsilon(1e-13));
      const std::complex<double> lam = std::exp(std::complex<double>(0, -pair.eps[j] * T));
      CHECK((u * pair.states.col(j) - lam * pair.states.col(j)).norm() < 1e-10);
    }
    CHECK(std::abs(pair.states.col(0).dot(pair.states.col(1))) < 1e-10);
  }
}

TEST_CASE("floquet eigensystem flags degeneracy") {
  // g = 0, Omega T = 2*pi makes the monodromy -identity
  const double T = 1.0;
  const auto pair = floquet_eigensystem(rwa_from_angles(two_pi, 0.0, 0.0), T, 0.5);
  CHECK(pair.degenerate);
  CHECK(pair.states.col(0).norm() == doctest::Approx(1.0));
  CHECK(std::abs(pair.states.col(0).dot(pair.states.col(1))) < 1e-14);
}

TEST_CASE("lab-frame quasienergy projection") {
  const double T = 2.0;
  CHECK(lab_frame_quasienergy(0.3 * pi / T, T, 4) == doctest::Approx(0.3 * pi / T));
  CHECK(lab_frame_quasienergy(0.3 * pi / T, T, 5) == doctest::Approx(-0.7 * pi / T));
  CHECK(lab_frame_quasienergy(0.0, T, 6) == 0.0);
  CHECK(lab_frame_quasienergy(0.0, T, 7) == doctest::Approx(-pi / T));  // sgn 0 = +1

  // involution: even rule fixes, odd rule applied twice returns
  for (int i = -7; i < 8; ++i) {
    const double eps = i * pi / (8 * T);
    CHECK(lab_frame_quasienergy(eps, T, 2) == eps);
    const double once = lab_frame_quasienergy(eps, T, 3);
    CHECK(once >= -pi / T);
    CHECK(once < pi / T);
    CHECK(lab_frame_quasienergy(once, T, 3) == doctest::Approx(eps).epsilon(1e-14));
  }
}

TEST_CASE("ramsey and resonant populations") {
  // nu1 = 2*pi/3: 1, 1/4, 1/4, 1, ...
  CHECK(ramsey_population(two_pi / 3, 0) == doctest::Approx(1.0));
  CHECK(ramsey_population(two_pi / 3, 1) == doctest::Approx(0.25));
  CHECK(ramsey_population(two_pi / 3, 2) == doctest::Approx(0.25));
  CHECK(ramsey_population(two_pi / 3, 3) == doctest::Approx(1.0));
  CHECK(ramsey_population(0.0, 17) == 1.0);
  CHECK(ramsey_population(two_pi, 9) == doctest::Approx(1.0));

  // F1 = pi: 0, 1, 0 with period 2
  CHECK(resonant_population(pi, 0) == doctest::Approx(0.0));
  CHECK(resonant_population(pi, 1) == doctest::Approx(1.0));
  CHECK(resonant_population(pi, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(resonant_population(0.0, 5) == 0.0);

  CHECK_THROWS_AS(ramsey_population(1.0, -1), std::domain_error);
}

TEST_CASE("population sequences have the advertised fundamental period") {
  // coprime M/N up to N = 8 (the cos^2 symmetry never shortens these)
  for (int N = 1; N <= 8; ++N) {
    for (int M = 1; M <= N; ++M) {
      if (std::gcd(M, N) != 1) continue;
      std::vector<double> cosseq, sinseq;
      for (int k = 0; k < 4 * N; ++k) {
        cosseq.push_back(ramsey_population(two_pi * M / N, k));
        sinseq.push_back(resonant_population(two_pi * M / N, k));
      }
      CHECK(fundamental_period(cosseq, 1e-12) == N);
      CHECK(fundamental_period(sinseq, 1e-12) == N);
    }
  }
  // non-reduced fraction: nu1 = 2*pi*(2/6) has fundamental period 3, not 6
  std::vector<double> seq;
  for (int k = 0; k < 24; ++k) seq.push_back(ramsey_population(two_pi * 2 / 6, k));
  CHECK(fundamental_period(seq, 1e-12) == 3);
}

TEST_CASE("period multiplicity detection") {
  const double T = 1.7;
  // exact half: eps1 - eps2 = pi/T
  auto mn = detect_period_multiplicity(pi / (2 * T), -pi / (2 * T), T, 16, 1e-9);
  REQUIRE(mn.has_value());
  CHECK(mn->first == 1);
  CHECK(mn->second == 2);

  // slightly detuned third
  const double d = two_pi / (3 * T) * (1 + 1e-9);
  mn = detect_period_multiplicity(d / 2, -d / 2, T, 16, 1e-6);
  REQUIRE(mn.has_value());
  CHECK(mn->first == 1);
  CHECK(mn->second == 3);

  // irrational-looking value: nothing with N <= 5 inside 1e-6
  const double x = two_pi * 0.4142 / T;
  CHECK(!detect_period_multiplicity(x / 2, -x / 2, T, 5, 1e-6).has_value());

  // random coprime fractions are recovered through 1e-9 noise
  Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    const int N = 2 + static_cast<int>(rng.uniform() * 11);
    int M = 1 + static_cast<int>(rng.uniform() * (N - 1));
    while (std::gcd(M, N) != 1) M = 1 + (M % (N - 1));
    const double diff = two_pi * M / (N * T) * (1 + 1e-9 * rng.uniform(-1, 1));
    const auto got = detect_period_multiplicity(diff / 2, -diff / 2, T, 12, 1e-6);
    REQUIRE(got.has_value());
    CHECK(got->first == M);
    CHECK(got->second == N);
  }

  CHECK_THROWS_AS(detect_period_multiplicity(0.1, -0.1, T, 1, 1e-6), std::domain_error);
}

TEST_CASE("equal-weight superpositions show the detected discrete period in <sx~>") {
  // Solve eps1 T = pi M/N inside the Omega != 0, theta = pi/4 family, where the
  // Floquet states are generic enough that sx~ connects them.
  const double T = 1.0, OmegaT = 0.8;
  const auto target = [&](int M, int N) {
    return 2 * std::acos(std::cos(pi * M / N) / std::cos(OmegaT / 2));
  };
  for (const auto& [M, N] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 5}, {3, 8}}) {
    const double g = target(M, N);
    const auto q = rwa_from_angles(OmegaT / T, g, pi / 4);
    const auto pair = floquet_eigensystem(q, T, 0.37 * T);
    const auto mn = detect_period_multiplicity(pair.eps[0], pair.eps[1], T, 16, 1e-9);
    REQUIRE(mn.has_value());
    CHECK(mn->first == M);
    CHECK(mn->second == N);

    // stroboscopic <sx~> of (psi1 + psi2)/sqrt(2) under monodromy iteration
    const auto u = monodromy_matrix(q, T, 0.37 * T);
    Eigen::Vector2cd psi = (pair.states.col(0) + pair.states.col(1)) / std::sqrt(2.0);
    Eigen::Matrix2cd sx;
    sx << 0, 1, 1, 0;
    std::vector<double> series;
    double lo = 1.0, hi = -1.0;
    for (int k = 0; k < 6 * N; ++k) {
      const double v = std::real(psi.dot(sx * psi));
      series.push_back(v);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      psi = u * psi;
    }
    REQUIRE(hi - lo > 1e-3);  // the oscillating matrix element is alive
    CHECK(fundamental_period(series, 1e-9) == N);
  }
}

TEST_CASE("pulse train validation") {
  PulseTrain p = make_train(1.0, 1.0, 0.1, 0.1, 0.0);
  CHECK_NOTHROW(validate(p));
  p.periods_per_T = 0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p.periods_per_T = 100;
  p.sigma = 1.0 / p.omegaF;  // too narrow against the carrier
  CHECK_THROWS_AS(require_lab_frame_ready(p), std::invalid_argument);
  p.sigma = p.period();  // too wide against the drive period
  CHECK_THROWS_AS(require_lab_frame_ready(p), std::invalid_argument);

  const auto w = warnings(make_train(1.0, 2.0, 0, 0, 0));  // far detuned
  CHECK(!w.empty());
}
