#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace floq {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double four_pi = 4.0 * std::numbers::pi;

namespace detail {

// arccos with a tolerance window for arguments that round slightly past [-1,1].
// Anything further out than `tol` indicates a genuine numerical defect upstream.
template <class Scalar>
Scalar acos_clamped(Scalar x, Scalar tol = Scalar(1e-12)) {
  if (x > Scalar(1)) {
    if (x - Scalar(1) > tol) throw std::runtime_error("acos argument exceeds 1 beyond tolerance");
    x = Scalar(1);
  } else if (x < Scalar(-1)) {
    if (Scalar(-1) - x > tol) throw std::runtime_error("acos argument below -1 beyond tolerance");
    x = Scalar(-1);
  }
  return std::acos(x);
}

// Reduce x modulo p into [0, p). fmod is exact, so values that differ by an
// integer multiple of the double `p` reduce to bit-identical results.
template <class Scalar>
Scalar reduce_mod(Scalar x, Scalar p) {
  Scalar r = std::fmod(x, p);
  if (r < Scalar(0)) r += p;
  return r;
}

// Fraction with the smallest denominator in the closed interval [lo, hi],
// 0 < lo <= hi, via the continued-fraction walk of the two endpoints.
inline std::pair<long, long> simplest_in_positive(double lo, double hi, int depth = 0) {
  const double cl = std::ceil(lo);
  if (cl <= hi) return {static_cast<long>(cl), 1L};
  if (depth > 64) return {static_cast<long>(std::llround(lo)), 1L};  // unreachable for doubles
  const double a = std::floor(lo);
  const auto [p, q] = simplest_in_positive(1.0 / (hi - a), 1.0 / (lo - a), depth + 1);
  return {static_cast<long>(a) * p + q, p};
}

}  // namespace detail

// Smallest p >= 1 with s[k+p] == s[k] (within tol) for all valid k.
// Returns 0 if no period fits in the sampled window (needs at least 2 repeats).
inline int fundamental_period(const std::vector<double>& s, double tol = 1e-9) {
  const int n = static_cast<int>(s.size());
  for (int p = 1; 2 * p <= n; ++p) {
    bool ok = true;
    for (int k = 0; k + p < n; ++k) {
      if (std::abs(s[k + p] - s[k]) > tol) { ok = false; break; }
    }
    if (ok) return p;
  }
  return 0;
}

// Smallest-denominator fraction in [lo, hi]; empty if the interval is empty.
inline std::optional<std::pair<long, long>> simplest_rational_in(double lo, double hi) {
  if (!(lo <= hi)) return std::nullopt;
  if (lo > 0.0) return detail::simplest_in_positive(lo, hi);
  if (hi < 0.0) {
    auto [p, q] = detail::simplest_in_positive(-hi, -lo);
    return std::make_pair(-p, q);
  }
  return std::make_pair(0L, 1L);  // interval contains zero
}

// Deterministic RNG: xorshift64* with explicit uniform/normal transforms, so
// streams are reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  // uniform in [0, 1)
  double uniform() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    const std::uint64_t z = state_ * 0x2545f4914f6cdd1dULL;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller, one value per call (the spare is cached)
  double normal() {
    if (has_spare_) { has_spare_ = false; return spare_; }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(two_pi * u2);
    has_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace floq
