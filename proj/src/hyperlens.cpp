#include "ballm/hyperlens.hpp"

#include <cmath>
#include <numbers>

namespace ballm {

namespace {
constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::nearbyint(x);
}
}  // namespace

namespace {
// Regularized incomplete beta I_x(a, 1/2) via a positive-term hypergeometric
// series: I_x(a, 1/2) = x^a sqrt(1-x) / (a B(a, 1/2)) * 2F1(a + 1/2, 1; a + 1; x).
// With every term positive there is no cancellation, so tiny results keep full
// relative precision; used for x <= 1/2 where the series ratio stays below 1/2.
double reg_inc_beta_half(double a, double x) {
  const double beta = gamma_real(a) * gamma_real(0.5) / gamma_real(a + 0.5);
  const double f = gauss_2f1(HypergeomParams(a + 0.5, 1.0, a + 1.0, x));
  return std::pow(x, a) * std::sqrt(1.0 - x) / (a * beta) * f;
}
}  // namespace

double gamma_real(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_real requires x > 0");
  return std::tgamma(x);
}

double gauss_2f1(const HypergeomParams& p) {
  if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b)) {
    // Terminating polynomial case; sum exactly.
    const double stop = std::min(is_nonpositive_integer(p.a) ? -p.a : 1e300,
                                 is_nonpositive_integer(p.b) ? -p.b : 1e300);
    double term = 1.0, sum = 1.0;
    for (long long k = 0; k < static_cast<long long>(stop); ++k) {
      term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1)) * p.z;
      sum += term;
    }
    return sum;
  }
  if (p.z == 0.0) return 1.0;

  constexpr int kMaxTerms = 10000;
  constexpr double kTail = 1e-14;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1)) * p.z;
    sum += term;
    // Once the term ratio has settled below q < 1, the remaining tail is bounded
    // by |term| * q / (1 - q).
    const double q =
        std::abs((p.a + k + 1) * (p.b + k + 1) / ((p.c + k + 1) * (k + 2)) * p.z);
    if (q < 1.0 && std::abs(term) * q / (1.0 - q) <= kTail) return sum;
  }
  throw std::runtime_error("gauss_2f1 series did not converge within 10000 terms");
}

double ndim_lens_volume(Dimension n, AngularRadius phi) {
  const int d = n.value();
  if (phi.value() == 0.0) return 0.0;  // balls are externally tangent; the lens is a point
  const double c = std::cos(phi.value());
  const double s = std::sin(phi.value());
  const double ball = std::pow(kPi, d / 2.0) / gamma_real(1.0 + d / 2.0);
  if (s * s <= 0.5) {
    // Thin-lens regime: the complementary form below subtracts two O(1)
    // quantities to produce a volume that shrinks like phi^(d+1), losing
    // relative precision catastrophically. The incomplete-beta series builds
    // the same value from positive terms and keeps ~1e-15 relative accuracy.
    return ball * reg_inc_beta_half((d + 1) / 2.0, s * s);
  }
  const double coeff =
      2.0 * gamma_real(1.0 + d / 2.0) / (std::sqrt(kPi) * gamma_real((d + 1) / 2.0));
  const double f = gauss_2f1(HypergeomParams(0.5, (1.0 - d) / 2.0, 1.5, c * c));
  return ball * (1.0 - coeff * f * c);
}

double ndim_lens_area(Dimension n, AngularRadius phi) {
  const int d = n.value();
  if (phi.value() == 0.0) return 0.0;
  const double c = std::cos(phi.value());
  const double s = std::sin(phi.value());
  const double sphere = 2.0 * std::pow(kPi, d / 2.0) / gamma_real(d / 2.0);
  if (s * s <= 0.5) {
    // Same thin-lens cancellation as the volume: evaluate through the
    // positive-term incomplete-beta series instead.
    return sphere * reg_inc_beta_half((d - 1) / 2.0, s * s);
  }
  const double coeff =
      2.0 * gamma_real(d / 2.0) / (std::sqrt(kPi) * gamma_real((d - 1) / 2.0));
  const double f = gauss_2f1(HypergeomParams(0.5, (3.0 - d) / 2.0, 1.5, c * c));
  return sphere * (1.0 - coeff * f * c);
}

}  // namespace ballm
