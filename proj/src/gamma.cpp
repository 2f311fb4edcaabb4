#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lfun/analytic.hpp"

namespace lfun {

namespace {

// B_2k / (2k (2k-1)) for the Stirling series of log Gamma.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    7.0 / 1092.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// log Gamma(z) for |z| >= 24, Re z > 0; series error below 1e-24 there.
cd stirling_lgamma(cd z) {
  const cd lz = std::log(z);
  cd sum = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * std::numbers::pi);
  const cd z2 = z * z;
  cd zp = z;
  for (double c : kStirling) {
    sum += c / zp;
    zp *= z2;
  }
  return sum;
}

} // namespace

cd complex_gamma(cd s) {
  if (std::fabs(s.imag()) < 1e-12) {
    const double r = std::round(s.real());
    if (r <= 0.0 && std::fabs(s.real() - r) < 1e-12)
      throw std::domain_error("complex_gamma: pole at nonpositive integer");
  }
  if (s.real() < 0.5) {
    // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    const cd pis = std::numbers::pi * s;
    return std::numbers::pi / (std::sin(pis) * complex_gamma(1.0 - s));
  }
  cd prod = 1.0;
  cd z = s;
  while (std::abs(z) < 24.0) {
    prod *= z;
    z += 1.0;
  }
  return std::exp(stirling_lgamma(z)) / prod;
}

} // namespace lfun
