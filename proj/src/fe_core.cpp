#include "lfun/fe_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lfun {

static constexpr double kUnitTol = 1e-12;

GammaFactorData GammaFactorData::make(double Q, std::vector<double> lambda,
                                      std::vector<cd> mu, cd omega,
                                      int pole_order) {
  if (!(Q > 0.0)) throw std::invalid_argument("GammaFactorData: Q must be positive");
  if (lambda.empty()) throw std::invalid_argument("GammaFactorData: lambda must be nonempty");
  if (lambda.size() != mu.size())
    throw std::invalid_argument("GammaFactorData: lambda and mu length mismatch");
  for (double l : lambda)
    if (!(l > 0.0)) throw std::invalid_argument("GammaFactorData: lambda_j must be positive");
  if (std::fabs(std::abs(omega) - 1.0) > kUnitTol)
    throw std::invalid_argument("GammaFactorData: |omega| must equal 1 within 1e-12");
  if (pole_order < 0)
    throw std::invalid_argument("GammaFactorData: pole_order must be nonnegative");
  GammaFactorData d;
  d.Q = Q;
  d.lambda = std::move(lambda);
  d.mu = std::move(mu);
  d.omega = omega;
  d.pole_order = pole_order;
  return d;
}

bool GammaFactorData::sharp_admissible() const {
  for (const cd& m : mu)
    if (m.real() < 0.0) return false;
  return true;
}

double degree(const GammaFactorData& data) {
  double s = 0.0;
  for (double l : data.lambda) s += l;
  return 2.0 * s;
}

double conductor(const GammaFactorData& data) {
  const double d = degree(data);
  double q = std::pow(2.0 * std::numbers::pi, d) * data.Q * data.Q;
  for (double l : data.lambda) q *= std::pow(l, 2.0 * l);
  return q;
}

double b_invariant(const GammaFactorData& data) {
  double m = data.mu[0].real() / data.lambda[0];
  for (std::size_t j = 1; j < data.mu.size(); ++j)
    m = std::min(m, data.mu[j].real() / data.lambda[j]);
  return 2.0 * m + 1.0;
}

SelbergInvariants invariants(const GammaFactorData& data) {
  return {degree(data), conductor(data), b_invariant(data)};
}

LiftResult lift_data(const GammaFactorData& data, int k) {
  if (k < 1) throw std::invalid_argument("lift_data: k must be >= 1");
  GammaFactorData out = data;
  out.Q = std::pow(data.Q, k);
  const double shift = (1.0 - k) / 2.0;
  for (std::size_t j = 0; j < data.lambda.size(); ++j) {
    out.lambda[j] = k * data.lambda[j];
    out.mu[j] = data.mu[j] + shift * data.lambda[j];
  }
  return {std::move(out), k >= 2 && data.pole_order > 0};
}

bool lift_admissible(const GammaFactorData& data, bool entire, int k) {
  if (k < 1) throw std::invalid_argument("lift_admissible: k must be >= 1");
  if (k == 1) return true;
  return k <= b_invariant(data) && entire;
}

LiftLawReport check_lift_laws(const GammaFactorData& data, int k) {
  const GammaFactorData lifted = lift_data(data, k).data;
  LiftLawReport r;
  r.degree_direct = degree(lifted);
  r.degree_law = k * degree(data);
  r.degree_diff = std::fabs(r.degree_direct - r.degree_law);
  r.conductor_direct = conductor(lifted);
  r.conductor_law =
      std::pow(conductor(data), k) * std::pow(double(k), k * degree(data));
  r.conductor_diff = std::fabs(r.conductor_direct - r.conductor_law);
  return r;
}

GammaFactorData zeta_data() {
  return GammaFactorData::make(1.0 / std::sqrt(std::numbers::pi), {0.5}, {cd(0.0)},
                               cd(1.0), 1);
}

GammaFactorData dirichlet_data(int q, bool odd) {
  if (q < 3) throw std::invalid_argument("dirichlet_data: modulus must be >= 3");
  const double a = odd ? 0.5 : 0.0;
  // omega = tau(chi)/(i^a sqrt(q)) equals 1 for every real primitive
  // character; complex characters need it supplied explicitly.
  return GammaFactorData::make(std::sqrt(q / std::numbers::pi), {0.5}, {cd(a)},
                               cd(1.0), 0);
}

GammaFactorData eigenform_data() {
  return GammaFactorData::make(1.0 / (2.0 * std::numbers::pi), {1.0}, {cd(5.5)},
                               cd(1.0), 0);
}

} // namespace lfun
