#include "evaluators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lfun/analytic.hpp"

namespace lfun::detail {

namespace {

// B_{2k} for k = 1..13
constexpr double kB2k[] = {
    1.0 / 6.0,         -1.0 / 30.0,        1.0 / 42.0,
    -1.0 / 30.0,       5.0 / 66.0,         -691.0 / 2730.0,
    7.0 / 6.0,         -3617.0 / 510.0,    43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0,   -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

} // namespace

namespace {

// (e^x - 1) / x, stable near x = 0.
cd expm1_over(cd x) {
  if (std::abs(x) < 1e-4) return 1.0 + x * (0.5 + x / 6.0);
  return (std::exp(x) - 1.0) / x;
}

} // namespace

// zeta(s, a) - 1/(s-1): the pole is split off analytically so that
// character sums can cancel it exactly.
EvalResult hurwitz_zeta_reg(cd s, double a) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("hurwitz_zeta: need 0 < a <= 1");
  const double sigma = s.real();
  constexpr int K = 12;
  if (sigma + 2 * K + 1 <= 1.0)
    throw std::invalid_argument("hurwitz_zeta: Re s too negative for K=12");

  // remainder constant: |B_{2K+2}/(2K+2)!| |(s)_{2K+1}| |s+2K+1|/(sigma+2K+1)
  double poch_abs = 1.0;
  for (int j = 0; j <= 2 * K; ++j) poch_abs *= std::abs(s + double(j));
  const double c_rem = std::fabs(kB2k[K]) / factorial(2 * K + 2) * poch_abs *
                       (std::abs(s + double(2 * K + 1)) / (sigma + 2 * K + 1));

  const double target = 1e-13;
  double Nf = std::pow(std::max(c_rem / target, 1.0), 1.0 / (sigma + 2 * K + 1));
  int N = static_cast<int>(std::ceil(std::max(
      {16.0, Nf - a + 1.0, 0.4 * std::fabs(s.imag())})));
  if (N > 5000) N = 5000;

  cd sum = 0.0;
  double abs_sum = 0.0;
  for (int n = 0; n < N; ++n) {
    const cd term = std::exp(-s * std::log(double(n) + a));
    sum += term;
    abs_sum += std::abs(term);
  }
  const double Na = double(N) + a;
  const cd lNa = std::log(cd(Na));
  // (N+a)^(1-s)/(s-1) minus its pole 1/(s-1), written stably near s=1
  const cd t1 = -lNa * expm1_over(-(s - 1.0) * lNa);
  const cd t2 = 0.5 * std::exp(-s * lNa);
  sum += t1 + t2;
  abs_sum += std::abs(t1) + std::abs(t2);

  // correction terms B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}
  cd poch = s; // (s)_1
  for (int k = 1; k <= K; ++k) {
    const cd term = kB2k[k - 1] / factorial(2 * k) * poch *
                    std::exp((-s - double(2 * k - 1)) * lNa);
    sum += term;
    abs_sum += std::abs(term);
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
  }

  const double err =
      c_rem * std::pow(Na, -(sigma + 2 * K + 1)) + 4e-16 * abs_sum;
  return {sum, err};
}

EvalResult hurwitz_zeta(cd s, double a) {
  const auto reg = hurwitz_zeta_reg(s, a);
  return {reg.value + 1.0 / (s - 1.0), reg.err};
}

EvalResult zeta_eval(cd s) { return hurwitz_zeta(s, 1.0); }

EvalResult dirichlet_eval(cd s, const DirichletCharacter& chi) {
  // The 1/(s-1) poles of the Hurwitz pieces cancel since sum chi(a) = 0;
  // summing the regularized values realizes that cancellation exactly.
  const int q = chi.modulus;
  const cd qs = std::exp(-s * std::log(double(q)));
  cd sum = 0.0;
  double err = 0.0;
  for (int r = 1; r < q; ++r) {
    const cd c = chi.values[r];
    if (c == cd(0.0)) continue;
    const auto h = hurwitz_zeta_reg(s, double(r) / q);
    sum += c * h.value;
    err += h.err;
  }
  return {qs * sum, std::abs(qs) * err + 1e-15 * std::abs(qs * sum)};
}

namespace {

struct GL {
  std::vector<double> x, w; // nodes/weights on [-1, 1]
};

// Gauss-Legendre nodes by Newton iteration on P_n.
GL gauss_legendre(int n) {
  GL g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    g.x[i] = x;
    g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

// Delta(iy) = sum tau(n) e^(-2 pi n y), enough terms for y >= 1.
double delta_iy(double y) {
  static const std::vector<double> tau = [] {
    const auto& t = tau_table(16);
    std::vector<double> v(17);
    for (int n = 1; n <= 16; ++n) v[n] = static_cast<double>(t[n]);
    return v;
  }();
  double s = 0.0;
  for (int n = 16; n >= 1; --n)
    s += tau[n] * std::exp(-2.0 * std::numbers::pi * n * y);
  return s;
}

} // namespace

EvalResult eigenform_eval(cd s) {
  const cd w = s + 5.5;
  static const GL gl = gauss_legendre(16);
  // Lambda_cl(w) = int_1^inf Delta(iy) (y^(w-1) + y^(11-w)) dy; the second
  // term is the s -> 1-s reflection supplied by Delta(i/y) = y^12 Delta(iy).
  const double y_hi = 14.0;
  const int panels = 104;
  const double h = (y_hi - 1.0) / panels;
  cd integral = 0.0;
  double abs_integral = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = 1.0 + (p + 0.5) * h;
    for (int i = 0; i < 16; ++i) {
      const double y = mid + 0.5 * h * gl.x[i];
      const double d = delta_iy(y);
      const double ly = std::log(y);
      const cd f = d * (std::exp((w - 1.0) * ly) + std::exp((11.0 - w) * ly));
      integral += 0.5 * h * gl.w[i] * f;
      abs_integral += 0.5 * h * gl.w[i] * std::abs(f);
    }
  }
  // F(s) = Lambda_cl(w) (2 pi)^w / Gamma(w)
  const cd scale = std::exp(w * std::log(2.0 * std::numbers::pi)) / complex_gamma(w);
  const cd value = integral * scale;
  // quadrature is spectrally accurate here; roundoff dominates. 1e-25 covers
  // the truncated y > 14 tail and the dropped tau terms.
  const double err = (5e-16 * abs_integral + 1e-25) * std::abs(scale);
  return {value, err + 1e-14 * std::abs(value)};
}

} // namespace lfun::detail
