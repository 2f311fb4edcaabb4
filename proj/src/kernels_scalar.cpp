#include "lfun/kernels.hpp"

#include <cmath>

// Reference backend. The AVX2 backend mirrors the per-element arithmetic of
// these loops exactly; keep the operation order in sync with kernels_avx2.cpp.

namespace lfun {
namespace {

UnitCircleScanResult unit_circle_scan_scalar(const double* c1, const double* s1,
                                             const double* c2, const double* s2,
                                             std::size_t n, double ar, double ai,
                                             double br, double bi) {
  double best = -1.0;
  std::size_t best_i = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double tr = (1.0 + (c1[j] * ar - s1[j] * ai)) + (c2[j] * br - s2[j] * bi);
    const double ti = (c1[j] * ai + s1[j] * ar) + (c2[j] * bi + s2[j] * br);
    const double v = tr * tr + ti * ti;
    if (v > best) {
      best = v;
      best_i = j;
    }
  }
  return {best, best_i};
}

KroneckerScanResult kronecker_scan_scalar(const double* thetas,
                                          const double* betas, std::size_t k,
                                          double t0, double dt,
                                          std::size_t count, double eta) {
  double best = 1.0e300;
  std::size_t best_i = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const double t = t0 + static_cast<double>(j) * dt;
    double m = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double x = t * thetas[l] - betas[l];
      const double d = std::fabs(x - std::nearbyint(x));
      if (d > m) m = d;
    }
    if (m < best) {
      best = m;
      best_i = j;
    }
  }
  return {best, best_i, best < eta};
}

double weighted_sum_scalar(const double* a, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += a[j] * w[j];
  return s;
}

void phase_sum_scalar(const double* re, const double* im, const double* c,
                      const double* s, std::size_t n, double* out_re,
                      double* out_im) {
  double sr = 0.0, si = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sr += re[j] * c[j] - im[j] * s[j];
    si += re[j] * s[j] + im[j] * c[j];
  }
  *out_re = sr;
  *out_im = si;
}

} // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {unit_circle_scan_scalar, kronecker_scan_scalar,
                            weighted_sum_scalar, phase_sum_scalar, "scalar"};
  return k;
}

} // namespace lfun
