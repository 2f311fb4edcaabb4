#include "lfun/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <cmath>
#include <immintrin.h>

// AVX2 backend. Per-element arithmetic matches kernels_scalar.cpp exactly
// (this TU is built with -mavx2 -ffp-contract=off and uses explicit mul/add
// intrinsics, never FMA), so the scan kernels return bit-identical results.

namespace lfun {
namespace {

inline __m256d abs_pd(__m256d x) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(x, mask);
}

UnitCircleScanResult unit_circle_scan_avx2(const double* c1, const double* s1,
                                           const double* c2, const double* s2,
                                           std::size_t n, double ar, double ai,
                                           double br, double bi) {
  const __m256d var = _mm256_set1_pd(ar), vai = _mm256_set1_pd(ai);
  const __m256d vbr = _mm256_set1_pd(br), vbi = _mm256_set1_pd(bi);
  const __m256d one = _mm256_set1_pd(1.0);

  __m256d best = _mm256_set1_pd(-1.0);
  __m256i best_i = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vc1 = _mm256_loadu_pd(c1 + j), vs1 = _mm256_loadu_pd(s1 + j);
    const __m256d vc2 = _mm256_loadu_pd(c2 + j), vs2 = _mm256_loadu_pd(s2 + j);
    const __m256d tr = _mm256_add_pd(
        _mm256_add_pd(one, _mm256_sub_pd(_mm256_mul_pd(vc1, var),
                                         _mm256_mul_pd(vs1, vai))),
        _mm256_sub_pd(_mm256_mul_pd(vc2, vbr), _mm256_mul_pd(vs2, vbi)));
    const __m256d ti = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(vc1, vai), _mm256_mul_pd(vs1, var)),
        _mm256_add_pd(_mm256_mul_pd(vc2, vbi), _mm256_mul_pd(vs2, vbr)));
    const __m256d v =
        _mm256_add_pd(_mm256_mul_pd(tr, tr), _mm256_mul_pd(ti, ti));
    const __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
    best = _mm256_blendv_pd(best, v, gt);
    const __m256i idx = _mm256_set1_epi64x(static_cast<long long>(j));
    best_i = _mm256_blendv_epi8(best_i, idx, _mm256_castpd_si256(gt));
  }

  alignas(32) double bv[4];
  alignas(32) long long bi4[4];
  _mm256_store_pd(bv, best);
  _mm256_store_si256(reinterpret_cast<__m256i*>(bi4), best_i);
  double best_s = -1.0;
  std::size_t best_is = 0;
  for (int lane = 0; lane < 4; ++lane) {
    const std::size_t li = static_cast<std::size_t>(bi4[lane]) + lane;
    if (bv[lane] > best_s || (bv[lane] == best_s && li < best_is)) {
      best_s = bv[lane];
      best_is = li;
    }
  }
  for (; j < n; ++j) {
    const double tr = (1.0 + (c1[j] * ar - s1[j] * ai)) + (c2[j] * br - s2[j] * bi);
    const double ti = (c1[j] * ai + s1[j] * ar) + (c2[j] * bi + s2[j] * br);
    const double v = tr * tr + ti * ti;
    if (v > best_s) {
      best_s = v;
      best_is = j;
    }
  }
  return {best_s, best_is};
}

KroneckerScanResult kronecker_scan_avx2(const double* thetas,
                                        const double* betas, std::size_t k,
                                        double t0, double dt, std::size_t count,
                                        double eta) {
  const __m256d vt0 = _mm256_set1_pd(t0);
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d lane_ofs = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  __m256d best = _mm256_set1_pd(1.0e300);
  __m256i best_i = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d jd =
        _mm256_add_pd(_mm256_set1_pd(static_cast<double>(j)), lane_ofs);
    const __m256d t = _mm256_add_pd(vt0, _mm256_mul_pd(jd, vdt));
    __m256d m = _mm256_setzero_pd();
    for (std::size_t l = 0; l < k; ++l) {
      const __m256d x = _mm256_sub_pd(_mm256_mul_pd(t, _mm256_set1_pd(thetas[l])),
                                      _mm256_set1_pd(betas[l]));
      const __m256d r =
          _mm256_round_pd(x, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
      m = _mm256_max_pd(m, abs_pd(_mm256_sub_pd(x, r)));
    }
    const __m256d lt = _mm256_cmp_pd(m, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, m, lt);
    const __m256i idx = _mm256_set1_epi64x(static_cast<long long>(j));
    best_i = _mm256_blendv_epi8(best_i, idx, _mm256_castpd_si256(lt));
  }

  alignas(32) double bv[4];
  alignas(32) long long bi4[4];
  _mm256_store_pd(bv, best);
  _mm256_store_si256(reinterpret_cast<__m256i*>(bi4), best_i);
  double best_s = 1.0e300;
  std::size_t best_is = 0;
  for (int lane = 0; lane < 4; ++lane) {
    const std::size_t li = static_cast<std::size_t>(bi4[lane]) + lane;
    if (bv[lane] < best_s || (bv[lane] == best_s && li < best_is)) {
      best_s = bv[lane];
      best_is = li;
    }
  }
  for (; j < count; ++j) {
    const double t = t0 + static_cast<double>(j) * dt;
    double m = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double x = t * thetas[l] - betas[l];
      const double d = std::fabs(x - std::nearbyint(x));
      if (d > m) m = d;
    }
    if (m < best_s) {
      best_s = m;
      best_is = j;
    }
  }
  return {best_s, best_is, best_s < eta};
}

double weighted_sum_avx2(const double* a, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(w + j)));
  }
  alignas(32) double acc4[4];
  _mm256_store_pd(acc4, acc);
  double s = ((acc4[0] + acc4[1]) + acc4[2]) + acc4[3];
  for (; j < n; ++j) s += a[j] * w[j];
  return s;
}

void phase_sum_avx2(const double* re, const double* im, const double* c,
                    const double* s, std::size_t n, double* out_re,
                    double* out_im) {
  __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vr = _mm256_loadu_pd(re + j), vi = _mm256_loadu_pd(im + j);
    const __m256d vc = _mm256_loadu_pd(c + j), vs = _mm256_loadu_pd(s + j);
    ar = _mm256_add_pd(ar, _mm256_sub_pd(_mm256_mul_pd(vr, vc),
                                         _mm256_mul_pd(vi, vs)));
    ai = _mm256_add_pd(ai, _mm256_add_pd(_mm256_mul_pd(vr, vs),
                                         _mm256_mul_pd(vi, vc)));
  }
  alignas(32) double a4[4];
  _mm256_store_pd(a4, ar);
  double sr = ((a4[0] + a4[1]) + a4[2]) + a4[3];
  _mm256_store_pd(a4, ai);
  double si = ((a4[0] + a4[1]) + a4[2]) + a4[3];
  for (; j < n; ++j) {
    sr += re[j] * c[j] - im[j] * s[j];
    si += re[j] * s[j] + im[j] * c[j];
  }
  *out_re = sr;
  *out_im = si;
}

} // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

const Kernels& avx2_kernels() {
  static const Kernels k = {unit_circle_scan_avx2, kronecker_scan_avx2,
                            weighted_sum_avx2, phase_sum_avx2, "avx2"};
  return k;
}

} // namespace lfun

#endif // x86
