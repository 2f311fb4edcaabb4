#pragma once

#include <cstddef>

namespace lfun {

// Hot inner loops of the toolkit, exposed as a small kernel table. A scalar
// reference backend always exists; on x86 an AVX2 backend is selected at
// runtime when the CPU supports it (override with LFUN_KERNELS=scalar|avx2).
//
// The two scan kernels are bit-identical between backends: every element is
// computed with the same operation order (no FMA contraction, ties broken
// toward the lowest index), so tests can assert exact equality. The reduction
// kernels accumulate in a different order and are equivalence-tested to a few
// ulps instead.

struct UnitCircleScanResult {
  double best_value_sq;   // max over the grid of |1 + theta*a + theta^2*b|^2
  std::size_t best_index; // lowest grid index achieving it
};

struct KroneckerScanResult {
  double best_err;        // min over grid of max_l dist(t_j*theta_l - beta_l, Z)
  std::size_t best_index; // lowest grid index achieving it
  bool found;             // best_err < eta
};

struct Kernels {
  // theta_j = (c1[j], s1[j]), theta_j^2 = (c2[j], s2[j]); a=(ar,ai), b=(br,bi).
  UnitCircleScanResult (*unit_circle_scan)(const double* c1, const double* s1,
                                           const double* c2, const double* s2,
                                           std::size_t n, double ar, double ai,
                                           double br, double bi);
  // t_j = t0 + j*dt for j in [0,count); dist(x,Z) = |x - nearbyint(x)|.
  KroneckerScanResult (*kronecker_scan)(const double* thetas,
                                        const double* betas, std::size_t k,
                                        double t0, double dt, std::size_t count,
                                        double eta);
  // sum_j a[j]*w[j]
  double (*weighted_sum)(const double* a, const double* w, std::size_t n);
  // sum_j (re[j] + i*im[j]) * (c[j] + i*s[j])
  void (*phase_sum)(const double* re, const double* im, const double* c,
                    const double* s, std::size_t n, double* out_re,
                    double* out_im);
  const char* name;
};

const Kernels& scalar_kernels();

#if defined(__x86_64__) || defined(__i386__)
bool avx2_supported();
const Kernels& avx2_kernels(); // call only when avx2_supported()
#endif

// Backend chosen at first use.
const Kernels& kernels();

} // namespace lfun
