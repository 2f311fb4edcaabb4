#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lfun/kernels.hpp"

using namespace lfun;

namespace {

struct GridCase {
  std::vector<double> c1, s1, c2, s2;
  explicit GridCase(std::size_t g) : c1(g), s1(g), c2(g), s2(g) {
    for (std::size_t j = 0; j < g; ++j) {
      const double phi = 2.0 * std::numbers::pi * double(j) / double(g);
      c1[j] = std::cos(phi);
      s1[j] = std::sin(phi);
      c2[j] = c1[(2 * j) % g];
      s2[j] = s1[(2 * j) % g];
    }
  }
};

} // namespace

TEST_CASE("unit_circle_scan backends agree bit-for-bit") {
  const auto& sc = scalar_kernels();
#if defined(__x86_64__) || defined(__i386__)
  if (!avx2_supported()) return;
  const auto& vx = avx2_kernels();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (std::size_t g : {64u, 97u, 2048u}) {
    GridCase grid(g);
    for (int trial = 0; trial < 200; ++trial) {
      const double ar = u(rng), ai = u(rng), br = u(rng), bi = u(rng);
      const auto a = sc.unit_circle_scan(grid.c1.data(), grid.s1.data(),
                                         grid.c2.data(), grid.s2.data(), g, ar,
                                         ai, br, bi);
      const auto b = vx.unit_circle_scan(grid.c1.data(), grid.s1.data(),
                                         grid.c2.data(), grid.s2.data(), g, ar,
                                         ai, br, bi);
      CHECK(a.best_value_sq == b.best_value_sq);
      CHECK(a.best_index == b.best_index);
    }
  }
#endif
}

TEST_CASE("kronecker_scan backends agree bit-for-bit") {
  const auto& sc = scalar_kernels();
#if defined(__x86_64__) || defined(__i386__)
  if (!avx2_supported()) return;
  const auto& vx = avx2_kernels();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + trial % 5;
    std::vector<double> th(k), be(k);
    for (std::size_t l = 0; l < k; ++l) {
      th[l] = u(rng);
      be[l] = u(rng) * 0.9;
    }
    const double t0 = u(rng) * 50.0;
    const double dt = u(rng) * 0.01;
    const std::size_t count = 1000 + trial * 13; // exercise tail handling
    const auto a = sc.kronecker_scan(th.data(), be.data(), k, t0, dt, count, 0.02);
    const auto b = vx.kronecker_scan(th.data(), be.data(), k, t0, dt, count, 0.02);
    CHECK(a.best_err == b.best_err);
    CHECK(a.best_index == b.best_index);
    CHECK(a.found == b.found);
  }
#endif
}

TEST_CASE("kronecker_scan finds a planted near-solution") {
  // k=1, theta = log 2 / 2pi, beta = 0: t near multiples of 2pi/log2 works.
  const double theta = std::log(2.0) / (2.0 * std::numbers::pi);
  const double beta = 0.0;
  const auto r = kernels().kronecker_scan(&theta, &beta, 1, 1.0, 1e-3, 200000, 1e-3);
  CHECK(r.found);
  const double t = 1.0 + double(r.best_index) * 1e-3;
  const double x = t * theta;
  CHECK(std::fabs(x - std::nearbyint(x)) < 1e-3);
}

TEST_CASE("reduction kernels agree to roundoff") {
  const auto& sc = scalar_kernels();
#if defined(__x86_64__) || defined(__i386__)
  if (!avx2_supported()) return;
  const auto& vx = avx2_kernels();
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {1u, 7u, 1000u, 4099u}) {
    std::vector<double> a(n), w(n), re(n), im(n), c(n), s(n);
    double mag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = u(rng);
      w[j] = u(rng);
      re[j] = u(rng);
      im[j] = u(rng);
      const double phi = u(rng) * 3.0;
      c[j] = std::cos(phi);
      s[j] = std::sin(phi);
      mag += std::fabs(a[j] * w[j]);
    }
    const double x = sc.weighted_sum(a.data(), w.data(), n);
    const double y = vx.weighted_sum(a.data(), w.data(), n);
    CHECK(std::fabs(x - y) <= 1e-14 * (mag + 1.0));
    double xr, xi, yr, yi;
    sc.phase_sum(re.data(), im.data(), c.data(), s.data(), n, &xr, &xi);
    vx.phase_sum(re.data(), im.data(), c.data(), s.data(), n, &yr, &yi);
    CHECK(std::fabs(xr - yr) <= 1e-12 * double(n));
    CHECK(std::fabs(xi - yi) <= 1e-12 * double(n));
  }
#endif
}

TEST_CASE("dispatch honors LFUN_KERNELS") {
  // just exercise the selected backend once
  const auto& k = kernels();
  std::vector<double> a{1.0, 2.0, 3.0}, w{0.5, 0.25, 0.125};
  CHECK(k.weighted_sum(a.data(), w.data(), 3) == doctest::Approx(1.375));
}
