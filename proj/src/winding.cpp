#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lfun/analytic.hpp"

namespace lfun {

namespace {

constexpr double kMaxPhaseStep = 0.8; // radians accepted between samples
constexpr int kMaxDepth = 36;

struct Walk {
  double total_arg = 0.0;
  double min_mod = 1e300;
  bool failed = false;
};

void walk_segment(const std::function<cd(cd)>& f, cd z0, cd f0, cd z1, cd f1,
                  int depth, Walk& w) {
  const double d = std::arg(f1 / f0);
  if (std::fabs(d) <= kMaxPhaseStep) {
    w.total_arg += d;
    return;
  }
  if (depth >= kMaxDepth) {
    w.failed = true;
    w.total_arg += d;
    return;
  }
  const cd zm = 0.5 * (z0 + z1);
  const cd fm = f(zm);
  w.min_mod = std::min(w.min_mod, std::abs(fm));
  if (fm == cd(0.0)) {
    w.failed = true;
    return;
  }
  walk_segment(f, z0, f0, zm, fm, depth + 1, w);
  walk_segment(f, zm, fm, z1, f1, depth + 1, w);
}

// Argument variation along [z0, z1]. Base sampling is fine enough that a
// zero further than ~1e-3 from the contour cannot alias a full turn away.
void walk_edge(const std::function<cd(cd)>& f, cd z0, cd z1, Walk& w) {
  const double len = std::abs(z1 - z0);
  const int base = std::max(4, static_cast<int>(std::ceil(len / 0.02)));
  cd prev_z = z0;
  cd prev_f = f(z0);
  w.min_mod = std::min(w.min_mod, std::abs(prev_f));
  for (int i = 1; i <= base; ++i) {
    const cd z = z0 + (z1 - z0) * (double(i) / base);
    const cd fv = f(z);
    w.min_mod = std::min(w.min_mod, std::abs(fv));
    if (fv == cd(0.0)) {
      w.failed = true;
      return;
    }
    walk_segment(f, prev_z, prev_f, z, fv, 0, w);
    if (w.failed) return;
    prev_z = z;
    prev_f = fv;
  }
}

Walk walk_rect(const std::function<cd(cd)>& f, const Rect& r) {
  Walk w;
  const cd c0(r.sigma0, r.t0), c1(r.sigma1, r.t0), c2(r.sigma1, r.t1),
      c3(r.sigma0, r.t1);
  walk_edge(f, c0, c1, w);
  if (!w.failed) walk_edge(f, c1, c2, w);
  if (!w.failed) walk_edge(f, c2, c3, w);
  if (!w.failed) walk_edge(f, c3, c0, w);
  return w;
}

} // namespace

long winding_count(const std::function<cd(cd)>& f, Rect rect,
                   double* min_modulus, double* raw) {
  const Walk w = walk_rect(f, rect);
  if (w.failed)
    throw std::runtime_error(
        "winding_count: contour passes too close to a zero");
  const double winding = w.total_arg / (2.0 * std::numbers::pi);
  if (min_modulus != nullptr) *min_modulus = w.min_mod;
  if (raw != nullptr) *raw = winding;
  return std::lround(winding);
}

ZeroCountResult count_zeros(const LFunction& f, Rect rect) {
  if (!(rect.sigma0 < rect.sigma1) || !(rect.t0 <= rect.t1))
    throw std::invalid_argument("count_zeros: malformed rectangle");
  ZeroCountResult res;
  if (rect.t0 == rect.t1) {
    res.rect = rect;
    return res; // empty rectangle
  }
  const Window w = f.window();
  if (rect.sigma0 < w.sigma_min - 1e-9 || rect.sigma1 > w.sigma_max + 1e-9 ||
      std::max(std::fabs(rect.t0), std::fabs(rect.t1)) > w.t_max)
    throw WindowError("count_zeros: rectangle exceeds the evaluation window");

  // Real-axis poles of the completed function: s=1 (order = pole order of F)
  // plus the gamma poles that F's trivial zeros do not cancel.
  struct Pole {
    double sigma;
    int order;
  };
  std::vector<Pole> poles;
  if (f.pole_order() > 0) poles.push_back({1.0, f.pole_order()});
  const GammaFactorData& d = f.data();
  for (std::size_t j = 0; j < d.lambda.size(); ++j) {
    if (std::fabs(d.mu[j].imag()) > 1e-12) continue;
    for (int k = 0;; ++k) {
      const double sp = -(d.mu[j].real() + k) / d.lambda[j];
      if (sp < w.sigma_min) break;
      bool cancelled = true;
      try {
        cancelled = std::abs(f.evaluate(cd(sp)).value) < 1e-8;
      } catch (const std::exception&) {
        cancelled = false;
      }
      if (!cancelled) {
        bool merged = false;
        for (auto& p : poles)
          if (std::fabs(p.sigma - sp) < 1e-9) {
            p.order += 1;
            merged = true;
          }
        if (!merged) poles.push_back({sp, 1});
      }
    }
  }

  // Keep the contour clear of those poles.
  for (const Pole& p : poles) {
    if (p.sigma > rect.sigma0 - 1e-3 && p.sigma < rect.sigma1 + 1e-3) {
      if (std::fabs(rect.t0) < 1e-3) rect.t0 += 1e-3;
      if (std::fabs(rect.t1) < 1e-3) rect.t1 -= 1e-3;
    }
    if (rect.t0 < 0.0 && rect.t1 > 0.0) {
      if (std::fabs(rect.sigma0 - p.sigma) < 1e-3) rect.sigma0 -= 1e-3;
      if (std::fabs(rect.sigma1 - p.sigma) < 1e-3) rect.sigma1 += 1e-3;
    }
  }

  const auto completed = f.completed_function();
  double min_mod = 0.0, raw = 0.0;
  long winding = 0;
  for (int attempt = 0;; ++attempt) {
    try {
      winding = winding_count(completed, rect, &min_mod, &raw);
      break;
    } catch (const std::runtime_error&) {
      if (attempt >= 3) throw;
      // a zero sits near the contour: nudge sigma outward, t away from 0
      rect.sigma0 -= 1e-3;
      rect.sigma1 += 1e-3;
      rect.t0 += (rect.t0 > 1e-3 ? -1e-3 : (rect.t0 < -1e-3 ? 0.0 : 2e-3));
      rect.t1 += 1e-3;
    }
  }

  int correction = 0;
  for (const Pole& p : poles)
    if (p.sigma > rect.sigma0 && p.sigma < rect.sigma1 && rect.t0 < 0.0 &&
        rect.t1 > 0.0)
      correction += p.order;

  res.rect = rect;
  res.raw_winding = raw;
  res.pole_correction = correction;
  res.count = winding + correction;
  res.min_edge_modulus = min_mod;
  if (res.count < 0)
    throw std::runtime_error("count_zeros: negative corrected count");
  return res;
}

namespace {

long checked_winding(const std::function<cd(cd)>& f, const Rect& r) {
  return winding_count(f, r, nullptr, nullptr);
}

void bisect_zeros(const std::function<cd(cd)>& f, Rect r, long cnt, double tol,
                  std::vector<cd>& out, int depth) {
  if (cnt <= 0) return;
  const double dw = r.sigma1 - r.sigma0;
  const double dh = r.t1 - r.t0;
  if ((dw <= tol && dh <= tol) || depth > 60) {
    const cd center(0.5 * (r.sigma0 + r.sigma1), 0.5 * (r.t0 + r.t1));
    cd z = center;
    for (int it = 0; it < 3; ++it) { // Newton polish
      const double h = 1e-6;
      const cd fz = f(z);
      const cd df = (f(z + h) - f(z - h)) / (2.0 * h);
      if (std::abs(df) == 0.0) break;
      const cd step = fz / df;
      if (std::abs(step) > 2.0 * (dw + dh) + tol) break;
      z -= step;
    }
    const bool inside = std::fabs(z.real() - center.real()) < 2.0 * dw + tol &&
                        std::fabs(z.imag() - center.imag()) < 2.0 * dh + tol;
    const cd polished = inside ? z : center;
    for (long i = 0; i < cnt; ++i) out.push_back(polished);
    return;
  }
  // split along the longer side; jitter the cut if it lands on a zero
  for (double frac : {0.5, 0.53, 0.47, 0.61, 0.39}) {
    Rect a = r, b = r;
    if (dh >= dw) {
      const double mid = r.t0 + frac * dh;
      a.t1 = mid;
      b.t0 = mid;
    } else {
      const double mid = r.sigma0 + frac * dw;
      a.sigma1 = mid;
      b.sigma0 = mid;
    }
    try {
      const long ca = checked_winding(f, a);
      const long cb = checked_winding(f, b);
      bisect_zeros(f, a, ca, tol, out, depth + 1);
      bisect_zeros(f, b, cb, tol, out, depth + 1);
      return;
    } catch (const std::runtime_error&) {
      continue; // try the next cut position
    }
  }
  // all cuts failed: give up on refinement at this level
  const cd center(0.5 * (r.sigma0 + r.sigma1), 0.5 * (r.t0 + r.t1));
  for (long i = 0; i < cnt; ++i) out.push_back(center);
}

} // namespace

std::vector<cd> locate_zeros_fn(const std::function<cd(cd)>& f, Rect rect,
                                double tol) {
  std::vector<cd> out;
  bisect_zeros(f, rect, checked_winding(f, rect), tol, out, 0);
  std::sort(out.begin(), out.end(), [](cd a, cd b) {
    return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
  });
  return out;
}

std::vector<cd> locate_zeros(const LFunction& f, Rect rect, double tol) {
  return locate_zeros_fn(f.completed_function(), rect, tol);
}

std::vector<DensityRow> density_probe(const LFunction& f,
                                      const std::vector<double>& sigmas,
                                      double T) {
  std::vector<DensityRow> rows;
  for (double sigma : sigmas) {
    if (sigma >= 1.0) {
      rows.push_back({sigma, 0, 0.0});
      continue; // Euler product nonvanishing
    }
    if (!(sigma > 0.5))
      throw std::invalid_argument("density_probe: sigma must exceed 1/2");
    const auto r = count_zeros(f, {sigma, 1.5, -T, T});
    rows.push_back({sigma, r.count, double(r.count) / T});
  }
  return rows;
}

} // namespace lfun
