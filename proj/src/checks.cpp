#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "lfun/analytic.hpp"

namespace lfun {

double CSpec::operator()(double sigma) const {
  if (knots.empty()) throw std::invalid_argument("CSpec: empty table");
  if (sigma <= knots.front().first) return knots.front().second;
  if (sigma >= knots.back().first) return knots.back().second;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (sigma <= knots[i].first) {
      const auto& [x0, c0] = knots[i - 1];
      const auto& [x1, c1] = knots[i];
      const double t = (sigma - x0) / (x1 - x0);
      return c0 + t * (c1 - c0);
    }
  }
  return knots.back().second;
}

MajorantResult majorant_check(const LFunction& F,
                              const std::function<cd(cd)>& f, double sigma_min,
                              double sigma_max, const CSpec& c,
                              const MajorantGrid& grid) {
  if (!(sigma_min < sigma_max))
    throw std::invalid_argument("majorant_check: empty strip");
  for (const auto& [x, v] : c.knots)
    if (!(v > 0.0))
      throw std::invalid_argument("majorant_check: c(sigma) must be positive");
  MajorantResult res;
  for (int it = 0; it <= grid.n_t; ++it) {
    const double t =
        grid.t_min + (grid.t_max - grid.t_min) * double(it) / grid.n_t;
    for (int is = 0; is <= grid.n_sigma; ++is) {
      const double sigma =
          sigma_min + (sigma_max - sigma_min) * double(is) / grid.n_sigma;
      const cd s(sigma, t);
      const double Fv = std::abs(F.evaluate(s).value);
      const double fv = std::abs(f(s));
      if (Fv > c(sigma) * fv) {
        res.pass = false;
        res.witness_s = s;
        res.F_abs = Fv;
        res.cf_abs = c(sigma) * fv;
        return res;
      }
    }
  }
  return res;
}

ZeroCompareReport zero_set_compare(const LFunction& F,
                                   const std::function<cd(cd)>& f, Rect rect,
                                   double pair_tol) {
  ZeroCompareReport rep;
  auto zF = locate_zeros(F, rect);
  auto zf = locate_zeros_fn(f, rect);
  std::vector<bool> used(zf.size(), false);
  for (const cd& z : zF) {
    double best = std::numeric_limits<double>::max();
    std::size_t best_i = zf.size();
    for (std::size_t i = 0; i < zf.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(z - zf[i]);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    if (best_i < zf.size() && best <= pair_tol) {
      used[best_i] = true;
      rep.matched.emplace_back(z, zf[best_i]);
    } else {
      rep.unmatched_F.push_back(z);
    }
  }
  for (std::size_t i = 0; i < zf.size(); ++i)
    if (!used[i]) rep.unmatched_f.push_back(zf[i]);
  return rep;
}

namespace {

// Memoized line evaluation: the tau scan revisits the same ordinates.
struct LineCache {
  const std::function<cd(cd)>& f;
  double x;
  std::unordered_map<long long, cd> memo;
  cd at(double t) {
    const long long key = std::llround(t * 1048576.0); // 2^20 quantum
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const cd v = f(cd(x, double(key) / 1048576.0));
    memo.emplace(key, v);
    return v;
  }
};

} // namespace

AlmostPeriodResult almost_period_find(const std::function<cd(cd)>& f, double A,
                                      double eps, double range_lo,
                                      double range_hi, int grid,
                                      const std::vector<double>& t_samples) {
  if (!(eps > 0.0))
    throw std::invalid_argument("almost_period_find: eps must be positive");
  if (t_samples.empty())
    throw std::invalid_argument("almost_period_find: empty sample set");
  if (grid < 1 || !(range_hi > range_lo))
    throw std::invalid_argument("almost_period_find: bad search range");
  LineCache cache{f, A, {}};
  std::vector<cd> base(t_samples.size());
  for (std::size_t i = 0; i < t_samples.size(); ++i)
    base[i] = cache.at(t_samples[i]);

  AlmostPeriodResult res;
  res.sampled_sup = std::numeric_limits<double>::max();
  for (int g = 1; g <= grid; ++g) {
    const double tau = range_lo + (range_hi - range_lo) * double(g) / grid;
    double sup = 0.0;
    for (std::size_t i = 0; i < t_samples.size(); ++i) {
      sup = std::max(sup, std::abs(cache.at(t_samples[i] + tau) - base[i]));
      if (sup >= res.sampled_sup) break;
    }
    if (sup < res.sampled_sup) {
      res.sampled_sup = sup;
      res.tau = tau;
    }
  }
  res.ok = res.sampled_sup < eps;
  return res;
}

PLReport pl_propagation_check(const std::function<cd(cd)>& h, double tau,
                              double A, double eta_line, double sigma_interior,
                              const std::vector<double>& t_samples) {
  if (!(eta_line < sigma_interior && sigma_interior < A))
    throw std::invalid_argument(
        "pl_propagation_check: need eta < sigma < A");
  auto sampled_sup = [&](double x) {
    double sup = 0.0;
    for (double t : t_samples)
      sup = std::max(sup,
                     std::abs(h(cd(x, t + tau)) - h(cd(x, t))));
    return sup;
  };
  PLReport rep;
  rep.D_eta = sampled_sup(eta_line);
  rep.D_sigma = sampled_sup(sigma_interior);
  rep.D_A = sampled_sup(A);
  const double alpha = (A - sigma_interior) / (A - eta_line);
  rep.defect =
      rep.D_sigma - std::pow(rep.D_eta, alpha) * std::pow(rep.D_A, 1.0 - alpha);
  return rep;
}

DominationReport domination_witness(const LFunction& F, const LFunction& G,
                                    double sigma_floor,
                                    const std::vector<double>& M_list,
                                    const DominationGrid& grid) {
  if (!(sigma_floor > 0.5))
    throw std::invalid_argument("domination_witness: sigma_floor must exceed 1/2");
  DominationReport rep;
  // zeros of G near the critical line are where |G| dips
  rep.zeros_of_G =
      locate_zeros(G, {0.35, 0.85, std::max(0.5, grid.t_min), grid.t_max});

  // candidate points: a coarse lattice plus fine sweeps past each zero of G
  std::vector<cd> candidates;
  for (int is = 0; is <= grid.n_sigma; ++is) {
    const double sigma = sigma_floor + grid.sigma_span * double(is) / grid.n_sigma;
    for (int it = 0; it <= grid.n_t; ++it) {
      const double t =
          grid.t_min + (grid.t_max - grid.t_min) * double(it) / grid.n_t;
      candidates.emplace_back(sigma, t);
    }
  }
  for (const cd& rho : rep.zeros_of_G) {
    for (int j = -40; j <= 40; ++j)
      candidates.emplace_back(sigma_floor, rho.imag() + j * 5e-5);
  }

  // scan once, remember the best ratio and per-threshold witnesses
  struct Best {
    double ratio = -1.0;
    cd s;
    double Fv = 0.0, Gv = 0.0;
  } best;
  std::vector<DominationWitness> out;
  for (double M : M_list) out.push_back({M, cd(0.0), 0.0, 0.0, false});
  for (const cd& s : candidates) {
    const double Gv = std::abs(G.evaluate(s).value);
    if (Gv == 0.0) continue;
    const double Fv = std::abs(F.evaluate(s).value);
    const double ratio = Fv / Gv;
    if (ratio > best.ratio) best = {ratio, s, Fv, Gv};
    for (auto& w : out) {
      if (!w.found && Fv > w.M * Gv) {
        // verify by fresh evaluation before reporting
        const double Fv2 = std::abs(F.evaluate(s).value);
        const double Gv2 = std::abs(G.evaluate(s).value);
        if (Fv2 > w.M * Gv2) {
          w.found = true;
          w.s = s;
          w.F_abs = Fv2;
          w.G_abs = Gv2;
        }
      }
    }
  }
  rep.per_M = std::move(out);
  return rep;
}

} // namespace lfun
