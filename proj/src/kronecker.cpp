#include "lfun/kronecker.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lfun/kernels.hpp"
#include "lll.hpp"

namespace lfun {

namespace {

using detail::BigFloat;
using detail::BigInt;

const BigFloat& two_pi_hp() {
  static const BigFloat v = 2 * boost::math::constants::pi<BigFloat>();
  return v;
}

void validate(const KroneckerTarget& t) {
  if (t.thetas.empty() || t.thetas.size() != t.betas.size() ||
      t.thetas.size() != t.thetas_hp.size())
    throw std::invalid_argument("KroneckerTarget: length mismatch");
  if (!(t.eta > 0.0 && t.eta < 0.5))
    throw std::invalid_argument("KroneckerTarget: eta must lie in (0, 1/2)");
  for (std::size_t i = 0; i < t.thetas.size(); ++i) {
    if (t.thetas[i] == 0.0)
      throw std::invalid_argument("KroneckerTarget: theta must be nonzero");
    for (std::size_t j = i + 1; j < t.thetas.size(); ++j)
      if (std::fabs(t.thetas[i] - t.thetas[j]) < 1e-15)
        throw std::invalid_argument("KroneckerTarget: thetas must be distinct");
  }
}

// Errors of the exact dyadic t = tnum / 2^lg against the hp thetas, with the
// nearest integers n_l; fills everything downstream of t in `sol`.
void verify_candidate(const KroneckerTarget& tgt, const BigInt& tnum, int lg,
                      KroneckerSolution& sol) {
  const std::size_t k = tgt.thetas.size();
  sol.t_num = tnum;
  sol.t_log2_den = lg;
  sol.t_hp = ldexp(BigFloat(tnum), -lg);
  sol.n.assign(k, 0);
  sol.errors.assign(k, 0.0);
  double mx = 0.0;
  for (std::size_t l = 0; l < k; ++l) {
    const BigFloat x = sol.t_hp * tgt.thetas_hp[l] - tgt.betas[l];
    const BigFloat r = round(x);
    sol.n[l] = static_cast<BigInt>(r);
    const double e = static_cast<double>(abs(x - r));
    sol.errors[l] = e;
    mx = std::max(mx, e);
  }
  sol.max_error = mx;
}

KroneckerSolution solve_grid(const KroneckerTarget& tgt,
                             const SolveBudget& budget) {
  const std::size_t k = tgt.thetas.size();
  double maxth = 0.0;
  for (double th : tgt.thetas) maxth = std::max(maxth, std::fabs(th));
  const int lg = std::max(
      1, static_cast<int>(std::ceil(std::log2(4.0 * maxth / tgt.eta))));
  const double dt = std::ldexp(1.0, -lg);
  const double window = 256.0;

  KroneckerSolution best;
  best.max_error = 1e300;
  for (int v = 0; v < budget.windows; ++v) {
    const double t0 = tgt.T + v * window;
    const std::size_t count = static_cast<std::size_t>(window / dt);
    const auto r = kernels().kronecker_scan(tgt.thetas.data(), tgt.betas.data(),
                                            k, t0 + dt, dt, count, tgt.eta);
    const double t_cand = t0 + dt + double(r.best_index) * dt;
    if (!(t_cand > tgt.T)) continue;
    KroneckerSolution cand;
    verify_candidate(tgt, BigInt(std::llround(std::ldexp(t_cand, 20))), 20,
                     cand);
    if (cand.max_error < best.max_error) best = cand;
  }
  best.found = best.max_error < tgt.eta;
  if (!best.found)
    best.note = "grid scan exhausted t in (T, T + " +
                std::to_string(budget.windows * window) + "]";
  return best;
}

KroneckerSolution solve_lattice(const KroneckerTarget& tgt,
                                const SolveBudget& budget) {
  const std::size_t k = tgt.thetas.size();
  const int dim = static_cast<int>(k) + 1;
  const int lgM = 96;
  const BigInt M = BigInt(1) << lgM;
  const int lgDelta = 7;
  const BigFloat delta = ldexp(BigFloat(1), -lgDelta);

  // column 0 weight: det^(1/dim) ~ per-coordinate covering target eta/4
  const BigFloat w = pow(BigFloat(tgt.eta), dim);
  BigInt W = static_cast<BigInt>(round(w * BigFloat(M)));
  if (W < 1) W = 1;

  detail::Lattice lat;
  lat.basis.assign(dim, std::vector<BigInt>(dim, 0));
  lat.basis[0][0] = W;
  for (std::size_t l = 0; l < k; ++l)
    lat.basis[0][l + 1] =
        static_cast<BigInt>(round(delta * tgt.thetas_hp[l] * BigFloat(M)));
  for (std::size_t l = 0; l < k; ++l) lat.basis[l + 1][l + 1] = M;
  lat.lll_reduce();

  // window centers in the j = t/Delta integer parameter
  const BigFloat j_min = BigFloat(tgt.T) / delta;
  const BigInt j_base = static_cast<BigInt>(ceil(j_min)) + 1;
  const BigInt j_step =
      std::max(BigInt(1),
               static_cast<BigInt>(BigFloat(tgt.eta) / (4 * (BigFloat(W) / BigFloat(M)))));

  std::mt19937_64 rng(budget.seed);
  std::uniform_real_distribution<double> jitter(-tgt.eta / 3.0, tgt.eta / 3.0);

  KroneckerSolution best;
  best.max_error = 1e300;
  std::vector<BigFloat> target(dim);
  for (int v = 0; v < budget.windows; ++v) {
    const BigInt j_c = j_base + v * j_step;
    for (int jit = 0; jit < budget.jitters; ++jit) {
      target[0] = BigFloat(W) * BigFloat(j_c);
      for (std::size_t l = 0; l < k; ++l) {
        const double u = (jit == 0) ? 0.0 : jitter(rng); // pure shot first
        target[l + 1] = (BigFloat(tgt.betas[l]) + u) * BigFloat(M);
      }
      const auto coeff = lat.babai(target);
      // the coefficients refer to the reduced basis; read j off the point:
      // coordinate 0 of every lattice vector is an exact multiple of W
      const auto pt = lat.point(coeff);
      const BigInt j = pt[0] / W;
      if (j <= 0) continue;

      // fix the integer phase vector at t0, then polish t alone:
      // minimize max_l |t theta_l - n_l - beta_l| (convex in t)
      const BigFloat t0 = BigFloat(j) * delta;
      if (!(t0 > BigFloat(tgt.T))) continue;
      std::vector<BigInt> n(k);
      for (std::size_t l = 0; l < k; ++l)
        n[l] = static_cast<BigInt>(
            round(t0 * tgt.thetas_hp[l] - tgt.betas[l]));
      auto maxerr = [&](const BigFloat& t) {
        BigFloat m = 0;
        for (std::size_t l = 0; l < k; ++l) {
          const BigFloat e =
              abs(t * tgt.thetas_hp[l] - BigFloat(n[l]) - tgt.betas[l]);
          if (e > m) m = e;
        }
        return m;
      };
      BigFloat lo = t0 - 2 * delta, hi = t0 + 2 * delta;
      for (int it = 0; it < 90; ++it) {
        const BigFloat m1 = lo + (hi - lo) / 3;
        const BigFloat m2 = hi - (hi - lo) / 3;
        if (maxerr(m1) < maxerr(m2))
          hi = m2;
        else
          lo = m1;
      }
      const BigFloat t_polished = (lo + hi) / 2;
      if (!(t_polished > BigFloat(tgt.T))) continue;
      KroneckerSolution cand;
      verify_candidate(tgt,
                       static_cast<BigInt>(round(ldexp(t_polished, 20))), 20,
                       cand);
      if (cand.t_hp <= BigFloat(tgt.T)) continue;
      if (cand.max_error < best.max_error) best = cand;
    }
  }
  best.found = best.max_error < tgt.eta;
  if (!best.found)
    best.note = best.max_error > 1.0
                    ? "lattice search: no candidate cleared t > T"
                    : "lattice search exhausted its budget; best max_error " +
                          std::to_string(best.max_error);
  return best;
}

} // namespace

KroneckerTarget KroneckerTarget::make(std::vector<double> thetas,
                                      std::vector<double> betas, double T,
                                      double eta) {
  KroneckerTarget t;
  t.thetas = std::move(thetas);
  t.betas = std::move(betas);
  for (double& b : t.betas) b -= std::floor(b);
  t.thetas_hp.reserve(t.thetas.size());
  for (double th : t.thetas) t.thetas_hp.emplace_back(th);
  t.T = T;
  t.eta = eta;
  validate(t);
  return t;
}

KroneckerTarget prime_phase_targets(const std::map<std::uint32_t, cd>& c_values,
                                    double T, double eta) {
  KroneckerTarget t;
  t.T = T;
  t.eta = eta;
  for (const auto& [p, c] : c_values) {
    if (c == cd(0.0)) continue; // unconstrained phase
    const BigFloat th_hp = -log(BigFloat(p)) / two_pi_hp();
    t.primes.push_back(p);
    t.thetas_hp.push_back(th_hp);
    t.thetas.push_back(static_cast<double>(th_hp));
    // |c| = c e^(2 pi i beta): beta = -arg(c)/(2 pi) mod 1
    double b = -std::arg(c) / (2.0 * std::numbers::pi);
    b -= std::floor(b);
    t.betas.push_back(b);
  }
  validate(t);
  return t;
}

KroneckerSolution solve(const KroneckerTarget& target,
                        const SolveBudget& budget) {
  validate(target);
  if (target.thetas.size() <= 3) return solve_grid(target, budget);
  return solve_lattice(target, budget);
}

Series cm_extension(const std::map<std::uint32_t, cd>& c_values,
                    std::size_t N) {
  return completely_multiplicative_series(N, [&](std::uint32_t p) {
    const auto it = c_values.find(p);
    return it == c_values.end() ? cd(0.0) : it->second;
  });
}

AlignmentReport alignment_report(const KroneckerSolution& sol,
                                 const std::map<std::uint32_t, cd>& c_values,
                                 std::size_t N, double sigma, double Y) {
  if (!(Y >= 1.0))
    throw std::invalid_argument("alignment_report: Y must be >= 1");
  const double ly = Y < std::exp(1.0) ? 1.0 : std::log(Y);
  if (double(N) > 3.0 * Y * ly + 1.0)
    throw std::invalid_argument("alignment_report: N exceeds 3 Y log Y");
  const Series c = cm_extension(c_values, N);
  cd A = 0.0;
  double B = 0.0;
  std::size_t terms = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    if (c[n] == cd(0.0)) continue;
    const double amp =
        std::exp(-sigma * std::log(double(n)) - double(n) / Y);
    // phase t log n reduced mod 2 pi in high precision; t can be ~1e20
    const BigFloat ph = sol.t_hp * log(BigFloat(n));
    const BigFloat red = ph - two_pi_hp() * round(ph / two_pi_hp());
    const double phi = static_cast<double>(red);
    A += c[n] * amp * cd(std::cos(phi), -std::sin(phi));
    B += std::abs(c[n]) * amp;
    ++terms;
  }
  AlignmentReport rep;
  rep.A = std::abs(A);
  rep.B = B;
  rep.ratio = B > 0.0 ? rep.A / B : 0.0;
  rep.terms = terms;
  return rep;
}

} // namespace lfun
