#include "lfun/euler_split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "lfun/kernels.hpp"

namespace lfun {

bool ExceptionalPrimeSet::contains(std::uint32_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

// a(p^0..p^M), through the rational local factor when one is available.
static std::vector<cd> local_powers(const CoefficientSource& src,
                                    std::uint32_t p, int M) {
  if (auto lf = src.euler_local(p)) return lf->expand(M);
  std::vector<cd> out(static_cast<std::size_t>(M) + 1);
  __int128 pm = 1;
  for (int m = 0; m <= M; ++m) {
    if (pm > static_cast<__int128>(1) << 62)
      throw std::out_of_range("local_powers: p^m exceeds direct-query range");
    out[m] = src.coeff(static_cast<std::uint64_t>(pm));
    pm *= p;
  }
  return out;
}

ExceptionalPrimeSet build_exceptional_set(const CoefficientSource& src,
                                          double eps, double c0,
                                          std::uint32_t sieve_bound) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("exceptional set: eps must lie in (0,1)");
  if (!(c0 >= 3.0))
    throw std::invalid_argument("exceptional set: c0 must be >= 3");
  const double cutoff = std::pow(c0, 2.0 / eps);
  if (cutoff > static_cast<double>(sieve_bound))
    throw std::invalid_argument(
        "exceptional set: sieve bound too small to certify the scan "
        "(need >= c0^(2/eps))");
  ExceptionalPrimeSet s;
  s.eps = eps;
  s.c0 = c0;
  s.sieve_bound = sieve_bound;
  for (std::uint32_t p : primes_up_to(sieve_bound)) {
    const bool small = static_cast<double>(p) < cutoff;
    const bool big_coeff =
        !small && std::abs(src.coeff(p)) > std::pow(double(p), eps / 2.0);
    if (small || big_coeff) s.primes.push_back(p);
  }
  return s;
}

cd b_coefficient(const CoefficientSource& src, std::uint32_t p, int m) {
  if (m < 0) throw std::invalid_argument("b_coefficient: m must be >= 0");
  if (!src.multiplicative())
    throw std::invalid_argument("b_coefficient: source must be multiplicative");
  const auto a = local_powers(src, p, m);
  cd b = 0.0;
  cd ap_l = 1.0; // a(p)^l
  for (int l = 0; l <= m; ++l) {
    b += (l % 2 == 0 ? 1.0 : -1.0) * ap_l * a[m - l];
    ap_l *= a[1];
  }
  return b;
}

EulerSplit split_theorem1(const CoefficientSource& src, double eps, double c0,
                          std::size_t N) {
  if (!src.multiplicative())
    throw std::invalid_argument("split_theorem1: source must be multiplicative");
  if (std::abs(src.coeff(1) - cd(1.0)) > 1e-12)
    throw std::invalid_argument("split_theorem1: a(1) must equal 1");
  const double cutoff = std::pow(c0, 2.0 / eps);
  const std::uint32_t bound = static_cast<std::uint32_t>(
      std::max<double>(static_cast<double>(N), std::ceil(cutoff) + 1));
  EulerSplit out;
  out.variant = SplitVariant::Theorem1;
  out.exceptional = build_exceptional_set(src, eps, c0, bound);
  const auto& S = out.exceptional;

  // P1 has the polynomial local factors (1 + a(p) x): c(n) vanishes off the
  // squarefree S-free integers and equals prod_{p|n} a(p) on them.
  out.part1 = multiplicative_series(N, [&](std::uint32_t p, int m) {
    return (S.contains(p) || m >= 2) ? cd(0.0) : src.coeff(p);
  });

  std::map<std::uint32_t, std::vector<cd>> cache;
  auto powers = [&](std::uint32_t p, int m) -> cd {
    auto& v = cache[p];
    if (static_cast<int>(v.size()) <= m) v = local_powers(src, p, m);
    return v[m];
  };

  out.part2 = multiplicative_series(N, [&](std::uint32_t p, int m) {
    return S.contains(p) ? powers(p, m) : cd(0.0);
  });
  out.part3 = multiplicative_series(N, [&](std::uint32_t p, int m) {
    if (S.contains(p) || m == 1) return cd(0.0);
    return b_coefficient(src, p, m);
  });
  return out;
}

BBoundReport b_bound_audit(const CoefficientSource& src, double eps, double c0,
                           std::uint32_t p_lo, std::uint32_t p_hi, int m_max) {
  const auto S = build_exceptional_set(src, eps, c0, std::max(p_hi, 64u));
  BBoundReport rep;
  for (std::uint32_t p : primes_up_to(p_hi)) {
    if (p < p_lo) continue;
    if (S.contains(p))
      throw std::invalid_argument("b_bound_audit: prime " + std::to_string(p) +
                                  " lies in S_eps");
    const auto a = local_powers(src, p, m_max);
    cd ap_l = 1.0;
    std::vector<cd> pow_a(static_cast<std::size_t>(m_max) + 1);
    for (int l = 0; l <= m_max; ++l) {
      pow_a[l] = ap_l;
      ap_l *= a[1];
    }
    for (int m = 2; m <= m_max; ++m) {
      cd b = 0.0;
      for (int l = 0; l <= m; ++l)
        b += (l % 2 == 0 ? 1.0 : -1.0) * pow_a[l] * a[m - l];
      const double ratio =
          std::abs(b) / std::pow(static_cast<double>(p), m * eps);
      ++rep.checked;
      if (ratio > rep.worst_ratio) {
        rep.worst_ratio = ratio;
        rep.worst_p = p;
        rep.worst_m = m;
      }
      if (ratio > 1.0) rep.pass = false;
    }
  }
  return rep;
}

HStream ratio_coefficients(const CoefficientSource& F,
                           const CoefficientSource& G, std::size_t N) {
  if (std::abs(F.coeff(1) - cd(1.0)) > 1e-12 ||
      std::abs(G.coeff(1) - cd(1.0)) > 1e-12)
    throw std::invalid_argument("ratio_coefficients: both a(1) must equal 1");
  HStream h;
  h.values = dirichlet_convolve(F.prefix(N), dirichlet_inverse(G.prefix(N)));
  CoefficientSource Fc = F, Gc = G; // captured by value, outlives the callers
  h.local = [Fc, Gc](std::uint32_t p) -> std::optional<LocalFactor> {
    auto lf = Fc.euler_local(p);
    auto lg = Gc.euler_local(p);
    if (!lf || !lg) return std::nullopt;
    auto mul = [](const std::vector<cd>& a, const std::vector<cd>& b) {
      std::vector<cd> out(a.size() + b.size() - 1, cd(0.0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      return out;
    };
    // H_p = F_p / G_p = (F.num G.den) / (F.den G.num)
    return LocalFactor{mul(lf->num, lg->den), mul(lf->den, lg->num)};
  };
  return h;
}

// Durand-Kerner roots of a complex polynomial c[0] + c[1] x + ... (degree >= 1
// after trailing-zero strip). Good enough for the degree <= 8 factors here.
static std::vector<cd> poly_roots(std::vector<cd> c) {
  while (c.size() > 1 && std::abs(c.back()) < 1e-300) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<cd> roots;
  if (n < 1) return roots;
  for (auto& x : c) x /= c.back();
  roots.resize(n);
  for (int i = 0; i < n; ++i)
    roots[i] = std::pow(cd(0.4, 0.9), i + 1); // standard scattered start
  for (int it = 0; it < 400; ++it) {
    double move = 0.0;
    for (int i = 0; i < n; ++i) {
      cd num = 0.0;
      for (int j = n; j >= 0; --j) num = num * roots[i] + c[j];
      cd den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= roots[i] - roots[j];
      const cd delta = num / den;
      roots[i] -= delta;
      move = std::max(move, std::abs(delta));
    }
    if (move < 1e-13) break;
  }
  return roots;
}

namespace {

struct LocalClassification {
  bool in_S = true;
  bool certified = true; // false: placed in S only for lack of a certificate
  std::vector<cd> k_coeffs; // k(p^0..depth) when p not in S
  double k_sum_half = 0.0;
  bool k_tail_certified = false;
};

// Decide S-membership for p > cutoff and, when p is outside S, produce the
// Q3 coefficients k(p^m) and the sigma=1/2 bound sum.
LocalClassification classify_prime(const HStream& h, std::uint32_t p,
                                   std::size_t N, int depth) {
  LocalClassification res;
  std::vector<cd> hp; // h(p^0..)
  double gamma_max = 0.0;
  bool have_local = false;
  if (h.local) {
    if (auto lf = h.local(p)) {
      hp = lf->expand(depth);
      have_local = true;
      for (const cd& r : poly_roots(lf->den))
        gamma_max = std::max(gamma_max, 1.0 / std::max(std::abs(r), 1e-300));
    }
  }
  if (!have_local) {
    // only values up to N are known; that certifies nothing beyond log_p N
    int m_known = 0;
    __int128 pm = p;
    while (pm <= static_cast<__int128>(N)) {
      ++m_known;
      pm *= p;
    }
    hp.assign(static_cast<std::size_t>(m_known) + 1, cd(0.0));
    hp[0] = 1.0;
    __int128 q = p;
    for (int m = 1; m <= m_known; ++m) {
      hp[m] = h.values[static_cast<std::size_t>(q)];
      q *= p;
    }
    for (int m = 1; m <= m_known; ++m)
      if (std::abs(hp[m]) > std::pow(double(p), m / 10.0)) return res; // in S
    res.certified = false; // cannot rule out larger m
    return res;
  }

  const double p10 = std::pow(static_cast<double>(p), 0.1);
  for (int m = 1; m <= depth; ++m)
    if (std::abs(hp[m]) > std::pow(static_cast<double>(p), m / 10.0))
      return res; // genuinely in S
  // Tail certificate: growth rate of |h(p^m)|^(1/m) is gamma_max; demand a
  // clear margin plus an observed decayed prefix before ruling p out of S.
  const double last_ratio =
      std::abs(hp[depth]) / std::pow(static_cast<double>(p), depth / 10.0);
  if (!(gamma_max <= 0.999 * p10) || !(last_ratio < 0.1)) {
    res.certified = false; // conservative: goes to S
    return res;
  }

  res.in_S = false;
  // k(p^m): H_p(x) = (1 + h(p) x + h(p^2) x^2) K_p(x)
  const int kd = depth + 20;
  std::vector<cd> hp2 = hp;
  hp2.resize(static_cast<std::size_t>(kd) + 1, cd(0.0));
  if (h.local) {
    if (auto lf = h.local(p)) hp2 = lf->expand(kd);
  }
  std::vector<cd> k(static_cast<std::size_t>(kd) + 1, cd(0.0));
  const cd h1 = hp2[1], h2 = hp2[2];
  for (int m = 0; m <= kd; ++m) {
    cd v = hp2[m];
    if (m >= 1) v -= h1 * k[m - 1];
    if (m >= 2) v -= h2 * k[m - 2];
    k[m] = v;
  }
  res.k_coeffs = k;
  double sum = 0.0;
  const double sq = std::sqrt(static_cast<double>(p));
  double pw = sq * sq * sq;
  for (int m = 3; m <= kd; ++m) {
    sum += std::abs(k[m]) / pw;
    pw *= sq;
  }
  // geometric tail: terms decay at least like gamma_max / sqrt(p) eventually
  const double r = gamma_max / sq;
  const double last = std::abs(k[kd]) / (pw / sq);
  if (r < 0.9) {
    sum += last * r / (1.0 - r);
    res.k_tail_certified = true;
  }
  res.k_sum_half = sum;
  return res;
}

} // namespace

EulerSplit split_theorem3(const HStream& h, std::size_t N,
                          std::uint32_t cutoff, int depth_limit) {
  const std::size_t n = std::min(N, h.values.size());
  if (n < 1) throw std::invalid_argument("split_theorem3: empty stream");
  if (std::abs(h.values[1] - cd(1.0)) > 1e-12)
    throw std::invalid_argument("split_theorem3: h(1) must equal 1");

  EulerSplit out;
  out.variant = SplitVariant::Theorem3;
  out.exceptional.eps = 0.1; // exponent of the membership test
  out.exceptional.c0 = 0.0;
  out.exceptional.sieve_bound = static_cast<std::uint32_t>(n);

  std::map<std::uint32_t, LocalClassification> cls;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(n))) {
    if (p <= cutoff) {
      out.exceptional.primes.push_back(p);
      continue;
    }
    auto c = classify_prime(h, p, n, depth_limit);
    if (c.in_S) {
      out.exceptional.primes.push_back(p);
      if (!c.certified) out.undecided.push_back(p);
    } else {
      out.k_bounds.push_back({p, c.k_sum_half, c.k_tail_certified});
      cls.emplace(p, std::move(c));
    }
  }
  const auto& S = out.exceptional;

  auto h_at = [&](std::uint32_t p, int m) -> cd {
    __int128 pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    if (pm <= static_cast<__int128>(n))
      return h.values[static_cast<std::size_t>(pm)];
    auto it = cls.find(p);
    if (it != cls.end() && m < static_cast<int>(it->second.k_coeffs.size())) {
      if (auto lf = h.local(p)) return lf->expand(m)[m];
    }
    throw std::out_of_range("split_theorem3: h(p^m) beyond known range");
  };

  out.part1 = multiplicative_series(n, [&](std::uint32_t p, int m) {
    if (S.contains(p) || m > 2) return cd(0.0);
    return h_at(p, m);
  });
  out.part2 = multiplicative_series(n, [&](std::uint32_t p, int m) {
    return S.contains(p) ? h_at(p, m) : cd(0.0);
  });
  out.part3 = multiplicative_series(n, [&](std::uint32_t p, int m) {
    if (S.contains(p) || m < 3) return cd(0.0);
    const auto it = cls.find(p);
    if (it == cls.end() || m >= static_cast<int>(it->second.k_coeffs.size()))
      throw std::out_of_range("split_theorem3: k(p^m) beyond computed depth");
    return it->second.k_coeffs[static_cast<std::size_t>(m)];
  });
  return out;
}

LemmaThetaResult lemma_theta(cd a, cd b, std::size_t grid) {
  if (grid < 64) throw std::invalid_argument("lemma_theta: grid must be >= 64");

  struct Tables {
    std::vector<double> c1, s1, c2, s2;
  };
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const Tables>> cache;
  std::shared_ptr<const Tables> tab;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(grid);
    if (it == cache.end()) {
      auto t = std::make_shared<Tables>();
      t->c1.resize(grid);
      t->s1.resize(grid);
      t->c2.resize(grid);
      t->s2.resize(grid);
      for (std::size_t j = 0; j < grid; ++j) {
        const double phi = 2.0 * std::numbers::pi * double(j) / double(grid);
        t->c1[j] = std::cos(phi);
        t->s1[j] = std::sin(phi);
      }
      for (std::size_t j = 0; j < grid; ++j) {
        t->c2[j] = t->c1[(2 * j) % grid];
        t->s2[j] = t->s1[(2 * j) % grid];
      }
      it = cache.emplace(grid, std::move(t)).first;
    }
    tab = it->second;
  }

  const auto r = kernels().unit_circle_scan(tab->c1.data(), tab->s1.data(),
                                            tab->c2.data(), tab->s2.data(),
                                            grid, a.real(), a.imag(), b.real(),
                                            b.imag());
  auto eval = [&](double phi) {
    const cd th(std::cos(phi), std::sin(phi));
    return std::abs(1.0 + th * a + th * th * b);
  };
  const double step = 2.0 * std::numbers::pi / double(grid);
  double lo = (double(r.best_index) - 1.0) * step;
  double hi = (double(r.best_index) + 1.0) * step;
  // golden-section polish on the bracketing interval
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = eval(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = eval(x1);
    }
  }
  const double phi_best = (f1 > f2) ? x1 : x2;
  const double refined = std::max(f1, f2);
  const double grid_val = std::sqrt(r.best_value_sq);

  LemmaThetaResult res;
  if (refined >= grid_val) {
    res.theta = cd(std::cos(phi_best), std::sin(phi_best));
    res.value = refined;
  } else {
    res.theta = cd(tab->c1[r.best_index], tab->s1[r.best_index]);
    res.value = grid_val;
  }
  res.bound = 1.0 + (std::abs(a) + std::abs(b)) / 24.0;
  res.tol = 10.0 * (std::abs(a) + 4.0 * std::abs(b)) / double(grid);
  return res;
}

} // namespace lfun
