#include "lfun/abscissa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lfun/kernels.hpp"

namespace lfun {

namespace {

// Visit the nonzero coefficients a(n), n <= Nmax, in increasing n. Lift
// streams are walked sparsely over k-th powers; explicit lists end where the
// list ends (zeros beyond).
template <typename Fn>
void scan_stream(const CoefficientSource& src, std::uint64_t Nmax, Fn&& fn) {
  if (src.kind() == CoefficientSource::Kind::Lift) {
    const int k = src.lift_order();
    for (std::uint64_t j = 1;; ++j) {
      __int128 m = 1;
      for (int i = 0; i < k; ++i) m *= j;
      if (m > static_cast<__int128>(Nmax)) break;
      const std::uint64_t n = static_cast<std::uint64_t>(m);
      fn(n, src.coeff(n));
    }
    return;
  }
  std::uint64_t top = Nmax;
  if (src.kind() == CoefficientSource::Kind::Explicit)
    top = std::min<std::uint64_t>(Nmax, src.explicit_size());
  const Series pre = src.prefix(static_cast<std::size_t>(top));
  for (std::uint64_t n = 1; n <= top; ++n) fn(n, pre[n]);
}

struct Octaves {
  double s4 = 0.0, s2 = 0.0, s1 = 0.0;
};

AbscissaEstimate finish(AbscissaKind kind, std::uint64_t Nmax, const Octaves& s,
                        bool degenerate) {
  AbscissaEstimate est;
  est.which = kind;
  est.N_used = Nmax;
  if (degenerate) {
    est.degenerate = true;
    est.value = -std::numeric_limits<double>::infinity();
    return est;
  }
  const double l4 = std::log(std::max(s.s4, 1e-300));
  const double l2 = std::log(std::max(s.s2, 1e-300));
  const double l1 = std::log(std::max(s.s1, 1e-300));
  const double ln4 = std::log(double(Nmax / 4));
  const double ln2 = std::log(double(Nmax / 2));
  const double ln1 = std::log(double(Nmax));
  est.quotients = {{Nmax / 4, l4 / ln4}, {Nmax / 2, l2 / ln2}, {Nmax, l1 / ln1}};
  // Richardson elimination of the c/log N term in q(N) = sigma + c/log N
  // reduces to the log-log slope across the top octave.
  const double slope_hi = (l1 - l2) / (ln1 - ln2);
  const double slope_lo = (l2 - l4) / (ln2 - ln4);
  est.value = slope_hi;
  est.tail_slope_diagnostic = slope_hi - slope_lo;
  return est;
}

bool explicit_polynomial(const CoefficientSource& src, std::uint64_t Nmax) {
  return src.kind() == CoefficientSource::Kind::Explicit &&
         src.explicit_size() * 4 <= Nmax;
}

} // namespace

AbscissaEstimate estimate_sigma_a(const CoefficientSource& src,
                                  std::uint64_t Nmax) {
  if (Nmax < 1000)
    throw std::invalid_argument("estimate_sigma_a: Nmax must be >= 1000");
  const std::uint64_t n4 = Nmax / 4, n2 = Nmax / 2;
  Octaves o;
  double run = 0.0;
  bool seen4 = false, seen2 = false, any = false;
  scan_stream(src, Nmax, [&](std::uint64_t n, const cd& a) {
    if (!seen4 && n > n4) {
      o.s4 = run;
      seen4 = true;
    }
    if (!seen2 && n > n2) {
      o.s2 = run;
      seen2 = true;
    }
    run += std::abs(a);
    if (a != cd(0.0)) any = true;
  });
  if (!any)
    throw std::invalid_argument("estimate_sigma_a: all partial sums vanish");
  if (!seen4) o.s4 = run;
  if (!seen2) o.s2 = run;
  o.s1 = run;
  return finish(AbscissaKind::Absolute, Nmax, o, explicit_polynomial(src, Nmax));
}

AbscissaEstimate estimate_sigma_c(const CoefficientSource& src,
                                  std::uint64_t Nmax) {
  if (Nmax < 1000)
    throw std::invalid_argument("estimate_sigma_c: Nmax must be >= 1000");
  const std::uint64_t n4 = Nmax / 4, n2 = Nmax / 2;
  Octaves o;
  cd run = 0.0;
  double peak = 0.0;
  bool seen4 = false, seen2 = false, any = false;
  scan_stream(src, Nmax, [&](std::uint64_t n, const cd& a) {
    if (!seen4 && n > n4) {
      o.s4 = peak;
      seen4 = true;
    }
    if (!seen2 && n > n2) {
      o.s2 = peak;
      seen2 = true;
    }
    run += a;
    peak = std::max(peak, std::abs(run));
    if (a != cd(0.0)) any = true;
  });
  if (!any)
    throw std::invalid_argument("estimate_sigma_c: all partial sums vanish");
  if (!seen4) o.s4 = peak;
  if (!seen2) o.s2 = peak;
  o.s1 = peak;
  auto est = finish(AbscissaKind::Convergence, Nmax, o,
                    explicit_polynomial(src, Nmax));
  // bounded partial sums: the limsup formula only certifies sigma_c <= 0
  if (!est.degenerate && est.value < 0.005) {
    est.value = std::max(est.value, 0.0);
    est.floored_at_zero = true;
  }
  return est;
}

std::size_t smoothed_cutoff(double Y) {
  const double ly = Y < std::exp(1.0) ? 1.0 : std::log(Y);
  return static_cast<std::size_t>(std::ceil(3.0 * Y * ly));
}

cd smoothed_sum(const Series& c, double sigma, double t, double Y) {
  if (!(Y >= 1.0)) throw std::invalid_argument("smoothed_sum: Y must be >= 1");
  const std::size_t cut = std::min(smoothed_cutoff(Y), c.size());
  // t-independent amplitude and a unit phase per term; the phase-sum kernel
  // does the accumulation
  std::vector<double> re(cut), im(cut), cs(cut), sn(cut);
  for (std::size_t n = 1; n <= cut; ++n) {
    const double ln = std::log(double(n));
    const double amp = std::exp(-sigma * ln - double(n) / Y);
    const cd v = c[n] * amp;
    re[n - 1] = v.real();
    im[n - 1] = v.imag();
    const double phase = -t * ln;
    cs[n - 1] = std::cos(phase);
    sn[n - 1] = std::sin(phase);
  }
  double sr = 0.0, si = 0.0;
  kernels().phase_sum(re.data(), im.data(), cs.data(), sn.data(), cut, &sr, &si);
  return {sr, si};
}

BoundednessReport boundedness_probe(const Series& c, double sigma,
                                    const std::vector<double>& t_samples,
                                    const std::vector<double>& Y_list) {
  if (t_samples.empty() || Y_list.empty())
    throw std::invalid_argument("boundedness_probe: empty sample set");
  BoundednessReport rep;
  for (double Y : Y_list) {
    const std::size_t cut = std::min(smoothed_cutoff(Y), c.size());
    std::vector<double> re(cut), im(cut), logn(cut);
    for (std::size_t n = 1; n <= cut; ++n) {
      const double ln = std::log(double(n));
      const double amp = std::exp(-sigma * ln - double(n) / Y);
      const cd v = c[n] * amp;
      re[n - 1] = v.real();
      im[n - 1] = v.imag();
      logn[n - 1] = ln;
    }
    std::vector<double> cs(cut), sn(cut);
    double sup_y = 0.0;
    for (double t : t_samples) {
      for (std::size_t i = 0; i < cut; ++i) {
        const double phase = -t * logn[i];
        cs[i] = std::cos(phase);
        sn[i] = std::sin(phase);
      }
      double sr = 0.0, si = 0.0;
      kernels().phase_sum(re.data(), im.data(), cs.data(), sn.data(), cut, &sr,
                          &si);
      const double v = std::hypot(sr, si);
      sup_y = std::max(sup_y, v);
      if (v > rep.sup) {
        rep.sup = v;
        rep.arg_t = t;
        rep.arg_Y = Y;
      }
    }
    rep.per_Y_sup.emplace_back(Y, sup_y);
  }
  return rep;
}

Interval bound_oracle_entire(double d) {
  if (!(d >= 1.0))
    throw std::invalid_argument("bound_oracle_entire: degree must be >= 1");
  return {0.5 - 0.5 / d, 1.0 - 2.0 / (d + 1.0)};
}

Interval bound_oracle_lift(double d, int k) {
  if (!(d >= 1.0) || k < 1)
    throw std::invalid_argument("bound_oracle_lift: need d >= 1 and k >= 1");
  return {0.5 + 0.5 / (k * d), 0.5 + 0.5 / k};
}

} // namespace lfun
