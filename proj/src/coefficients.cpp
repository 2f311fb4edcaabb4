#include "lfun/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lfun {

// ---------------------------------------------------------------------------
// Dirichlet characters
// ---------------------------------------------------------------------------

cd DirichletCharacter::operator()(std::int64_t n) const {
  std::int64_t r = n % modulus;
  if (r < 0) r += modulus;
  return values[static_cast<std::size_t>(r)];
}

static DirichletCharacter make_char(int q, std::vector<cd> vals, bool primitive,
                                    bool odd) {
  DirichletCharacter c;
  c.modulus = q;
  c.values = std::move(vals);
  c.primitive = primitive;
  c.odd = odd;
  return c;
}

DirichletCharacter DirichletCharacter::builtin(const std::string& name) {
  const cd i(0.0, 1.0);
  if (name == "chi3") return make_char(3, {0, 1, -1}, true, true);
  if (name == "chi4") return make_char(4, {0, 1, 0, -1}, true, true);
  if (name == "chi5q") return make_char(5, {0, 1, -1, -1, 1}, true, false);
  if (name == "chi5a") return make_char(5, {0, 1, i, -i, -1}, true, true);
  if (name == "chi5b") return make_char(5, {0, 1, -i, i, -1}, true, true);
  throw std::invalid_argument("unknown built-in character: " + name);
}

const std::vector<std::string>& DirichletCharacter::builtin_names() {
  static const std::vector<std::string> names = {"chi3", "chi4", "chi5q",
                                                 "chi5a", "chi5b"};
  return names;
}

DirichletCharacter DirichletCharacter::from_values(int q, std::vector<cd> values) {
  if (q < 1) throw std::invalid_argument("character: modulus must be positive");
  if (values.size() != static_cast<std::size_t>(q))
    throw std::invalid_argument("character: need exactly q values");
  const double tol = 1e-12;
  auto unit = [&](int a) { return std::gcd(a, q) == 1; };
  if (std::abs(values[1 % q] - cd(1.0)) > tol)
    throw std::invalid_argument("character: chi(1) must be 1");
  for (int a = 0; a < q; ++a) {
    if (unit(a)) {
      if (std::fabs(std::abs(values[a]) - 1.0) > tol)
        throw std::invalid_argument("character: values on units must be roots of unity");
    } else if (std::abs(values[a]) > tol) {
      throw std::invalid_argument("character: values off units must vanish");
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (!unit(a) || !unit(b)) continue;
      if (std::abs(values[(a * b) % q] - values[a] * values[b]) > 1e-9)
        throw std::invalid_argument("character: multiplicativity fails on units");
    }
  }
  DirichletCharacter c;
  c.modulus = q;
  c.values = std::move(values);
  for (int a = 0; a < q; ++a)
    if (!unit(a)) c.values[a] = 0.0;
  c.odd = q > 2 && std::abs(c.values[q - 1] - cd(-1.0)) < 1e-9;
  // Primitive iff chi is nontrivial on the kernel of reduction mod every
  // proper divisor of q.
  c.primitive = true;
  for (int d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool induced = true;
    for (int a = 0; a < q; ++a) {
      if (!unit(a) || a % d != 1 % d) continue;
      if (std::abs(c.values[a] - cd(1.0)) > 1e-9) {
        induced = false;
        break;
      }
    }
    if (induced) {
      c.primitive = false;
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Ramanujan tau via eta^24
// ---------------------------------------------------------------------------

namespace {

// Coefficients of prod_{n>=1} (1 - q^n)^24 up to degree deg, exact.
std::vector<__int128> eta24_coeffs(std::size_t deg) {
  // Euler's pentagonal series for prod (1 - q^n): exponents j(3j-1)/2, sign (-1)^j.
  std::vector<std::pair<std::size_t, int>> penta;
  for (long long j = 1;; ++j) {
    const long long g1 = j * (3 * j - 1) / 2;
    const long long g2 = j * (3 * j + 1) / 2;
    if (static_cast<std::size_t>(g1) > deg && static_cast<std::size_t>(g2) > deg)
      break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    if (static_cast<std::size_t>(g1) <= deg)
      penta.emplace_back(static_cast<std::size_t>(g1), sign);
    if (static_cast<std::size_t>(g2) <= deg)
      penta.emplace_back(static_cast<std::size_t>(g2), sign);
  }
  std::vector<__int128> cur(deg + 1, 0), next(deg + 1, 0);
  cur[0] = 1;
  for (int round = 0; round < 24; ++round) {
    std::copy(cur.begin(), cur.end(), next.begin());
    for (const auto& [g, sign] : penta) {
      if (sign > 0) {
        for (std::size_t i = g; i <= deg; ++i) next[i] += cur[i - g];
      } else {
        for (std::size_t i = g; i <= deg; ++i) next[i] -= cur[i - g];
      }
    }
    cur.swap(next);
  }
  return cur;
}

struct TauRegistry {
  std::mutex mu;
  std::vector<std::shared_ptr<std::vector<__int128>>> tables; // grow-only
};

TauRegistry& tau_registry() {
  static TauRegistry* r = new TauRegistry;
  return *r;
}

} // namespace

const std::vector<__int128>& tau_table(std::size_t N) {
  auto& reg = tau_registry();
  std::scoped_lock lock(reg.mu);
  for (const auto& t : reg.tables)
    if (t->size() > N) return *t;
  std::size_t cap = 10000;
  while (cap < N) cap *= 2;
  const auto p24 = eta24_coeffs(cap > 0 ? cap - 1 : 0);
  auto table = std::make_shared<std::vector<__int128>>(cap + 1, 0);
  // Delta = q * prod (1-q^n)^24, so tau(n) is the q^(n-1) coefficient.
  for (std::size_t n = 1; n <= cap; ++n) (*table)[n] = p24[n - 1];
  reg.tables.push_back(table);
  return *table;
}

std::string to_string_i128(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// LocalFactor
// ---------------------------------------------------------------------------

std::vector<cd> LocalFactor::expand(int M) const {
  if (den.empty() || den[0] == cd(0.0))
    throw std::invalid_argument("LocalFactor: den(0) must be nonzero");
  std::vector<cd> a(static_cast<std::size_t>(M) + 1, cd(0.0));
  const cd inv0 = 1.0 / den[0];
  for (int m = 0; m <= M; ++m) {
    cd v = m < static_cast<int>(num.size()) ? num[m] : cd(0.0);
    for (int j = 1; j <= m && j < static_cast<int>(den.size()); ++j)
      v -= den[j] * a[m - j];
    a[m] = v * inv0;
  }
  return a;
}

// ---------------------------------------------------------------------------
// CoefficientSource
// ---------------------------------------------------------------------------

void CoefficientSource::assign_from(const CoefficientSource& o) {
  kind_ = o.kind_;
  base_ = o.base_;
  k_ = o.k_;
  chi_ = o.chi_;
  explicit_ = o.explicit_;
  explicit_multiplicative_ = o.explicit_multiplicative_;
  eigenform_cap_ = o.eigenform_cap_;
  std::scoped_lock lock(o.cache_mu_);
  cache_ = o.cache_;
}

CoefficientSource::CoefficientSource(const CoefficientSource& o) { assign_from(o); }
CoefficientSource::CoefficientSource(CoefficientSource&& o) noexcept { assign_from(o); }
CoefficientSource& CoefficientSource::operator=(const CoefficientSource& o) {
  if (this != &o) assign_from(o);
  return *this;
}
CoefficientSource& CoefficientSource::operator=(CoefficientSource&& o) noexcept {
  if (this != &o) assign_from(o);
  return *this;
}

CoefficientSource CoefficientSource::zeta() {
  CoefficientSource s;
  s.kind_ = Kind::Zeta;
  return s;
}

CoefficientSource CoefficientSource::dirichlet(DirichletCharacter chi) {
  CoefficientSource s;
  s.kind_ = Kind::DirichletL;
  s.chi_ = std::move(chi);
  return s;
}

CoefficientSource CoefficientSource::eigenform(std::size_t max_n) {
  if (max_n < 2) throw std::invalid_argument("eigenform: max_n too small");
  CoefficientSource s;
  s.kind_ = Kind::Eigenform;
  s.eigenform_cap_ = max_n;
  tau_table(max_n); // materialize now; queries stay cheap afterwards
  return s;
}

CoefficientSource CoefficientSource::explicit_list(std::vector<cd> values,
                                                   bool multiplicative) {
  CoefficientSource s;
  s.kind_ = Kind::Explicit;
  s.explicit_ = std::move(values);
  s.explicit_multiplicative_ = multiplicative;
  return s;
}

CoefficientSource CoefficientSource::lift(CoefficientSource base, int k) {
  if (k < 1) throw std::invalid_argument("lift: k must be >= 1");
  if (k == 1) return base;
  CoefficientSource s;
  s.kind_ = Kind::Lift;
  s.base_ = std::make_shared<CoefficientSource>(std::move(base));
  s.k_ = k;
  return s;
}

std::string CoefficientSource::describe() const {
  switch (kind_) {
    case Kind::Zeta: return "zeta";
    case Kind::DirichletL: return "dirichlet(mod " + std::to_string(chi_->modulus) + ")";
    case Kind::Eigenform: return "eigenform(weight 12)";
    case Kind::Explicit: return "explicit[" + std::to_string(explicit_.size()) + "]";
    case Kind::Lift: return "lift(" + base_->describe() + ", k=" + std::to_string(k_) + ")";
  }
  return "?";
}

bool CoefficientSource::multiplicative() const {
  switch (kind_) {
    case Kind::Zeta:
    case Kind::DirichletL:
    case Kind::Eigenform: return true;
    case Kind::Explicit: return explicit_multiplicative_;
    case Kind::Lift: return base_->multiplicative();
  }
  return false;
}

const DirichletCharacter* CoefficientSource::character() const {
  return chi_ ? &*chi_ : nullptr;
}

std::size_t CoefficientSource::explicit_size() const { return explicit_.size(); }

cd CoefficientSource::coeff_uncached(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("coeff: n must be >= 1");
  switch (kind_) {
    case Kind::Zeta: return 1.0;
    case Kind::DirichletL: return (*chi_)(static_cast<std::int64_t>(n % chi_->modulus));
    case Kind::Eigenform: {
      if (n > eigenform_cap_)
        throw std::out_of_range("eigenform: n exceeds the tau expansion cap " +
                                std::to_string(eigenform_cap_));
      const auto& tau = tau_table(eigenform_cap_);
      return static_cast<double>(tau[n]) / std::pow(static_cast<double>(n), 5.5);
    }
    case Kind::Explicit: {
      if (n > explicit_.size())
        throw std::out_of_range("explicit source: n exceeds list length " +
                                std::to_string(explicit_.size()));
      return explicit_[n - 1];
    }
    case Kind::Lift: return lift_coeff(*base_, k_, n);
  }
  return 0.0;
}

cd CoefficientSource::coeff(std::uint64_t n) const { return coeff_uncached(n); }

Series CoefficientSource::prefix(std::size_t N) const {
  {
    std::scoped_lock lock(cache_mu_);
    if (cache_ && cache_->size() >= N) {
      if (cache_->size() == N) return *cache_;
      Series out(N);
      for (std::size_t n = 1; n <= N; ++n) out[n] = (*cache_)[n];
      return out;
    }
  }
  Series s(N);
  if (kind_ == Kind::Lift) {
    // sparse: only perfect k-th powers carry mass
    for (std::uint64_t j = 1;; ++j) {
      __int128 m = 1;
      for (int i = 0; i < k_; ++i) m *= j;
      if (m > static_cast<__int128>(N)) break;
      s[static_cast<std::size_t>(m)] = coeff_uncached(static_cast<std::uint64_t>(m));
    }
  } else {
    for (std::size_t n = 1; n <= N; ++n) s[n] = coeff_uncached(n);
  }
  {
    std::scoped_lock lock(cache_mu_);
    if (!cache_ || cache_->size() < N) cache_ = std::make_shared<const Series>(s);
  }
  return s;
}

std::optional<LocalFactor> CoefficientSource::euler_local(std::uint32_t p) const {
  switch (kind_) {
    case Kind::Zeta: return LocalFactor{{cd(1.0)}, {cd(1.0), cd(-1.0)}};
    case Kind::DirichletL:
      return LocalFactor{{cd(1.0)}, {cd(1.0), -(*chi_)(p)}};
    case Kind::Eigenform: {
      const cd ap = coeff_uncached(p);
      // unitarized local factor 1 / (1 - a(p) x + x^2)
      return LocalFactor{{cd(1.0)}, {cd(1.0), -ap, cd(1.0)}};
    }
    case Kind::Explicit: return std::nullopt;
    case Kind::Lift: {
      auto base = base_->euler_local(p);
      if (!base) return std::nullopt;
      // After x -> p^((k-1)/2) x^k the local series of the lift is
      // num(c x^k) / den(c x^k) with c = p^((k-1)/2).
      const double c = std::pow(static_cast<double>(p), (k_ - 1) / 2.0);
      auto stretch = [&](const std::vector<cd>& poly) {
        std::vector<cd> out((poly.size() - 1) * k_ + 1, cd(0.0));
        double cj = 1.0;
        for (std::size_t j = 0; j < poly.size(); ++j) {
          out[j * k_] = poly[j] * cj;
          cj *= c;
        }
        return out;
      };
      return LocalFactor{stretch(base->num), stretch(base->den)};
    }
  }
  return std::nullopt;
}

cd lift_coeff(const CoefficientSource& base, int k, std::uint64_t m) {
  if (k < 1) throw std::invalid_argument("lift_coeff: k must be >= 1");
  if (m == 0) throw std::invalid_argument("lift_coeff: m must be >= 1");
  if (k == 1) return base.coeff(m);
  const std::uint64_t r =
      static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(m), 1.0 / k)));
  for (std::uint64_t n = (r > 1 ? r - 1 : 1); n <= r + 1; ++n) {
    __int128 pw = 1;
    for (int i = 0; i < k; ++i) pw *= n;
    if (pw == static_cast<__int128>(m))
      return base.coeff(n) * std::pow(static_cast<double>(n), (k - 1) / 2.0);
  }
  return 0.0;
}

RamanujanReport ramanujan_audit(const CoefficientSource& src, std::uint64_t N,
                                double eps) {
  if (N < 2) throw std::invalid_argument("ramanujan_audit: N must be >= 2");
  if (!(eps > 0.0)) throw std::invalid_argument("ramanujan_audit: eps must be positive");
  RamanujanReport rep;
  rep.power_exponent = src.kind() == CoefficientSource::Kind::Lift
                           ? src.lift_order()
                           : 2;
  auto consider = [&](std::uint64_t n, const cd& a) {
    const double r = std::abs(a) / std::pow(static_cast<double>(n), eps);
    if (r > rep.max_ratio) {
      rep.max_ratio = r;
      rep.argmax = n;
    }
  };
  if (src.kind() == CoefficientSource::Kind::Lift) {
    for (std::uint64_t j = 1;; ++j) {
      __int128 m = 1;
      for (int i = 0; i < src.lift_order(); ++i) m *= j;
      if (m > static_cast<__int128>(N)) break;
      consider(static_cast<std::uint64_t>(m), src.coeff(static_cast<std::uint64_t>(m)));
    }
  } else {
    const Series pre = src.prefix(static_cast<std::size_t>(N));
    for (std::uint64_t n = 1; n <= N; ++n) consider(n, pre[n]);
  }
  // growth along perfect powers: nonzero |a(j^K)| must be nondecreasing
  const int K = rep.power_exponent;
  double prev = -1.0;
  bool ok = true;
  bool seen = false;
  for (std::uint64_t j = 1;; ++j) {
    __int128 m = 1;
    for (int i = 0; i < K; ++i) m *= j;
    if (m > static_cast<__int128>(N)) break;
    const double v = std::abs(src.coeff(static_cast<std::uint64_t>(m)));
    if (v == 0.0) continue;
    if (seen && v < prev * (1.0 - 1e-12)) {
      ok = false;
      break;
    }
    prev = v;
    seen = true;
  }
  rep.growth_along_powers = seen && ok;
  return rep;
}

std::vector<cd> euler_factor(const CoefficientSource& src, std::uint32_t p,
                             int M) {
  if (!src.multiplicative())
    throw std::invalid_argument("euler_factor: source is not multiplicative");
  if (M < 0) throw std::invalid_argument("euler_factor: M must be >= 0");
  std::vector<cd> out(static_cast<std::size_t>(M) + 1);
  __int128 pm = 1;
  for (int m = 0; m <= M; ++m) {
    if (pm > static_cast<__int128>(UINT64_MAX))
      throw std::out_of_range("euler_factor: p^m exceeds 64 bits");
    out[m] = src.coeff(static_cast<std::uint64_t>(pm));
    pm *= p;
  }
  return out;
}

Series dirichlet_inverse(const CoefficientSource& src, std::size_t N) {
  return dirichlet_inverse(src.prefix(N));
}

} // namespace lfun
