#include "lfun/dirichlet.hpp"

#include <stdexcept>

namespace lfun {

Series dirichlet_convolve(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series out(n);
  for (std::size_t d = 1; d <= n; ++d) {
    const cd ad = a[d];
    if (ad == cd(0.0)) continue;
    for (std::size_t m = d; m <= n; m += d) out[m] += ad * b[m / d];
  }
  return out;
}

Series dirichlet_inverse(const Series& a) {
  const std::size_t n = a.size();
  if (n == 0 || a[1] == cd(0.0))
    throw std::invalid_argument("dirichlet_inverse: a(1) must be nonzero");
  Series b(n);
  const cd inv1 = 1.0 / a[1];
  b[1] = inv1;
  // b(m) = -(1/a(1)) sum_{d|m, d>1} a(d) b(m/d). acc[m] collects the sum
  // sieve-style: once b(j) is final, its products with a(d) land on acc[j*d].
  std::vector<cd> acc(n + 1, cd(0.0));
  for (std::size_t d = 2; d <= n; ++d) acc[d] += a[d] * b[1];
  for (std::size_t m = 2; m <= n; ++m) {
    b[m] = -inv1 * acc[m];
    for (std::size_t d = 2; m * d <= n; ++d) acc[m * d] += a[d] * b[m];
  }
  return b;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (comp[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= n; q += p)
      comp[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

std::vector<std::uint32_t> spf_table(std::uint32_t n) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0)
        spf[static_cast<std::size_t>(j)] = i;
  }
  return spf;
}

Series multiplicative_series(
    std::size_t n, const std::function<cd(std::uint32_t, int)>& local) {
  Series a(n);
  if (n == 0) return a;
  a[1] = 1.0;
  const auto spf = spf_table(static_cast<std::uint32_t>(n));
  for (std::size_t m = 2; m <= n; ++m) {
    const std::uint32_t p = spf[m];
    std::size_t rest = m;
    int v = 0;
    while (rest % p == 0) {
      rest /= p;
      ++v;
    }
    a[m] = a[rest] * local(p, v);
  }
  return a;
}

Series completely_multiplicative_series(
    std::size_t n, const std::function<cd(std::uint32_t)>& at_prime) {
  Series a(n);
  if (n == 0) return a;
  a[1] = 1.0;
  const auto spf = spf_table(static_cast<std::uint32_t>(n));
  for (std::size_t m = 2; m <= n; ++m) a[m] = a[m / spf[m]] * at_prime(spf[m]);
  return a;
}

} // namespace lfun
