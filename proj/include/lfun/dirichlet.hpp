#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace lfun {

using cd = std::complex<double>;

// Dirichlet coefficients a(1..N), stored 1-indexed (slot 0 unused).
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t n) : a_(n + 1, cd(0.0)) {}

  std::size_t size() const { return a_.empty() ? 0 : a_.size() - 1; }
  cd& operator[](std::size_t n) { return a_[n]; }
  const cd& operator[](std::size_t n) const { return a_[n]; }

  // Identity stream (1, 0, 0, ...).
  static Series identity(std::size_t n) {
    Series s(n);
    if (n >= 1) s[1] = 1.0;
    return s;
  }

 private:
  std::vector<cd> a_;
};

// (a*b)(n) = sum_{d|n} a(d) b(n/d), up to min(size a, size b).
Series dirichlet_convolve(const Series& a, const Series& b);

// b with (a*b)(n) = [n==1]; requires a(1) != 0.
Series dirichlet_inverse(const Series& a);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Smallest-prime-factor table for 0..n (spf[0]=spf[1]=0).
std::vector<std::uint32_t> spf_table(std::uint32_t n);

// Multiplicative stream from local values: a(p^m) = local(p, m), a(1) = 1.
Series multiplicative_series(std::size_t n,
                             const std::function<cd(std::uint32_t, int)>& local);

// Completely multiplicative stream from prime values.
Series completely_multiplicative_series(
    std::size_t n, const std::function<cd(std::uint32_t)>& at_prime);

} // namespace lfun
