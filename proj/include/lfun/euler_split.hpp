#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lfun/coefficients.hpp"
#include "lfun/dirichlet.hpp"

namespace lfun {

struct ExceptionalPrimeSet {
  std::vector<std::uint32_t> primes; // sorted
  double eps = 0.5;
  double c0 = 3.0;
  std::uint32_t sieve_bound = 0; // membership certified for all p <= this
  bool contains(std::uint32_t p) const;
};

// S_eps = { p : |a(p)| > p^(eps/2) or p < c0^(2/eps) }, enumerated up to
// sieve_bound. Throws if the cutoff c0^(2/eps) exceeds sieve_bound.
ExceptionalPrimeSet build_exceptional_set(const CoefficientSource& src,
                                          double eps, double c0,
                                          std::uint32_t sieve_bound);

// b(p^m) = sum_{l=0}^m (-1)^l a(p)^l a(p^(m-l)); b(1)=1, b(p)=0.
cd b_coefficient(const CoefficientSource& src, std::uint32_t p, int m);

enum class SplitVariant { Theorem1, Theorem3 };

struct KBoundEntry {
  std::uint32_t p;
  double sum_at_half; // sum_{m>=3} |k(p^m)| p^(-m/2), tail bound included
  bool certified;     // geometric tail certified
};

struct EulerSplit {
  SplitVariant variant = SplitVariant::Theorem1;
  Series part1, part2, part3; // Dirichlet convolution reconstructs the source
  ExceptionalPrimeSet exceptional;
  // Theorem-3 extras
  std::vector<KBoundEntry> k_bounds;
  std::vector<std::uint32_t> undecided; // conservatively placed in S
};

// Theorem-1 shape: part1 completely multiplicative with c(p)=a(p) off S_eps,
// part2 the full factors over S_eps, part3 generated by b(p^m), m >= 2.
EulerSplit split_theorem1(const CoefficientSource& src, double eps, double c0,
                          std::size_t N);

struct BBoundReport {
  bool pass = true;
  double worst_ratio = 0.0; // max |b(p^m)| / p^(m eps)
  std::uint32_t worst_p = 0;
  int worst_m = 0;
  std::size_t checked = 0;
};

// Verifies |b(p^m)| <= p^(m eps) for primes in [p_lo, p_hi] (all must be
// outside S_eps) and 2 <= m <= m_max.
BBoundReport b_bound_audit(const CoefficientSource& src, double eps, double c0,
                           std::uint32_t p_lo, std::uint32_t p_hi, int m_max);

// Coefficient stream of H = F/G together with an optional local-factor
// provider (present when both sources expose Euler data).
struct HStream {
  Series values;
  std::function<std::optional<LocalFactor>(std::uint32_t)> local;
};

HStream ratio_coefficients(const CoefficientSource& F,
                           const CoefficientSource& G, std::size_t N);

// Theorem-3 shape with S = { p : |h(p^m)| > p^(m/10) for some m >= 1, or
// p <= cutoff }. Membership is scanned to depth_limit with a geometric tail
// certificate; uncertifiable primes go to S and are reported in `undecided`.
EulerSplit split_theorem3(const HStream& h, std::size_t N,
                          std::uint32_t cutoff = 10000, int depth_limit = 40);

struct LemmaThetaResult {
  cd theta;
  double value;  // |1 + theta a + theta^2 b| at the returned theta
  double bound;  // 1 + (|a|+|b|)/24
  double tol;    // 10 (|a| + 4|b|) / grid
};

// Grid argmax of |1 + theta a + theta^2 b| over |theta|=1 plus a local
// golden-section polish; guarantees value >= bound - tol.
LemmaThetaResult lemma_theta(cd a, cd b, std::size_t grid);

} // namespace lfun
