#pragma once

#include <cstdint>
#include <vector>

#include "lfun/coefficients.hpp"
#include "lfun/dirichlet.hpp"

namespace lfun {

enum class AbscissaKind { Convergence, Absolute };

struct AbscissaEstimate {
  AbscissaKind which;
  double value = 0.0;   // extrapolated estimate
  std::uint64_t N_used = 0;
  double tail_slope_diagnostic = 0.0; // spread of the last-octave slopes
  bool degenerate = false;            // finite Dirichlet polynomial: -inf
  bool floored_at_zero = false;       // bounded partial sums (sigma_c <= 0)
  // (N, log S(N) / log N) rows backing the estimate
  std::vector<std::pair<std::uint64_t, double>> quotients;
};

// limsup_N log(sum_{n<=N} |a(n)|) / log N, extrapolated across the octaves
// Nmax/4, Nmax/2, Nmax.
AbscissaEstimate estimate_sigma_a(const CoefficientSource& src,
                                  std::uint64_t Nmax);

// Same with the running max of |sum_{n<=N} a(n)| in place of sum |a(n)|.
AbscissaEstimate estimate_sigma_c(const CoefficientSource& src,
                                  std::uint64_t Nmax);

// sum_{n <= ceil(3 Y log Y)} c(n) n^(-sigma - i t) e^(-n/Y); log Y floors
// at 1 for Y < e.
cd smoothed_sum(const Series& c, double sigma, double t, double Y);

// truncation length used by smoothed_sum
std::size_t smoothed_cutoff(double Y);

struct BoundednessReport {
  double sup = 0.0;
  double arg_t = 0.0;
  double arg_Y = 0.0;
  std::vector<std::pair<double, double>> per_Y_sup; // (Y, sup over t)
};

BoundednessReport boundedness_probe(const Series& c, double sigma,
                                    const std::vector<double>& t_samples,
                                    const std::vector<double>& Y_list);

struct Interval {
  double lo, hi;
};

// Convergence-abscissa bounds for entire functions of degree d >= 1:
// [1/2 - 1/(2d), 1 - 2/(d+1)].
Interval bound_oracle_entire(double d);

// Absolute-convergence bounds for an admissible k-lift of degree-d data:
// [1/2 + 1/(2kd), 1/2 + 1/(2k)].
Interval bound_oracle_lift(double d, int k);

} // namespace lfun
