#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lfun/dirichlet.hpp"

namespace lfun {

using HighPrec = boost::multiprecision::cpp_bin_float_50;
using WideInt = boost::multiprecision::cpp_int;

// Simultaneous inhomogeneous approximation target: find t > T and integers
// n_l with |t theta_l - n_l - beta_l| < eta for all l.
struct KroneckerTarget {
  std::vector<double> thetas;   // display values
  std::vector<HighPrec> thetas_hp; // the exact values the certificate refers to
  std::vector<double> betas;    // in [0, 1)
  std::vector<std::uint32_t> primes; // tags when built from prime phases
  double T = 0.0;
  double eta = 0.01;

  // Generic construction from doubles (thetas_hp = exact double values).
  static KroneckerTarget make(std::vector<double> thetas,
                              std::vector<double> betas, double T, double eta);
};

// theta_p = -log(p)/(2 pi) in 50-digit precision, beta_p = -arg(c(p))/(2 pi)
// mod 1, so that c(p) p^(-it) has argument ~ 0 at solutions. Zero values
// are dropped (their phase is unconstrained).
KroneckerTarget prime_phase_targets(const std::map<std::uint32_t, cd>& c_values,
                                    double T, double eta);

struct KroneckerSolution {
  bool found = false;
  // t = t_num / 2^t_log2_den, exactly; t_hp carries the same value.
  WideInt t_num;
  int t_log2_den = 0;
  HighPrec t_hp;
  std::vector<WideInt> n;
  std::vector<double> errors; // |t theta_l - n_l - beta_l|, recomputed in hp
  double max_error = 0.0;
  std::string note;
  double t_double() const { return static_cast<double>(t_hp); }
};

struct SolveBudget {
  int windows = 24;
  int jitters = 32;      // lattice path: perturbed Babai targets per window
  std::uint64_t seed = 0;
};

// Budgeted deterministic search. k <= 3 runs a certified window/grid scan;
// larger k uses an integer lattice (LLL + nearest-plane + local polish).
// Every returned solution is re-verified against thetas_hp before `found`
// is set -- there are no false successes. On failure the best candidate and
// the scanned range are reported in `note`.
KroneckerSolution solve(const KroneckerTarget& target, const SolveBudget& budget);

struct AlignmentReport {
  double A = 0.0;     // |sum c(n) n^(-sigma - it) e^(-n/Y)|
  double B = 0.0;     // sum |c(n)| n^(-sigma) e^(-n/Y)
  double ratio = 0.0; // A / B
  std::size_t terms = 0;
};

// Smoothed alignment sums over the completely multiplicative extension of
// c_values, truncated at min(N, 3 Y log Y). Phases t log n are computed in
// 50-digit arithmetic (t can be astronomically large).
AlignmentReport alignment_report(const KroneckerSolution& sol,
                                 const std::map<std::uint32_t, cd>& c_values,
                                 std::size_t N, double sigma, double Y);

// The completely multiplicative extension used by alignment_report.
Series cm_extension(const std::map<std::uint32_t, cd>& c_values, std::size_t N);

} // namespace lfun
