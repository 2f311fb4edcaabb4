#pragma once

#include <complex>
#include <vector>

namespace lfun {

using cd = std::complex<double>;

// Data of a Riemann-type functional equation
//   Q^s prod_j Gamma(lambda_j s + mu_j) F(s)
//     = omega Q^(1-s) prod_j Gamma(lambda_j (1-s) + conj(mu_j)) conj(F(1-conj s)),
// together with the order of the pole of F at s=1 (0 for entire F).
struct GammaFactorData {
  double Q = 1.0;
  std::vector<double> lambda;
  std::vector<cd> mu;
  cd omega = 1.0;
  int pole_order = 0;

  // Validates Q>0, lambda_j>0, |omega|=1 within 1e-12, equal nonempty lengths.
  static GammaFactorData make(double Q, std::vector<double> lambda,
                              std::vector<cd> mu, cd omega, int pole_order = 0);

  // True iff Re mu_j >= 0 for all j (the extended-class normalization).
  bool sharp_admissible() const;
};

struct SelbergInvariants {
  double degree;
  double conductor;
  double b_invariant;
};

// d = 2 sum_j lambda_j
double degree(const GammaFactorData& data);
// q = (2 pi)^d Q^2 prod_j lambda_j^(2 lambda_j)
double conductor(const GammaFactorData& data);
// B = 2 min_j (Re mu_j / lambda_j) + 1; bounds the admissible lift orders.
double b_invariant(const GammaFactorData& data);
SelbergInvariants invariants(const GammaFactorData& data);

struct LiftResult {
  GammaFactorData data;
  // Set when k >= 2 and the input has a pole: the lifted pole is no longer
  // at s = 1, so the data is carried verbatim but flagged.
  bool pole_warning = false;
};

// The k-lift F(s) -> F(ks + (1-k)/2) acting on the data:
// (Q, lambda, mu, omega) -> (Q^k, k*lambda, mu + (1-k)/2 * lambda, omega).
LiftResult lift_data(const GammaFactorData& data, int k);

// True iff k <= B_F and (k == 1 or F is entire).
bool lift_admissible(const GammaFactorData& data, bool entire, int k);

struct LiftLawReport {
  double degree_direct, degree_law, degree_diff;
  double conductor_direct, conductor_law, conductor_diff;
};

// Degree/conductor of the lifted data computed directly and via the laws
// d' = k d, q' = q^k k^(k d).
LiftLawReport check_lift_laws(const GammaFactorData& data, int k);

// Shipped data sets.
GammaFactorData zeta_data();                       // Q=pi^(-1/2), lambda=1/2, mu=0, pole 1
GammaFactorData dirichlet_data(int q, bool odd);   // Q=sqrt(q/pi), lambda=1/2, mu=(0|1/2)
GammaFactorData eigenform_data();                  // weight 12: Q=1/(2pi), lambda=1, mu=11/2

} // namespace lfun
