#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lfun/coefficients.hpp"
#include "lfun/fe_core.hpp"

namespace lfun {

// Gamma(s) for complex s, relative error < 1e-12 for |s| <= 50.
// Throws std::domain_error at the poles (nonpositive integers).
cd complex_gamma(cd s);

// Thrown when an evaluation is requested outside the certified window.
struct WindowError : std::domain_error {
  using std::domain_error::domain_error;
};

struct EvaluablePoint {
  cd s;
  cd value;
  double est_abs_error = 0.0;
};

struct Window {
  double sigma_min, sigma_max;
  double t_max; // |Im s| cap
};

// One of the shipped L-functions with analytic continuation on its window:
// zeta (Euler-Maclaurin), Dirichlet L (Hurwitz decomposition), weight-12
// eigenform (smoothed integral with functional-equation symmetry).
class LFunction {
 public:
  static LFunction zeta();
  static LFunction dirichlet(const DirichletCharacter& chi); // primitive only
  static LFunction eigenform();

  const std::string& name() const;
  const GammaFactorData& data() const;
  const CoefficientSource& source() const;
  Window window() const;
  int pole_order() const;

  // Value with a certified absolute error bound; throws WindowError outside
  // the window and std::domain_error within 1e-6 of a pole.
  EvaluablePoint evaluate(cd s) const;

  // Q^s prod_j Gamma(lambda_j s + mu_j) F(s).
  cd completed(cd s) const;

  std::function<cd(cd)> as_function() const;           // value only
  std::function<cd(cd)> completed_function() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// |Lambda(s) - omega Q^(1-s) prod Gamma(lambda_j(1-s) + conj mu_j)
//  conj(F(1 - conj s))| with the gamma data supplied explicitly.
double fe_residual(const GammaFactorData& data, const LFunction& f, cd s);

struct Rect {
  double sigma0, sigma1; // sigma0 < sigma1
  double t0, t1;         // t0 < t1
};

struct ZeroCountResult {
  Rect rect;                  // after any automatic contour nudges
  long count = 0;             // zeros inside, pole-corrected
  int pole_correction = 0;    // added to the raw winding
  double min_edge_modulus = 0;
  double raw_winding = 0;     // contour integral / 2 pi i before rounding
};

// Argument-principle count of the zeros of the completed function inside the
// rectangle. Corrects for the pole at s=1 (order = pole_order) and for gamma
// poles at s=0 when those lie strictly inside.
ZeroCountResult count_zeros(const LFunction& f, Rect rect);

// Zeros of the completed function inside rect, located by rectangle bisection
// down to `tol` boxes plus one Newton polish; multiple zeros repeat.
std::vector<cd> locate_zeros(const LFunction& f, Rect rect, double tol = 1e-4);

// Same machinery for an arbitrary evaluable function (no pole corrections).
long winding_count(const std::function<cd(cd)>& f, Rect rect,
                   double* min_modulus = nullptr, double* raw = nullptr);
std::vector<cd> locate_zeros_fn(const std::function<cd(cd)>& f, Rect rect,
                                double tol = 1e-4);

struct DensityRow {
  double sigma;
  long count;
  double count_over_T;
};
std::vector<DensityRow> density_probe(const LFunction& f,
                                      const std::vector<double>& sigmas,
                                      double T);

// Piecewise-linear positive c(sigma) table.
struct CSpec {
  std::vector<std::pair<double, double>> knots; // (sigma, c), sorted
  double operator()(double sigma) const;
};

struct MajorantGrid {
  int n_sigma = 40;
  double t_min = 0.0, t_max = 30.0;
  int n_t = 600;
};

struct MajorantResult {
  bool pass = true;
  cd witness_s;
  double F_abs = 0.0, cf_abs = 0.0;
};

// Checks |F(s)| <= c(sigma) |f(s)| on the grid; returns the first witness
// violating it, scanning t outward from t_min row by row.
MajorantResult majorant_check(const LFunction& F,
                              const std::function<cd(cd)>& f, double sigma_min,
                              double sigma_max, const CSpec& c,
                              const MajorantGrid& grid);

struct ZeroCompareReport {
  std::vector<std::pair<cd, cd>> matched; // (zero of F, zero of f)
  std::vector<cd> unmatched_F;
  std::vector<cd> unmatched_f;
};
ZeroCompareReport zero_set_compare(const LFunction& F,
                                   const std::function<cd(cd)>& f, Rect rect,
                                   double pair_tol = 1e-4);

struct AlmostPeriodResult {
  double tau = 0.0;
  double sampled_sup = 0.0;
  bool ok = false; // sampled_sup < eps
};

// Scans tau over (range_lo, range_hi] on `grid` points for
// max_t |f(A + i(t+tau)) - f(A + i t)| < eps over the t samples.
AlmostPeriodResult almost_period_find(const std::function<cd(cd)>& f, double A,
                                      double eps, double range_lo,
                                      double range_hi, int grid,
                                      const std::vector<double>& t_samples);

struct PLReport {
  double D_eta = 0.0, D_sigma = 0.0, D_A = 0.0;
  double defect = 0.0; // D_sigma - D_eta^alpha D_A^(1-alpha)
};

// Sampled sups of |h(x + i(t+tau)) - h(x + it)| on the three lines and the
// Phragmen-Lindelof convexity defect (pass: defect <= sampling slack).
PLReport pl_propagation_check(const std::function<cd(cd)>& h, double tau,
                              double A, double eta_line, double sigma_interior,
                              const std::vector<double>& t_samples);

struct DominationWitness {
  double M;
  cd s;
  double F_abs, G_abs;
  bool found = false;
};

struct DominationReport {
  std::vector<DominationWitness> per_M;
  std::vector<cd> zeros_of_G; // refinement anchors that were used
};

struct DominationGrid {
  double sigma_span = 0.5; // scan sigma in [floor, floor + span]
  int n_sigma = 12;
  double t_min = 0.5, t_max = 32.0;
  int n_t = 320;
};

// Searches for s with sigma >= sigma_floor and |F(s)| > M |G(s)|, refining
// near the zeros of G located by the argument-principle counter. Witnesses
// are re-verified by direct evaluation before being reported.
DominationReport domination_witness(const LFunction& F, const LFunction& G,
                                    double sigma_floor,
                                    const std::vector<double>& M_list,
                                    const DominationGrid& grid);

} // namespace lfun
