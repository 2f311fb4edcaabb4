#pragma once

#include "lfun/coefficients.hpp"

namespace lfun::detail {

struct EvalResult {
  cd value;
  double err; // certified absolute error bound
};

// Hurwitz zeta(s, a) for 0 < a <= 1, s != 1, by Euler-Maclaurin with a
// rigorous remainder bound (valid for Re s > -20 or so at K=12).
EvalResult hurwitz_zeta(cd s, double a);
EvalResult hurwitz_zeta_reg(cd s, double a); // zeta(s,a) - 1/(s-1)

EvalResult zeta_eval(cd s);
EvalResult dirichlet_eval(cd s, const DirichletCharacter& chi);

// Normalized weight-12 eigenform L-function via the symmetric smoothed
// integral of the cusp form; accurate to ~1e-8 for |Im s| <= 26.
EvalResult eigenform_eval(cd s);

} // namespace lfun::detail
