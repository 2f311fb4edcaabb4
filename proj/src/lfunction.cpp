#include <cmath>
#include <numbers>
#include <stdexcept>

#include "evaluators.hpp"
#include "lfun/analytic.hpp"

namespace lfun {

struct LFunction::Impl {
  enum Family { kZeta, kDirichlet, kEigenform } family;
  std::string name;
  GammaFactorData data;
  CoefficientSource source = CoefficientSource::zeta();
  Window window;
  DirichletCharacter chi;
};

LFunction LFunction::zeta() {
  auto impl = std::make_shared<Impl>();
  impl->family = Impl::kZeta;
  impl->name = "zeta";
  impl->data = zeta_data();
  impl->source = CoefficientSource::zeta();
  impl->window = {-1.0, 3.0, 1000.0};
  LFunction f;
  f.impl_ = std::move(impl);
  return f;
}

LFunction LFunction::dirichlet(const DirichletCharacter& chi) {
  if (!chi.primitive || chi.modulus < 3)
    throw std::invalid_argument(
        "LFunction::dirichlet: need a primitive non-principal character");
  auto impl = std::make_shared<Impl>();
  impl->family = Impl::kDirichlet;
  impl->name = "L(chi mod " + std::to_string(chi.modulus) + ")";
  impl->chi = chi;
  // root number from the Gauss sum: omega = tau(chi) / (i^a sqrt(q))
  const int q = chi.modulus;
  cd gauss = 0.0;
  for (int r = 1; r < q; ++r)
    gauss += chi.values[r] *
             std::exp(cd(0.0, 2.0 * std::numbers::pi * r / q));
  cd omega = gauss / std::sqrt(double(q));
  if (chi.odd) omega /= cd(0.0, 1.0);
  impl->data = GammaFactorData::make(std::sqrt(q / std::numbers::pi), {0.5},
                                     {cd(chi.odd ? 0.5 : 0.0)}, omega, 0);
  impl->source = CoefficientSource::dirichlet(chi);
  impl->window = {-1.0, 3.0, 1000.0};
  LFunction f;
  f.impl_ = std::move(impl);
  return f;
}

LFunction LFunction::eigenform() {
  auto impl = std::make_shared<Impl>();
  impl->family = Impl::kEigenform;
  impl->name = "L(Delta)";
  impl->data = eigenform_data();
  impl->source = CoefficientSource::eigenform();
  impl->window = {-1.0, 3.0, 26.0};
  LFunction f;
  f.impl_ = std::move(impl);
  return f;
}

const std::string& LFunction::name() const { return impl_->name; }
const GammaFactorData& LFunction::data() const { return impl_->data; }
const CoefficientSource& LFunction::source() const { return impl_->source; }
Window LFunction::window() const { return impl_->window; }
int LFunction::pole_order() const { return impl_->data.pole_order; }

EvaluablePoint LFunction::evaluate(cd s) const {
  const Window& w = impl_->window;
  if (s.real() < w.sigma_min || s.real() > w.sigma_max ||
      std::fabs(s.imag()) > w.t_max)
    throw WindowError(impl_->name + ": s outside the evaluation window");
  detail::EvalResult r;
  switch (impl_->family) {
    case Impl::kZeta:
      if (std::abs(s - cd(1.0)) < 1e-6)
        throw std::domain_error("zeta: pole proximity at s=1");
      r = detail::zeta_eval(s);
      break;
    case Impl::kDirichlet:
      r = detail::dirichlet_eval(s, impl_->chi);
      break;
    case Impl::kEigenform:
      r = detail::eigenform_eval(s);
      break;
  }
  return {s, r.value, r.err};
}

cd LFunction::completed(cd s) const {
  const GammaFactorData& d = impl_->data;
  cd g = std::exp(std::log(cd(d.Q)) * s);
  for (std::size_t j = 0; j < d.lambda.size(); ++j)
    g *= complex_gamma(d.lambda[j] * s + d.mu[j]);
  return g * evaluate(s).value;
}

std::function<cd(cd)> LFunction::as_function() const {
  const LFunction copy = *this;
  return [copy](cd s) { return copy.evaluate(s).value; };
}

std::function<cd(cd)> LFunction::completed_function() const {
  const LFunction copy = *this;
  return [copy](cd s) { return copy.completed(s); };
}

double fe_residual(const GammaFactorData& data, const LFunction& f, cd s) {
  auto gamma_prod = [&](cd z, bool conj_mu) {
    cd g = 1.0;
    for (std::size_t j = 0; j < data.lambda.size(); ++j) {
      const cd mu = conj_mu ? std::conj(data.mu[j]) : data.mu[j];
      g *= complex_gamma(data.lambda[j] * z + mu);
    }
    return g;
  };
  const cd lhs =
      std::exp(std::log(cd(data.Q)) * s) * gamma_prod(s, false) *
      f.evaluate(s).value;
  const cd mirrored = std::conj(f.evaluate(1.0 - std::conj(s)).value);
  const cd rhs = data.omega * std::exp(std::log(cd(data.Q)) * (1.0 - s)) *
                 gamma_prod(1.0 - s, true) * mirrored;
  return std::abs(lhs - rhs);
}

} // namespace lfun
