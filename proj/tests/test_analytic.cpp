#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lfun/analytic.hpp"

using namespace lfun;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("complex gamma: special values and recurrence") {
  CHECK(std::abs(complex_gamma(cd(1.0)) - cd(1.0)) < 1e-13);
  CHECK(std::abs(complex_gamma(cd(0.5)) - cd(std::sqrt(pi))) < 1e-13);
  CHECK(std::abs(complex_gamma(cd(5.0)) - cd(24.0)) < 1e-12);
  // recurrence oracle Gamma(s+1) = s Gamma(s) at assorted points
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ur(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const cd s(ur(rng) * 0.1 + 2.0, ur(rng));
    if (std::abs(s) > 49.0) continue;
    const cd lhs = complex_gamma(s + 1.0);
    const cd rhs = s * complex_gamma(s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
  const cd g34 = complex_gamma(cd(3.0, 4.0));
  CHECK(std::abs(complex_gamma(cd(4.0, 4.0)) - cd(3.0, 4.0) * g34) <=
        1e-12 * std::abs(complex_gamma(cd(4.0, 4.0))));
  // reflection region
  const cd gm = complex_gamma(cd(-2.5, 1.5));
  const cd check = pi / (std::sin(pi * cd(-2.5, 1.5)) * complex_gamma(cd(3.5, -1.5)));
  CHECK(std::abs(gm - check) <= 1e-11 * std::abs(gm));
  CHECK_THROWS_AS(complex_gamma(cd(0.0)), std::domain_error);
  CHECK_THROWS_AS(complex_gamma(cd(-3.0)), std::domain_error);
}

TEST_CASE("zeta evaluator: classical values") {
  const auto z = LFunction::zeta();
  CHECK(std::abs(z.evaluate(cd(2.0)).value - cd(pi * pi / 6.0)) < 1e-10);
  CHECK(std::abs(z.evaluate(cd(3.0)).value -
                 cd(1.2020569031595942854)) < 1e-10); // zeta(3)
  CHECK(std::abs(z.evaluate(cd(0.0)).value - cd(-0.5)) < 1e-10);
  CHECK(std::abs(z.evaluate(cd(-1.0)).value - cd(-1.0 / 12.0)) < 1e-10);
  // first nontrivial zero: |zeta(1/2 + i 14.1347251417)| is tiny
  CHECK(std::abs(z.evaluate(cd(0.5, 14.134725141734693)).value) < 1e-8);
  // reported error bounds hold against a big independent partial sum at s=3
  const cd s(3.0, 7.0);
  cd direct = 0.0;
  for (int n = 1; n <= 200000; ++n)
    direct += std::exp(-s * std::log(double(n)));
  const auto ev = z.evaluate(s);
  CHECK(std::abs(ev.value - direct) < 1e-9); // series tail ~ 2.5e-11
  CHECK(ev.est_abs_error < 1e-10);
  CHECK_THROWS_AS(z.evaluate(cd(1.0 + 1e-9)), std::domain_error);
  CHECK_THROWS_AS(z.evaluate(cd(5.0)), WindowError);
}

TEST_CASE("dirichlet evaluator: L(1, chi4) = pi/4 and Catalan check") {
  const auto L = LFunction::dirichlet(DirichletCharacter::builtin("chi4"));
  CHECK(std::abs(L.evaluate(cd(1.0)).value - cd(pi / 4.0)) < 1e-10);
  // L(2, chi4) = Catalan's constant
  CHECK(std::abs(L.evaluate(cd(2.0)).value - cd(0.915965594177219015)) < 1e-10);
  // L(3, chi4) = pi^3/32
  CHECK(std::abs(L.evaluate(cd(3.0)).value - cd(pi * pi * pi / 32.0)) < 1e-10);
  // odd character: trivial zero at s = -1
  CHECK(std::abs(L.evaluate(cd(-1.0)).value) < 1e-9);
  // root number of chi4 is exactly 1
  CHECK(std::abs(L.data().omega - cd(1.0)) < 1e-12);
}

TEST_CASE("eigenform evaluator agrees with the Dirichlet series at sigma=3") {
  const auto f = LFunction::eigenform();
  const auto& tau = tau_table(20000);
  for (const cd s : {cd(3.0, 0.0), cd(2.5, 5.0), cd(3.0, 20.0)}) {
    cd direct = 0.0;
    for (int n = 1; n <= 20000; ++n)
      direct += double(tau[n]) * std::exp(-(s + 5.5) * std::log(double(n)));
    const auto ev = f.evaluate(s);
    CHECK(std::abs(ev.value - direct) < 5e-7); // series tail dominates
  }
  CHECK_THROWS_AS(f.evaluate(cd(0.5, 60.0)), WindowError);
}

TEST_CASE("functional equation residuals vanish for shipped data") {
  const auto z = LFunction::zeta();
  CHECK(fe_residual(z.data(), z, cd(0.7, 5.0)) < 1e-8);
  const auto L4 = LFunction::dirichlet(DirichletCharacter::builtin("chi4"));
  CHECK(fe_residual(L4.data(), L4, cd(0.6, 3.0)) < 1e-8);
  const auto f = LFunction::eigenform();
  CHECK(fe_residual(f.data(), f, cd(0.8, 2.0)) < 1e-8);

  // deliberately wrong root number: residual = 2 |Lambda(s)| at a real point
  GammaFactorData bad = z.data();
  bad.omega = cd(-1.0);
  const cd s(0.5, 3.0); // on the critical line Lambda(s) = conj mirror
  const double r = fe_residual(bad, z, s);
  CHECK(r > 1e-3);
}

TEST_CASE("fe residual at 100 seeded window points per built-in") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> us(-0.5, 1.5), ut(-25.0, 25.0);
  const auto z = LFunction::zeta();
  const auto L4 = LFunction::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto L3 = LFunction::dirichlet(DirichletCharacter::builtin("chi3"));
  const auto f = LFunction::eigenform();
  for (int i = 0; i < 100; ++i) {
    cd s(us(rng), ut(rng));
    if (std::abs(s) < 0.2 || std::abs(s - cd(1.0)) < 0.2) s += cd(0.3, 0.3);
    CHECK(fe_residual(z.data(), z, s) < 1e-6);
    CHECK(fe_residual(L4.data(), L4, s) < 1e-6);
    CHECK(fe_residual(L3.data(), L3, s) < 1e-6);
    CHECK(fe_residual(f.data(), f, s) < 1e-6);
  }
}

TEST_CASE("zero counting on zeta") {
  const auto z = LFunction::zeta();
  // no zeros right of 0.6 up to height 50 (pole corrected)
  const auto r1 = count_zeros(z, {0.6, 1.5, -50.0, 50.0});
  CHECK(r1.count == 0);
  CHECK(r1.pole_correction == 1);
  CHECK(std::fabs(r1.raw_winding - std::round(r1.raw_winding)) < 0.05);
  // three zeros with 0 < gamma <= 30
  const auto r2 = count_zeros(z, {-0.5, 1.5, 0.1, 30.0});
  CHECK(r2.count == 3);
  CHECK(r2.pole_correction == 0);
  // empty rectangle
  const auto r3 = count_zeros(z, {0.1, 0.9, 10.0, 10.0});
  CHECK(r3.count == 0);
}

TEST_CASE("zeta total count matches the smooth formula within 2") {
  const auto z = LFunction::zeta();
  for (double T : {30.0, 50.0}) {
    const auto r = count_zeros(z, {-0.5, 1.5, 0.1, T});
    const double smooth = T / (2 * pi) * std::log(T / (2 * pi * std::exp(1.0))) + 7.0 / 8.0;
    CHECK(std::fabs(double(r.count) - smooth) <= 2.0);
  }
}

TEST_CASE("zero counts are additive across a horizontal split") {
  const auto z = LFunction::zeta();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> um(10.0, 40.0);
  for (int i = 0; i < 3; ++i) {
    const double mid = um(rng);
    const auto whole = count_zeros(z, {-0.5, 1.5, 0.1, 50.0});
    const auto lower = count_zeros(z, {-0.5, 1.5, 0.1, mid});
    const auto upper = count_zeros(z, {-0.5, 1.5, mid, 50.0});
    CHECK(whole.count == lower.count + upper.count);
  }
}

TEST_CASE("zero counting on L(chi4)") {
  const auto L = LFunction::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto r = count_zeros(L, {0.6, 1.5, -50.0, 50.0});
  CHECK(r.count == 0);
  CHECK(r.pole_correction == 0); // entire, and no uncancelled gamma pole
  // first zeros: 6.0209..., 10.2437...; count over 0 < t <= 11
  const auto r2 = count_zeros(L, {-0.5, 1.5, 0.1, 11.0});
  CHECK(r2.count == 2);
}

TEST_CASE("locate_zeros finds the first zeta zeros to 1e-4") {
  const auto z = LFunction::zeta();
  const auto zeros = locate_zeros(z, {0.2, 0.8, 10.0, 26.0});
  REQUIRE(zeros.size() == 3);
  CHECK(std::abs(zeros[0] - cd(0.5, 14.134725)) < 1e-3);
  CHECK(std::abs(zeros[1] - cd(0.5, 21.022040)) < 1e-3);
  CHECK(std::abs(zeros[2] - cd(0.5, 25.010858)) < 1e-3);
}

TEST_CASE("density probe is flat zero for zeta at desk heights") {
  const auto z = LFunction::zeta();
  const auto rows = density_probe(z, {0.51, 0.6, 1.1}, 50.0);
  for (const auto& row : rows) CHECK(row.count == 0);
}

TEST_CASE("majorant: F = f with c = 1 passes; constant majorant of zeta") {
  const auto z = LFunction::zeta();
  CSpec one{{{0.0, 1.0}}};
  const auto self = majorant_check(z, z.as_function(), 1.1, 3.0, one,
                                   {20, 0.0, 20.0, 100});
  CHECK(self.pass);
  // |zeta(sigma+it)| <= zeta(sigma) for sigma > 1
  CSpec czeta{{{1.1, 17.0}, {2.0, 1.7}, {3.0, 1.21}}};
  const auto against_const = majorant_check(
      z, [](cd) { return cd(1.0); }, 1.1, 3.0, czeta, {20, 0.0, 30.0, 200});
  CHECK(against_const.pass);
}

TEST_CASE("majorant witness appears near the first zeta zero") {
  // even a generous constant majorant fails where zeta vanishes and L(chi4)
  // does not: the witness lands next to 1/2 + 14.1347 i
  const auto L = LFunction::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto z = LFunction::zeta();
  CSpec fifty{{{0.0, 50.0}}};
  const auto r = majorant_check(L, z.as_function(), 0.501, 0.6, fifty,
                                {12, 13.5, 14.5, 200});
  CHECK_FALSE(r.pass);
  CHECK(r.F_abs > r.cf_abs);
  CHECK(std::fabs(r.witness_s.imag() - 14.1347) < 0.05);
}

TEST_CASE("zero_set_compare: F against itself and against a doctored f") {
  const auto z = LFunction::zeta();
  const Rect rect{0.2, 0.8, 12.0, 23.0}; // two zeros
  const auto self = zero_set_compare(z, z.completed_function(), rect);
  CHECK(self.matched.size() == 2);
  CHECK(self.unmatched_F.empty());
  CHECK(self.unmatched_f.empty());

  // f = (s - (0.6 + 18 i)) * completed zeta: one extra f-zero
  const auto doctored = [fn = z.completed_function()](cd s) {
    return (s - cd(0.6, 18.0)) * fn(s);
  };
  const auto rep = zero_set_compare(z, doctored, rect);
  CHECK(rep.matched.size() == 2);
  CHECK(rep.unmatched_F.empty());
  REQUIRE(rep.unmatched_f.size() == 1);
  CHECK(std::abs(rep.unmatched_f[0] - cd(0.6, 18.0)) < 1e-3);
}

TEST_CASE("almost period of a single Dirichlet term is its exact period") {
  // f(s) = 2^(-s) has period 2 pi / log 2 in t
  const auto f = [](cd s) { return std::exp(-s * std::log(2.0)); };
  std::vector<double> samples;
  for (int i = 0; i < 64; ++i) samples.push_back(0.25 * i);
  const double period = 2.0 * pi / std::log(2.0);
  const auto r =
      almost_period_find(f, 2.0, 1e-6, period - 0.25, period + 0.25, 4096, samples);
  CHECK(r.ok);
  CHECK(std::fabs(r.tau - period) < 1e-3);
  CHECK(r.sampled_sup < 1e-6);
  CHECK_THROWS(almost_period_find(f, 2.0, 0.0, 0.0, 1.0, 16, samples));
}

TEST_CASE("almost period of zeta at A=2 exists within (0, 500]") {
  const auto z = LFunction::zeta();
  auto f = z.as_function();
  std::vector<double> samples;
  for (int i = 0; i < 160; ++i) samples.push_back(0.25 * i); // t in [0, 40]
  const auto r = almost_period_find(f, 2.0, 0.05, 0.0, 500.0, 10000, samples);
  CHECK(r.ok);
  CHECK(r.tau > 0.0);
  // away from the trivial tau ~ 0 neighborhood the best almost period of
  // this line sits near 480.4 with sampled sup just under 0.09
  const auto r2 = almost_period_find(f, 2.0, 0.12, 5.0, 500.0, 9900, samples);
  CHECK(r2.ok);
  CHECK(r2.tau > 5.0);
}

TEST_CASE("PL propagation: closed form for 2^-s has defect <= 0") {
  const auto h = [](cd s) { return std::exp(-s * std::log(2.0)); };
  std::vector<double> samples;
  for (int i = 0; i < 50; ++i) samples.push_back(0.7 * i);
  const auto rep = pl_propagation_check(h, 3.7, 2.0, 1.1, 1.5, samples);
  // |h(x+i(t+tau)) - h(x+it)| = 2^-x |2^(-i tau) - 1|: log-linear in x
  CHECK(rep.defect <= 1e-14 * std::max(1.0, rep.D_sigma));
}

TEST_CASE("domination: the F = G control never finds a witness") {
  const auto z = LFunction::zeta();
  DominationGrid grid;
  grid.t_max = 20.0;
  grid.n_t = 80;
  const auto rep = domination_witness(z, z, 0.5005, {1.5, 1000.0}, grid);
  for (const auto& w : rep.per_M) CHECK_FALSE(w.found);
}

TEST_CASE("domination: L(chi4) over zeta near a zeta zero at M = 1000") {
  const auto L = LFunction::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto z = LFunction::zeta();
  DominationGrid grid;
  grid.t_max = 32.0;
  const auto rep = domination_witness(L, z, 0.5005, {1000.0}, grid);
  REQUIRE(rep.per_M.size() == 1);
  CHECK(rep.per_M[0].found);
  CHECK(rep.per_M[0].F_abs > 1000.0 * rep.per_M[0].G_abs);
  CHECK(rep.per_M[0].s.real() >= 0.5005 - 1e-12);
}
