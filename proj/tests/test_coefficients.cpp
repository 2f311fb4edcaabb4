#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "lfun/coefficients.hpp"
#include "lfun/dirichlet.hpp"

using namespace lfun;

namespace {

// Independent tau oracle: multiply q * prod_{n<=N}(1-q^n)^24 directly,
// one factor at a time, in 64-bit integers (small orders only).
std::vector<long long> tau_bruteforce(int N) {
  std::vector<long long> c(N + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = N; i >= n; --i) c[i] -= c[i - n];
    }
  }
  std::vector<long long> tau(N + 2, 0);
  for (int i = 0; i <= N; ++i) tau[i + 1] = c[i];
  return tau;
}

} // namespace

TEST_CASE("tau table matches the brute-force eta^24 expansion") {
  const auto oracle = tau_bruteforce(40);
  const auto& tab = tau_table(100);
  for (int n = 1; n <= 40; ++n)
    CHECK(to_string_i128(tab[n]) == std::to_string(oracle[n]));
  CHECK(to_string_i128(tab[1]) == "1");
  CHECK(to_string_i128(tab[2]) == "-24");
  CHECK(to_string_i128(tab[3]) == "252");
  CHECK(to_string_i128(tab[4]) == "-1472");
  CHECK(to_string_i128(tab[5]) == "4830");
  CHECK(to_string_i128(tab[6]) == "-6048");
}

TEST_CASE("tau is multiplicative and satisfies the Hecke recurrence") {
  const auto& tab = tau_table(100000);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> dm(2, 400);
  int pairs = 0;
  while (pairs < 500) {
    const std::uint64_t m = dm(rng), n = dm(rng);
    if (std::gcd(m, n) != 1 || m * n > 100000) continue;
    CHECK(tab[m * n] == tab[m] * tab[n]);
    ++pairs;
  }
  // tau(p^2) = tau(p)^2 - p^11
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    __int128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    CHECK(tab[p * p] == tab[p] * tab[p] - p11);
  }
}

TEST_CASE("Deligne bound |tau(p)| <= 2 p^(11/2) for p <= 200") {
  const auto& tab = tau_table(200);
  for (std::uint32_t p : primes_up_to(200)) {
    const double lhs = std::fabs(static_cast<double>(tab[p]));
    CHECK(lhs <= 2.0 * std::pow(double(p), 5.5) * (1.0 + 1e-12));
  }
}

TEST_CASE("built-in coefficient values") {
  const auto z = CoefficientSource::zeta();
  CHECK(z.coeff(10) == cd(1.0));
  const auto chi4 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4"));
  CHECK(chi4.coeff(3) == cd(-1.0));
  CHECK(chi4.coeff(2) == cd(0.0));
  CHECK(chi4.coeff(5) == cd(1.0));
  const auto f = CoefficientSource::eigenform();
  CHECK(f.coeff(1) == cd(1.0));
  CHECK(f.coeff(2).real() == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-14));
  CHECK(f.coeff(2).imag() == 0.0);
}

TEST_CASE("multiplicativity on random coprime pairs (exact for built-ins)") {
  const auto z = CoefficientSource::zeta();
  const auto chi4 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto chi5 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi5a"));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> dm(2, 40000);
  int pairs = 0;
  while (pairs < 500) {
    const std::uint64_t m = dm(rng), n = dm(rng);
    if (std::gcd(m, n) != 1 || m * n > 100000) continue;
    CHECK(z.coeff(m * n) == z.coeff(m) * z.coeff(n));
    CHECK(chi4.coeff(m * n) == chi4.coeff(m) * chi4.coeff(n));
    CHECK(chi5.coeff(m * n) == chi5.coeff(m) * chi5.coeff(n));
    ++pairs;
  }
}

TEST_CASE("lift coefficients follow the substitution law") {
  const auto z = CoefficientSource::zeta();
  CHECK(lift_coeff(z, 1, 7) == cd(1.0));
  CHECK(lift_coeff(z, 2, 6) == cd(0.0));
  CHECK(std::abs(lift_coeff(z, 2, 9) - cd(std::sqrt(3.0))) < 1e-14);
  const auto chi4 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4"));
  const cd v = lift_coeff(chi4, 2, 9); // chi(3) * sqrt(3)
  CHECK(v.real() == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("lifted series partial sums match the base series at 2s - 1/2") {
  const auto chi4 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto lifted = CoefficientSource::lift(chi4, 2);
  const cd s(0.9, 1.3);
  const std::size_t N = 4000;
  const std::size_t rootN = 63; // floor(sqrt(4000))
  cd lhs = 0.0;
  for (std::size_t m = 1; m <= N; ++m)
    lhs += lifted.coeff(m) * std::exp(-s * std::log(double(m)));
  cd rhs = 0.0;
  const cd s2 = 2.0 * s - 0.5;
  for (std::size_t n = 1; n <= rootN; ++n)
    rhs += chi4.coeff(n) * std::exp(-s2 * std::log(double(n)));
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("ramanujan audit") {
  const auto z = CoefficientSource::zeta();
  const auto rz = ramanujan_audit(z, 10000, 0.1);
  CHECK(rz.max_ratio == doctest::Approx(1.0));
  CHECK(rz.argmax == 1);

  const auto chi4 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto lifted = CoefficientSource::lift(chi4, 2);
  const auto rl = ramanujan_audit(lifted, 10000, 0.1);
  CHECK(rl.argmax == 9801);
  CHECK(rl.max_ratio ==
        doctest::Approx(std::sqrt(99.0) / std::pow(9801.0, 0.1)).epsilon(1e-12));
  CHECK(rl.growth_along_powers);

  const auto ex = CoefficientSource::explicit_list({cd(1.0), cd(0.0), cd(0.0)});
  const auto re = ramanujan_audit(ex, 3, 0.5);
  CHECK(re.max_ratio == doctest::Approx(1.0));
}

TEST_CASE("euler factors") {
  const auto z = CoefficientSource::zeta();
  const auto ez = euler_factor(z, 2, 3);
  CHECK(ez == std::vector<cd>{1.0, 1.0, 1.0, 1.0});

  const auto chi4 = CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4"));
  const auto ec = euler_factor(chi4, 2, 3);
  CHECK(ec == std::vector<cd>{1.0, 0.0, 0.0, 0.0});

  const auto f = CoefficientSource::eigenform();
  const auto ef = euler_factor(f, 2, 2);
  const auto& tab = tau_table(4);
  CHECK(ef[0] == cd(1.0));
  CHECK(ef[1].real() == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-13));
  CHECK(ef[2].real() ==
        doctest::Approx(double(tab[4]) / std::pow(4.0, 5.5)).epsilon(1e-13));

  const auto ex = CoefficientSource::explicit_list({cd(1.0), cd(2.0)});
  CHECK_THROWS(euler_factor(ex, 2, 1));
}

TEST_CASE("dirichlet inverse of zeta gives the Moebius function") {
  const auto inv = dirichlet_inverse(CoefficientSource::zeta(), 10);
  const double mu[11] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(inv[n].real() == doctest::Approx(mu[n]).epsilon(1e-14));
    CHECK(inv[n].imag() == doctest::Approx(0.0));
  }
}

TEST_CASE("dirichlet inverse of L(chi4) is mu(n) chi(n)") {
  const auto chi = DirichletCharacter::builtin("chi4");
  const auto src = CoefficientSource::dirichlet(chi);
  const auto inv = dirichlet_inverse(src, 5);
  const double mu[6] = {0, 1, -1, -1, 0, -1};
  for (std::size_t n = 1; n <= 5; ++n) {
    const cd expect = mu[n] * chi(static_cast<std::int64_t>(n));
    CHECK(std::abs(inv[n] - expect) < 1e-14);
  }
  // convolution identity is the real oracle
  const auto conv = dirichlet_convolve(src.prefix(5), inv);
  CHECK(std::abs(conv[1] - cd(1.0)) < 1e-14);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(std::abs(conv[n]) < 1e-14);
}

TEST_CASE("convolution identity a * a^-1 = identity up to 1e4") {
  for (const auto& src :
       {CoefficientSource::zeta(),
        CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4")),
        CoefficientSource::eigenform()}) {
    const std::size_t N = 10000;
    const auto a = src.prefix(N);
    const auto b = dirichlet_inverse(a);
    const auto conv = dirichlet_convolve(a, b);
    CHECK(std::abs(conv[1] - cd(1.0)) < 1e-10);
    double worst = 0.0;
    for (std::size_t n = 2; n <= N; ++n) worst = std::max(worst, std::abs(conv[n]));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("explicit sources: identity inverse and range errors") {
  const auto ex = CoefficientSource::explicit_list({cd(1.0), cd(0.0), cd(0.0)});
  const auto inv = dirichlet_inverse(ex, 3);
  CHECK(inv[1] == cd(1.0));
  CHECK(inv[2] == cd(0.0));
  CHECK(inv[3] == cd(0.0));
  CHECK_THROWS_AS((void)ex.coeff(4), std::out_of_range);
  CHECK_THROWS(dirichlet_inverse(CoefficientSource::explicit_list({cd(0.0)}), 1));
}

TEST_CASE("local Euler factors reproduce the coefficient streams") {
  for (const auto& src :
       {CoefficientSource::zeta(),
        CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4")),
        CoefficientSource::eigenform(),
        CoefficientSource::lift(
            CoefficientSource::dirichlet(DirichletCharacter::builtin("chi4")), 2)}) {
    const std::size_t N = 5000;
    const auto direct = src.prefix(N);
    const auto rebuilt = multiplicative_series(N, [&](std::uint32_t p, int m) {
      return src.euler_local(p)->expand(m)[m];
    });
    double worst = 0.0;
    for (std::size_t n = 1; n <= N; ++n)
      worst = std::max(worst, std::abs(direct[n] - rebuilt[n]));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("character table validation") {
  for (const auto& name : DirichletCharacter::builtin_names()) {
    const auto chi = DirichletCharacter::builtin(name);
    const auto revalidated = DirichletCharacter::from_values(chi.modulus, chi.values);
    CHECK(revalidated.primitive == chi.primitive);
    CHECK(revalidated.odd == chi.odd);
  }
  // principal character mod 4 is induced, hence imprimitive
  const auto principal = DirichletCharacter::from_values(4, {0, 1, 0, 1});
  CHECK_FALSE(principal.primitive);
  CHECK_FALSE(principal.odd);
  CHECK_THROWS(DirichletCharacter::from_values(4, {0, 2, 0, 1}));
  CHECK_THROWS(DirichletCharacter::from_values(4, {0, 1, 1, -1}));
}
