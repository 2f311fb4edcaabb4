#include "lll.hpp"

#include <stdexcept>

namespace lfun::detail {

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// round(a / b) for b > 0
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt two_a = 2 * a + b;
  BigInt q = two_a / (2 * b);
  if (two_a < 0 && two_a % (2 * b) != 0) --q; // floor for negatives
  return q;
}

} // namespace

// Integral LLL with the d_i / lambda_ij Gram bookkeeping (all divisions
// exact); follows the classical de Weger formulation, delta = 3/4.
void Lattice::lll_reduce() {
  const int n = static_cast<int>(basis.size());
  if (n == 0) return;
  std::vector<std::vector<BigInt>> lam(n + 1, std::vector<BigInt>(n + 1, 0));
  std::vector<BigInt> d(n + 1);
  d[0] = 1;

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      BigInt u = dot(basis[i - 1], basis[j - 1]);
      for (int k = 1; k < j; ++k)
        u = (d[k] * u - lam[i][k] * lam[j][k]) / d[k - 1];
      if (j < i)
        lam[i][j] = u;
      else
        d[i] = u;
    }
    if (d[i] == 0)
      throw std::invalid_argument("lll_reduce: basis is not independent");
  }

  auto redi = [&](int k, int l) {
    if (2 * abs(lam[k][l]) > d[l]) {
      const BigInt q = round_div(lam[k][l], d[l]);
      for (std::size_t c = 0; c < basis[k - 1].size(); ++c)
        basis[k - 1][c] -= q * basis[l - 1][c];
      lam[k][l] -= q * d[l];
      for (int i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  auto swapi = [&](int k) {
    basis[k - 1].swap(basis[k - 2]);
    for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const BigInt l = lam[k][k - 1];
    const BigInt B = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (int i = k + 1; i <= n; ++i) {
      const BigInt t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = B;
  };

  int k = 2;
  while (k <= n) {
    redi(k, k - 1);
    const BigInt lhs = 4 * d[k] * d[k - 2];
    const BigInt rhs =
        3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swapi(k);
      k = std::max(2, k - 1);
    } else {
      for (int l = k - 2; l >= 1; --l) redi(k, l);
      ++k;
    }
  }
}

std::vector<BigInt> Lattice::babai(const std::vector<BigFloat>& target) const {
  const int n = static_cast<int>(basis.size());
  const int m = static_cast<int>(basis[0].size());
  std::vector<std::vector<BigFloat>> gs(n, std::vector<BigFloat>(m));
  std::vector<BigFloat> norm2(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < m; ++c) gs[i][c] = BigFloat(basis[i][c]);
    for (int j = 0; j < i; ++j) {
      BigFloat num = 0;
      for (int c = 0; c < m; ++c) num += BigFloat(basis[i][c]) * gs[j][c];
      const BigFloat mu = num / norm2[j];
      for (int c = 0; c < m; ++c) gs[i][c] -= mu * gs[j][c];
    }
    norm2[i] = 0;
    for (int c = 0; c < m; ++c) norm2[i] += gs[i][c] * gs[i][c];
    if (norm2[i] == 0) throw std::invalid_argument("babai: degenerate basis");
  }
  std::vector<BigFloat> y(target);
  std::vector<BigInt> coeff(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    BigFloat proj = 0;
    for (int c = 0; c < m; ++c) proj += y[c] * gs[i][c];
    proj /= norm2[i];
    const BigInt ci = static_cast<BigInt>(round(proj));
    coeff[i] = ci;
    for (int c = 0; c < m; ++c) y[c] -= BigFloat(ci) * BigFloat(basis[i][c]);
  }
  return coeff;
}

std::vector<BigInt> Lattice::point(const std::vector<BigInt>& coeffs) const {
  std::vector<BigInt> p(basis[0].size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += coeffs[i] * basis[i][c];
  return p;
}

} // namespace lfun::detail
