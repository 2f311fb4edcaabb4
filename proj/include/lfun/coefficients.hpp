#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lfun/dirichlet.hpp"

namespace lfun {

struct DirichletCharacter {
  int modulus = 1;
  std::vector<cd> values; // values[a % q]; zero off units
  bool primitive = false;
  bool odd = false;

  cd operator()(std::int64_t n) const;

  // chi3 (odd quadratic mod 3), chi4 (odd quadratic mod 4),
  // chi5q (even quadratic mod 5), chi5a / chi5b (odd quartic mod 5, conjugates).
  static DirichletCharacter builtin(const std::string& name);
  static const std::vector<std::string>& builtin_names();

  // Validates chi(1)=1, total multiplicativity on units, zero off units,
  // values roots of unity within 1e-12. parity/primitivity are computed.
  static DirichletCharacter from_values(int q, std::vector<cd> values);
};

// Exact Ramanujan tau(1..N) from the eta^24 power series, cached and grown on
// demand. Values fit comfortably in 128 bits at desk scale.
const std::vector<__int128>& tau_table(std::size_t N);
std::string to_string_i128(__int128 v);

// Local Euler factor as a rational function of x = p^{-s}:
// sum_m a(p^m) x^m = num(x) / den(x).
struct LocalFactor {
  std::vector<cd> num{cd(1.0)};
  std::vector<cd> den{cd(1.0)};
  // a(p^0..p^M) by power-series division.
  std::vector<cd> expand(int M) const;
};

// Deterministic generator of Dirichlet coefficients a(n).
class CoefficientSource {
 public:
  enum class Kind { Zeta, DirichletL, Eigenform, Explicit, Lift };

  static CoefficientSource zeta();
  static CoefficientSource dirichlet(DirichletCharacter chi);
  // Normalized weight-12 level-1 eigenform: a(n) = tau(n)/n^(11/2).
  // max_n caps the tau expansion (exact integer arithmetic at construction).
  static CoefficientSource eigenform(std::size_t max_n = 10000);
  static CoefficientSource explicit_list(std::vector<cd> values,
                                         bool multiplicative = false);
  static CoefficientSource lift(CoefficientSource base, int k);

  Kind kind() const { return kind_; }
  std::string describe() const;
  bool multiplicative() const;
  int lift_order() const { return k_; }
  const CoefficientSource* base() const { return base_.get(); }
  const DirichletCharacter* character() const;
  std::size_t explicit_size() const;

  // a(n); throws for out-of-range Explicit queries and n == 0.
  cd coeff(std::uint64_t n) const;

  // Cached prefix a(1..N); grows monotonically, safe for concurrent readers.
  Series prefix(std::size_t N) const;

  // Rational local factor at p for multiplicative kinds with known Euler
  // products (all built-ins and their lifts); nullopt otherwise.
  std::optional<LocalFactor> euler_local(std::uint32_t p) const;

  CoefficientSource(const CoefficientSource& o);
  CoefficientSource(CoefficientSource&& o) noexcept;
  CoefficientSource& operator=(const CoefficientSource& o);
  CoefficientSource& operator=(CoefficientSource&& o) noexcept;

 private:
  CoefficientSource() = default;
  cd coeff_uncached(std::uint64_t n) const;
  void assign_from(const CoefficientSource& o);

  Kind kind_ = Kind::Zeta;
  std::shared_ptr<const CoefficientSource> base_; // Lift
  int k_ = 1;                                     // Lift order
  std::optional<DirichletCharacter> chi_;
  std::vector<cd> explicit_;
  bool explicit_multiplicative_ = false;
  std::size_t eigenform_cap_ = 0;

  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const Series> cache_;
};

// Coefficient law of the k-lift F(ks + (1-k)/2): nonzero only at m = n^k,
// with value a(n) n^((k-1)/2).
cd lift_coeff(const CoefficientSource& base, int k, std::uint64_t m);

struct RamanujanReport {
  double max_ratio = 0.0;       // max_{n<=N} |a(n)| / n^eps
  std::uint64_t argmax = 1;
  bool growth_along_powers = false; // nonzero |a| nondecreasing along n^K
  int power_exponent = 2;           // the K used for the flag
};
RamanujanReport ramanujan_audit(const CoefficientSource& src, std::uint64_t N,
                                double eps);

// Truncated local factor (a(1), a(p), ..., a(p^M)); rejects sources not
// marked multiplicative.
std::vector<cd> euler_factor(const CoefficientSource& src, std::uint32_t p,
                             int M);

// Coefficients of 1/F up to N; requires a(1) != 0.
Series dirichlet_inverse(const CoefficientSource& src, std::size_t N);

} // namespace lfun
