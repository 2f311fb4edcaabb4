#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace lfun::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Row-major integer lattice basis with exact-arithmetic LLL (delta = 3/4)
// and Babai nearest-plane against the reduced basis.
struct Lattice {
  std::vector<std::vector<BigInt>> basis;

  void lll_reduce();

  // Coefficients c with sum_i c_i basis_i closest (nearest-plane) to target.
  std::vector<BigInt> babai(const std::vector<BigFloat>& target) const;

  std::vector<BigInt> point(const std::vector<BigInt>& coeffs) const;
};

} // namespace lfun::detail
