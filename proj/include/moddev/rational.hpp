#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace moddev {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Conversions shared by the templated (double / exact) code paths.
template <class Scalar>
Scalar from_double(double v) {
  return Scalar(v);
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// (a)_k = a (a-1) ... (a-k+1); zero whenever 0 <= a < k.
template <class Scalar>
Scalar falling(std::int64_t a, int k) {
  Scalar out(1);
  for (int j = 0; j < k; ++j) out *= Scalar(a - j);
  return out;
}

template <class Scalar>
Scalar binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return Scalar(0);
  if (r > n - r) r = n - r;
  Scalar out(1);
  for (std::int64_t j = 1; j <= r; ++j) {
    out *= Scalar(n - r + j);
    out /= Scalar(j);
  }
  return out;
}

/// Parses "3", "-1/4", "0.25" or "1e-3" exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace moddev
