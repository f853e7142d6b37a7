#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "momap/core.hpp"

namespace momap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Parses "3", "-2", "7/4". Anything else (decimals, exponents) is rejected:
/// weights and central parameters must be exact.
inline Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorCode::NonRationalWeights, "not an exact rational: '" + text + "'");
  const BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw Error(ErrorCode::NonRationalWeights, "zero denominator in '" + text + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

/// Exact conversion of a double that is an integer; non-integers are refused.
inline Rational rational_from_integral_double(double x) {
  if (!std::isfinite(x) || std::floor(x) != x || std::abs(x) > 9.0e15)
    throw Error(ErrorCode::NonRationalWeights, "floating weight is not an exact integer");
  return Rational(static_cast<long long>(x));
}

inline BigInt floor_of(const Rational& q) {
  const BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  return n >= 0 ? BigInt(n / d) : BigInt(-((-n + d - 1) / d));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline RVector to_dense(const RationalVector& v) {
  RVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_double(v[i]);
  return out;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline RationalVector primitive(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  BigInt g = 0;
  std::vector<BigInt> ints;
  for (const auto& q : v) {
    ints.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints.back()));
  }
  RationalVector out;
  for (const auto& x : ints) out.emplace_back(g == 0 ? BigInt(0) : BigInt(x / g));
  return out;
}

}  // namespace momap
