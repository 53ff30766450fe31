#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "homnambu/errors.hpp"

namespace homnambu {

/// Exact rational scalar. Always stored reduced with a positive denominator,
/// so equality is plain value equality and no rounding happens anywhere.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec = std::vector<Scalar>;

/// Build p/q, normalizing the sign into the numerator.
inline Scalar frac(long p, long q) {
  if (q == 0) throw DimensionError("rational with zero denominator");
  return Scalar(p) / Scalar(q);
}

/// Parse "p" or "p/q" (optional leading '-'). Throws FormatError on anything else.
inline Scalar parse_scalar(const std::string& text) {
  const auto bad = [&]() -> FormatError {
    return FormatError("malformed rational '" + text + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string num_s = text.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "" : text.substr(slash + 1);
  const auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num_s, true)) throw bad();
  BigInt num(num_s);
  if (slash == std::string::npos) return Scalar(num);
  if (!is_int(den_s, false)) throw bad();  // sign lives on the numerator only
  BigInt den(den_s);
  if (den == 0) throw FormatError("zero denominator in '" + text + "'");
  return Scalar(num) / Scalar(den);
}

/// Canonical text form: "p" or "p/q" with q > 1.
inline std::string scalar_to_string(const Scalar& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

/// base^e for integer e (negative allowed when base != 0).
inline Scalar scalar_pow(const Scalar& base, int e) {
  if (e < 0) {
    if (base == 0) throw DimensionError("negative power of zero");
    return scalar_pow(Scalar(1) / base, -e);
  }
  Scalar acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace homnambu
