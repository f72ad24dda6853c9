#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace spectra {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Parses "p", "-p", or "p/q"; returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// floor(p/q) for arbitrary sign.
Int floor_div(const Int& p, const Int& q);
/// ceil(p/q) for arbitrary sign.
Int ceil_div(const Int& p, const Int& q);

inline Int floor_rat(const Rational& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rational& r) { return ceil_div(num(r), den(r)); }

/// Largest s >= 0 with s*s <= v. Requires v >= 0.
Int isqrt(const Int& v);

Int gcd(Int a, Int b);
Int lcm(const Int& a, const Int& b);

}  // namespace spectra
