#pragma once

// Exact rational scalars. The base field k = Q; every identity in the
// library is checked with exact equality, so floating point is never used.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace gerstkit {

using Integer = boost::multiprecision::cpp_int;

// Canonical form (gcd(|num|, den) = 1, den > 0) is maintained by the
// backing type on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline Rational rational_from_string(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

inline bool is_zero(const Rational& q) { return q.is_zero(); }

} // namespace gerstkit
