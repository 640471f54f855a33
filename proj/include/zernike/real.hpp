#pragma once

// Real-type plumbing shared by the templated algorithms: exact integer and
// rational types, conversion into the working real type, and significant-figure
// formatting that behaves like printf("%#.*g") / printf("%.*g") for every backend.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <ios>
#include <limits>
#include <string>
#include <type_traits>

namespace zernike {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

using real50 = boost::multiprecision::cpp_bin_float_50;
using real100 = boost::multiprecision::cpp_bin_float_100;

/// Decimal digits the real type carries (15 for double).
template <class Real>
inline constexpr int precision_digits_v = std::numeric_limits<Real>::digits10;

template <class Real>
Real to_real(const cpp_int& v) {
    if constexpr (std::is_floating_point_v<Real>)
        return v.template convert_to<Real>();
    else
        return Real(v);
}

template <class Real>
Real to_real(const cpp_rational& v) {
    return to_real<Real>(boost::multiprecision::numerator(v)) /
           to_real<Real>(boost::multiprecision::denominator(v));
}

/// Parse a decimal literal such as "1e-30" directly in the working type, so
/// that thresholds below double range or resolution stay exact.
template <class Real>
Real parse_real(const std::string& text) {
    if constexpr (std::is_floating_point_v<Real>) {
        std::size_t used = 0;
        const long double v = std::stold(text, &used);
        if (used != text.size()) throw std::invalid_argument("not a number: " + text);
        return static_cast<Real>(v);
    } else {
        return Real(text);
    }
}

/// Exactly `digits` significant figures, trailing zeros kept (like %#.*g).
template <class Real>
std::string format_significant(const Real& v, int digits) {
    if constexpr (std::is_floating_point_v<Real>) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%#.*g", digits, static_cast<double>(v));
        return buf;
    } else {
        return v.str(digits, std::ios_base::showpoint);
    }
}

/// At most `digits` significant figures, trailing zeros stripped (like %.*g).
template <class Real>
std::string format_general(const Real& v, int digits) {
    if constexpr (std::is_floating_point_v<Real>) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, static_cast<double>(v));
        return buf;
    } else {
        return v.str(digits, std::ios_base::fmtflags(0));
    }
}

template <class Real>
double to_double(const Real& v) {
    if constexpr (std::is_floating_point_v<Real>)
        return static_cast<double>(v);
    else
        return v.template convert_to<double>();
}

}  // namespace zernike
