#pragma once

// R/R', R''/R' and R'''/R' of the Zernike radial polynomials, obtained from the
// hypergeometric ratio F/F' and the differential equation
//
//   x^2 (x^2-1) R'' = [n(n+2) x^2 - m^2] R + x (1 - 3x^2) R'
//
// plus its derivative. R and its derivatives are never evaluated directly.

#include "zernike/errors.hpp"
#include "zernike/hypergeom.hpp"
#include "zernike/polynomial_core.hpp"

#include <optional>

namespace zernike {

/// Inputs this close to x = 0 or x = 1 are rejected.
inline constexpr double singular_guard = 1e-12;

namespace detail {

template <class Real>
void require_interior(const Real& x) {
    if (!(x > Real(singular_guard) && x < Real(1) - Real(singular_guard)))
        throw singular_point("derivative ratios need 0 < x < 1 away from the endpoints");
}

}  // namespace detail

template <class Real>
Real r_over_rprime(const PolyIndex& idx, const Real& x) {
    detail::require_interior(x);
    const int n = idx.n();
    if (n == idx.m()) {
        if (n == 0) throw std::invalid_argument("R_0^0 is constant; R/R' undefined");
        return x / Real(n);
    }
    const auto p = HypParams<Real>::from_index(idx, x);
    const Real ff = f_over_fprime(p);
    // x/(n - 2z F'/F), multiplied through by F/F' so that F/F' -> 0 is harmless.
    const Real denom = Real(n) * ff - Real(2) * p.z;
    if (denom == 0) throw pole_error("R' vanishes at x");
    return x * ff / denom;
}

template <class Real>
Real r2_over_rprime(const PolyIndex& idx, const Real& x, const Real& rrp) {
    detail::require_interior(x);
    const Real x2 = x * x;
    const Real nn = Real(idx.n()) * Real(idx.n() + 2);
    const Real m2 = Real(idx.m()) * Real(idx.m());
    return ((nn - m2 / x2) * rrp + (Real(1) - Real(3) * x2) / x) / (x2 - Real(1));
}

template <class Real>
Real r3_over_rprime(const PolyIndex& idx, const Real& x, const Real& rrp) {
    detail::require_interior(x);
    const Real x2 = x * x;
    const Real x2m = x2 - Real(1);
    const Real nn = Real(idx.n()) * Real(idx.n() + 2);
    const Real m2 = Real(idx.m()) * Real(idx.m());
    const Real r_coeff = x2 * (nn + Real(7) * m2) - Real(5) * x2 * x2 * nn - Real(3) * m2;
    const Real rp_coeff = x * (Real(6) * x2 * (Real(2) * x2 - Real(1)) - m2 * x2m + Real(2) + x2 * x2m * nn);
    return (r_coeff * rrp + rp_coeff) / (x * x2 * x2m * x2m);
}

template <class Real>
struct RatioBundle {
    Real x;
    Real r_over_rp;
    Real r2_over_rp;
    std::optional<Real> r3_over_rp;
};

template <class Real>
RatioBundle<Real> ratio_bundle(const PolyIndex& idx, const Real& x, bool with_third = false) {
    RatioBundle<Real> out{x, r_over_rprime(idx, x), Real(0), std::nullopt};
    out.r2_over_rp = r2_over_rprime(idx, x, out.r_over_rp);
    if (with_third) out.r3_over_rp = r3_over_rprime(idx, x, out.r_over_rp);
    return out;
}

}  // namespace zernike
