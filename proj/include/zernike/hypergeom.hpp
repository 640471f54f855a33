#pragma once

// Terminating Gauss hypergeometric functions attached to R_n^m:
//
//   R_n^m(x) = C(n, (n-m)/2) x^n F(a, b; c; z),
//   a = -(n-m)/2, b = -(n+m)/2, c = -n, z = 1/x^2.
//
// The ratio F(a,b;c;z) / F(a+1,b+1;c+1;z) is a continued fraction whose k-th
// partial numerator carries the factor (a+k), so it has exactly |a| levels.
// It is evaluated from the deepest level up.

#include "zernike/errors.hpp"
#include "zernike/polynomial_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zernike {

template <class Real>
struct HypParams {
    int a;
    int b;
    int c;
    Real z;

    HypParams(int a_, int b_, int c_, Real z_) : a(a_), b(b_), c(c_), z(std::move(z_)) {
        if (a > 0) throw std::invalid_argument("hypergeometric parameter a must be nonpositive");
        if (c != a + b) throw std::invalid_argument("hypergeometric parameters need c = a + b");
        if (a < b) throw std::invalid_argument("hypergeometric parameters need a >= b");
    }

    /// Parameters of R_n^m at abscissa x (z = 1/x^2).
    static HypParams from_index(const PolyIndex& idx, const Real& x) {
        if (x == 0) throw singular_point("hypergeometric argument 1/x^2 undefined at x = 0");
        const int a = -(idx.n() - idx.m()) / 2;
        const int b = -(idx.n() + idx.m()) / 2;
        return HypParams(a, b, a + b, Real(1) / (x * x));
    }
};

/// F(a,b;c;z) / F(a+1,b+1;c+1;z) for nonpositive integer a <= -1.
template <class Real>
Real cf_ratio(const HypParams<Real>& p) {
    if (p.a >= 0) throw std::invalid_argument("cf_ratio needs a <= -1 (n > m)");
    using std::isfinite;
    const Real& z = p.z;
    // tail holds N_k / D_k, the k-th partial fraction, with N_{|a|} = 0.
    Real tail = 0;
    for (int k = -p.a - 1; k >= 1; --k) {
        const Real denom = Real(p.a + k - p.b) * z + Real(p.c + k) * (Real(1) - tail);
        if (denom == 0 || !isfinite(denom))
            throw pole_error("continued fraction partial denominator vanished at depth " + std::to_string(k));
        tail = Real(p.a + k) * Real(p.c - p.b + k - 1) * z / (Real(p.c + k - 1) * denom);
    }
    return Real(1) - Real(p.b) * z / Real(p.c) - tail;
}

/// F/F' with F' = (ab/c) F(a+1,b+1;c+1;z).
template <class Real>
Real f_over_fprime(const HypParams<Real>& p) {
    if (p.a >= 0) throw std::invalid_argument("f_over_fprime needs a <= -1 (ab != 0)");
    return Real(p.c) / (Real(p.a) * Real(p.b)) * cf_ratio(p);
}

/// Termwise sum of the terminating series; stops after |a| terms, before the
/// Pochhammer symbol of c could reach zero.
template <class Real>
Real series_eval(int a, int b, int c, const Real& z) {
    if (a > 0) throw std::invalid_argument("series_eval needs a nonpositive a");
    if (c <= 0 && c > a)
        throw std::invalid_argument("series_eval needs |a| <= |c| for nonpositive c");
    Real term = 1;
    Real sum = 1;
    for (int s = 0; s < -a; ++s) {
        term *= Real(a + s) * Real(b + s) / (Real(c + s) * Real(s + 1)) * z;
        sum += term;
    }
    return sum;
}

template <class Real>
Real series_eval(const HypParams<Real>& p) {
    return series_eval(p.a, p.b, p.c, p.z);
}

}  // namespace zernike
