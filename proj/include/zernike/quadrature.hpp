#pragma once

// Gauss rules for the weight y^m on [0, 1]. With y = x^2 the reduced Zernike
// polynomials P(y), R_{m+2s}^m(x) = x^m P(x^2), are orthogonal with weight y^m,
// so the squared roots of R_{m+2s}^m are the s Gauss nodes. Weights come from
// the moment equations  sum_i w_i y_i^k = 1/(m+k+1),  k = 0 .. s-1.

#include "zernike/errors.hpp"
#include "zernike/real.hpp"
#include "zernike/root_solver.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace zernike {

/// Largest point count accepted; beyond this the moment system is hopeless.
inline constexpr int max_rule_points = 12;
/// Point counts above this need a real type with at least 30 digits.
inline constexpr int max_double_rule_points = 8;

template <class Real>
struct QuadratureRule {
    int m;
    int s;
    std::vector<Real> nodes;    ///< ascending in (0, 1)
    std::vector<Real> weights;  ///< all positive, summing to 1/(m+1)
};

template <class Real>
QuadratureRule<Real> gauss_rule(int m, int s, const NewtonConfig<Real>& cfg) {
    if (m < 0) throw std::invalid_argument("gauss_rule needs m >= 0");
    if (s < 1) throw std::invalid_argument("gauss_rule needs s >= 1");
    if (s > max_rule_points)
        throw conditioning_error("moment system for s = " + std::to_string(s) + " points is too ill-conditioned (max " +
                                 std::to_string(max_rule_points) + ")");
    if (s > max_double_rule_points && precision_digits_v<Real> < 30)
        throw conditioning_error("s = " + std::to_string(s) + " points needs at least 30 digits of working precision");

    QuadratureRule<Real> rule{m, s, {}, {}};
    for (const auto& r : all_roots(PolyIndex(m + 2 * s, m), cfg)) rule.nodes.push_back(r.x * r.x);

    using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    Matrix moments(s, s);
    Vector rhs(s);
    for (int k = 0; k < s; ++k) {
        rhs(k) = Real(1) / Real(m + k + 1);
        for (int i = 0; i < s; ++i) {
            Real p = 1;
            for (int j = 0; j < k; ++j) p *= rule.nodes[static_cast<std::size_t>(i)];
            moments(k, i) = p;
        }
    }
    const Vector w = moments.partialPivLu().solve(rhs);

    using std::abs;
    using std::pow;
    const Real tol = pow(std::numeric_limits<Real>::epsilon(), Real(2) / Real(3));
    const Vector residual = moments * w - rhs;
    for (int k = 0; k < s; ++k) {
        if (!(abs(residual(k)) <= tol))
            throw conditioning_error("moment system residual " + format_significant(Real(abs(residual(k))), 3) +
                                     " exceeds tolerance for m = " + std::to_string(m) + ", s = " + std::to_string(s));
    }
    for (int i = 0; i < s; ++i) {
        if (!(w(i) > 0))
            throw conditioning_error("nonpositive Gauss weight for m = " + std::to_string(m) + ", s = " +
                                     std::to_string(s));
        rule.weights.push_back(w(i));
    }
    return rule;
}

/// sum_i w_i f(y_i), approximating the integral of y^m f(y) over [0, 1].
template <class Real, class F>
Real integrate(const QuadratureRule<Real>& rule, F&& f) {
    Real sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

}  // namespace zernike
