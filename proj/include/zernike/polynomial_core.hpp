#pragma once

// Coefficient-level representation of the Zernike radial polynomials
//
//   R_n^m(x) = sum_{s=0}^{(n-m)/2} (-1)^s C(n-s, s) C(n-2s, (n-m)/2 - s) x^{n-2s}
//
// kept in exact integer arithmetic and converted to the working real type only
// when evaluated. Everything in here is deliberately naive (Horner on the
// expanded coefficients, the upward three-term recurrence) so that it can serve
// as the reference the continued-fraction machinery is checked against.

#include "zernike/errors.hpp"
#include "zernike/real.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace zernike {

/// Largest radial order the CLI accepts; the library itself does not cap n.
inline constexpr int max_supported_order = 60;

/// Validated (n, m) pair identifying R_n^m: 0 <= m <= n, n - m even.
class PolyIndex {
public:
    PolyIndex(int n, int m) : n_(n), m_(m) {
        if (n < 0 || m < 0)
            throw invalid_index("Zernike index must be nonnegative: (" + std::to_string(n) + ", " +
                                std::to_string(m) + ")");
        if (m > n)
            throw invalid_index("Zernike index needs m <= n: (" + std::to_string(n) + ", " +
                                std::to_string(m) + ")");
        if ((n - m) % 2 != 0)
            throw invalid_index("Zernike index needs n - m even: (" + std::to_string(n) + ", " +
                                std::to_string(m) + ")");
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }

    /// Number of roots in (0, 1), equal to (n - m) / 2.
    int root_count() const noexcept { return (n_ - m_) / 2; }

    friend auto operator<=>(const PolyIndex&, const PolyIndex&) = default;

private:
    int n_;
    int m_;
};

inline cpp_int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    cpp_int r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

/// c_s multiplies x^{n-2s}, s = 0 .. (n-m)/2.
struct CoefficientList {
    PolyIndex index;
    std::vector<cpp_int> coeffs;
};

inline CoefficientList coefficients(const PolyIndex& idx) {
    const int n = idx.n();
    const int k = idx.root_count();
    CoefficientList out{idx, {}};
    out.coeffs.reserve(static_cast<std::size_t>(k) + 1);
    for (int s = 0; s <= k; ++s) {
        cpp_int c = binomial(n - s, s) * binomial(n - 2 * s, k - s);
        out.coeffs.push_back(s % 2 == 0 ? c : cpp_int(-c));
    }
    return out;
}

/// Dense ascending-power coefficients of d^order/dx^order R_n^m, exact.
inline std::vector<cpp_int> dense_derivative_coefficients(const PolyIndex& idx, int order) {
    const int n = idx.n();
    std::vector<cpp_int> dense(static_cast<std::size_t>(n) + 1, 0);
    const auto list = coefficients(idx);
    for (std::size_t s = 0; s < list.coeffs.size(); ++s)
        dense[static_cast<std::size_t>(n) - 2 * s] = list.coeffs[s];
    for (int d = 0; d < order; ++d) {
        if (dense.size() <= 1) {
            dense.assign(1, 0);
            continue;
        }
        std::vector<cpp_int> next(dense.size() - 1);
        for (std::size_t p = 1; p < dense.size(); ++p) next[p - 1] = dense[p] * static_cast<int>(p);
        dense = std::move(next);
    }
    return dense;
}

/// R_n^m and its first three derivatives by Horner's scheme on exactly
/// differentiated coefficients. Also exposes the reduced polynomial
/// P(y) with R_n^m(x) = x^m P(x^2).
///
/// For built-in floating types the sums run in long double: the alternating
/// coefficients reach 1e5 by n = 20 and cancel away most of a double.
template <class Real>
class RadialPolynomial {
    using Acc = std::conditional_t<std::is_floating_point_v<Real>, long double, Real>;

public:
    static constexpr int max_order = 3;

    explicit RadialPolynomial(const PolyIndex& idx) : idx_(idx) {
        for (int d = 0; d <= max_order; ++d) {
            for (const auto& c : dense_derivative_coefficients(idx, d))
                derivs_[static_cast<std::size_t>(d)].push_back(to_real<Acc>(c));
        }
        // P(y) = sum_s c_s y^{k-s}; store ascending in y.
        const auto list = coefficients(idx);
        for (auto it = list.coeffs.rbegin(); it != list.coeffs.rend(); ++it)
            reduced_.push_back(to_real<Acc>(*it));
    }

    const PolyIndex& index() const noexcept { return idx_; }

    Real operator()(const Real& x, int order = 0) const {
        if (order < 0 || order > max_order)
            throw std::invalid_argument("derivative order must be in 0..3, got " + std::to_string(order));
        return horner(derivs_[static_cast<std::size_t>(order)], x);
    }

    Real reduced(const Real& y) const { return horner(reduced_, y); }

private:
    static Real horner(const std::vector<Acc>& c, const Real& x) {
        const Acc t = x;
        Acc acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
        return static_cast<Real>(acc);
    }

    PolyIndex idx_;
    std::array<std::vector<Acc>, max_order + 1> derivs_;
    std::vector<Acc> reduced_;
};

template <class Real>
Real evaluate(const PolyIndex& idx, const Real& x, int order = 0) {
    return RadialPolynomial<Real>(idx)(x, order);
}

namespace detail {

/// Runs the upward recurrence in n at fixed m, seeded with R_m^m = x^m and
/// R_{m+2}^m = (m+2) x^{m+2} - (m+1) x^m, handing every R_k^m(x),
/// k = m, m+2, ..., n, to `visit`. Returns R_n^m(x).
template <class Real, class Visit>
Real walk_recurrence(const PolyIndex& idx, const Real& x, Visit&& visit) {
    const int m = idx.m();
    Real xm = 1;
    for (int j = 0; j < m; ++j) xm *= x;
    visit(xm);
    if (idx.n() == m) return xm;

    const Real x2 = x * x;
    Real prev = xm;
    Real cur = Real(m + 2) * xm * x2 - Real(m + 1) * xm;
    visit(cur);
    for (int k = m + 2; k < idx.n(); k += 2) {
        const int a = -(k - m) / 2;
        const int b = -(k + m) / 2;
        const Real kk = Real(k) * Real(k + 2);
        const Real lhs = Real(2) * Real(k) * Real(a - 1) * Real(b - 1);
        const Real next = (Real(k + 1) * (Real(2) * kk * x2 - Real(m) * Real(m) - kk) * cur -
                           Real(2) * Real(a) * Real(b) * Real(k + 2) * prev) /
                          lhs;
        prev = cur;
        cur = next;
        visit(cur);
    }
    return cur;
}

}  // namespace detail

template <class Real>
Real evaluate_recurrence(const PolyIndex& idx, const Real& x) {
    return detail::walk_recurrence(idx, x, [](const Real&) {});
}

/// Number of roots of R_n^m in (x, 1), for 0 < x < 1: the sign changes of
/// R_m^m(x), R_{m+2}^m(x), ..., R_n^m(x). The members of that sequence are
/// orthogonal in y = x^2 and have positive leading coefficients, so it is a
/// Sturm sequence.
template <class Real>
int count_roots_above(const PolyIndex& idx, const Real& x) {
    int changes = 0;
    int last_sign = 0;
    detail::walk_recurrence(idx, x, [&](const Real& v) {
        const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (sign == 0) return;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    });
    return changes;
}

struct PowerTerm {
    int n;
    cpp_rational h;
};

/// x^i = sum_n h_{i,n,m} R_n^m(x), n = m, m+2, ..., i.
struct PowerDecomposition {
    int i;
    int m;
    std::vector<PowerTerm> terms;
};

inline PowerDecomposition decompose_power(int i, int m) {
    if (m < 0 || i < m || (i - m) % 2 != 0)
        throw invalid_index("power decomposition needs i >= m >= 0 and i - m even: (i=" +
                            std::to_string(i) + ", m=" + std::to_string(m) + ")");
    PowerDecomposition out{i, m, {}};
    for (int n = m; n <= i; n += 2) {
        const auto list = coefficients(PolyIndex(n, m));
        cpp_rational sum = 0;
        for (std::size_t s = 0; s < list.coeffs.size(); ++s) {
            const int power = n - 2 * static_cast<int>(s);
            sum += cpp_rational(list.coeffs[s], cpp_int(power + i + 2));
        }
        out.terms.push_back({n, sum * (2 * (n + 1))});
    }
    return out;
}

}  // namespace zernike
