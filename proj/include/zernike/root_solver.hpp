#pragma once

// All positive roots of R_n^m by a third-order (Halley-type) Newton iteration
//
//   dx = -(f/f') / (1 - (f/f')(f''/f')/2),
//
// with f/f' and f''/f' from derivative_ratios.hpp. The smallest root starts
// from a closed-form or heuristic guess; every further root starts from a
// cubic Taylor extrapolation off the previous one.

#include "zernike/derivative_ratios.hpp"
#include "zernike/errors.hpp"
#include "zernike/polynomial_core.hpp"
#include "zernike/real.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace zernike {

template <class Real>
struct NewtonConfig {
    Real eps;           ///< stop when successive iterates differ by less than this
    int max_iter = 20;
    int precision_digits;

    /// eps = 1e-30 when the type carries >= 30 digits, 1e-15 otherwise.
    static NewtonConfig defaults() {
        constexpr int digits = precision_digits_v<Real>;
        return NewtonConfig{digits >= 30 ? parse_real<Real>("1e-30") : parse_real<Real>("1e-15"), 20, digits};
    }

    void validate() const {
        if (!(eps > 0)) throw std::invalid_argument("NewtonConfig: eps must be positive");
        if (max_iter < 1) throw std::invalid_argument("NewtonConfig: max_iter must be >= 1");
        if (precision_digits < 15) throw std::invalid_argument("NewtonConfig: precision_digits must be >= 15");
        if (precision_digits > precision_digits_v<Real>)
            throw std::invalid_argument("NewtonConfig: precision_digits exceeds the real type (" +
                                        std::to_string(precision_digits_v<Real>) + " digits)");
    }
};

template <class Real>
struct RootRecord {
    PolyIndex idx;
    int rank;         ///< 1-based, ascending in x
    Real x;
    int iterations;
    Real residual;    ///< |R_n^m(x)| by Horner
};

/// Records ordered by m, then n, then rank.
template <class Real>
struct RootTable {
    std::vector<RootRecord<Real>> records;
};

template <class Real>
Real initial_guess(const PolyIndex& idx) {
    const int n = idx.n();
    const int m = idx.m();
    if (n == m) throw std::invalid_argument("R_n^n has no root in (0, 1)");
    using std::sqrt;
    const int a = -(n - m) / 2;
    const int b = -(n + m) / 2;
    if (n - m == 2) return sqrt(Real(m + 1) / Real(a * (b - 1)));
    if (n - m == 4) {
        // 1 - A y + B y^2 = 0 is the whole bracket when (n-m)/2 = 2.
        const Real A = Real(a * (b - 1)) / Real(m + 1);
        const Real B = Real(a * (a + 1)) * Real((b - 1) * (b - 2)) / (Real(2) * Real(m + 1) * Real(m + 2));
        const Real y = (A - sqrt(A * A - Real(4) * B)) / (Real(2) * B);
        return sqrt(y);
    }
    return (Real(146) * m / 100 + Real(241) / 100) / (Real(n) + Real(46) * m / 100 + Real(106) / 100);
}

/// One third-order Newton correction at x. Falls back to the plain Newton
/// step if the Halley denominator vanishes.
template <class Real>
Real halley_correction(const PolyIndex& idx, const Real& x) {
    const Real rrp = r_over_rprime(idx, x);
    const Real r2 = r2_over_rprime(idx, x, rrp);
    const Real denom = Real(1) - rrp * r2 / Real(2);
    if (denom == 0) return -rrp;
    return -rrp / denom;
}

template <class Real>
RootRecord<Real> newton_root(const PolyIndex& idx, const Real& x0, const NewtonConfig<Real>& cfg, int rank = 1) {
    if (idx.n() == idx.m()) throw std::invalid_argument("newton_root needs n > m");
    cfg.validate();
    using std::abs;
    const Real lo = Real(singular_guard);
    const Real hi = Real(1) - Real(singular_guard);
    if (!(x0 > 0 && x0 < 1)) throw std::invalid_argument("newton_root needs 0 < x0 < 1");

    Real x = x0;
    if (!(x > lo)) x = lo * 2;
    if (!(x < hi)) x = Real(1) - Real(singular_guard) * 2;
    Real gap = 1;
    for (int k = 1; k <= cfg.max_iter; ++k) {
        Real dx;
        try {
            dx = halley_correction(idx, x);
        } catch (const pole_error&) {
            x *= Real(1) + Real(1e-8);
            dx = halley_correction(idx, x);
        }
        // keep iterates inside (0, 1); the identities are singular at both ends
        for (int halvings = 0; !(x + dx > lo && x + dx < hi); ++halvings) {
            if (halvings > 200) throw convergence_error("Newton step could not be kept inside (0, 1)",
                                                        idx.n(), idx.m(), rank, to_double(x), to_double(dx));
            dx /= 2;
        }
        const Real next = x + dx;
        gap = abs(next - x);
        x = next;
        if (gap < cfg.eps) {
            const Real residual = abs(evaluate(idx, x));
            return RootRecord<Real>{idx, rank, x, k, residual};
        }
    }
    throw convergence_error("no convergence for (n=" + std::to_string(idx.n()) + ", m=" + std::to_string(idx.m()) +
                                ", i=" + std::to_string(rank) + ") after " + std::to_string(cfg.max_iter) +
                                " iterations; last iterate " + format_significant(x, 20) + ", gap " +
                                format_general(gap, 3),
                            idx.n(), idx.m(), rank, to_double(x), to_double(gap));
}

/// Start value for the root following `x_root`: the positive solution of
/// 1 + p dx + q dx^2 = 0, p = R''/2R', q = R'''/6R' at the root.
template <class Real>
Real shoot_next(const PolyIndex& idx, const Real& x_root) {
    using std::sqrt;
    const Real p = r2_over_rprime(idx, x_root, Real(0)) / Real(2);
    const Real q = r3_over_rprime(idx, x_root, Real(0)) / Real(6);
    if (q == 0) throw std::invalid_argument("shoot_next: R''' vanishes, no further root to extrapolate to");
    const Real disc = Real(1) - Real(4) * q / (p * p);
    Real x = x_root;
    if (disc > 0) {
        if (p / q > 0)
            x += p / (Real(2) * q) * (Real(-1) + sqrt(disc));
        else
            x += p / (Real(2) * q) * (Real(-1) - sqrt(disc));
    } else {
        x -= p / (Real(2) * q);
    }
    const Real lower = x_root + Real(singular_guard);
    const Real upper = Real(1) - Real(singular_guard);
    if (!(x > lower)) x = lower;
    if (x > upper) x = upper;
    return x;
}

namespace detail {

/// True when the root x is the rank-th one: exactly (n-m)/2 - rank + 1 roots
/// lie above a point just below x. `below` is the previous root (or 0).
template <class Real>
bool has_rank(const PolyIndex& idx, const Real& x, const Real& below, int rank) {
    const Real probe = x - (x - below) * Real(1e-6);
    return count_roots_above(idx, probe) == idx.root_count() - rank + 1;
}

}  // namespace detail

/// The (n-m)/2 roots in (0, 1), ascending. Empty for n = m.
///
/// Every converged root is checked for its rank with count_roots_above. If the
/// Newton run from the guessed or extrapolated start lands on the wrong root
/// (in practice only for n well above 20), the start is bisected on the root
/// count between the previous root and 1 and the run is repeated.
template <class Real>
std::vector<RootRecord<Real>> all_roots(const PolyIndex& idx, const NewtonConfig<Real>& cfg) {
    std::vector<RootRecord<Real>> roots;
    const int count = idx.root_count();
    roots.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        const Real floor = i == 1 ? Real(0) : roots.back().x;
        const Real x0 = i == 1 ? initial_guess<Real>(idx) : shoot_next(idx, floor);
        auto acceptable = [&](const RootRecord<Real>& r) {
            if (i > 1 && !(r.x > floor + Real(10) * cfg.eps)) return false;
            return detail::has_rank(idx, r.x, floor, i);
        };

        std::optional<RootRecord<Real>> found;
        std::exception_ptr first_failure;
        std::string diagnostics;
        try {
            auto rec = newton_root(idx, x0, cfg, i);
            if (acceptable(rec))
                found = std::move(rec);
            else
                diagnostics = "start " + format_significant(x0, 20) + " converged to " + format_significant(rec.x, 20);
        } catch (const convergence_error&) {
            first_failure = std::current_exception();
        } catch (const pole_error&) {
            first_failure = std::current_exception();
        }

        // Recovery: bisect the start on the root count until Newton settles on the right rank.
        Real lo = floor;
        Real hi = Real(1) - Real(singular_guard);
        Real start = x0;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
            if (count_roots_above(idx, start) >= count - i + 1)
                lo = start;
            else
                hi = start;
            start = (lo + hi) / 2;
            try {
                auto rec = newton_root(idx, start, cfg, i);
                if (acceptable(rec)) found = std::move(rec);
            } catch (const convergence_error&) {
            } catch (const pole_error&) {
            }
        }

        if (!found) {
            if (first_failure) std::rethrow_exception(first_failure);
            throw bootstrap_error("root bootstrap for (n=" + std::to_string(idx.n()) + ", m=" +
                                  std::to_string(idx.m()) + ", i=" + std::to_string(i) +
                                  ") did not isolate the next root: " + diagnostics +
                                  (i > 1 ? ", previous root " + format_significant(floor, 20) : std::string()));
        }
        roots.push_back(std::move(*found));
    }
    return roots;
}

/// Every root of every R_n^m with n <= nmax, in m / n / rank order.
template <class Real>
RootTable<Real> root_table(int nmax, const NewtonConfig<Real>& cfg) {
    RootTable<Real> table;
    for (int m = 0; m <= nmax; ++m)
        for (int n = m; n <= nmax; n += 2)
            for (auto& r : all_roots(PolyIndex(n, m), cfg)) table.records.push_back(std::move(r));
    return table;
}

/// Independent brute-force roots: sign changes of the reduced polynomial
/// P(y), R_n^m(x) = x^m P(x^2), on a uniform grid of 10^4 (n-m) cells,
/// each refined by bisection in y.
template <class Real = double>
std::vector<Real> oracle_roots(const PolyIndex& idx) {
    std::vector<Real> out;
    if (idx.n() == idx.m()) return out;
    using std::sqrt;
    using std::abs;
    const RadialPolynomial<Real> poly(idx);
    const long cells = 10000L * (idx.n() - idx.m());
    const Real tol = Real(1e-15);

    Real y_prev = 0;
    Real f_prev = poly.reduced(y_prev);
    for (long j = 1; j <= cells; ++j) {
        const Real y = Real(j) / Real(cells);
        const Real f = poly.reduced(y);
        if (f == 0) {
            out.push_back(sqrt(y));
        } else if (f_prev != 0 && (f < 0) != (f_prev < 0)) {
            Real lo = y_prev, hi = y, flo = f_prev;
            while (hi - lo > tol) {
                const Real mid = (lo + hi) / 2;
                if (mid <= lo || mid >= hi) break;
                const Real fm = poly.reduced(mid);
                if (fm == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push_back(sqrt((lo + hi) / 2));
        }
        y_prev = y;
        f_prev = f;
    }
    if (static_cast<int>(out.size()) != idx.root_count())
        throw oracle_failure("bisection oracle found " + std::to_string(out.size()) + " sign changes for (n=" +
                             std::to_string(idx.n()) + ", m=" + std::to_string(idx.m()) + "), expected " +
                             std::to_string(idx.root_count()));
    return out;
}

}  // namespace zernike
