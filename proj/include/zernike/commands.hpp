#pragma once

// The table / roots / quad commands behind the zernike_roots executable,
// kept free of argument parsing so they can be driven from tests.

#include "zernike/errors.hpp"
#include "zernike/quadrature.hpp"
#include "zernike/real.hpp"
#include "zernike/root_solver.hpp"
#include "zernike/table_io.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace zernike {

enum class ExitCode : int { ok = 0, failure = 1, usage = 2 };

struct CommandOptions {
    int precision = 15;               ///< decimal digits; 15 selects IEEE double output
    std::optional<std::string> eps;   ///< decimal literal, parsed in the working type
    OutputFormat format;
};

namespace detail {

/// Calls `body(std::type_identity<Compute>{}, std::type_identity<Output>{})`
/// with the types serving `precision`. At 15 digits the roots are computed in
/// long double and delivered as IEEE doubles, which makes them the correctly
/// rounded doubles in practice; above that, 50- or 100-digit binary floats do
/// both jobs.
template <class Body>
int dispatch_precision(int precision, std::ostream& err, Body&& body) {
    if (precision < 15 || precision > 100) {
        err << "error: --precision must be between 15 and 100, got " << precision << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    if (precision <= 15) return body(std::type_identity<long double>{}, std::type_identity<double>{});
    if (precision <= 50) return body(std::type_identity<real50>{}, std::type_identity<real50>{});
    return body(std::type_identity<real100>{}, std::type_identity<real100>{});
}

template <class Out, class In>
Out narrow(const In& v) {
    if constexpr (std::is_same_v<Out, In>)
        return v;
    else
        return static_cast<Out>(v);
}

/// Root records rounded to the output type; the residual is re-evaluated at
/// the rounded abscissa.
template <class Out, class In>
std::vector<RootRecord<Out>> narrow_records(const std::vector<RootRecord<In>>& records) {
    std::vector<RootRecord<Out>> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        const Out x = narrow<Out>(r.x);
        Out residual = narrow<Out>(r.residual);
        if constexpr (!std::is_same_v<Out, In>) {
            using std::abs;
            residual = narrow<Out>(abs(evaluate(r.idx, In(x))));
        }
        out.push_back(RootRecord<Out>{r.idx, r.rank, x, r.iterations, residual});
    }
    return out;
}

template <class Real>
std::optional<NewtonConfig<Real>> make_config(const CommandOptions& opts, std::ostream& err) {
    auto cfg = NewtonConfig<Real>::defaults();
    cfg.precision_digits = opts.precision;
    try {
        if (opts.eps) cfg.eps = parse_real<Real>(*opts.eps);
        cfg.validate();
        validate_digits(opts.format.digits, opts.precision);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return std::nullopt;
    }
    return cfg;
}

/// Runs `work`, mapping numerical failures to exit code 1.
template <class Work>
int guarded(std::ostream& err, Work&& work) {
    try {
        work();
        return static_cast<int>(ExitCode::ok);
    } catch (const convergence_error& e) {
        err << "error: convergence failure at (n=" << e.n() << ", m=" << e.m() << ", i=" << e.rank()
            << "): " << e.what() << '\n';
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return static_cast<int>(ExitCode::failure);
}

}  // namespace detail

/// All roots for n <= nmax, ordered m, n, rank.
inline int cmd_table(int nmax, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    if (nmax < 0 || nmax > max_supported_order) {
        err << "error: --nmax must be between 0 and " << max_supported_order << ", got " << nmax << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return detail::dispatch_precision(opts.precision, err, [&]<class Real, class Out>(std::type_identity<Real>,
                                                                                     std::type_identity<Out>) {
        const auto cfg = detail::make_config<Real>(opts, err);
        if (!cfg) return static_cast<int>(ExitCode::usage);
        return detail::guarded(err, [&] {
            const auto records = detail::narrow_records<Out>(root_table(nmax, *cfg).records);
            std::ostringstream buf;
            write_table<Out>(buf, records, opts.format);
            out << buf.str();
        });
    });
}

inline int cmd_roots(int n, int m, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    std::optional<PolyIndex> idx;
    try {
        idx.emplace(n, m);
    } catch (const invalid_index& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    if (n > max_supported_order) {
        err << "error: n must not exceed " << max_supported_order << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return detail::dispatch_precision(opts.precision, err, [&]<class Real, class Out>(std::type_identity<Real>,
                                                                                     std::type_identity<Out>) {
        const auto cfg = detail::make_config<Real>(opts, err);
        if (!cfg) return static_cast<int>(ExitCode::usage);
        return detail::guarded(err, [&] {
            const auto roots = detail::narrow_records<Out>(all_roots(*idx, *cfg));
            std::ostringstream buf;
            write_roots<Out>(buf, roots, opts.format);
            out << buf.str();
        });
    });
}

inline int cmd_quad(int m, int s, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    if (m < 0 || s < 1 || s > max_rule_points || m + 2 * s > max_supported_order) {
        err << "error: quad needs m >= 0, 1 <= s <= " << max_rule_points << " and m + 2s <= " << max_supported_order
            << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return detail::dispatch_precision(opts.precision, err, [&]<class Real, class Out>(std::type_identity<Real>,
                                                                                     std::type_identity<Out>) {
        const auto cfg = detail::make_config<Real>(opts, err);
        if (!cfg) return static_cast<int>(ExitCode::usage);
        return detail::guarded(err, [&] {
            const auto rule = gauss_rule(m, s, *cfg);
            QuadratureRule<Out> out_rule{rule.m, rule.s, {}, {}};
            for (const auto& y : rule.nodes) out_rule.nodes.push_back(detail::narrow<Out>(y));
            for (const auto& w : rule.weights) out_rule.weights.push_back(detail::narrow<Out>(w));
            std::ostringstream buf;
            write_rule(buf, out_rule, opts.format);
            out << buf.str();
        });
    });
}

}  // namespace zernike
