#pragma once

#include <stdexcept>
#include <string>

namespace zernike {

/// (n, m) outside the admissible Zernike index set.
class invalid_index : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A partial denominator of a continued fraction (or of R/R') vanished.
/// Recoverable: the caller may retry from a slightly perturbed abscissa.
class pole_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Abscissa too close to x = 0 or x = 1, where the derivative identities are singular.
class singular_point : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Newton iteration did not settle within the iteration budget.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, int n, int m, int rank, double last_iterate, double gap)
        : std::runtime_error(what), n_(n), m_(m), rank_(rank), last_(last_iterate), gap_(gap) {}

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int rank() const noexcept { return rank_; }
    double last_iterate() const noexcept { return last_; }
    double gap() const noexcept { return gap_; }

private:
    int n_, m_, rank_;
    double last_, gap_;
};

/// Root bootstrap landed on an already known root or out of order.
class bootstrap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bisection oracle found a sign-change count different from (n-m)/2.
class oracle_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Moment system too ill-conditioned for the working precision.
class conditioning_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zernike
