#pragma once

#include "subdiff/errors.hpp"

namespace subdiff::specfun {

/// Gamma function. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x), total: exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// log|Gamma(x)|, thread-safe. Undefined (returns +inf) at poles.
double log_abs_gamma(double x);

/// sin(pi x) with exact zeros at integers.
double sin_pi(double x);

/// Airy function Ai on the validated range [-10, 20]; RangeError outside.
double airy_ai(double x);

enum class MWrightMethod {
    series,    ///< power series only; ConvergenceError if it does not settle
    integral,  ///< positive integral representation (no cancellation)
    automatic  ///< series where it is well conditioned, integral otherwise
};

/// Order and truncation policy for the auxiliary M-Wright function.
class MWrightSpec {
public:
    explicit MWrightSpec(double nu, int max_terms = 200, double term_tol = 1e-16,
                         MWrightMethod method = MWrightMethod::automatic);

    double nu() const noexcept { return nu_; }
    int max_terms() const noexcept { return max_terms_; }
    double term_tol() const noexcept { return term_tol_; }
    MWrightMethod method() const noexcept { return method_; }

private:
    double nu_;
    int max_terms_;
    double term_tol_;
    MWrightMethod method_;
};

/// Upper end of the z range on which the series route is validated.
inline constexpr double kMWrightSeriesZMax = 10.0;

/// M_nu(z) = sum_k (-z)^k / (k! Gamma(1 - nu - nu k)), z >= 0.
double m_wright(const MWrightSpec& spec, double z);

/// M_nu(z) through its integral representation over (0, pi); accurate for
/// large z where the series cancels. Exposed for cross-checks.
double m_wright_integral(double nu, double z);

enum class ClosedOrder { half, third };

/// Closed forms: M_{1/2}(z) = exp(-z^2/4)/sqrt(pi), M_{1/3}(z) = 3^{2/3} Ai(z / 3^{1/3}).
double m_wright_closed(ClosedOrder which, double z);

}  // namespace subdiff::specfun
