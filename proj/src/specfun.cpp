#include "subdiff/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "subdiff/quadrature.hpp"

namespace subdiff::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_gamma_pole(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Maclaurin pair for Ai; adequate while |x| <= 2 (loses < 3 digits).
double airy_maclaurin(double x)
{
    const double c1 = 0.355028053887817239260;  // Ai(0)
    const double c2 = 0.258819403792806798405;  // -Ai'(0)
    const double x3 = x * x * x;
    double f = 1.0, g = x;
    double tf = 1.0, tg = x;
    for (int k = 0; k < 60; ++k) {
        tf *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        tg *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-18 * std::abs(f) && std::abs(tg) < 1e-18 * std::abs(g)) break;
    }
    return c1 * f - c2 * g;
}

}  // namespace

double gamma(double x)
{
    if (is_gamma_pole(x))
        throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
    return std::tgamma(x);
}

double log_abs_gamma(double x)
{
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double sin_pi(double x)
{
    // r in [-1, 1]; integers map to exact zeros.
    const double r = std::remainder(x, 2.0);
    const double a = std::abs(r);
    double s = 0.0;
    if (a <= 0.5)
        s = std::sin(kPi * a);
    else
        s = std::sin(kPi * (1.0 - a));
    return r < 0.0 ? -s : s;
}

double reciprocal_gamma(double x)
{
    if (is_gamma_pole(x)) return 0.0;
    if (x >= 0.5) {
        if (x > 171.0) return std::exp(-log_abs_gamma(x));
        return 1.0 / std::tgamma(x);
    }
    // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
    const double s = sin_pi(x);
    if (1.0 - x < 171.0) return s * std::tgamma(1.0 - x) / kPi;
    return s * std::exp(log_abs_gamma(1.0 - x)) / kPi;
}

double airy_ai(double x)
{
    if (!(x >= -10.0 && x <= 20.0))
        throw RangeError("airy_ai: argument " + std::to_string(x) + " outside validated range [-10, 20]");
    if (std::abs(x) <= 2.0) return airy_maclaurin(x);

    const double ax = std::abs(x);
    const double zeta = 2.0 / 3.0 * ax * std::sqrt(ax);
    if (x > 0.0) return std::sqrt(x / 3.0) / kPi * std::cyl_bessel_k(1.0 / 3.0, zeta);
    return 0.5 * std::sqrt(ax) *
           (std::cyl_bessel_j(1.0 / 3.0, zeta) - std::cyl_neumann(1.0 / 3.0, zeta) / std::sqrt(3.0));
}

MWrightSpec::MWrightSpec(double nu, int max_terms, double term_tol, MWrightMethod method)
    : nu_(nu), max_terms_(max_terms), term_tol_(term_tol), method_(method)
{
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("MWrightSpec: order nu must lie in (0, 1), got " + std::to_string(nu));
    if (max_terms < 1) throw DomainError("MWrightSpec: max_terms must be >= 1");
    if (!(term_tol > 0.0)) throw DomainError("MWrightSpec: term_tol must be > 0");
}

namespace {

struct SeriesSum {
    double value = 0.0;
    double abs_sum = 0.0;  // sum of |term|, measures cancellation
    bool converged = false;
};

SeriesSum m_wright_series(const MWrightSpec& spec, double z)
{
    const double nu = spec.nu();
    SeriesSum out;
    const double log_z = z > 0.0 ? std::log(z) : 0.0;
    for (int k = 0; k < spec.max_terms(); ++k) {
        const double x = 1.0 - nu - nu * k;
        double term = 0.0;
        double envelope = 0.0;
        if (k == 0) {
            term = reciprocal_gamma(x);
            envelope = std::abs(term);
        } else if (z == 0.0) {
            envelope = 0.0;
        } else {
            // |z^k / k!| * Gamma(1 - x) / pi, then the signed sin(pi x) factor.
            const double log_env = k * log_z - log_abs_gamma(k + 1.0) +
                                   (x < 0.5 ? log_abs_gamma(1.0 - x) - std::log(kPi)
                                            : -log_abs_gamma(x));
            envelope = std::exp(log_env);
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            term = x < 0.5 ? sign * envelope * sin_pi(x) : sign * envelope;
        }
        out.value += term;
        out.abs_sum += std::abs(term);
        if (k > 0 && envelope < spec.term_tol() * std::abs(out.value)) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

}  // namespace

double m_wright_integral(double nu, double z)
{
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("m_wright_integral: nu must lie in (0, 1)");
    if (!(z >= 0.0)) throw DomainError("m_wright_integral: z must be >= 0");
    if (z == 0.0) return reciprocal_gamma(1.0 - nu);

    const double a = 1.0 / (1.0 - nu);
    const double za = std::pow(z, a);
    // A(phi) = sin(nu phi)^(nu a) sin((1-nu) phi) / sin(phi)^a; the powers of
    // sin(phi) cancel, so it is evaluated as ratios that stay finite at 0.
    const double amp0 = std::pow(nu, nu * a) * (1.0 - nu);
    auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        if (phi < 1e-150) return amp0 * std::exp(-za * amp0);
        if (!(s > 0.0)) return 0.0;
        const double amp = std::pow(std::sin(nu * phi) / s, nu * a) * std::sin((1.0 - nu) * phi) / s;
        if (amp > 1e300) return 0.0;
        return amp * std::exp(-za * amp);
    };
    const double split = kPi - std::min(1.0, z);
    const double value = quad::integrate_relative(integrand, {0.0, split, kPi}, 1e-13, 1e-15, "specfun");
    return a / kPi * std::pow(z, nu * a) * value;
}

double m_wright(const MWrightSpec& spec, double z)
{
    if (!(z >= 0.0)) throw DomainError("m_wright: z must be >= 0, got " + std::to_string(z));

    switch (spec.method()) {
    case MWrightMethod::integral:
        return m_wright_integral(spec.nu(), z);
    case MWrightMethod::series: {
        if (z > kMWrightSeriesZMax)
            throw RangeError("m_wright: series route validated only for z <= 10, got " + std::to_string(z));
        const auto s = m_wright_series(spec, z);
        if (!s.converged)
            throw ConvergenceError("specfun", "M-Wright series did not converge within " +
                                                  std::to_string(spec.max_terms()) + " terms at z = " +
                                                  std::to_string(z));
        return s.value;
    }
    case MWrightMethod::automatic:
        break;
    }

    if (z <= kMWrightSeriesZMax) {
        const auto s = m_wright_series(spec, z);
        // Accept the series while fewer than ~4 digits cancel.
        if (s.converged && s.abs_sum <= 1e4 * std::abs(s.value)) return s.value;
    }
    return m_wright_integral(spec.nu(), z);
}

double m_wright_closed(ClosedOrder which, double z)
{
    if (!(z >= 0.0)) throw DomainError("m_wright_closed: z must be >= 0");
    if (which == ClosedOrder::half) return std::exp(-0.25 * z * z) / std::sqrt(kPi);
    const double cbrt3 = std::cbrt(3.0);
    return cbrt3 * cbrt3 * airy_ai(z / cbrt3);
}

}  // namespace subdiff::specfun
