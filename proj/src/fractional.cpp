#include "subdiff/fractional.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "subdiff/specfun.hpp"

namespace subdiff::fractional {

namespace {

constexpr int kGaussPoints = 16;

struct GaussLegendre {
    std::array<double, kGaussPoints> nodes{};    // on [-1, 1]
    std::array<double, kGaussPoints> weights{};
};

// Newton iteration on P_16 from the Chebyshev initial guesses.
GaussLegendre make_gauss_legendre()
{
    GaussLegendre gl;
    constexpr int n = kGaussPoints;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        gl.nodes[i] = x;
        gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

const GaussLegendre& gauss_legendre()
{
    static const GaussLegendre gl = make_gauss_legendre();
    return gl;
}

// int_{tau0}^{t} f(tau) (t - tau)^(-mu) dtau with u = (t - tau)^(1-mu)
// mapped to [0, 1] and graded by sigma(w) = w^2 (3 - 2w).
double weakly_singular_integral(const TimeFunction& f, double t, double tau0, double mu, int panels)
{
    const double span = t - tau0;
    if (span <= 0.0) return 0.0;
    const double a = 1.0 / (1.0 - mu);
    const auto& gl = gauss_legendre();
    const double h = 1.0 / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        double panel = 0.0;
        for (int i = 0; i < kGaussPoints; ++i) {
            const double w = mid + 0.5 * h * gl.nodes[i];
            const double sigma = w * w * (3.0 - 2.0 * w);
            const double jac = 6.0 * w * (1.0 - w);
            panel += gl.weights[i] * f(t - span * std::pow(sigma, a)) * jac;
        }
        sum += 0.5 * h * panel;
    }
    return std::pow(span, 1.0 - mu) / (1.0 - mu) * sum;
}

double rl_central_difference(const TimeFunction& f, double t, double tau0, double mu, int panels)
{
    const double h = 1e-5 * (t - tau0);
    const double up = weakly_singular_integral(f, t + h, tau0, mu, panels);
    const double down = weakly_singular_integral(f, t - h, tau0, mu, panels);
    return (up - down) / (2.0 * h) * specfun::reciprocal_gamma(1.0 - mu);
}

void check_time(double t, const char* where)
{
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(where) + ": t must be > 0");
}

}  // namespace

RLQuadratureSpec::RLQuadratureSpec(double mu, double abs_tol, int panels)
    : mu_(mu), abs_tol_(abs_tol), panels_(panels)
{
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("RLQuadratureSpec: mu must lie in (0, 1)");
    if (!(abs_tol > 0.0)) throw DomainError("RLQuadratureSpec: abs_tol must be > 0");
    if (panels < 16) throw DomainError("RLQuadratureSpec: panels must be >= 16");
}

double rl_derivative_numeric(const TimeFunction& f, double t, const RLQuadratureSpec& spec, double support_start)
{
    check_time(t, "rl_derivative_numeric");
    if (!(support_start >= 0.0 && support_start < t))
        throw DomainError("rl_derivative_numeric: support start must lie in [0, t)");

    const double coarse = rl_central_difference(f, t, support_start, spec.mu(), spec.panels());
    const double fine = rl_central_difference(f, t, support_start, spec.mu(), 2 * spec.panels());
    if (!(std::abs(fine - coarse) <= spec.abs_tol()))
        throw NumericalError("fractional", "RL quadrature refinement changed the result by " +
                                               std::to_string(std::abs(fine - coarse)) + " > abs_tol " +
                                               std::to_string(spec.abs_tol()));
    return fine;
}

double rl_power_law(double p, double mu, double t)
{
    if (!(p >= 0.0)) throw DomainError("rl_power_law: p must be >= 0");
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("rl_power_law: mu must lie in (0, 1)");
    check_time(t, "rl_power_law");
    return specfun::gamma(p + 1.0) * specfun::reciprocal_gamma(p + 1.0 - mu) * std::pow(t, p - mu);
}

double rl_weak_profile_closed(const kernel::WeakProfileParams& params, double x, double t)
{
    check_time(t, "rl_weak_profile_closed");
    const double delta = kernel::penetration_depth(params, t);
    if (!(x >= 0.0 && x <= delta))
        throw DomainError("rl_weak_profile_closed: x must lie in [0, delta(t)]");
    const double mu = params.mu();
    return (1.0 - std::pow(x / delta, params.n())) * std::pow(t, -mu) / specfun::gamma(2.0 - mu);
}

double rl_weak_profile_numeric(const kernel::WeakProfileParams& params, double x, double t,
                               const RLQuadratureSpec& spec)
{
    check_time(t, "rl_weak_profile_numeric");
    if (!(x >= 0.0)) throw DomainError("rl_weak_profile_numeric: x must be >= 0");
    if (x >= kernel::penetration_depth(params, t)) return 0.0;
    // The front passes x at the critical time of a slab of length x.
    const double arrival = x == 0.0 ? 0.0 : kernel::critical_time(params, x);
    auto profile = [&](double tau) { return tau <= arrival ? 0.0 : kernel::theta_weak(params, x, tau); };
    return rl_derivative_numeric(profile, t, spec, arrival);
}

double fthbi_single(const kernel::WeakProfileParams& params, double t, const kernel::PenetrationLaw& law)
{
    check_time(t, "fthbi_single");
    const double mu = params.mu();
    const double n = params.n();
    // d/dt (P t^(1 - mu/2)) = P (1 - mu/2) t^(-mu/2)
    const double rate = law.prefactor() * (1.0 - 0.5 * mu) * std::pow(t, -0.5 * mu);
    return n / (n + 1.0) * rate / specfun::gamma(2.0 - mu);
}

double fthbi_single(const kernel::WeakProfileParams& params, double t, const TimeFunction& delta_fn)
{
    check_time(t, "fthbi_single");
    const double mu = params.mu();
    const double n = params.n();
    const double h = 1e-5 * t;
    auto z = [&](double s) { return delta_fn(s) * std::pow(s, 1.0 - mu); };
    const double rate = (z(t + h) - z(t - h)) / (2.0 * h);
    return n / (n + 1.0) * rate / specfun::gamma(2.0 - mu);
}

double fthbi_double(const kernel::WeakProfileParams& params, double t, const kernel::PenetrationLaw& law)
{
    return law(t) * fthbi_single(params, t, law);
}

double fthbi_double(const kernel::WeakProfileParams& params, double t, const TimeFunction& delta_fn)
{
    return delta_fn(t) * fthbi_single(params, t, delta_fn);
}

double depth_ode_solve(const kernel::WeakProfileParams& params, double t_end, int steps, double p1)
{
    if (steps < kMinDepthSteps)
        throw DomainError("depth_ode_solve: steps must be >= " + std::to_string(kMinDepthSteps));
    if (!(t_end >= 0.0)) throw DomainError("depth_ode_solve: t_end must be >= 0");
    if (t_end == 0.0 && p1 == 0.0) return 0.0;
    if (t_end == 0.0) throw DomainError("depth_ode_solve: delta is unbounded at t = 0 when p1 != 0");

    const double mu = params.mu();
    const double rate = 2.0 * kernel::hbi_constant(params.n(), mu) * params.d_mu();
    auto rhs = [&](double t) { return rate * std::pow(t, 1.0 - mu); };

    // Graded mesh keeps second order despite the t^(1-mu) cusp at 0.
    double z2 = p1;
    double t_prev = 0.0;
    double f_prev = rhs(0.0);
    for (int i = 1; i <= steps; ++i) {
        const double s = static_cast<double>(i) / steps;
        const double t_next = t_end * s * s;
        const double f_next = rhs(t_next);
        z2 += 0.5 * (t_next - t_prev) * (f_prev + f_next);
        t_prev = t_next;
        f_prev = f_next;
    }
    if (z2 < 0.0) throw NumericalError("fractional", "depth ODE produced negative Z^2");
    return std::sqrt(z2) / std::pow(t_end, 1.0 - mu);
}

}  // namespace subdiff::fractional
