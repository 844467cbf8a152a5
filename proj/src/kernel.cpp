#include "subdiff/kernel.hpp"

#include <cmath>
#include <string>

#include "subdiff/specfun.hpp"

namespace subdiff::kernel {

namespace {

void check_order(double mu, const char* where)
{
    if (!(mu > 0.0 && mu <= 1.0))
        throw DomainError(std::string(where) + ": fractional order must lie in (0, 1], got " +
                          std::to_string(mu));
}

void check_exponent(double n, const char* where)
{
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError(std::string(where) + ": exponent n must be > 0, got " + std::to_string(n));
}

}  // namespace

SubdiffusionProblem::SubdiffusionProblem(double mu, double d_mu, double c_s, double c_inf,
                                         bool classical_limit)
    : mu_(mu), d_mu_(d_mu), c_s_(c_s), c_inf_(c_inf), classical_limit_(classical_limit)
{
    const bool order_ok = (mu > 0.0 && mu < 1.0) || (classical_limit && mu == 1.0);
    if (!order_ok)
        throw DomainError("SubdiffusionProblem: mu must lie in (0, 1) (mu = 1 needs the classical limit), got " +
                          std::to_string(mu));
    if (!(d_mu > 0.0) || !std::isfinite(d_mu))
        throw DomainError("SubdiffusionProblem: diffusivity must be > 0");
    if (c_s == c_inf) throw DomainError("SubdiffusionProblem: surface and ambient concentrations coincide");
}

WeakProfileParams::WeakProfileParams(SubdiffusionProblem problem, double n) : problem_(problem), n_(n)
{
    check_exponent(n, "WeakProfileParams");
}

PenetrationLaw::PenetrationLaw(const WeakProfileParams& params)
    : prefactor_(std::sqrt(params.d_mu() * f_n(params.n()) * j_mu(params.mu()))),
      growth_exponent_(0.5 * params.mu())
{
}

double PenetrationLaw::operator()(double t) const
{
    if (!(t >= 0.0)) throw DomainError("penetration_depth: time must be >= 0");
    if (t == 0.0) return 0.0;
    return prefactor_ * std::pow(t, growth_exponent_);
}

double j_mu(double mu)
{
    check_order(mu, "j_mu");
    return specfun::gamma(2.0 - mu) / (2.0 - mu);
}

double f_n(double n)
{
    check_exponent(n, "f_n");
    return 2.0 * (n + 1.0) / n;
}

double hbi_constant(double n, double mu)
{
    check_exponent(n, "hbi_constant");
    check_order(mu, "hbi_constant");
    return (n + 1.0) * specfun::gamma(2.0 - mu) / n;
}

double penetration_depth(const WeakProfileParams& params, double t)
{
    return PenetrationLaw(params)(t);
}

double theta_weak(const WeakProfileParams& params, double x, double t)
{
    if (!(x >= 0.0)) throw DomainError("theta_weak: x must be >= 0");
    if (!(t > 0.0)) throw DomainError("theta_weak: t must be > 0");
    const double delta = penetration_depth(params, t);
    if (x >= delta) return 0.0;
    return 1.0 - std::pow(x / delta, params.n());
}

double theta_weak_similarity(double n, double mu, double eta)
{
    check_exponent(n, "theta_weak_similarity");
    if (!(eta >= 0.0)) throw DomainError("theta_weak_similarity: eta must be >= 0");
    const double front = std::sqrt(f_n(n) * j_mu(mu));
    if (eta >= front) return 0.0;
    return 1.0 - std::pow(eta / front, n);
}

double theta_complete(double x_over_delta, double n)
{
    check_exponent(n, "theta_complete");
    if (!(x_over_delta >= 0.0 && x_over_delta <= 1.0))
        throw DomainError("theta_complete: x/delta must lie in [0, 1]");
    return std::pow(1.0 - x_over_delta, n);
}

double similarity(const SubdiffusionProblem& problem, double x, double t)
{
    if (!(x >= 0.0)) throw DomainError("similarity: x must be >= 0");
    if (!(t > 0.0)) throw DomainError("similarity: t must be > 0");
    return x / std::sqrt(problem.d_mu() * std::pow(t, problem.mu()));
}

double critical_time(const WeakProfileParams& params, double slab_length)
{
    if (!(slab_length > 0.0)) throw DomainError("critical_time: slab length must be > 0");
    const double scale = params.d_mu() * f_n(params.n()) * j_mu(params.mu());
    return std::pow(slab_length * slab_length / scale, 1.0 / params.mu());
}

double theta_slab(double x, double slab_length, double n)
{
    check_exponent(n, "theta_slab");
    if (!(slab_length > 0.0)) throw DomainError("theta_slab: slab length must be > 0");
    if (!(x >= 0.0 && x <= slab_length)) throw DomainError("theta_slab: x must lie in [0, L]");
    return 1.0 - std::pow(x / slab_length, n);
}

double to_concentration(const SubdiffusionProblem& problem, double theta)
{
    return problem.c_inf() + (problem.c_s() - problem.c_inf()) * theta;
}

double to_theta(const SubdiffusionProblem& problem, double concentration)
{
    return (concentration - problem.c_inf()) / (problem.c_s() - problem.c_inf());
}

}  // namespace subdiff::kernel
