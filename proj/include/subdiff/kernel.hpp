#pragma once

// Heat-balance-integral geometry for the weak power-law profile
//   Theta(x, t) = 1 - (x / delta(t))^n,   delta(t) = sqrt(D t^mu) * sqrt(F_n(n) j(mu)).
// Everything here works on the dimensionless profile
// Theta = (C - C_inf) / (C_s - C_inf); dimensional values are recovered with
// to_concentration().

#include "subdiff/errors.hpp"

namespace subdiff::kernel {

/// Physical setup of the semi-infinite subdiffusion problem.
class SubdiffusionProblem {
public:
    /// mu must lie in (0, 1); mu = 1 is accepted only with classical_limit.
    SubdiffusionProblem(double mu, double d_mu, double c_s = 1.0, double c_inf = 0.0,
                        bool classical_limit = false);

    double mu() const noexcept { return mu_; }
    double d_mu() const noexcept { return d_mu_; }
    double c_s() const noexcept { return c_s_; }
    double c_inf() const noexcept { return c_inf_; }
    bool classical_limit() const noexcept { return classical_limit_; }

private:
    double mu_;
    double d_mu_;
    double c_s_;
    double c_inf_;
    bool classical_limit_;
};

/// Profile exponent n > 0 attached to a problem.
class WeakProfileParams {
public:
    WeakProfileParams(SubdiffusionProblem problem, double n);

    const SubdiffusionProblem& problem() const noexcept { return problem_; }
    double n() const noexcept { return n_; }
    double mu() const noexcept { return problem_.mu(); }
    double d_mu() const noexcept { return problem_.d_mu(); }

private:
    SubdiffusionProblem problem_;
    double n_;
};

/// delta(t) = prefactor * t^growth_exponent, integration constant fixed at zero.
class PenetrationLaw {
public:
    explicit PenetrationLaw(const WeakProfileParams& params);

    double prefactor() const noexcept { return prefactor_; }
    double growth_exponent() const noexcept { return growth_exponent_; }
    static constexpr double p1() noexcept { return 0.0; }

    double operator()(double t) const;

private:
    double prefactor_;
    double growth_exponent_;
};

/// j(mu) = Gamma(2 - mu) / (2 - mu), mu in (0, 1].
double j_mu(double mu);

/// F_n(n) = 2 (n + 1) / n, n > 0.
double f_n(double n);

/// N = (n + 1) Gamma(2 - mu) / n.
double hbi_constant(double n, double mu);

/// delta(t) from the closed-form penetration law; t >= 0.
double penetration_depth(const WeakProfileParams& params, double t);

/// Weak profile; 0 beyond the front.
double theta_weak(const WeakProfileParams& params, double x, double t);

/// Weak profile in the similarity variable eta = x / sqrt(D t^mu).
double theta_weak_similarity(double n, double mu, double eta);

/// Complete parabolic profile (1 - x/delta)^n, kept as a comparison curve.
double theta_complete(double x_over_delta, double n);

/// eta = x / sqrt(D t^mu).
double similarity(const SubdiffusionProblem& problem, double x, double t);

/// Time at which the front reaches a slab of length L.
double critical_time(const WeakProfileParams& params, double slab_length);

/// Profile 1 - (x/L)^n once the front has reached the far wall.
double theta_slab(double x, double slab_length, double n);

double to_concentration(const SubdiffusionProblem& problem, double theta);
double to_theta(const SubdiffusionProblem& problem, double concentration);

}  // namespace subdiff::kernel
