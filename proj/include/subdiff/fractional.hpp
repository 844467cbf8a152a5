#pragma once

#include <functional>

#include "subdiff/kernel.hpp"

namespace subdiff::fractional {

using TimeFunction = std::function<double(double)>;

/// Settings for the numeric Riemann-Liouville evaluator.
class RLQuadratureSpec {
public:
    explicit RLQuadratureSpec(double mu, double abs_tol = 1e-8, int panels = 64);

    double mu() const noexcept { return mu_; }
    double abs_tol() const noexcept { return abs_tol_; }
    int panels() const noexcept { return panels_; }

private:
    double mu_;
    double abs_tol_;
    int panels_;
};

/// Riemann-Liouville derivative of order mu of f at time t:
///   (1/Gamma(1-mu)) d/dt int_0^t f(tau) (t - tau)^(-mu) dtau.
///
/// The kernel singularity is removed with u = (t - tau)^(1-mu); the integral
/// is done with a composite 16-point Gauss-Legendre rule on graded panels and
/// the outer d/dt is a central difference with h = 1e-5 (t - support_start).
/// f must vanish on [0, support_start); passing the start of its support
/// keeps a kink out of the quadrature. The result with `panels` and
/// 2*`panels` must agree to abs_tol, otherwise NumericalError.
double rl_derivative_numeric(const TimeFunction& f, double t, const RLQuadratureSpec& spec,
                             double support_start = 0.0);

/// Gamma(p+1)/Gamma(p+1-mu) t^(p-mu), the RL derivative of t^p.
double rl_power_law(double p, double mu, double t);

/// Frozen-front closed form [1 - (x/delta)^n] t^(-mu) / Gamma(2-mu).
double rl_weak_profile_closed(const kernel::WeakProfileParams& params, double x, double t);

/// RL derivative of the moving-front profile tau -> Theta(x, tau), computed
/// numerically. Differs from rl_weak_profile_closed, which freezes delta.
double rl_weak_profile_numeric(const kernel::WeakProfileParams& params, double x, double t,
                               const RLQuadratureSpec& spec);

/// Layer integral of the RL derivative of the profile:
///   (1/Gamma(2-mu)) (n/(n+1)) d/dt (delta t^(1-mu)).
/// Analytic derivative for the closed-form law.
double fthbi_single(const kernel::WeakProfileParams& params, double t, const kernel::PenetrationLaw& law);
/// Same, for an arbitrary depth function; d/dt by central difference.
double fthbi_single(const kernel::WeakProfileParams& params, double t, const TimeFunction& delta_fn);

/// Second layer integral: delta(t) times fthbi_single. Equals D_mu for the
/// closed-form law.
double fthbi_double(const kernel::WeakProfileParams& params, double t, const kernel::PenetrationLaw& law);
double fthbi_double(const kernel::WeakProfileParams& params, double t, const TimeFunction& delta_fn);

/// Minimum step count accepted by depth_ode_solve.
inline constexpr int kMinDepthSteps = 1000;

/// Integrates d(Z^2)/dt = 2 N D t^(1-mu), Z(0)^2 = p1, with Heun steps on the
/// mesh t_i = t_end (i/steps)^2 and returns delta = Z / t_end^(1-mu).
double depth_ode_solve(const kernel::WeakProfileParams& params, double t_end, int steps, double p1 = 0.0);

}  // namespace subdiff::fractional
