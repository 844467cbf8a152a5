#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subdiff/kernel.hpp"
#include "subdiff/parallel.hpp"

namespace subdiff::optimizer {

/// Where and how the domain-equation residual of the weak profile is taken.
class ResidualSpec {
public:
    ResidualSpec(kernel::WeakProfileParams params, double t, bool include_diffusivity_factor = true);

    const kernel::WeakProfileParams& params() const noexcept { return params_; }
    double t() const noexcept { return t_; }
    bool include_diffusivity_factor() const noexcept { return include_diffusivity_factor_; }

private:
    kernel::WeakProfileParams params_;
    double t_;
    bool include_diffusivity_factor_;
};

/// e(x, t) = [1 - (x/delta)^n] t^(-mu)/Gamma(2-mu) + D n(n-1) x^(n-2)/delta^n.
/// With the diffusivity factor switched off the second term drops D.
double residual(const ResidualSpec& spec, double x);

/// E(t) = int_0^delta e(x, t)^2 dx by adaptive quadrature. Defined for n = 1
/// and n > 1.5; DivergenceError otherwise.
double error_functional_numeric(const ResidualSpec& spec);

/// Time-free part of the truncated error functional (the term growing like
/// t^(3mu/2) removed). Signed; PoleError at n = 1.5.
double k1_paper(double n, double mu, double d_mu);

enum class Method { paper_k1, rederived_quadrature };

std::string to_string(Method method);

inline constexpr double kExponentPole = 1.5;
inline constexpr double kPoleGuard = 1e-3;
inline constexpr double kScanStep = 1e-3;

struct SearchBounds {
    double lo = 1.0;
    double hi = 3.0;
};

struct OptimizationResult {
    double n_opt = 0.0;
    double objective_value = 0.0;
    Method method = Method::paper_k1;
    SearchBounds search_bounds{};
    double excluded_pole = kExponentPole;
    /// n_opt landed on a search bound or on the edge of the pole guard.
    bool clamped = false;
};

/// Objective minimized by optimize_exponent for a given method:
///   paper_k1:             |k1_paper(n, mu, D)|
///   rederived_quadrature: E(t) delta(t)^3 at t = 1 (independent of t)
double objective(Method method, double n, double mu, double d_mu);

/// Dense scan with step 1e-3 over [lo, 1.5 - eps] U [1.5 + eps, hi], refined
/// by golden-section search around the best grid point. The quadrature route
/// only admits n = 1 from the lower interval. Ties resolve to the smaller n.
OptimizationResult optimize_exponent(double mu, double d_mu, Method method, SearchBounds bounds = {},
                                     ExecPolicy policy = ExecPolicy::parallel);

struct Table1Row {
    double mu = 0.0;
    double j_mu = 0.0;
    std::vector<OptimizationResult> optima;  ///< one per diffusivity, same order as Table1::d_values
};

struct Table1 {
    std::vector<double> d_values;
    Method method = Method::paper_k1;
    std::vector<Table1Row> rows;
};

/// Diffusivities of the reference table: glucose, sucrose and D = 1.
std::vector<double> default_table1_diffusivities();
/// mu = 0.1, 0.2, ..., 0.9
std::vector<double> default_table1_orders();

Table1 table1(const std::vector<double>& d_values, const std::vector<double>& mu_grid,
              Method method = Method::paper_k1, ExecPolicy policy = ExecPolicy::parallel);

}  // namespace subdiff::optimizer
