#include "subdiff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subdiff/kernel.hpp"
#include "subdiff/quadrature.hpp"

namespace subdiff::oracle {

std::string to_string(OrderReading reading)
{
    return reading == OrderReading::half_order ? "half" : "same";
}

ExactProfileSpec::ExactProfileSpec(double mu, double quad_tol, double eta_max, OrderReading reading)
    : mu_(mu), quad_tol_(quad_tol), eta_max_(eta_max), reading_(reading)
{
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("ExactProfileSpec: mu must lie in (0, 1]");
    if (reading == OrderReading::same_order && mu >= 1.0)
        throw DomainError("ExactProfileSpec: the same-order reading needs mu < 1");
    if (!(quad_tol > 0.0)) throw DomainError("ExactProfileSpec: quad_tol must be > 0");
    if (!(eta_max >= 10.0)) throw DomainError("ExactProfileSpec: eta_max must be >= 10");
}

double ExactProfileSpec::m_wright_order() const noexcept
{
    return reading_ == OrderReading::half_order ? 0.5 * mu_ : mu_;
}

namespace {

double mass_below(double nu, double eta, double quad_tol)
{
    const specfun::MWrightSpec m(nu);
    auto density = [&](double z) { return specfun::m_wright(m, z); };
    // Panels of unit length keep each adaptive run short.
    double total = 0.0;
    for (double a = 0.0; a < eta; a += 1.0) {
        const double b = std::min(eta, a + 1.0);
        total += quad::integrate(density, a, b, quad_tol, "oracle");
    }
    return total;
}

}  // namespace

double theta_exact(const ExactProfileSpec& spec, double eta)
{
    if (!(eta >= 0.0 && eta <= spec.eta_max()))
        throw DomainError("theta_exact: eta must lie in [0, eta_max]");
    const double value = 1.0 - mass_below(spec.m_wright_order(), eta, spec.quad_tol());
    return std::clamp(value, 0.0, 1.0);
}

double theta_exact_closed(specfun::ClosedOrder which, double eta, double quad_tol)
{
    if (!(eta >= 0.0)) throw DomainError("theta_exact_closed: eta must be >= 0");
    if (which == specfun::ClosedOrder::half) return std::erfc(0.5 * eta);
    auto density = [](double z) { return specfun::m_wright_closed(specfun::ClosedOrder::third, z); };
    double total = 0.0;
    for (double a = 0.0; a < eta; a += 1.0) total += quad::integrate(density, a, std::min(eta, a + 1.0), quad_tol, "oracle");
    return std::clamp(1.0 - total, 0.0, 1.0);
}

double tail_integral(double nu, double eta, double upper, double quad_tol)
{
    if (!(eta >= 0.0 && upper >= eta)) throw DomainError("tail_integral: need 0 <= eta <= upper");
    const specfun::MWrightSpec m(nu);
    auto density = [&](double z) { return specfun::m_wright(m, z); };
    double total = 0.0;
    for (double a = eta; a < upper; a += 1.0) total += quad::integrate(density, a, std::min(upper, a + 1.0), quad_tol, "oracle");
    return total;
}

std::vector<double> uniform_grid(double lo, double hi, int points)
{
    if (points < 2) throw DomainError("grid: need at least 2 points");
    if (!(lo < hi)) throw DomainError("grid: need lo < hi");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    grid.back() = hi;
    return grid;
}

namespace {

ComparisonReport assemble(double mu, double n, const ExactProfileSpec& spec, const std::vector<double>& grid,
                          const std::vector<double>& exact)
{
    ComparisonReport r;
    r.mu = mu;
    r.n = n;
    r.reading = spec.reading();
    r.m_wright_order = spec.m_wright_order();
    r.eta_grid = grid;
    r.theta_exact = exact;
    double abs_total = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double approx = kernel::theta_weak_similarity(n, mu, grid[i]);
        const double err = std::abs(approx - exact[i]);
        r.theta_approx.push_back(approx);
        r.abs_err.push_back(err);
        r.rel_err.push_back(exact[i] > 0.0 ? err / exact[i] : 0.0);
        abs_total += err;
        if (exact[i] >= kMeasurableThreshold) r.max_rel_err = std::max(r.max_rel_err, r.rel_err.back());
    }
    r.mean_abs_err = abs_total / static_cast<double>(grid.size());
    return r;
}

std::vector<double> exact_on_grid(const ExactProfileSpec& spec, const std::vector<double>& grid, ExecPolicy policy)
{
    return evaluate_grid<double>(grid.size(), [&](std::size_t i) { return theta_exact(spec, grid[i]); }, policy);
}

}  // namespace

ComparisonReport compare(double mu, double n, double eta_lo, double eta_hi, int points, OrderReading reading,
                         ExecPolicy policy)
{
    if (!(eta_lo >= 0.0)) throw DomainError("compare: eta_lo must be >= 0");
    if (!(n > 0.0)) throw DomainError("compare: n must be > 0");
    const ExactProfileSpec spec(mu, 1e-9, std::max(10.0, eta_hi), reading);
    const auto grid = uniform_grid(eta_lo, eta_hi, points);
    return assemble(mu, n, spec, grid, exact_on_grid(spec, grid, policy));
}

double recommend_exponent_empirical(double mu, double eta_hi, OrderReading reading, ExecPolicy policy)
{
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("recommend_exponent_empirical: mu must lie in (0, 1)");
    if (eta_hi != 0.5 && eta_hi != 1.0)
        throw DomainError("recommend_exponent_empirical: eta_hi must be 0.5 or 1.0");
    const ExactProfileSpec spec(mu, 1e-9, 10.0, reading);
    const auto grid = uniform_grid(0.0, eta_hi, 50);
    const auto exact = exact_on_grid(spec, grid, policy);

    constexpr int count = 201;
    auto exponent = [](std::size_t i) { return 1.0 + 0.01 * static_cast<double>(i); };
    const auto scores = evaluate_grid<double>(
        count, [&](std::size_t i) { return assemble(mu, exponent(i), spec, grid, exact).max_rel_err; }, policy);
    return exponent(argmin(scores));
}

}  // namespace subdiff::oracle
