#include "subdiff/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "subdiff/quadrature.hpp"
#include "subdiff/specfun.hpp"

namespace subdiff::optimizer {

ResidualSpec::ResidualSpec(kernel::WeakProfileParams params, double t, bool include_diffusivity_factor)
    : params_(params), t_(t), include_diffusivity_factor_(include_diffusivity_factor)
{
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("ResidualSpec: t must be > 0");
}

namespace {

struct ResidualCoefficients {
    double delta;
    double a;  // multiplies 1 - s^n
    double b;  // multiplies s^(n-2), s = x/delta
};

ResidualCoefficients coefficients(const ResidualSpec& spec)
{
    const auto& p = spec.params();
    const double mu = p.mu();
    const double n = p.n();
    const double delta = kernel::penetration_depth(p, spec.t());
    const double a = std::pow(spec.t(), -mu) / specfun::gamma(2.0 - mu);
    const double scale = spec.include_diffusivity_factor() ? p.d_mu() : 1.0;
    const double b = n == 1.0 ? 0.0 : scale * n * (n - 1.0) / (delta * delta);
    return {delta, a, b};
}

bool quadrature_admissible(double n)
{
    return n == 1.0 || n > kExponentPole;
}

}  // namespace

double residual(const ResidualSpec& spec, double x)
{
    const double n = spec.params().n();
    const auto c = coefficients(spec);
    if (!(x >= 0.0 && x <= c.delta * (1.0 + 1e-12)))
        throw DomainError("residual: x must lie in (0, delta(t)]");
    if (x == 0.0 && n < 2.0 && n != 1.0)
        throw DomainError("residual: x^(n-2) is singular at x = 0 for n < 2");
    const double s = std::min(x / c.delta, 1.0);
    const double second = c.b == 0.0 ? 0.0 : c.b * std::pow(s, n - 2.0);
    return c.a * (1.0 - std::pow(s, n)) + second;
}

double error_functional_numeric(const ResidualSpec& spec)
{
    const double n = spec.params().n();
    if (!quadrature_admissible(n))
        throw DivergenceError("optimizer", "int_0^delta x^(2n-4) dx diverges unless n > 1.5 (or n = 1); got n = " +
                                               std::to_string(n));
    const auto c = coefficients(spec);
    auto e2 = [&](double s) {
        double e = c.a * (1.0 - std::pow(s, n));
        if (c.b != 0.0) e += c.b * std::pow(s, n - 2.0);
        return e * e;
    };
    const double scale = (c.a + std::abs(c.b)) * (c.a + std::abs(c.b));
    if (n == 1.0 || n >= 2.0) return c.delta * quad::integrate_endpoint_singular(e2, 0.0, 1.0, 1e-13 * scale, "optimizer");

    // Below s_c: s = s_c w^k with k = 1/(2n-3) turns the s^(2n-4) singularity
    // into a constant; the residual is carried together with the square root
    // of the Jacobian.
    constexpr double s_c = 0.5;
    const double k = 1.0 / (2.0 * n - 3.0);
    const double half_jac = 0.5 * (k - 1.0);
    const double sing_exp = 0.5 * (k * (2.0 * n - 3.0) - 1.0);
    const double b_c = c.b * std::pow(s_c, n - 2.0);
    auto inner = [&](double w) {
        const double s = s_c * std::pow(w, k);
        const double e = c.a * (1.0 - std::pow(s, n)) * std::pow(w, half_jac) + b_c * std::pow(w, sing_exp);
        return s_c * k * e * e;
    };
    const double inner_scale = s_c * k * (c.a + std::abs(b_c)) * (c.a + std::abs(b_c));
    // w^((k-1)/2) is only good to about k ulps.
    const double inner_rel = std::max(1e-13, 64.0 * k * std::numeric_limits<double>::epsilon());
    return c.delta * (quad::integrate_endpoint_singular(inner, 0.0, 1.0, inner_rel * inner_scale, "optimizer") +
                      quad::integrate(e2, s_c, 1.0, 1e-13 * scale, "optimizer"));
}

double k1_paper(double n, double mu, double d_mu)
{
    if (!(n > 0.0)) throw DomainError("k1_paper: n must be > 0");
    if (std::abs(2.0 * n - 3.0) < 1e-12) throw PoleError("k1_paper: pole of 1/(2n-3) at n = 1.5");
    if (!(d_mu > 0.0)) throw DomainError("k1_paper: diffusivity must be > 0");
    const double g = specfun::gamma(2.0 - mu);
    const double dfj = d_mu * kernel::f_n(n) * kernel::j_mu(mu);
    const double bracket =
        ((2.0 * n + 1.0) * (n + 1.0) + (n + 1.0) - 2.0 * (2.0 * n + 1.0)) / ((2.0 * n + 1.0) * (n + 1.0));
    const double first = bracket * std::sqrt(dfj) / (g * g);
    const double second = n * n * (n - 1.0) * (n - 1.0) / (2.0 * n - 3.0);
    const double third = 2.0 * n / g * dfj;
    return first + second + third;
}

std::string to_string(Method method)
{
    return method == Method::paper_k1 ? "paper-k1" : "rederived";
}

double objective(Method method, double n, double mu, double d_mu)
{
    if (method == Method::paper_k1) return std::abs(k1_paper(n, mu, d_mu));
    const kernel::WeakProfileParams params(kernel::SubdiffusionProblem(mu, d_mu), n);
    const ResidualSpec spec(params, 1.0);
    const double delta = kernel::penetration_depth(params, 1.0);
    return error_functional_numeric(spec) * delta * delta * delta;
}

namespace {

struct Interval {
    double lo;
    double hi;
};

std::vector<Interval> admissible_intervals(SearchBounds b)
{
    std::vector<Interval> out;
    const double below = kExponentPole - kPoleGuard;
    const double above = kExponentPole + kPoleGuard;
    if (b.lo <= below) out.push_back({b.lo, std::min(b.hi, below)});
    if (b.hi >= above) out.push_back({std::max(b.lo, above), b.hi});
    return out;
}

template <class F>
double golden_section(F&& f, double a, double b)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

OptimizationResult optimize_exponent(double mu, double d_mu, Method method, SearchBounds bounds, ExecPolicy policy)
{
    if (!(bounds.lo > 0.0 && bounds.lo < bounds.hi))
        throw DomainError("optimize_exponent: need 0 < lo < hi");
    // Validates mu and D up front.
    (void)kernel::SubdiffusionProblem(mu, d_mu);

    struct Candidate {
        double n;
        std::size_t interval;
    };
    const auto intervals = admissible_intervals(bounds);
    std::vector<Candidate> grid;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const auto [lo, hi] = intervals[k];
        const auto count = static_cast<long>(std::floor((hi - lo) / kScanStep + 1e-9));
        for (long i = 0; i <= count; ++i) grid.push_back({lo + i * kScanStep, k});
        if (lo + count * kScanStep < hi) grid.push_back({hi, k});
    }
    if (method == Method::rederived_quadrature)
        std::erase_if(grid, [](const Candidate& c) { return !quadrature_admissible(c.n); });
    if (grid.empty()) throw DomainError("optimize_exponent: no admissible exponent inside the search bounds");

    const auto values = evaluate_grid<double>(
        grid.size(), [&](std::size_t i) { return objective(method, grid[i].n, mu, d_mu); }, policy);
    const std::size_t best = argmin(values);

    OptimizationResult result;
    result.method = method;
    result.search_bounds = bounds;
    result.n_opt = grid[best].n;
    result.objective_value = values[best];

    const auto [ilo, ihi] = intervals[grid[best].interval];
    const bool isolated_point = method == Method::rederived_quadrature && grid[best].n <= kExponentPole;
    if (!isolated_point) {
        const double a = std::max(ilo, grid[best].n - kScanStep);
        const double b = std::min(ihi, grid[best].n + kScanStep);
        const double refined = golden_section([&](double n) { return objective(method, n, mu, d_mu); }, a, b);
        const double refined_value = objective(method, refined, mu, d_mu);
        if (refined_value < result.objective_value) {
            result.n_opt = refined;
            result.objective_value = refined_value;
        }
    }
    const double edge = 1e-6;
    result.clamped = std::abs(result.n_opt - ilo) < edge || std::abs(result.n_opt - ihi) < edge;
    return result;
}

std::vector<double> default_table1_diffusivities()
{
    return {1e-9, 6.3e-10, 1.0};
}

std::vector<double> default_table1_orders()
{
    std::vector<double> mus;
    for (int i = 1; i <= 9; ++i) mus.push_back(i / 10.0);
    return mus;
}

Table1 table1(const std::vector<double>& d_values, const std::vector<double>& mu_grid, Method method,
              ExecPolicy policy)
{
    Table1 table;
    table.d_values = d_values;
    table.method = method;
    const std::size_t nd = d_values.size();
    // The scans inside each cell run serially; the cells are the parallel unit.
    const auto cells = evaluate_grid<OptimizationResult>(
        mu_grid.size() * nd,
        [&](std::size_t i) {
            return optimize_exponent(mu_grid[i / nd], d_values[i % nd], method, {}, ExecPolicy::serial);
        },
        policy);
    for (std::size_t r = 0; r < mu_grid.size(); ++r) {
        Table1Row row;
        row.mu = mu_grid[r];
        row.j_mu = kernel::j_mu(mu_grid[r]);
        row.optima.assign(cells.begin() + static_cast<long>(r * nd), cells.begin() + static_cast<long>((r + 1) * nd));
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace subdiff::optimizer
