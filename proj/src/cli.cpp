#include "subdiff/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "subdiff/errors.hpp"
#include "subdiff/fractional.hpp"
#include "subdiff/kernel.hpp"
#include "subdiff/optimizer.hpp"
#include "subdiff/oracle.hpp"
#include "subdiff/report.hpp"
#include "subdiff/specfun.hpp"

namespace subdiff::cli {

namespace {

using report::format_number;
using report::Table;

const std::map<std::string, double> kPresets = {{"glucose", 1e-9}, {"sucrose", 6.3e-10}};

struct Options {
    std::optional<double> mu;
    std::optional<double> d;
    std::string preset;
    std::optional<double> n;
    double t = 1.0;
    double t_max = 1.0;
    double eta_min = 0.0;
    std::optional<double> eta_max;
    std::optional<int> points;
    std::string method = "paper-k1";
    std::string format = "csv";
    std::string out;
    bool classical_limit = false;
    double c_s = 1.0;
    double c_inf = 0.0;
    std::string reading = "half";
    std::optional<double> nu;
    double z_min = 0.0;
    double z_max = 4.0;
    bool paper_literal = false;
};

// Validation failures inside the CLI itself map to the same exit status as
// domain errors raised by the library.
[[noreturn]] void invalid(const std::string& what)
{
    throw DomainError(what);
}

double require(const std::optional<double>& v, const char* flag)
{
    if (!v) invalid(std::string("missing required option ") + flag);
    return *v;
}

double order(const Options& o)
{
    const double mu = require(o.mu, "--mu");
    const bool ok = (mu > 0.0 && mu < 1.0) || (o.classical_limit && mu == 1.0);
    if (!ok) invalid("--mu must lie in (0, 1); mu = 1 requires --classical-limit");
    return mu;
}

double diffusivity(const Options& o, bool required)
{
    if (!o.preset.empty()) return kPresets.at(o.preset);
    if (o.d) return *o.d;
    if (required) invalid("one of --d or --preset is required");
    return 1.0;
}

kernel::SubdiffusionProblem problem(const Options& o, bool d_required)
{
    return kernel::SubdiffusionProblem(order(o), diffusivity(o, d_required), o.c_s, o.c_inf, o.classical_limit);
}

optimizer::Method method(const Options& o)
{
    return o.method == "rederived" ? optimizer::Method::rederived_quadrature : optimizer::Method::paper_k1;
}

oracle::OrderReading reading(const Options& o)
{
    return o.reading == "same" ? oracle::OrderReading::same_order : oracle::OrderReading::half_order;
}

void common_meta(Table& table, const std::string& command)
{
    table.metadata.emplace_back("command", command);
    table.metadata.emplace_back("version", report::kVersion);
}

Table cmd_depth(const Options& o)
{
    const kernel::WeakProfileParams params(problem(o, true), require(o.n, "--n"));
    if (!(o.t_max > 0.0)) invalid("--t-max must be > 0");
    const auto grid = oracle::uniform_grid(0.0, o.t_max, o.points.value_or(11));
    const kernel::PenetrationLaw law(params);

    Table table;
    common_meta(table, "depth");
    table.metadata.emplace_back("mu", format_number(params.mu()));
    table.metadata.emplace_back("d_mu", format_number(params.d_mu()));
    table.metadata.emplace_back("n", format_number(params.n()));
    table.metadata.emplace_back("prefactor", format_number(law.prefactor()));
    table.columns = {"t", "delta"};
    for (double t : grid) table.rows.push_back({t, law(t)});
    return table;
}

Table cmd_profile(const Options& o)
{
    const auto prob = problem(o, false);
    const double n = require(o.n, "--n");
    const kernel::WeakProfileParams params(prob, n);
    const double eta_max = o.eta_max.value_or(1.0);
    const auto grid = oracle::uniform_grid(o.eta_min, eta_max, o.points.value_or(51));
    if (!(o.t > 0.0)) invalid("--t must be > 0");
    const oracle::ExactProfileSpec exact(prob.mu(), 1e-9, std::max(10.0, eta_max), reading(o));
    const double front = std::sqrt(kernel::f_n(n) * kernel::j_mu(prob.mu()));
    const double length_scale = std::sqrt(prob.d_mu() * std::pow(o.t, prob.mu()));

    const auto exact_values = evaluate_grid<double>(
        grid.size(), [&](std::size_t i) { return oracle::theta_exact(exact, grid[i]); });

    Table table;
    common_meta(table, "profile");
    table.metadata.emplace_back("mu", format_number(prob.mu()));
    table.metadata.emplace_back("d_mu", format_number(prob.d_mu()));
    table.metadata.emplace_back("n", format_number(n));
    table.metadata.emplace_back("t", format_number(o.t));
    table.metadata.emplace_back("reading", oracle::to_string(exact.reading()));
    table.metadata.emplace_back("m_wright_order", format_number(exact.m_wright_order()));
    table.columns = {"eta", "x", "theta_weak", "theta_complete", "theta_exact", "c_weak"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double eta = grid[i];
        const double weak = kernel::theta_weak_similarity(n, prob.mu(), eta);
        const double complete = kernel::theta_complete(std::min(1.0, eta / front), n);
        table.rows.push_back(
            {eta, eta * length_scale, weak, complete, exact_values[i], kernel::to_concentration(prob, weak)});
    }
    return table;
}

Table cmd_wright(const Options& o)
{
    const specfun::MWrightSpec spec(require(o.nu, "--nu"));
    const auto grid = oracle::uniform_grid(o.z_min, o.z_max, o.points.value_or(41));
    if (o.z_min < 0.0) invalid("--z-min must be >= 0");
    std::optional<specfun::ClosedOrder> closed;
    if (std::abs(spec.nu() - 0.5) < 1e-12) closed = specfun::ClosedOrder::half;
    if (std::abs(spec.nu() - 1.0 / 3.0) < 1e-12) closed = specfun::ClosedOrder::third;

    Table table;
    common_meta(table, "wright");
    table.metadata.emplace_back("nu", format_number(spec.nu()));
    table.columns = {"z", "m_wright"};
    if (closed) table.columns.push_back("m_wright_closed");
    for (double z : grid) {
        std::vector<double> row = {z, specfun::m_wright(spec, z)};
        if (closed) row.push_back(specfun::m_wright_closed(*closed, z));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cmd_optimize(const Options& o)
{
    const auto prob = problem(o, true);
    if (prob.mu() >= 1.0) invalid("optimize needs mu < 1");
    const auto res = optimizer::optimize_exponent(prob.mu(), prob.d_mu(), method(o));

    Table table;
    common_meta(table, "optimize");
    table.metadata.emplace_back("method", optimizer::to_string(res.method));
    table.metadata.emplace_back("lo", format_number(res.search_bounds.lo));
    table.metadata.emplace_back("hi", format_number(res.search_bounds.hi));
    table.metadata.emplace_back("excluded_pole", format_number(res.excluded_pole));
    table.columns = {"mu", "d_mu", "n_opt", "objective", "clamped"};
    table.rows.push_back({prob.mu(), prob.d_mu(), res.n_opt, res.objective_value, res.clamped ? 1.0 : 0.0});
    return table;
}

Table cmd_table1(const Options& o)
{
    const auto tab = optimizer::table1(optimizer::default_table1_diffusivities(), optimizer::default_table1_orders(),
                                       method(o));
    Table table;
    common_meta(table, "table1");
    table.metadata.emplace_back("method", optimizer::to_string(tab.method));
    table.columns = {"mu", "j_mu"};
    for (double d : tab.d_values) table.columns.push_back("n_d" + format_number(d));
    for (const auto& row : tab.rows) {
        std::vector<double> r = {row.mu, row.j_mu};
        for (const auto& opt : row.optima) r.push_back(opt.n_opt);
        table.rows.push_back(std::move(r));
    }
    return table;
}

Table cmd_compare(const Options& o)
{
    const double mu = order(o);
    const double n = require(o.n, "--n");
    const auto rep = oracle::compare(mu, n, o.eta_min, o.eta_max.value_or(0.5), o.points.value_or(50), reading(o));

    Table table;
    common_meta(table, "compare");
    table.metadata.emplace_back("mu", format_number(mu));
    table.metadata.emplace_back("n", format_number(n));
    table.metadata.emplace_back("reading", oracle::to_string(rep.reading));
    table.metadata.emplace_back("m_wright_order", format_number(rep.m_wright_order));
    table.metadata.emplace_back("max_rel_err", format_number(rep.max_rel_err));
    table.metadata.emplace_back("mean_abs_err", format_number(rep.mean_abs_err));
    table.columns = {"eta", "theta_weak", "theta_exact", "abs_err", "rel_err"};
    for (std::size_t i = 0; i < rep.eta_grid.size(); ++i)
        table.rows.push_back({rep.eta_grid[i], rep.theta_approx[i], rep.theta_exact[i], rep.abs_err[i], rep.rel_err[i]});
    return table;
}

Table cmd_residual(const Options& o)
{
    const kernel::WeakProfileParams params(problem(o, true), require(o.n, "--n"));
    if (params.mu() >= 1.0) invalid("residual needs mu < 1");
    const optimizer::ResidualSpec spec(params, o.t, !o.paper_literal);
    const double delta = kernel::penetration_depth(params, o.t);
    const int points = o.points.value_or(50);
    if (points < 2) invalid("--points must be >= 2");

    Table table;
    common_meta(table, "residual");
    table.metadata.emplace_back("mu", format_number(params.mu()));
    table.metadata.emplace_back("d_mu", format_number(params.d_mu()));
    table.metadata.emplace_back("n", format_number(params.n()));
    table.metadata.emplace_back("t", format_number(o.t));
    table.metadata.emplace_back("diffusivity_factor", o.paper_literal ? "off" : "on");
    const double n = params.n();
    if (n == 1.0 || n > optimizer::kExponentPole)
        table.metadata.emplace_back("error_functional", format_number(optimizer::error_functional_numeric(spec)));
    else
        table.metadata.emplace_back("error_functional", "divergent");
    table.columns = {"x", "residual"};
    for (int i = 1; i <= points; ++i) {
        const double x = delta * i / points;
        table.rows.push_back({x, optimizer::residual(spec, x)});
    }
    return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Integral-balance solutions of the time-fractional subdiffusion equation", "subdiff"};
    app.require_subcommand(1);
    Options o;

    auto add_problem = [&](CLI::App* sub) {
        sub->add_option("--mu", o.mu, "fractional order");
        auto* d = sub->add_option("--d", o.d, "fractional diffusivity D_mu [m^2/s^mu]");
        auto* p = sub->add_option("--preset", o.preset, "diffusivity preset")
                      ->check(CLI::IsMember({"glucose", "sucrose"}));
        d->excludes(p);
        sub->add_flag("--classical-limit", o.classical_limit, "admit mu = 1");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "output file (default: stdout)");
    };
    auto add_eta = [&](CLI::App* sub) {
        sub->add_option("--eta-min", o.eta_min);
        sub->add_option("--eta-max", o.eta_max);
        sub->add_option("--points", o.points);
    };
    auto add_reading = [&](CLI::App* sub) {
        sub->add_option("--reading", o.reading, "M-Wright order: half (nu = mu/2) or same (nu = mu)")
            ->check(CLI::IsMember({"half", "same"}));
    };

    auto* depth = app.add_subcommand("depth", "penetration depth delta(t)");
    add_problem(depth);
    depth->add_option("--n", o.n);
    depth->add_option("--t-max", o.t_max);
    depth->add_option("--points", o.points);
    add_output(depth);

    auto* profile = app.add_subcommand("profile", "weak, complete and exact profiles over eta");
    add_problem(profile);
    profile->add_option("--n", o.n);
    profile->add_option("--t", o.t);
    profile->add_option("--cs", o.c_s, "surface concentration");
    profile->add_option("--cinf", o.c_inf, "ambient concentration");
    add_eta(profile);
    add_reading(profile);
    add_output(profile);

    auto* wright = app.add_subcommand("wright", "auxiliary M-Wright function");
    wright->add_option("--nu", o.nu);
    wright->add_option("--z-min", o.z_min);
    wright->add_option("--z-max", o.z_max);
    wright->add_option("--points", o.points);
    add_output(wright);

    auto* optimize = app.add_subcommand("optimize", "optimal profile exponent");
    add_problem(optimize);
    optimize->add_option("--method", o.method)->check(CLI::IsMember({"paper-k1", "rederived"}));
    add_output(optimize);

    auto* tab1 = app.add_subcommand("table1", "optimal exponents over mu and the reference diffusivities");
    tab1->add_option("--method", o.method)->check(CLI::IsMember({"paper-k1", "rederived"}));
    add_output(tab1);

    auto* cmp = app.add_subcommand("compare", "weak profile against the exact profile");
    cmp->add_option("--mu", o.mu);
    cmp->add_option("--n", o.n);
    cmp->add_flag("--classical-limit", o.classical_limit);
    add_eta(cmp);
    add_reading(cmp);
    add_output(cmp);

    auto* res = app.add_subcommand("residual", "domain-equation residual across the layer");
    add_problem(res);
    res->add_option("--n", o.n);
    res->add_option("--t", o.t);
    res->add_option("--points", o.points);
    res->add_flag("--paper-literal", o.paper_literal, "drop D_mu from the second residual term");
    add_output(res);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        Table table;
        if (*depth) table = cmd_depth(o);
        else if (*profile) table = cmd_profile(o);
        else if (*wright) table = cmd_wright(o);
        else if (*optimize) table = cmd_optimize(o);
        else if (*tab1) table = cmd_table1(o);
        else if (*cmp) table = cmd_compare(o);
        else table = cmd_residual(o);

        std::ostringstream buffer;
        if (o.format == "json")
            report::write_json(table, buffer);
        else
            report::write_csv(table, buffer);

        if (o.out.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << o.out << '\n';
                return kValidation;
            }
            file << buffer.str();
        }
        return kOk;
    } catch (const DomainError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const NumericalError& e) {
        err << "numerical error in " << e.module() << ": " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace subdiff::cli
