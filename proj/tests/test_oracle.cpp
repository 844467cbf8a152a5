#include <doctest.h>

#include <cmath>

#include "subdiff/errors.hpp"
#include "subdiff/kernel.hpp"
#include "subdiff/oracle.hpp"

using namespace subdiff;
using namespace subdiff::oracle;
using doctest::Approx;

TEST_CASE("exact profile spec validation")
{
    CHECK_THROWS_AS(ExactProfileSpec(0.0), DomainError);
    CHECK_THROWS_AS(ExactProfileSpec(1.2), DomainError);
    CHECK_THROWS_AS(ExactProfileSpec(1.0, 1e-9, 10.0, OrderReading::same_order), DomainError);
    CHECK_THROWS_AS(ExactProfileSpec(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(ExactProfileSpec(0.5, 1e-9, 5.0), DomainError);
    CHECK(ExactProfileSpec(0.6).m_wright_order() == Approx(0.3));
    CHECK(ExactProfileSpec(0.6, 1e-9, 10.0, OrderReading::same_order).m_wright_order() == Approx(0.6));
    CHECK(to_string(OrderReading::half_order) == "half");
    CHECK(to_string(OrderReading::same_order) == "same");
}

TEST_CASE("exact profile reference values")
{
    const ExactProfileSpec classical(1.0);
    CHECK(theta_exact(classical, 0.0) == 1.0);
    CHECK(theta_exact(classical, 1.0) == Approx(0.4795001222).epsilon(1e-9));
    CHECK_THROWS_AS(theta_exact(classical, -0.1), DomainError);
    CHECK_THROWS_AS(theta_exact(classical, 10.5), DomainError);
}

TEST_CASE("classical regression against erfc")
{
    const ExactProfileSpec classical(1.0);
    for (int i = 0; i <= 80; ++i) {
        const double eta = 0.05 * i;
        CHECK(std::abs(theta_exact(classical, eta) - std::erfc(0.5 * eta)) <= 1e-6);
    }
}

TEST_CASE("Airy route agrees with the series route at nu = 1/3")
{
    const ExactProfileSpec spec(2.0 / 3.0);
    for (double eta : {0.0, 0.3, 1.0, 2.0, 3.5}) {
        CAPTURE(eta);
        CHECK(std::abs(theta_exact(spec, eta) - theta_exact_closed(specfun::ClosedOrder::third, eta)) <= 1e-6);
    }
    CHECK(theta_exact_closed(specfun::ClosedOrder::half, 1.0) == Approx(std::erfc(0.5)).epsilon(1e-15));
}

TEST_CASE("exact profile is bounded and strictly decreasing")
{
    for (double mu : {0.3, 0.5, 2.0 / 3.0, 1.0}) {
        const ExactProfileSpec spec(mu);
        double prev = theta_exact(spec, 0.0);
        CHECK(prev == Approx(1.0).epsilon(1e-9));
        for (int i = 1; i <= 40; ++i) {
            const double v = theta_exact(spec, 0.1 * i);
            CAPTURE(mu);
            CAPTURE(i);
            CHECK(v < prev);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            prev = v;
        }
    }
}

TEST_CASE("widening the domain bound leaves the profile unchanged")
{
    for (double mu : {0.3, 0.5, 2.0 / 3.0, 1.0}) {
        const ExactProfileSpec narrow(mu, 1e-9, 10.0);
        const ExactProfileSpec wide(mu, 1e-9, 20.0);
        for (double eta : {0.0, 0.5, 1.0, 2.0, 4.0})
            CHECK(std::abs(theta_exact(narrow, eta) - theta_exact(wide, eta)) <= 1e-8);
    }
}

TEST_CASE("unit-mass identity against the direct tail integral")
{
    // The tail beyond 20 is below 1e-9 for these orders.
    for (double nu : {1.0 / 3.0, 0.5}) {
        const ExactProfileSpec spec(2.0 * nu);
        for (double eta : {0.0, 0.7, 2.0}) {
            CAPTURE(nu);
            CAPTURE(eta);
            CHECK(theta_exact(spec, eta) == Approx(tail_integral(nu, eta, 20.0, 1e-11)).epsilon(1e-7));
        }
    }
    CHECK_THROWS_AS(tail_integral(0.5, 2.0, 1.0), DomainError);
}

TEST_CASE("uniform grid")
{
    const auto g = uniform_grid(0.0, 0.5, 50);
    REQUIRE(g.size() == 50);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 0.5);
    CHECK(g[1] == Approx(0.5 / 49.0));
    CHECK_THROWS_AS(uniform_grid(0.0, 0.0, 10), DomainError);
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 10), DomainError);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), DomainError);
}

TEST_CASE("comparison report shape")
{
    const auto r = compare(0.3, 1.0, 0.0, 0.5, 50);
    REQUIRE(r.eta_grid.size() == 50);
    CHECK(r.theta_approx.size() == 50);
    CHECK(r.theta_exact.size() == 50);
    CHECK(r.abs_err.size() == 50);
    CHECK(r.rel_err.size() == 50);
    CHECK(r.abs_err.front() <= 1e-9);
    CHECK(r.m_wright_order == Approx(0.15));
    double max_rel = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(r.abs_err[i] == Approx(std::abs(r.theta_approx[i] - r.theta_exact[i])));
        if (r.theta_exact[i] >= kMeasurableThreshold) max_rel = std::max(max_rel, r.rel_err[i]);
        mean += r.abs_err[i] / 50.0;
    }
    CHECK(r.max_rel_err == max_rel);
    CHECK(r.mean_abs_err == Approx(mean).epsilon(1e-12));
    CHECK_THROWS_AS(compare(0.3, 1.0, -0.1, 0.5, 50), DomainError);
    CHECK_THROWS_AS(compare(0.3, 0.0, 0.0, 0.5, 50), DomainError);
}

TEST_CASE("error band for the linear profile at mu = 0.3")
{
    const auto r = compare(0.3, 1.0, 0.0, 0.5, 50, OrderReading::half_order);
    CHECK(r.max_rel_err >= 0.02);
    CHECK(r.max_rel_err <= 0.05);
}

TEST_CASE("error grows past the short-distance window")
{
    double prev = 0.0;
    for (double hi : {0.5, 0.75, 1.0, 1.25, 1.5}) {
        const auto r = compare(0.3, 1.0, 0.0, hi, 50);
        CAPTURE(hi);
        if (hi > 0.75)
            CHECK(r.max_rel_err > prev);
        else
            CHECK(r.max_rel_err >= prev);
        prev = r.max_rel_err;
    }
    // Pointwise: the relative error peaks inside the window, then rises
    // steadily toward the weak-profile front.
    const auto r = compare(0.3, 1.0, 0.7, 1.4, 36);
    for (std::size_t i = 1; i < r.rel_err.size(); ++i) CHECK(r.rel_err[i] > r.rel_err[i - 1]);
    const auto inside = compare(0.3, 1.0, 0.0, 0.5, 50);
    CHECK(r.rel_err.back() > 10.0 * inside.max_rel_err);
}

TEST_CASE("relative error does not depend on the concentration scale")
{
    const auto r = compare(0.4, 1.3, 0.0, 0.8, 20);
    for (auto [cs, cinf] : {std::pair{1.0, 0.0}, std::pair{7.5, 2.0}, std::pair{-3.0, 1e-3}}) {
        const kernel::SubdiffusionProblem prob(0.4, 1.0, cs, cinf);
        double max_rel = 0.0;
        for (std::size_t i = 0; i < r.eta_grid.size(); ++i) {
            const double ca = kernel::to_concentration(prob, r.theta_approx[i]) - cinf;
            const double ce = kernel::to_concentration(prob, r.theta_exact[i]) - cinf;
            if (r.theta_exact[i] >= kMeasurableThreshold) max_rel = std::max(max_rel, std::abs((ca - ce) / ce));
        }
        CHECK(max_rel == Approx(r.max_rel_err).epsilon(1e-12));
    }
}

TEST_CASE("empirical exponent, low order")
{
    const double n = recommend_exponent_empirical(0.2, 0.5);
    CHECK(n >= 1.0);
    CHECK(n <= 1.25);
}

TEST_CASE("empirical exponent, wide window needs a steeper profile" * doctest::description("same-order reading"))
{
    const double n = recommend_exponent_empirical(0.5, 1.0, OrderReading::same_order);
    CHECK(n >= 1.5);
    CHECK(n <= 3.0);
}

// Neither order reading puts the optimum for mu = 0.45 on [0, 0.5] inside
// [1.25, 1.75]; kept visible as an expected failure.
TEST_CASE("empirical exponent, mid order" * doctest::should_fail())
{
    const double half = recommend_exponent_empirical(0.45, 0.5, OrderReading::half_order);
    const double same = recommend_exponent_empirical(0.45, 0.5, OrderReading::same_order);
    MESSAGE("half-order reading: n = " << half << ", same-order reading: n = " << same);
    const bool in_band = (half >= 1.25 && half <= 1.75) || (same >= 1.25 && same <= 1.75);
    CHECK(in_band);
}

TEST_CASE("empirical exponent validation")
{
    CHECK_THROWS_AS(recommend_exponent_empirical(0.5, 0.7), DomainError);
    CHECK_THROWS_AS(recommend_exponent_empirical(1.0, 0.5), DomainError);
}
