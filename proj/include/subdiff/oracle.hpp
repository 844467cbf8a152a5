#pragma once

// Exact similarity profiles of the semi-infinite subdiffusion problem built on
// the M-Wright density, and the harness that measures how far the weak
// power-law profile is from them.
//
//   Theta_exact(eta) = int_eta^inf M_nu(z) dz = 1 - int_0^eta M_nu(z) dz
//
// using the unit mass of M_nu. The M-Wright order nu relates to the PDE order
// mu through an OrderReading: nu = mu/2 (the standard time-fractional
// similarity solution, erfc(eta/2) at mu = 1) or nu = mu.

#include <string>
#include <vector>

#include "subdiff/parallel.hpp"
#include "subdiff/specfun.hpp"

namespace subdiff::oracle {

enum class OrderReading { half_order, same_order };

std::string to_string(OrderReading reading);

class ExactProfileSpec {
public:
    explicit ExactProfileSpec(double mu, double quad_tol = 1e-9, double eta_max = 10.0,
                              OrderReading reading = OrderReading::half_order);

    double mu() const noexcept { return mu_; }
    double quad_tol() const noexcept { return quad_tol_; }
    double eta_max() const noexcept { return eta_max_; }
    OrderReading reading() const noexcept { return reading_; }
    /// Order nu of the M-Wright density used for this mu.
    double m_wright_order() const noexcept;

private:
    double mu_;
    double quad_tol_;
    double eta_max_;
    OrderReading reading_;
};

/// Exact dimensionless profile at similarity value 0 <= eta <= eta_max.
double theta_exact(const ExactProfileSpec& spec, double eta);

/// Exact profile from the closed-form densities: erfc(eta/2) for M_{1/2},
/// quadrature of the Airy form for M_{1/3}.
double theta_exact_closed(specfun::ClosedOrder which, double eta, double quad_tol = 1e-9);

/// Direct tail integral int_eta^upper M_nu(z) dz, without the unit-mass
/// identity. Used to check that identity and to size truncation effects.
double tail_integral(double nu, double eta, double upper, double quad_tol = 1e-9);

/// Values below this are outside the measurable range and do not enter max_rel_err.
inline constexpr double kMeasurableThreshold = 0.05;

struct ComparisonReport {
    double mu = 0.0;
    double n = 0.0;
    OrderReading reading = OrderReading::half_order;
    double m_wright_order = 0.0;
    std::vector<double> eta_grid;
    std::vector<double> theta_approx;
    std::vector<double> theta_exact;
    std::vector<double> abs_err;
    std::vector<double> rel_err;
    double max_rel_err = 0.0;   ///< over points with theta_exact >= 0.05
    double mean_abs_err = 0.0;  ///< over all points
};

/// Uniform grid of `points` values from eta_lo to eta_hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, int points);

/// Weak profile vs exact profile on a uniform eta grid.
ComparisonReport compare(double mu, double n, double eta_lo, double eta_hi, int points,
                         OrderReading reading = OrderReading::half_order,
                         ExecPolicy policy = ExecPolicy::parallel);

/// Exponent n in [1, 3] (step 0.01) minimizing max_rel_err of compare on
/// [0, eta_hi] with 50 points. eta_hi must be 0.5 or 1.0.
double recommend_exponent_empirical(double mu, double eta_hi, OrderReading reading = OrderReading::half_order,
                                    ExecPolicy policy = ExecPolicy::parallel);

}  // namespace subdiff::oracle
