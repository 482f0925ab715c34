#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmem/bounds.hpp"

namespace qmem {

/// Constants for the decoder-time-constrained storage optimization.
/// tau(n) = c1 ln(n) tau_c + tau_0 (the active constraint made equality).
struct OptimizerConfig {
    double c1 = 10.0;
    double tau_c = 1.0 / 3.2e9;  // seconds per classical cycle
    double tau_0 = 5e-9;         // readout time; back-solved default, see README
    double tau_r = 49e-6;
    double tau_d = 95e-6;
    double eps = 1e-6;           // target infidelity
    std::size_t grid_points = 2000;
    double refine_tol = 1e-10;   // relative, on ln n
    HullMode mode = HullMode::pointwise_min;
    /// Log base of the log(n)/(2n) term. The Fig. 2 caption value is
    /// reproduced only with the natural log, hence this default.
    LogBase log_term = LogBase::natural;

    void validate() const;
};

double tau_of_n(double n, const OptimizerConfig& cfg);
double tau_of_log_n(double log_n, const OptimizerConfig& cfg);

struct NMaxResult {
    double log_n = 0;  // ln of the largest feasible n
    double n = 0;      // exp(log_n); +inf when not representable
    bool unbounded = false;
};

/// Largest n with p~(tau(n)) <= 1/4, via bisection on the monotone composite.
/// Works in ln(n): the feasible ceiling routinely exceeds double range.
NMaxResult n_max(const OptimizerConfig& cfg);

struct OptimizerResult {
    double n_star = 0;
    double log_n_star = 0;
    double tau_star = 0;
    double q_star = 0;
    Branch branch = Branch::second_order;
    bool boundary = false;   // optimum at the feasible-region edge
    bool unimodal = true;    // single sign change of grid differences
    std::vector<std::string> flags;
    std::vector<std::pair<double, double>> trace;  // (ln n, objective) scan samples
    std::size_t refine_evals = 0;
};

/// Global maximum of n -> Q_so(p~(tau(n)), n, eps) over [1, n_max]:
/// dense log-spaced scan, then golden-section refinement in the best cell.
OptimizerResult optimize(const OptimizerConfig& cfg);

struct ContourTable {
    struct Row {
        double n, tau, q_so;
    };
    std::vector<Row> grid;              // objective samples
    std::vector<std::pair<double, double>> constraint;  // (n, tau(n))
};

ContourTable contour_grid(const OptimizerConfig& cfg, double n_lo, double n_hi, double tau_lo,
                          double tau_hi, std::size_t res_n, std::size_t res_tau);

} // namespace qmem
