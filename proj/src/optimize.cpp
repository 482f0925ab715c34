#include "qmem/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qmem/memory_model.hpp"

namespace qmem {

namespace {
constexpr double kGolden = 0.61803398874989484820;
constexpr double kMaxRepresentableLogN = 709.0;  // ln(DBL_MAX) floor

double p_tilde_at(double tau, const OptimizerConfig& cfg) {
    return 1.5 * wait_noise(tau, cfg.tau_r, cfg.tau_d);
}
} // namespace

void OptimizerConfig::validate() const {
    if (tau_c <= 0 || tau_0 <= 0 || tau_r <= 0 || tau_d <= 0)
        throw std::invalid_argument("optimizer config: all times must be positive");
    if (!(eps > 0 && eps < 0.5))
        throw std::invalid_argument("optimizer config: eps must be in (0, 1/2)");
    if (grid_points < 100) throw std::invalid_argument("optimizer config: grid_points must be >= 100");
}

double tau_of_log_n(double log_n, const OptimizerConfig& cfg) {
    if (log_n < 0) throw std::invalid_argument("tau_of_n: n must be >= 1");
    return cfg.c1 * log_n * cfg.tau_c + cfg.tau_0;
}

double tau_of_n(double n, const OptimizerConfig& cfg) { return tau_of_log_n(std::log(n), cfg); }

NMaxResult n_max(const OptimizerConfig& cfg) {
    cfg.validate();
    if (p_tilde_at(cfg.tau_0, cfg) >= 0.25)
        throw std::invalid_argument("n_max: noise already at 1/4 for n = 1");

    // Bisect on tau for p~(tau) = 1/4, then invert tau(n) in log domain.
    double lo = cfg.tau_0;
    double hi = std::max(cfg.tau_r, cfg.tau_d);
    while (p_tilde_at(hi, cfg) < 0.25) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (p_tilde_at(mid, cfg) < 0.25 ? lo : hi) = mid;
    }
    NMaxResult out;
    out.log_n = (lo - cfg.tau_0) / (cfg.c1 * cfg.tau_c);
    out.unbounded = out.log_n > kMaxRepresentableLogN;
    out.n = out.unbounded ? std::numeric_limits<double>::infinity() : std::exp(out.log_n);
    return out;
}

namespace {

double objective(double log_n, const OptimizerConfig& cfg) {
    const double pt = p_tilde_at(tau_of_log_n(log_n, cfg), cfg);
    if (pt >= 0.25 || pt <= 0) return -std::numeric_limits<double>::infinity();
    return second_order_bound_logn(pt, log_n, cfg.eps, cfg.mode, cfg.log_term).value;
}

} // namespace

OptimizerResult optimize(const OptimizerConfig& cfg) {
    cfg.validate();
    const NMaxResult ceiling = n_max(cfg);

    OptimizerResult res;
    if (ceiling.unbounded) res.flags.push_back("FeasibleCeilingBeyondDoubleRange");

    const std::size_t g = cfg.grid_points;
    res.trace.reserve(g);
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g; ++i) {
        const double ln_n = ceiling.log_n * double(i) / double(g - 1);
        const double v = objective(ln_n, cfg);
        res.trace.emplace_back(ln_n, v);
        if (v > best_val) {  // ties keep the smallest n
            best_val = v;
            best = i;
        }
    }

    // Unimodality certificate: discrete differences change sign at most once.
    int sign_changes = 0, prev_sign = 0;
    for (std::size_t i = 1; i < g; ++i) {
        const double d = res.trace[i].second - res.trace[i - 1].second;
        const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (s != 0) {
            if (prev_sign != 0 && s != prev_sign) ++sign_changes;
            prev_sign = s;
        }
    }
    res.unimodal = sign_changes <= 1;
    if (!res.unimodal) res.flags.push_back("MultimodalObjective");

    double ln_star;
    if (best == 0 || best + 1 == g) {
        res.boundary = true;
        ln_star = res.trace[best].first;
        if (best + 1 == g) res.flags.push_back("UnboundedDirection");
    } else {
        // Golden-section refinement inside the bracketing grid cell.
        double a = res.trace[best - 1].first;
        double b = res.trace[best + 1].first;
        double x1 = b - kGolden * (b - a);
        double x2 = a + kGolden * (b - a);
        double f1 = objective(x1, cfg);
        double f2 = objective(x2, cfg);
        res.refine_evals = 2;
        while (b - a > cfg.refine_tol * std::max(1.0, std::abs(b))) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + kGolden * (b - a);
                f2 = objective(x2, cfg);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - kGolden * (b - a);
                f1 = objective(x1, cfg);
            }
            ++res.refine_evals;
        }
        ln_star = 0.5 * (a + b);
    }

    // n is treated as continuous during refinement; report the nearest
    // integer when representable so tau* = tau(n*) holds exactly.
    if (ln_star <= kMaxRepresentableLogN) {
        const double n_rounded = std::max(1.0, std::round(std::exp(ln_star)));
        res.n_star = n_rounded;
        res.log_n_star = std::log(n_rounded);
    } else {
        res.n_star = std::numeric_limits<double>::infinity();
        res.log_n_star = ln_star;
        res.flags.push_back("NStarBeyondDoubleRange");
    }
    res.tau_star = tau_of_log_n(res.log_n_star, cfg);
    const double pt = p_tilde_at(res.tau_star, cfg);
    const BoundResult q = second_order_bound_logn(pt, res.log_n_star, cfg.eps, cfg.mode, cfg.log_term);
    res.q_star = q.value;
    res.branch = q.branch;
    return res;
}

ContourTable contour_grid(const OptimizerConfig& cfg, double n_lo, double n_hi, double tau_lo,
                          double tau_hi, std::size_t res_n, std::size_t res_tau) {
    cfg.validate();
    if (n_lo < 1 || n_hi < n_lo || tau_lo <= 0 || tau_hi < tau_lo)
        throw std::invalid_argument("contour_grid: invalid ranges");
    ContourTable t;
    const double l0 = std::log(n_lo), l1 = std::log(n_hi);
    for (std::size_t i = 0; i < res_n; ++i) {
        const double ln_n = res_n == 1 ? l0 : l0 + (l1 - l0) * double(i) / double(res_n - 1);
        const double n = std::exp(ln_n);
        t.constraint.emplace_back(n, tau_of_log_n(ln_n, cfg));
        for (std::size_t j = 0; j < res_tau; ++j) {
            const double tau =
                res_tau == 1 ? tau_lo : tau_lo + (tau_hi - tau_lo) * double(j) / double(res_tau - 1);
            const double pt = p_tilde_at(tau, cfg);
            double q = 0;
            if (pt > 0 && pt < 0.25)
                q = second_order_bound_logn(pt, ln_n, cfg.eps, cfg.mode, cfg.log_term).value;
            t.grid.push_back({n, tau, q});
        }
    }
    return t;
}

} // namespace qmem
