#include "qmem/memory_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmem {

namespace {
constexpr double kLog10E = 0.43429448190325182765;  // log10(e)

double binary_entropy2(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}
} // namespace

ExpanderFamilyConstants ExpanderFamilyConstants::make(int d_a, int d_b, double gamma,
                                                      double delta) {
    if (d_a < 1 || d_b < 1) throw std::invalid_argument("expander constants: degrees must be >= 1");
    if (delta >= 1.0 / 16.0) throw std::invalid_argument("expander constants: delta must be < 1/16");
    ExpanderFamilyConstants c;
    c.d_a = d_a;
    c.d_b = d_b;
    c.gamma = gamma;
    c.delta = delta;
    c.d = double(d_b) * d_b + 2.0 * d_b * (d_a - 1);
    c.r = double(d_a) / d_b;
    c.beta0 = 1 - 8 * delta;
    c.beta1 = 1 - 16 * delta;
    c.beta = 0.99 * c.beta1;
    c.gamma0 = c.r * c.r * gamma / std::sqrt(1 + c.r * c.r);
    c.alpha = c.r * c.beta / (4 + 2 * c.r * c.beta);
    c.c0 = 4.0 / (d_a * (c.beta1 - c.beta));
    c.h_alpha = binary_entropy2(c.alpha);
    return c;
}

ComplexityBreakdown expander_complexity(std::size_t n_a, std::size_t n_b, int d_a, int d_b) {
    if (!(n_a > n_b && n_b >= 1)) throw std::invalid_argument("expander_complexity: need n_A > n_B >= 1");
    if (!(d_b >= d_a && d_a >= 1)) throw std::invalid_argument("expander_complexity: need d_B >= d_A >= 1");

    ComplexityBreakdown b;
    b.k = (n_a - n_b) * (n_a - n_b);
    b.n = n_a * n_a + n_b * n_b;
    b.n_a = 2 * n_a * n_b;
    b.n_h = 2 * n_a * n_b;
    b.n_synd = 2 * n_a * n_b * std::size_t(d_a + d_b);
    b.n_m = 2 * n_a * n_b;
    b.n_ec = 2 * (n_a * n_a + n_b * n_b);
    b.chi = b.n + b.n_a + (b.n_h + b.n_synd + b.n_ec) + b.n_m;
    b.degenerate = d_a == d_b;
    if (b.degenerate) {
        b.storage_rate = 0;
        return b;
    }

    const double rate_counts = double(b.k) / double(b.chi);
    const double r_c = 1.0 - double(d_a) / d_b;
    const double r_q = double((d_b - d_a) * (d_b - d_a)) / double(d_b * d_b + d_a * d_a);
    const double rate_closed =
        1.0 / (3.0 / r_q + (3.0 + d_a + d_b) * (2.0 / r_c) * (1.0 / r_c - 1.0));

    // Both routes agree only on biregular instances n_A d_A = n_B d_B.
    if (n_a * std::size_t(d_a) == n_b * std::size_t(d_b) &&
        std::abs(rate_counts - rate_closed) > 1e-12 * rate_closed)
        throw std::logic_error("expander_complexity: closed form disagrees with component sum");

    b.storage_rate = rate_closed;
    return b;
}

ComplexityBreakdown expander_complexity(int d_a, int d_b) {
    return expander_complexity(std::size_t(d_b), std::size_t(d_a), d_a, d_b);
}

ComplexityBreakdown bb_complexity(std::size_t n, std::size_t k) {
    if (n % 2 != 0) throw std::invalid_argument("bb_complexity: n must be even");
    ComplexityBreakdown b;
    b.k = k;
    b.n = n;
    b.n_a = n;
    b.n_h = n;
    b.n_synd = 6 * n;  // CNOTs, folded into the syndrome-gate count
    b.n_ec = 2 * n;
    b.n_m = n;
    b.chi = b.n + b.n_a + (b.n_h + b.n_synd + b.n_ec) + b.n_m;
    b.storage_rate = b.chi ? double(k) / double(b.chi) : 0.0;
    return b;
}

double wait_noise(double tau, double tau_r, double tau_d) {
    if (tau < 0 || tau_r <= 0 || tau_d <= 0)
        throw std::invalid_argument("wait_noise: times must be nonnegative (tau) / positive (tau_r, tau_d)");
    return 0.5 - std::exp(-tau / tau_r) / 6.0 - std::exp(-tau / tau_d) / 3.0;
}

ComposedNoise compose_local_stochastic(double p_r, double p, std::optional<double> p_th) {
    ComposedNoise out;
    out.p = p_r + p;
    if (out.p > 1.0) {
        out.p = 1.0;
        out.clamped = true;
    }
    if (p_th) out.below_threshold = out.p < *p_th;
    return out;
}

double residual_noise(double q, const ExpanderFamilyConstants& c, double k_const) {
    if (q < 0 || q > 1) throw std::invalid_argument("residual_noise: q must be in [0,1]");
    if (q == 0) return 0.0;
    return k_const * std::exp(std::log(q) / c.c0);
}

double expander_threshold_log10(const ExpanderFamilyConstants& c) {
    if (c.d <= 2) throw std::invalid_argument("expander_threshold: d must exceed 2");
    const double ln_pth = (-c.h_alpha * std::log(2.0) - std::log(c.d - 1) -
                           (c.d - 2) * std::log1p(1.0 / (c.d - 2))) /
                          c.alpha;
    return ln_pth * kLog10E;
}

double expander_threshold(const ExpanderFamilyConstants& c) {
    return std::pow(10.0, expander_threshold_log10(c));
}

bool LogBound::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

LogBound expander_logical_error(double n, double p, double p_r,
                                const ExpanderFamilyConstants& c) {
    LogBound out;
    const double total = p + p_r;
    if (total == 0) {
        out.log10 = -std::numeric_limits<double>::infinity();
        return out;
    }
    const double log10_pth = expander_threshold_log10(c);
    const double log10_ratio = std::log10(total) - log10_pth;
    if (log10_ratio >= 0) {
        out.log10 = 0;
        out.flags.push_back("AboveThreshold");
        return out;
    }
    // C = [(1 - 2^{h/alpha} p)(1 - ratio^alpha)]^{-1}; paper uses p, not
    // p + p_r, in the first factor.
    const double f1 = 1.0 - std::exp2(c.h_alpha / c.alpha) * p;
    const double f2 = -std::expm1(c.alpha * log10_ratio / kLog10E);
    if (f1 <= 0 || f2 <= 0) {
        out.log10 = 0;
        out.flags.push_back("NearThreshold");
        return out;
    }
    out.log10 = -std::log10(f1) - std::log10(f2) + std::log10(n) +
                c.gamma0 * c.alpha * std::sqrt(n) * log10_ratio;
    if (out.log10 >= 0) {
        out.log10 = 0;
        out.flags.push_back("NearThreshold");
    }
    return out;
}

LogBound multi_cycle_error(const LogBound& pe_single, double t_total, double tau) {
    if (tau <= 0) throw std::invalid_argument("multi_cycle_error: tau must be positive");
    LogBound out = pe_single;
    const double cycles = std::ceil(t_total / tau);
    out.log10 += std::log10(std::max(cycles, 1.0));
    if (out.log10 > 0) {
        out.log10 = 0;
        out.flags.push_back("ClampedToOne");
    }
    return out;
}

double bb_logical_error(double p, int d_circ) {
    if (p < 0 || p > 0.1) throw std::invalid_argument("bb_logical_error: p must be in (0, 0.1]");
    if (p == 0) return 0.0;
    return std::pow(p, d_circ / 2.0) * std::exp(18.04 + 1337.0 * p - 96007.0 * p * p);
}

double fidelity_from_error(double pe) {
    if (pe < 0 || pe > 1) throw std::invalid_argument("fidelity_from_error: pe must be in [0,1]");
    return 1.0 - pe;
}

} // namespace qmem
