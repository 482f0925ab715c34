#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qmem {

/// Quantum-expander-family constants (gamma = 2 throughout). Derived fields
/// are filled by make(); all are strictly positive for delta < 1/16.
struct ExpanderFamilyConstants {
    int d_a = 7;
    int d_b = 8;
    double gamma = 2.0;
    double delta = 1e-5;

    // derived
    double d = 0;        // d_B^2 + 2 d_B (d_A - 1)
    double r = 0;        // d_A / d_B
    double beta0 = 0;    // 1 - 8 delta
    double beta1 = 0;    // 1 - 16 delta
    double beta = 0;     // 0.99 beta1
    double gamma0 = 0;   // r^2 gamma / sqrt(1 + r^2)
    double alpha = 0;    // r beta / (4 + 2 r beta)
    double c0 = 0;       // 4 / (d_A (beta1 - beta))
    double h_alpha = 0;  // binary entropy of alpha, log base 2

    static ExpanderFamilyConstants make(int d_a, int d_b, double gamma = 2.0,
                                        double delta = 1e-5);
};

struct NoiseModel {
    double p = 0;        // data-qubit local-stochastic parameter
    double q = 0;        // syndrome-noise parameter
    double p_r = 0;      // residual parameter after refresh
    double p_tilde = 0;  // depolarizing parameter (3p/2 convention)
    double k_const = 1;  // K in p_r = K q^{1/c0}; the paper leaves it open
    double tau_r = 0;    // relaxation time, seconds
    double tau_d = 0;    // dephasing time, seconds
};

struct ComplexityBreakdown {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t n_a = 0;
    std::size_t n_h = 0;
    std::size_t n_synd = 0;
    std::size_t n_m = 0;
    std::size_t n_ec = 0;
    std::size_t chi = 0;        // n + n_a + (n_h + n_synd + n_ec) + n_m
    double storage_rate = 0;    // k / chi
    bool degenerate = false;    // d_A == d_B, rate zero
};

/// Component counts and closed-form rate for the hypergraph-product expander
/// memory. The closed form assumes the biregular relation n_A d_A = n_B d_B;
/// both routes are computed and must agree.
ComplexityBreakdown expander_complexity(std::size_t n_a, std::size_t n_b, int d_a, int d_b);

/// Smallest biregular instance: n_A = d_B, n_B = d_A.
ComplexityBreakdown expander_complexity(int d_a, int d_b);

/// chi = 12 n accounting for the bivariate bicycle memory.
ComplexityBreakdown bb_complexity(std::size_t n, std::size_t k);

/// p(tau) = 1/2 - e^{-tau/tau_r}/6 - e^{-tau/tau_d}/3.
double wait_noise(double tau, double tau_r, double tau_d);

struct ComposedNoise {
    double p = 0;
    bool clamped = false;
    std::optional<bool> below_threshold;
};

ComposedNoise compose_local_stochastic(double p_r, double p,
                                       std::optional<double> p_th = std::nullopt);

/// p_r = K q^{1/c0}.
double residual_noise(double q, const ExpanderFamilyConstants& c, double k_const = 1.0);

/// log10 of p_th = (2^{-h(alpha)} / ((d-1)(1 + 1/(d-2))^{d-2}))^{1/alpha}.
double expander_threshold_log10(const ExpanderFamilyConstants& c);
double expander_threshold(const ExpanderFamilyConstants& c);

/// A probability bound tracked as log10; -infinity means bound zero.
struct LogBound {
    double log10 = 0;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
};

/// log10 of C n ((p + p_r)/p_th)^{C' sqrt(n)}; entirely log-domain.
/// Flags: AboveThreshold (returns trivial bound 0 = log10 of 1),
/// NearThreshold (clamped to 0 when the bound exceeds 1).
LogBound expander_logical_error(double n, double p, double p_r,
                                const ExpanderFamilyConstants& c);

/// Union bound over ceil(T/tau) cycles, clamped at probability 1.
LogBound multi_cycle_error(const LogBound& pe_single, double t_total, double tau);

/// Appendix C fitting formula: p^{d_circ/2} exp(18.04 + 1337 p - 96007 p^2).
double bb_logical_error(double p, int d_circ);

/// Lower bound 1 - pe on recovery fidelity.
double fidelity_from_error(double pe);

} // namespace qmem
