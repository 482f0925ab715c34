#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qmem {

enum class Branch {
    hashing,         // 1 - h2(p~)
    degradable_ext,  // h2((1+gamma)/2) - h2(gamma/2)
    no_cloning,      // 1 - 4 p~
    second_order,
    dissipation,
    one_shot,
};

std::string branch_name(Branch b);

/// A bound value with provenance. `deficit` is 1 - value computed on a
/// numerically stable path; for bounds within ~1e-16 of 1 it is the only
/// meaningful representation.
struct BoundResult {
    double value = 0;
    double deficit = 0;
    Branch branch = Branch::hashing;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
};

enum class HullMode { pointwise_min, convex_envelope };
enum class LogBase { base2, natural };

/// Shannon entropy in bits; entries must be >= 0 and sum to 1 within 1e-9.
double entropy(std::span<const double> probs);
double binary_entropy(double p);

/// gamma(p~) = 4 (sqrt(1 - p~) - 1 + p~).
double gamma_fn(double p_tilde);

/// Convex-hull upper bound on the depolarizing quantum capacity; p~ in [0, 1/4].
BoundResult depolarizing_capacity_ub(double p_tilde, HullMode mode = HullMode::pointwise_min,
                                     std::size_t grid_points = 4096);

/// H^dis_U(zeta) = log2 U - H(1 + zeta - U zeta, zeta, ..., zeta).
double dissipation_entropy(std::size_t u, double zeta);

/// q H^dis / (1 + H^dis - q); the entropy-dissipation storage bound.
BoundResult dissipation_bound(double q_cap, std::size_t u, double zeta);

/// Same bound with a stably tracked capacity deficit (1 - q_cap).
BoundResult dissipation_bound_from(const BoundResult& q_cap, std::size_t u, double zeta);

/// Depolarizing capacity UB composed with the two-outcome dissipation bound.
BoundResult depolarizing_dissipation_ub(double p_tilde, double zeta,
                                        HullMode mode = HullMode::pointwise_min);

/// Phi^{-1}(eps), accurate to 1e-10 absolute down to eps = 1e-300.
double inverse_normal_cdf(double eps);
/// Phi(x) via complementary error function (used by the round-trip checks).
double normal_cdf(double x);

/// Dephasing-channel dispersion V = p(1-p) log2^2((1-p)/p).
double dephasing_dispersion(double p_tilde);

/// Second-order converse, three-branch min (or envelope over the branch min):
/// (1 - h2(p~)) + sqrt(V/n) Phi^{-1}(eps) + log(n)/(2n) vs the two
/// asymptotic branches. `log_n` is ln(n); n itself may be astronomically
/// large in the optimizer so everything runs in log-n domain.
BoundResult second_order_bound_logn(double p_tilde, double log_n, double eps,
                                    HullMode mode = HullMode::pointwise_min,
                                    LogBase log_term = LogBase::base2);
BoundResult second_order_bound(double p_tilde, double n, double eps,
                               HullMode mode = HullMode::pointwise_min,
                               LogBase log_term = LogBase::base2);

/// (q + h2(eps)/n) / (1 - 2 eps); may exceed 1, reported unclamped.
BoundResult one_shot_bound(double q_cap, double n, double eps);

/// Greatest convex minorant of (xs, ys) evaluated at the grid points, via
/// a monotone-chain lower hull. xs must be strictly increasing.
std::vector<double> convex_envelope(std::span<const double> xs, std::span<const double> ys);

} // namespace qmem
