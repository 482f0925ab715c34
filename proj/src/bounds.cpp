#include "qmem/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmem {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// 1 - h2((1+x)/2), stable for small x (series) and exact at the endpoints.
double h2_deficit_half(double x) {
    x = std::abs(x);
    if (x >= 1.0) return 1.0;
    if (x < 1e-5) return x * x / (2 * kLn2) + x * x * x * x / (12 * kLn2);
    return 0.5 * (1 + x) * std::log2(1 + x) + 0.5 * (1 - x) * std::log2(1 - x);
}

struct BranchValue {
    double value;
    double deficit;  // 1 - value, stable
    Branch branch;
};

// The three hull terms of the depolarizing capacity upper bound.
std::array<BranchValue, 3> capacity_branches(double p_tilde) {
    const double g = gamma_fn(p_tilde);
    const double d_hash = binary_entropy(p_tilde);
    const double d_deg = h2_deficit_half(g) + binary_entropy(g / 2);
    const double d_nc = 4 * p_tilde;
    return {BranchValue{1 - d_hash, d_hash, Branch::hashing},
            BranchValue{1 - d_deg, d_deg, Branch::degradable_ext},
            BranchValue{1 - d_nc, d_nc, Branch::no_cloning}};
}

BranchValue min_branch(const std::array<BranchValue, 3>& bs) {
    // Largest deficit == smallest value, compared at full precision.
    return *std::max_element(bs.begin(), bs.end(), [](const BranchValue& a, const BranchValue& b) {
        return a.deficit < b.deficit;
    });
}

double interp(std::span<const double> xs, std::span<const double> ys, double x) {
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return ys.front();
    if (it == xs.end()) return ys.back();
    const std::size_t hi = std::size_t(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

} // namespace

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::hashing: return "hashing";
        case Branch::degradable_ext: return "degradable-ext";
        case Branch::no_cloning: return "no-cloning";
        case Branch::second_order: return "second-order";
        case Branch::dissipation: return "dissipation";
        case Branch::one_shot: return "one-shot";
    }
    return "?";
}

bool BoundResult::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

double entropy(std::span<const double> probs) {
    double sum = 0;
    for (double p : probs) {
        if (p < 0) throw std::invalid_argument("entropy: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("entropy: probabilities must sum to 1");
    double h = 0;
    for (double p : probs)
        if (p > 0) h -= p * std::log2(p);
    return h;
}

double binary_entropy(double p) {
    if (p < 0 || p > 1) throw std::invalid_argument("binary_entropy: p must be in [0,1]");
    if (p == 0 || p == 1) return 0.0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double gamma_fn(double p_tilde) {
    if (p_tilde < 0 || p_tilde > 1) throw std::invalid_argument("gamma_fn: p~ must be in [0,1]");
    return 4 * (std::sqrt(1 - p_tilde) - 1 + p_tilde);
}

BoundResult depolarizing_capacity_ub(double p_tilde, HullMode mode, std::size_t grid_points) {
    if (p_tilde < 0 || p_tilde > 0.25)
        throw std::invalid_argument("depolarizing_capacity_ub: p~ must be in [0, 1/4]");

    const BranchValue mn = min_branch(capacity_branches(p_tilde));
    BoundResult out;
    out.branch = mn.branch;
    if (mode == HullMode::pointwise_min) {
        out.value = mn.value;
        out.deficit = mn.deficit;
        return out;
    }

    std::vector<double> xs(grid_points), ys(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        xs[i] = 0.25 * double(i) / double(grid_points - 1);
        ys[i] = min_branch(capacity_branches(xs[i])).value;
    }
    const std::vector<double> env = convex_envelope(xs, ys);
    out.value = std::min(interp(xs, env, p_tilde), mn.value);
    out.deficit = out.value == mn.value ? mn.deficit : 1 - out.value;
    out.flags.push_back("envelope");
    return out;
}

double dissipation_entropy(std::size_t u, double zeta) {
    if (u < 2) throw std::invalid_argument("dissipation_entropy: U must be >= 2");
    if (zeta < 0 || zeta > 1.0 / double(u))
        throw std::invalid_argument("dissipation_entropy: zeta must be in [0, 1/U]");
    std::vector<double> probs(u, zeta);
    probs[0] = 1 + zeta - double(u) * zeta;
    const double h = entropy(probs);
    return std::max(std::log2(double(u)) - h, 0.0);
}

namespace {

BoundResult dissipation_from_deficit(double capacity_deficit, std::size_t u, double zeta,
                                     std::vector<std::string> flags) {
    const double h_dis = dissipation_entropy(u, zeta);
    const double x = capacity_deficit;  // 1 - q_cap
    BoundResult out;
    out.branch = Branch::dissipation;
    out.flags = std::move(flags);
    if (h_dis == 0 && x == 0) {
        // q_cap = 1 and H^dis = 0: denominator vanishes; bound degenerates.
        out.value = 0;
        out.deficit = 1;
        out.flags.push_back("DegenerateDenominator");
        return out;
    }
    // value = q H / (1 + H - q); deficit = (1 - q)(1 + H) / (1 + H - q).
    out.value = (1 - x) * h_dis / (x + h_dis);
    out.deficit = x * (1 + h_dis) / (x + h_dis);
    return out;
}

} // namespace

BoundResult dissipation_bound(double q_cap, std::size_t u, double zeta) {
    if (q_cap < 0 || q_cap > 1) throw std::invalid_argument("dissipation_bound: q_cap must be in [0,1]");
    return dissipation_from_deficit(1 - q_cap, u, zeta, {});
}

BoundResult dissipation_bound_from(const BoundResult& q_cap, std::size_t u, double zeta) {
    std::vector<std::string> flags = q_cap.flags;
    flags.push_back("capacity_branch:" + branch_name(q_cap.branch));
    return dissipation_from_deficit(q_cap.deficit, u, zeta, std::move(flags));
}

BoundResult depolarizing_dissipation_ub(double p_tilde, double zeta, HullMode mode) {
    if (p_tilde >= 0.25)
        throw std::invalid_argument("depolarizing_dissipation_ub: p~ must be in [0, 1/4)");
    if (zeta < 0 || zeta > 0.5)
        throw std::invalid_argument("depolarizing_dissipation_ub: zeta must be in [0, 1/2]");
    return dissipation_bound_from(depolarizing_capacity_ub(p_tilde, mode), 2, zeta);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double inverse_normal_cdf(double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("inverse_normal_cdf: eps must be in (0,1)");

    // Wichura's AS 241 (PPND16) rational approximations.
    const double q = eps - 0.5;
    double x;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        x = q *
            (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                  6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
              1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
            (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                  3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
              4.2313330701600911252e1) * r + 1.0);
    } else {
        double r = q < 0 ? eps : 1 - eps;
        r = std::sqrt(-std::log(r));
        if (r <= 5.0) {
            r -= 1.6;
            x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                    3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                  4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                  2.05319162663775882187e0) * r + 1.0);
        } else {
            r -= 5.0;
            x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                  5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r + 1.0);
        }
        if (q < 0) x = -x;
    }

    // Derivative (Newton) refinement in the complementary log domain; keeps
    // the deep tail honest without underflowing the density ratio.
    for (int i = 0; i < 2; ++i) {
        const double phi_small = eps <= 0.5 ? normal_cdf(x) : normal_cdf(-x);
        const double target = eps <= 0.5 ? eps : 1 - eps;
        if (phi_small <= 0) break;
        const double log_pdf = -0.5 * x * x - 0.91893853320467274178;  // ln(1/sqrt(2pi))
        const double step = (std::log(phi_small) - std::log(target)) * phi_small / std::exp(log_pdf);
        x += eps <= 0.5 ? -step : step;
    }
    return x;
}

double dephasing_dispersion(double p_tilde) {
    if (p_tilde < 0 || p_tilde > 1)
        throw std::invalid_argument("dephasing_dispersion: p~ must be in [0,1]");
    if (p_tilde == 0 || p_tilde == 1) return 0.0;
    const double l = std::log2((1 - p_tilde) / p_tilde);
    return p_tilde * (1 - p_tilde) * l * l;
}

namespace {

double second_order_branch1(double p_tilde, double log_n, double eps, LogBase log_term) {
    const double v = dephasing_dispersion(p_tilde);
    const double correction = std::sqrt(v) * std::exp(-0.5 * log_n) * inverse_normal_cdf(eps);
    const double inv_n = log_n > 700 ? 0.0 : std::exp(-log_n);
    const double lt = (log_term == LogBase::base2 ? log_n / kLn2 : log_n) * 0.5 * inv_n;
    return (1 - binary_entropy(p_tilde)) + correction + lt;
}

} // namespace

BoundResult second_order_bound_logn(double p_tilde, double log_n, double eps, HullMode mode,
                                    LogBase log_term) {
    if (!(p_tilde > 0 && p_tilde <= 0.25))
        throw std::invalid_argument("second_order_bound: p~ must be in (0, 1/4]");
    if (log_n < 0) throw std::invalid_argument("second_order_bound: n must be >= 1");
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("second_order_bound: eps must be in (0,1)");

    auto eval = [&](double pt) {
        const auto bs = capacity_branches(pt);
        BranchValue best{second_order_branch1(pt, log_n, eps, log_term), 0, Branch::second_order};
        for (const BranchValue& b : bs)
            if (b.branch != Branch::hashing && b.value < best.value) best = b;
        return best;
    };

    BranchValue bv = eval(p_tilde);
    BoundResult out;
    if (mode == HullMode::convex_envelope) {
        constexpr std::size_t kGrid = 4096;
        std::vector<double> xs(kGrid), ys(kGrid);
        for (std::size_t i = 0; i < kGrid; ++i) {
            xs[i] = 1e-12 + (0.25 - 1e-12) * double(i) / double(kGrid - 1);
            ys[i] = eval(xs[i]).value;
        }
        const std::vector<double> env = convex_envelope(xs, ys);
        const double v = std::min(interp(xs, env, p_tilde), bv.value);
        bv.value = v;
        out.flags.push_back("envelope");
    }
    out.branch = bv.branch;
    out.value = bv.value;
    if (out.value < 0) {
        out.value = 0;
        out.flags.push_back("ClampedToZero");
    }
    out.deficit = 1 - out.value;
    return out;
}

BoundResult second_order_bound(double p_tilde, double n, double eps, HullMode mode,
                               LogBase log_term) {
    if (n < 1) throw std::invalid_argument("second_order_bound: n must be >= 1");
    return second_order_bound_logn(p_tilde, std::log(n), eps, mode, log_term);
}

BoundResult one_shot_bound(double q_cap, double n, double eps) {
    if (!(eps >= 0 && eps < 0.5)) throw std::invalid_argument("one_shot_bound: eps must be in [0, 1/2)");
    if (n < 1) throw std::invalid_argument("one_shot_bound: n must be >= 1");
    BoundResult out;
    out.branch = Branch::one_shot;
    out.value = (q_cap + binary_entropy(eps) / n) / (1 - 2 * eps);
    out.deficit = 1 - out.value;
    if (out.value > 1) out.flags.push_back("ExceedsOne");
    return out;
}

std::vector<double> convex_envelope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("convex_envelope: need matching sizes >= 2");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("convex_envelope: xs must be strictly increasing");

    // Monotone-chain lower hull over the point set.
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            const double cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (ys[b] - ys[a]) * (xs[i] - xs[a]);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }

    std::vector<double> env(xs.size());
    std::size_t seg = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (seg + 1 < hull.size() && xs[hull[seg + 1]] < xs[i]) ++seg;
        const std::size_t a = hull[seg];
        const std::size_t b = hull[std::min(seg + 1, hull.size() - 1)];
        if (a == b || xs[b] == xs[a]) {
            env[i] = ys[a];
        } else {
            const double t = (xs[i] - xs[a]) / (xs[b] - xs[a]);
            env[i] = ys[a] + t * (ys[b] - ys[a]);
        }
    }
    return env;
}

} // namespace qmem
