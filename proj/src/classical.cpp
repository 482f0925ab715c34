#include "qmem/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "qmem/bounds.hpp"

namespace qmem {

namespace {
const double kLog2Of3 = std::log2(3.0);
constexpr double kGolden = 0.61803398874989484820;
} // namespace

double delta_h(double alpha, double p) {
    if (alpha < 0 || alpha > 0.5) throw std::invalid_argument("delta_h: alpha must be in [0, 1/2]");
    if (p < 0 || p > 1) throw std::invalid_argument("delta_h: p must be in [0, 1]");
    // H(p, (1-p)/3, (1-p)/3, (1-p)/3) = h2(p) + (1-p) log2 3.
    const double input_entropy = binary_entropy(p) + (1 - p) * kLog2Of3;
    return input_entropy - binary_entropy(alpha + p - 2 * alpha * p);
}

DeltaHStar delta_h_star(double alpha) {
    constexpr std::size_t kGrid = 1024;
    std::size_t best = 0;
    double best_val = -1;
    for (std::size_t i = 0; i < kGrid; ++i) {
        const double p = double(i) / double(kGrid - 1);
        const double v = delta_h(alpha, p);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = best == 0 ? 0.0 : double(best - 1) / double(kGrid - 1);
    double b = best + 1 >= kGrid ? 1.0 : double(best + 1) / double(kGrid - 1);
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = delta_h(alpha, x1);
    double f2 = delta_h(alpha, x2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = delta_h(alpha, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = delta_h(alpha, x1);
        }
    }
    DeltaHStar out;
    out.p_star = 0.5 * (a + b);
    out.value = delta_h(alpha, out.p_star);
    // The maximum may sit exactly on an endpoint (alpha = 0 gives p* = 0).
    if (delta_h(alpha, 0.0) >= out.value) {
        out.p_star = 0.0;
        out.value = delta_h(alpha, 0.0);
    }
    return out;
}

double classical_ub(double alpha, ClassicalUbVariant variant) {
    if (alpha < 0 || alpha > 0.5) throw std::invalid_argument("classical_ub: alpha must be in [0, 1/2]");
    const double h = binary_entropy(alpha);
    const double capacity = 1 - h;  // BSC capacity, the plug-in C(alpha)
    if (h == 0) return capacity;
    const double dissipated = variant == ClassicalUbVariant::refined
                                  ? delta_h_star(alpha).value
                                  : 2 - binary_entropy(alpha / 2 + 0.25);
    if (dissipated <= 0) return 0.0;
    return capacity / (1 + h / dissipated);
}

std::vector<Fig3Row> figure3_data(std::size_t grid) {
    if (grid < 2) throw std::invalid_argument("figure3_data: grid must be >= 2");
    std::vector<Fig3Row> rows;
    rows.reserve(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        const double alpha = 0.5 * double(i) / double(grid - 1);
        Fig3Row r;
        r.alpha = alpha;
        r.ub_old = classical_ub(alpha, ClassicalUbVariant::uniform_input);
        r.ub_new = classical_ub(alpha, ClassicalUbVariant::refined);
        r.gap = r.ub_new - r.ub_old;
        rows.push_back(r);
    }
    return rows;
}

} // namespace qmem
