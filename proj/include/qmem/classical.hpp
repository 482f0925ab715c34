#pragma once

#include <cstddef>
#include <vector>

namespace qmem {

/// Entropy dissipated by an alpha-noisy 4-ary extremal gate with input
/// parameter p: H(p, (1-p)/3, (1-p)/3, (1-p)/3) - h2(alpha + p - 2 alpha p).
double delta_h(double alpha, double p);

struct DeltaHStar {
    double p_star = 0;
    double value = 0;  // bits
};

/// Global maximum of delta_h over p in [0,1]; 1024-point grid plus
/// golden-section refinement to 1e-10 in p.
DeltaHStar delta_h_star(double alpha);

enum class ClassicalUbVariant {
    refined,       // C(alpha) / (1 + h2(alpha)/delta_h_star)
    uniform_input  // C(alpha) / (1 + h2(alpha)/(2 - h2(alpha/2 + 1/4)))
};

/// Upper bound on classical storage capacity; C(alpha) = 1 - h2(alpha)
/// (binary symmetric channel capacity; the source never pins C).
double classical_ub(double alpha, ClassicalUbVariant variant);

struct Fig3Row {
    double alpha;
    double ub_old;
    double ub_new;
    double gap;
};

/// Old-vs-refined bound table over alpha in [0, 1/2].
std::vector<Fig3Row> figure3_data(std::size_t grid);

} // namespace qmem
