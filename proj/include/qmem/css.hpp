#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "qmem/gf2.hpp"

namespace qmem {

/// CSS code: pair of parity checks over the same n qubits with H_X H_Z^T = 0.
struct CssCode {
    BinaryMatrix h_x;
    BinaryMatrix h_z;
    std::size_t n = 0;
    std::size_t k = 0;
    /// Exact distance, set only when certified by enumeration.
    std::optional<std::size_t> d_min;
    /// Distance carried from the literature without verification (BB instances).
    std::optional<std::size_t> d_claimed;

    bool css_ok() const;
};

struct BbTerm {
    char axis;          // 'x' or 'y'
    unsigned exponent;  // < l for x, < m for y
};

/// Exactly three terms, A = z1^e1 + z2^e2 + z3^e3 with z_i in {x, y}.
struct BbPolynomial {
    std::array<BbTerm, 3> terms;
};

/// Build the hypergraph product of a classical parity check h (n_B checks,
/// n_A bits) with itself. n = n_A^2 + n_B^2, k certified by rank-nullity.
CssCode hypergraph_product(const BinaryMatrix& h);

/// Bivariate bicycle code over cyclic shifts x = S_l (x) I_m, y = I_l (x) S_m.
/// H_X = (A, B), H_Z = (B^T, A^T); k = 2 dim(ker A & ker B), cross-checked
/// against rank-nullity.
CssCode bb_code(std::size_t l, std::size_t m, const BbPolynomial& a, const BbPolynomial& b);

/// Steane [[7,1,3]]: H_X = H_Z = the Hamming(7,4) parity check.
CssCode steane_code();

struct DistanceResult {
    std::optional<std::size_t> distance;
    std::string reason;  // set when distance is unknown
};

/// X-type distance min{|v| : v in ker(h_x) \ rs(h_z)} by enumerating the
/// whole kernel; Unknown when dim ker(h_x) exceeds the budget. With
/// both_sectors the Z-type distance is enumerated too and the min returned.
DistanceResult min_distance_exhaustive(const CssCode& code, std::size_t budget = 22,
                                       bool both_sectors = false);

} // namespace qmem
