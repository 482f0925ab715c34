#include "qmem/css.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qmem {

bool CssCode::css_ok() const {
    if (h_x.cols() != n || h_z.cols() != n) return false;
    return matmul(h_x, h_z.transpose()).is_zero();
}

CssCode hypergraph_product(const BinaryMatrix& h) {
    const std::size_t n_a = h.cols();
    const std::size_t n_b = h.rows();
    if (n_a == 0 || n_b == 0) throw std::invalid_argument("hypergraph_product: empty parity check");

    const BinaryMatrix i_a = BinaryMatrix::identity(n_a);
    const BinaryMatrix i_b = BinaryMatrix::identity(n_b);
    const BinaryMatrix ht = h.transpose();

    CssCode code;
    code.h_x = hstack(kron(i_a, h), kron(ht, i_b));
    code.h_z = hstack(kron(h, i_a), kron(i_b, ht));
    code.n = n_a * n_a + n_b * n_b;

    const std::size_t r = rank(code.h_x) + rank(code.h_z);
    if (r > code.n) throw std::logic_error("hypergraph_product: negative k");
    code.k = code.n - r;

    const std::size_t diff = n_a > n_b ? n_a - n_b : n_b - n_a;
    if (code.k < diff * diff) throw std::logic_error("hypergraph_product: k below (n_A - n_B)^2");
    if (!code.css_ok()) throw std::logic_error("hypergraph_product: CSS condition violated");
    return code;
}

namespace {

BinaryMatrix bb_poly_matrix(const BbPolynomial& poly, std::size_t l, std::size_t m,
                            const BinaryMatrix& x, const BinaryMatrix& y) {
    const std::size_t lm = l * m;
    BinaryMatrix sum(lm, lm);
    for (const BbTerm& t : poly.terms) {
        if (t.axis != 'x' && t.axis != 'y') throw std::invalid_argument("bb_code: axis must be x or y");
        const std::size_t cycle = t.axis == 'x' ? l : m;
        if (t.exponent >= cycle && cycle > 1)
            throw std::invalid_argument("bb_code: exponent not reduced mod cycle length");
        const BinaryMatrix& gen = t.axis == 'x' ? x : y;
        BinaryMatrix pw = BinaryMatrix::identity(lm);
        for (unsigned e = 0; e < t.exponent % cycle; ++e) pw = matmul(pw, gen);
        sum = gf2_add(sum, pw);
    }
    return sum;
}

} // namespace

CssCode bb_code(std::size_t l, std::size_t m, const BbPolynomial& a, const BbPolynomial& b) {
    if (l < 1 || m < 1) throw std::invalid_argument("bb_code: l, m must be >= 1");
    const BinaryMatrix x = kron(BinaryMatrix::cyclic_shift(l), BinaryMatrix::identity(m));
    const BinaryMatrix y = kron(BinaryMatrix::identity(l), BinaryMatrix::cyclic_shift(m));

    const BinaryMatrix ma = bb_poly_matrix(a, l, m, x, y);
    const BinaryMatrix mb = bb_poly_matrix(b, l, m, x, y);

    CssCode code;
    code.h_x = hstack(ma, mb);
    code.h_z = hstack(mb.transpose(), ma.transpose());
    code.n = 2 * l * m;
    code.k = 2 * kernel_intersection(ma, mb).rows();

    const std::size_t k_rn = code.n - rank(code.h_x) - rank(code.h_z);
    if (k_rn != code.k) throw std::logic_error("bb_code: kernel-intersection k disagrees with rank-nullity");
    if (!code.css_ok()) throw std::logic_error("bb_code: CSS condition violated");
    return code;
}

CssCode steane_code() {
    const BinaryMatrix h = BinaryMatrix::from_rows({"0001111", "0110011", "1010101"});
    CssCode code;
    code.h_x = h;
    code.h_z = h;
    code.n = 7;
    code.k = 7 - rank(h) * 2;
    code.d_min = 3;
    if (!code.css_ok()) throw std::logic_error("steane_code: CSS condition violated");
    return code;
}

namespace {

std::size_t min_nontrivial_weight(const BinaryMatrix& h_ker, const BinaryMatrix& h_stab,
                                  bool& found) {
    const BinaryMatrix basis = kernel_basis(h_ker);
    const std::size_t dim = basis.rows();
    const std::size_t n = basis.cols();
    const std::size_t words = basis.words_per_row();

    std::size_t best = std::numeric_limits<std::size_t>::max();
    found = false;
    std::vector<uint64_t> v(words, 0);
    // Gray-code walk over all nonzero kernel combinations.
    for (uint64_t g = 1; g < (uint64_t{1} << dim); ++g) {
        const int flip = std::countr_zero(g);
        const uint64_t* brow = basis.row_data(static_cast<std::size_t>(flip));
        for (std::size_t w = 0; w < words; ++w) v[w] ^= brow[w];

        std::size_t wt = 0;
        for (std::size_t w = 0; w < words; ++w) wt += std::popcount(v[w]);
        if (wt == 0 || wt >= best) continue;

        BinaryMatrix vm(1, n);
        for (std::size_t w = 0; w < words; ++w) vm.row_data(0)[w] = v[w];
        if (!row_space_contains(h_stab, vm)) {
            best = wt;
            found = true;
        }
    }
    return best;
}

} // namespace

DistanceResult min_distance_exhaustive(const CssCode& code, std::size_t budget, bool both_sectors) {
    const std::size_t dim_x = code.n - rank(code.h_x);
    if (dim_x > budget)
        return {std::nullopt, "kernel dimension " + std::to_string(dim_x) + " exceeds budget"};

    bool found = false;
    std::size_t best = min_nontrivial_weight(code.h_x, code.h_z, found);

    if (both_sectors) {
        const std::size_t dim_z = code.n - rank(code.h_z);
        if (dim_z > budget)
            return {std::nullopt, "Z kernel dimension " + std::to_string(dim_z) + " exceeds budget"};
        bool found_z = false;
        const std::size_t best_z = min_nontrivial_weight(code.h_z, code.h_x, found_z);
        if (found_z && (!found || best_z < best)) best = best_z;
        found = found || found_z;
    }

    if (!found) return {std::nullopt, "no logical operators"};
    return {best, ""};
}

} // namespace qmem
