#include "qmem/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qmem {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }
} // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), bits_(rows * words_, 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::cyclic_shift(std::size_t l) {
    if (l == 0) throw std::invalid_argument("cyclic_shift: l must be >= 1");
    BinaryMatrix m(l, l);
    for (std::size_t i = 0; i < l; ++i) m.set(i, (i + 1) % l, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    BinaryMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw std::invalid_argument("from_rows: expected '0'/'1'");
            if (ch == '1') m.set(i, j, true);
        }
    }
    return m;
}

bool BinaryMatrix::get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool v) {
    uint64_t& w = bits_[i * words_ + j / kWordBits];
    const uint64_t mask = uint64_t{1} << (j % kWordBits);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t w = 0; w < words_; ++w) {
            uint64_t word = bits_[i * words_ + w];
            while (word) {
                const int b = std::countr_zero(word);
                t.set(w * kWordBits + b, i, true);
                word &= word - 1;
            }
        }
    return t;
}

bool BinaryMatrix::is_zero() const {
    for (uint64_t w : bits_)
        if (w) return false;
    return true;
}

std::size_t BinaryMatrix::row_weight(std::size_t i) const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < words_; ++k) w += std::popcount(bits_[i * words_ + k]);
    return w;
}

bool BinaryMatrix::operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

std::string BinaryMatrix::to_text() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BinaryMatrix matmul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    BinaryMatrix c(a.rows(), b.cols());
    const std::size_t wb = b.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* out = c.row_data(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            const uint64_t* brow = b.row_data(k);
            for (std::size_t w = 0; w < wb; ++w) out[w] ^= brow[w];
        }
    }
    return c;
}

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
    const std::size_t r = a.rows() * b.rows();
    const std::size_t c = a.cols() * b.cols();
    if (a.rows() != 0 && b.rows() != 0 && r / a.rows() != b.rows())
        throw std::overflow_error("kron: size overflow");
    if (a.cols() != 0 && b.cols() != 0 && c / a.cols() != b.cols())
        throw std::overflow_error("kron: size overflow");
    BinaryMatrix m(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b.get(k, l)) m.set(i * b.rows() + k, j * b.cols() + l, true);
        }
    return m;
}

BinaryMatrix gf2_add(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("gf2_add: dimension mismatch");
    BinaryMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* out = c.row_data(i);
        const uint64_t* bi = b.row_data(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) out[w] ^= bi[w];
    }
    return c;
}

BinaryMatrix hstack(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    BinaryMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) c.set(i, j, true);
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) c.set(i, a.cols() + j, true);
    }
    return c;
}

BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    BinaryMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t w = 0; w < a.words_per_row(); ++w)
            c.row_data(i)[w] = a.row_data(i)[w];
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t w = 0; w < b.words_per_row(); ++w)
            c.row_data(a.rows() + i)[w] = b.row_data(i)[w];
    return c;
}

namespace {

// Row echelon in place; pivots chosen left to right, first nonzero row.
// Returns pivot column per eliminated row.
std::vector<std::size_t> echelon(BinaryMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t words = m.words_per_row();
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && !m.get(pr, col)) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t w = 0; w < words; ++w)
                std::swap(m.row_data(row)[w], m.row_data(pr)[w]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != row && m.get(r, col))
                for (std::size_t w = 0; w < words; ++w) m.row_data(r)[w] ^= m.row_data(row)[w];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const BinaryMatrix& a) {
    BinaryMatrix m = a;
    return echelon(m).size();
}

BinaryMatrix kernel_basis(const BinaryMatrix& a) {
    BinaryMatrix m = a;
    const std::vector<std::size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    const std::size_t nullity = a.cols() - pivots.size();
    BinaryMatrix basis(nullity, a.cols());
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out, free_col, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m.get(r, free_col)) basis.set(out, pivots[r], true);
        ++out;
    }
    return basis;
}

BinaryMatrix kernel_intersection(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("kernel_intersection: column mismatch");
    return kernel_basis(vstack(a, b));
}

bool row_space_contains(const BinaryMatrix& a, const BinaryMatrix& v) {
    if (v.rows() != 1 || v.cols() != a.cols())
        throw std::invalid_argument("row_space_contains: v must be 1 x cols");
    if (v.is_zero()) return true;
    return rank(vstack(a, v)) == rank(a);
}

} // namespace qmem
