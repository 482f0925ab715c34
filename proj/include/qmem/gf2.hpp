#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qmem {

/// Dense bit-packed matrix over GF(2). Row-major, 64-bit words per row,
/// padding bits beyond `cols` are kept zero. The 0x0 matrix is valid.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t n);
    /// S_l: row i has its single 1 at column (i+1) mod l.
    static BinaryMatrix cyclic_shift(std::size_t l);
    /// Rows of '0'/'1' characters, all the same length.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool v);

    BinaryMatrix transpose() const;
    bool is_zero() const;
    std::size_t row_weight(std::size_t i) const;

    bool operator==(const BinaryMatrix& o) const;
    bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

    /// Newline-separated rows of '0'/'1' characters (the CLI export format).
    std::string to_text() const;

    const uint64_t* row_data(std::size_t i) const { return bits_.data() + i * words_; }
    uint64_t* row_data(std::size_t i) { return bits_.data() + i * words_; }
    std::size_t words_per_row() const { return words_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<uint64_t> bits_;
};

BinaryMatrix matmul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix gf2_add(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix hstack(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b);

std::size_t rank(const BinaryMatrix& a);

/// Basis of the right null space, one vector per row; deterministic ordering
/// (free columns left to right). Row count equals cols - rank.
BinaryMatrix kernel_basis(const BinaryMatrix& a);

/// Basis of ker(a) & ker(b), computed as the kernel of [a; b].
BinaryMatrix kernel_intersection(const BinaryMatrix& a, const BinaryMatrix& b);

/// True iff v (a 1 x cols matrix) is a GF(2) combination of rows of a.
bool row_space_contains(const BinaryMatrix& a, const BinaryMatrix& v);

} // namespace qmem
