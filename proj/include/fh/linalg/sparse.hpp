#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "fh/linalg/ring.hpp"

namespace fh::linalg {

/// A sparse rows x cols matrix with exact rational entries, stored by
/// column. Entries over 𝔽_p are kept as their integer representatives.
class SparseMatrix {
public:
    using Column = std::map<std::size_t, mpq_class>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t c) const { return columns_[c]; }
    std::size_t nonzeros() const;

    void add(std::size_t r, std::size_t c, const mpq_class& v);
    mpq_class at(std::size_t r, std::size_t c) const;

    /// Reduces every entry into the ring and drops zeros.
    SparseMatrix normalized(const Ring& ring) const;
    bool is_zero(const Ring& ring) const;

    SparseMatrix transposed() const;
    std::vector<std::vector<mpq_class>> dense() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix scaled(const mpq_class& s) const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Block matrix from a grid of optional blocks; empty blocks are zero.
SparseMatrix block_matrix(const std::vector<std::size_t>& row_sizes, const std::vector<std::size_t>& col_sizes,
                          const std::vector<std::vector<const SparseMatrix*>>& blocks);

} // namespace fh::linalg
