#include "fh/linalg/sparse.hpp"

#include <stdexcept>

namespace fh::linalg {

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.add(i, i, 1);
    return m;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const mpq_class& v)
{
    if (r >= rows_ || c >= columns_.size())
        throw std::out_of_range("matrix index out of range");
    if (v == 0)
        return;
    auto [it, inserted] = columns_[c].emplace(r, v);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += v;
        if (it->second == 0)
            columns_[c].erase(it);
    }
}

mpq_class SparseMatrix::at(std::size_t r, std::size_t c) const
{
    auto it = columns_.at(c).find(r);
    return it == columns_[c].end() ? mpq_class(0) : it->second;
}

SparseMatrix SparseMatrix::normalized(const Ring& ring) const
{
    SparseMatrix out(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& [r, v] : columns_[c]) {
            mpq_class w = normalize(v, ring);
            if (w != 0)
                out.columns_[c].emplace(r, w);
        }
    }
    return out;
}

bool SparseMatrix::is_zero(const Ring& ring) const
{
    return normalized(ring).nonzeros() == 0;
}

SparseMatrix SparseMatrix::transposed() const
{
    SparseMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& [r, v] : columns_[c])
            t.columns_[r].emplace(c, v);
    }
    return t;
}

std::vector<std::vector<mpq_class>> SparseMatrix::dense() const
{
    std::vector<std::vector<mpq_class>> d(rows_, std::vector<mpq_class>(cols()));
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& [r, v] : columns_[c])
            d[r][c] = v;
    }
    return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& target = out.columns_[j];
        for (const auto& [k, bv] : b.columns_[j]) {
            for (const auto& [i, av] : a.columns_[k]) {
                auto [it, inserted] = target.emplace(i, av * bv);
                if (!inserted)
                    it->second += av * bv;
            }
        }
        for (auto it = target.begin(); it != target.end();)
            it = it->second == 0 ? target.erase(it) : std::next(it);
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shapes differ");
    SparseMatrix out = a;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (const auto& [i, v] : b.columns_[j])
            out.add(i, j, v);
    }
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
{
    return a + b.scaled(-1);
}

SparseMatrix SparseMatrix::scaled(const mpq_class& s) const
{
    SparseMatrix out(rows_, cols());
    if (s == 0)
        return out;
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& [r, v] : columns_[c])
            out.columns_[c].emplace(r, v * s);
    }
    return out;
}

SparseMatrix block_matrix(const std::vector<std::size_t>& row_sizes, const std::vector<std::size_t>& col_sizes,
                          const std::vector<std::vector<const SparseMatrix*>>& blocks)
{
    std::vector<std::size_t> row_offset{0}, col_offset{0};
    for (auto r : row_sizes)
        row_offset.push_back(row_offset.back() + r);
    for (auto c : col_sizes)
        col_offset.push_back(col_offset.back() + c);
    SparseMatrix out(row_offset.back(), col_offset.back());
    for (std::size_t bi = 0; bi < row_sizes.size(); ++bi) {
        for (std::size_t bj = 0; bj < col_sizes.size(); ++bj) {
            const SparseMatrix* b = blocks[bi][bj];
            if (!b)
                continue;
            if (b->rows() != row_sizes[bi] || b->cols() != col_sizes[bj])
                throw std::invalid_argument("block has the wrong shape");
            for (std::size_t c = 0; c < b->cols(); ++c) {
                for (const auto& [r, v] : b->column(c))
                    out.add(row_offset[bi] + r, col_offset[bj] + c, v);
            }
        }
    }
    return out;
}

} // namespace fh::linalg
