#include "fh/linalg/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace fh::linalg {

namespace {

// Incremental row echelon form: each vector is reduced against the stored
// pivots by its leading entry until it either vanishes or starts a new pivot.
template <class Value, class Ops>
std::size_t echelon_rank(std::vector<std::map<std::size_t, Value>> vectors, const Ops& ops)
{
    std::sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::map<std::size_t, std::map<std::size_t, Value>> pivots;
    for (auto& v : vectors) {
        while (!v.empty()) {
            auto lead = v.begin();
            auto p = pivots.find(lead->first);
            if (p == pivots.end()) {
                Value inv = ops.inverse(lead->second);
                for (auto& [k, x] : v)
                    x = ops.mul(x, inv);
                pivots.emplace(lead->first, std::move(v));
                break;
            }
            Value factor = lead->second;
            for (const auto& [k, x] : p->second) {
                auto [it, inserted] = v.emplace(k, ops.neg(ops.mul(factor, x)));
                if (!inserted) {
                    it->second = ops.add(it->second, ops.neg(ops.mul(factor, x)));
                    if (ops.is_zero(it->second))
                        v.erase(it);
                }
            }
        }
    }
    return pivots.size();
}

struct RationalOps {
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
    mpq_class neg(const mpq_class& a) const { return -a; }
    mpq_class inverse(const mpq_class& a) const { return 1 / a; }
    bool is_zero(const mpq_class& a) const { return a == 0; }
};

struct ModularOps {
    std::int64_t p;
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const
    {
        return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p - a; }
    std::int64_t inverse(std::int64_t a) const
    {
        std::int64_t result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
    bool is_zero(std::int64_t a) const { return a == 0; }
};

// Elimination works on the orientation with fewer vectors.
const SparseMatrix& oriented(const SparseMatrix& m, SparseMatrix& scratch)
{
    if (m.cols() <= m.rows())
        return m;
    scratch = m.transposed();
    return scratch;
}

void dense_snf(std::vector<std::vector<mpz_class>>& a, std::vector<mpz_class>& factors)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: least absolute value in the remaining block, first in index order.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility: fold an offending row into the pivot row and retry.
            for (std::size_t i = t + 1; i < rows && clean; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        clean = false;
                        break;
                    }
                }
            }
        }
        factors.push_back(abs(a[t][t]));
        ++t;
    }
}

} // namespace

std::size_t rank(const SparseMatrix& m, const Ring& ring)
{
    SparseMatrix scratch;
    const SparseMatrix& a = oriented(m, scratch);
    if (ring.kind == Ring::Kind::Fp) {
        ModularOps ops{ring.p};
        std::vector<std::map<std::size_t, std::int64_t>> vectors(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) {
            for (const auto& [r, v] : a.column(c)) {
                std::int64_t x = normalize(v, ring).get_num().get_si();
                if (x != 0)
                    vectors[c].emplace(r, x);
            }
        }
        return echelon_rank(std::move(vectors), ops);
    }
    std::vector<std::map<std::size_t, mpq_class>> vectors(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        vectors[c] = a.column(c);
    return echelon_rank(std::move(vectors), RationalOps{});
}

std::vector<mpz_class> invariant_factors(const SparseMatrix& m)
{
    // Sparse phase: unit pivots are eliminated without touching the rest of
    // their row, which column operations clear for free.
    std::map<std::size_t, std::map<std::size_t, mpz_class>> rows;
    std::map<std::size_t, std::set<std::size_t>> col_rows;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) {
            if (v.get_den() != 1)
                throw std::domain_error("invariant factors need an integer matrix");
            rows[r].emplace(c, v.get_num());
            col_rows[c].insert(r);
        }
    }
    std::size_t units = 0;
    for (;;) {
        std::size_t best_row = 0, best_col = 0, best_len = 0;
        bool found = false;
        for (const auto& [r, row] : rows) {
            if (found && row.size() >= best_len)
                continue;
            for (const auto& [c, v] : row) {
                if (abs(v) == 1) {
                    best_row = r;
                    best_col = c;
                    best_len = row.size();
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            break;
        const auto pivot_row = rows[best_row];
        const mpz_class pivot = pivot_row.at(best_col);
        std::vector<std::size_t> others(col_rows[best_col].begin(), col_rows[best_col].end());
        for (std::size_t r : others) {
            if (r == best_row)
                continue;
            auto& row = rows[r];
            mpz_class factor = row.at(best_col) * pivot; // pivot is ±1, so this divides exactly
            for (const auto& [c, v] : pivot_row) {
                auto [it, inserted] = row.emplace(c, -factor * v);
                if (!inserted)
                    it->second -= factor * v;
                if (it->second == 0) {
                    row.erase(it);
                    col_rows[c].erase(r);
                } else {
                    col_rows[c].insert(r);
                }
            }
            if (row.empty())
                rows.erase(r);
        }
        for (const auto& [c, v] : pivot_row)
            col_rows[c].erase(best_row);
        col_rows.erase(best_col);
        rows.erase(best_row);
        ++units;
    }

    std::vector<mpz_class> factors(units, mpz_class(1));
    std::vector<std::size_t> live_cols;
    for (const auto& [c, rs] : col_rows) {
        if (!rs.empty())
            live_cols.push_back(c);
    }
    std::map<std::size_t, std::size_t> col_index;
    for (std::size_t i = 0; i < live_cols.size(); ++i)
        col_index[live_cols[i]] = i;
    std::vector<std::vector<mpz_class>> dense;
    for (const auto& [r, row] : rows) {
        std::vector<mpz_class> d(live_cols.size());
        for (const auto& [c, v] : row)
            d[col_index.at(c)] = v;
        dense.push_back(std::move(d));
    }
    std::vector<mpz_class> rest;
    dense_snf(dense, rest);
    std::sort(rest.begin(), rest.end());
    factors.insert(factors.end(), rest.begin(), rest.end());
    return factors;
}

ModuleInvariants cokernel(const SparseMatrix& m, const Ring& ring)
{
    if (ring.is_field())
        return {m.rows() - rank(m, ring), {}};
    auto factors = invariant_factors(m);
    ModuleInvariants out{m.rows() - factors.size(), {}};
    for (const auto& f : factors) {
        if (f != 1)
            out.torsion.push_back(f);
    }
    return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& c, int top)
{
    std::map<std::size_t, std::vector<mpz_class>> factors;
    std::map<std::size_t, std::size_t> ranks;
    auto boundary_rank = [&](std::size_t n) -> std::size_t {
        if (n == 0 || n >= c.boundary.size() || n >= c.dims.size())
            return 0;
        if (auto it = ranks.find(n); it != ranks.end())
            return it->second;
        std::size_t r = 0;
        if (c.ring.is_field()) {
            r = rank(c.boundary[n], c.ring);
        } else {
            factors[n] = invariant_factors(c.boundary[n]);
            r = factors[n].size();
        }
        ranks[n] = r;
        return r;
    };
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= top; ++n) {
        HomologyGroup h{n, {}};
        if (static_cast<std::size_t>(n) < c.dims.size()) {
            const std::size_t out_rank = boundary_rank(n);
            const std::size_t in_rank = boundary_rank(n + 1);
            h.value.rank = c.dims[n] - out_rank - in_rank;
            if (!c.ring.is_field() && factors.count(n + 1)) {
                for (const auto& f : factors[n + 1]) {
                    if (f != 1)
                        h.value.torsion.push_back(f);
                }
            }
        }
        out.push_back(h);
    }
    return out;
}

bool is_complex(const ChainComplex& c)
{
    for (std::size_t n = 2; n < c.boundary.size(); ++n) {
        if (c.boundary[n - 1].cols() != c.boundary[n].rows())
            return false;
        if (!(c.boundary[n - 1] * c.boundary[n]).is_zero(c.ring))
            return false;
    }
    return true;
}

nlohmann::json to_json(const HomologyGroup& h)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : h.value.torsion) {
        if (t.fits_slong_p())
            torsion.push_back(t.get_si());
        else
            torsion.push_back(t.get_str());
    }
    return {{"degree", h.degree}, {"rank", h.value.rank}, {"torsion", torsion}};
}

} // namespace fh::linalg
