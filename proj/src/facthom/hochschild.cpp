#include "fh/facthom/hochschild.hpp"

#include <stdexcept>

namespace fh::facthom {

using linalg::ChainComplex;
using linalg::SparseMatrix;

ChainComplex hochschild_complex(const CyclicBar& bar, int top)
{
    ChainComplex c{bar.category().ring(), {}, {SparseMatrix()}};
    for (int n = 0; n <= top + 1; ++n)
        c.dims.push_back(bar.dim(n));
    for (int n = 1; n <= top + 1; ++n)
        c.boundary.push_back(bar.boundary(n));
    return c;
}

std::vector<linalg::HomologyGroup> hochschild_homology(const enrich::LinearCategory& c, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("negative maximal degree");
    CyclicBar bar(c);
    return linalg::homology(hochschild_complex(bar, n_max), n_max);
}

ChainComplex cyclic_complex(const CyclicBar& bar, int top)
{
    ChainComplex c{bar.category().ring(), {}, {SparseMatrix()}};
    auto columns = [](int n) {
        std::vector<std::size_t> degrees;
        for (int m = n; m >= 0; m -= 2)
            degrees.push_back(static_cast<std::size_t>(m));
        return degrees;
    };
    for (int n = 0; n <= top + 1; ++n) {
        std::size_t total = 0;
        for (auto m : columns(n))
            total += bar.dim(static_cast<int>(m));
        c.dims.push_back(total);
    }
    for (int n = 1; n <= top + 1; ++n) {
        const auto from = columns(n), to = columns(n - 1);
        std::vector<std::size_t> row_sizes, col_sizes;
        for (auto m : to)
            row_sizes.push_back(bar.dim(static_cast<int>(m)));
        for (auto m : from)
            col_sizes.push_back(bar.dim(static_cast<int>(m)));
        std::vector<std::vector<const SparseMatrix*>> grid(to.size(),
                                                           std::vector<const SparseMatrix*>(from.size(), nullptr));
        for (std::size_t i = 0; i < from.size(); ++i) {
            const int m = static_cast<int>(from[i]);
            if (m >= 1 && i < to.size())
                grid[i][i] = &bar.boundary(m);
            if (i >= 1)
                grid[i - 1][i] = &bar.connes_B(m);
        }
        c.boundary.push_back(linalg::block_matrix(row_sizes, col_sizes, grid));
    }
    return c;
}

std::vector<linalg::HomologyGroup> cyclic_homology(const enrich::LinearCategory& c, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("negative maximal degree");
    CyclicBar bar(c);
    return linalg::homology(cyclic_complex(bar, n_max), n_max);
}

NegativeCyclic negative_cyclic(const enrich::LinearCategory& c, int n_max, int i_max)
{
    if (n_max < 0 || i_max < 0)
        throw std::invalid_argument("negative degree or truncation");
    CyclicBar bar(c);
    // Index k holds total degree k-1 so that degree -1 is available.
    ChainComplex t{c.ring(), {}, {SparseMatrix()}};
    auto columns = [&](int n) {
        std::vector<int> degrees;
        for (int i = 0; i <= i_max; ++i)
            degrees.push_back(n + 2 * i);
        return degrees;
    };
    auto dim_of = [&](int m) -> std::size_t { return m < 0 ? 0 : bar.dim(m); };
    for (int n = -1; n <= n_max + 1; ++n) {
        std::size_t total = 0;
        for (int m : columns(n))
            total += dim_of(m);
        t.dims.push_back(total);
    }
    for (int n = 0; n <= n_max + 1; ++n) {
        const auto from = columns(n), to = columns(n - 1);
        std::vector<std::size_t> row_sizes, col_sizes;
        for (int m : to)
            row_sizes.push_back(dim_of(m));
        for (int m : from)
            col_sizes.push_back(dim_of(m));
        std::vector<std::vector<const SparseMatrix*>> grid(to.size(),
                                                           std::vector<const SparseMatrix*>(from.size(), nullptr));
        for (std::size_t i = 0; i < from.size(); ++i) {
            const int m = from[i];
            if (m >= 1)
                grid[i][i] = &bar.boundary(m);
            if (i + 1 < to.size())
                grid[i + 1][i] = &bar.connes_B(m);
        }
        t.boundary.push_back(linalg::block_matrix(row_sizes, col_sizes, grid));
    }
    auto shifted = linalg::homology(t, n_max + 1);
    NegativeCyclic out{i_max, {}};
    for (int n = 0; n <= n_max; ++n) {
        auto h = shifted[static_cast<std::size_t>(n + 1)];
        h.degree = n;
        out.groups.push_back(h);
    }
    return out;
}

nlohmann::json to_json(const std::vector<linalg::HomologyGroup>& groups)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : groups)
        out.push_back(linalg::to_json(g));
    return out;
}

} // namespace fh::facthom
