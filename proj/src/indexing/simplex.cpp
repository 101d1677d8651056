#include "fh/indexing/simplex.hpp"

#include <stdexcept>

namespace fh::indexing {

manifold::GraphManifold standard_interval(int n)
{
    if (n < 0)
        throw std::invalid_argument("standard interval needs n >= 0");
    return manifold::chain(n);
}

bool is_valid(const SimplexMap& f)
{
    if (f.m < 0 || f.n < 0 || static_cast<int>(f.values.size()) != f.m + 1)
        return false;
    for (int i = 0; i <= f.m; ++i) {
        if (f.values[i] < 0 || f.values[i] > f.n || (i > 0 && f.values[i] < f.values[i - 1]))
            return false;
    }
    return true;
}

SimplexMap simplex_identity(int n)
{
    return interval_inclusion(n, n, 0);
}

SimplexMap coface(int n, int i)
{
    SimplexMap f{n - 1, n, {}};
    for (int j = 0; j < n; ++j)
        f.values.push_back(j < i ? j : j + 1);
    return f;
}

SimplexMap codegeneracy(int n, int i)
{
    SimplexMap f{n + 1, n, {}};
    for (int j = 0; j <= n + 1; ++j)
        f.values.push_back(j <= i ? j : j - 1);
    return f;
}

SimplexMap interval_inclusion(int m, int n, int k)
{
    if (k < 0 || m + k > n)
        throw std::invalid_argument("interval does not fit");
    SimplexMap f{m, n, {}};
    for (int i = 0; i <= m; ++i)
        f.values.push_back(i + k);
    return f;
}

SimplexMap compose(const SimplexMap& g, const SimplexMap& f)
{
    if (f.n != g.m)
        throw std::invalid_argument("simplex maps are not composable");
    SimplexMap h{f.m, g.n, {}};
    for (int v : f.values)
        h.values.push_back(g.values[v]);
    return h;
}

bool is_active(const SimplexMap& f)
{
    return f.values.front() == 0 && f.values.back() == f.n;
}

bool is_closed(const SimplexMap& f)
{
    for (int i = 0; i <= f.m; ++i) {
        if (f.values[i] != f.values[0] + i)
            return false;
    }
    return true;
}

ActiveClosed delta_op_factorize(const SimplexMap& f)
{
    const int start = f.values.front();
    const int width = f.values.back() - start;
    SimplexMap active{f.m, width, {}};
    for (int v : f.values)
        active.values.push_back(v - start);
    return {active, interval_inclusion(width, f.n, start)};
}

} // namespace fh::indexing
