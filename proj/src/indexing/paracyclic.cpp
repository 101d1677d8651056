#include "fh/indexing/paracyclic.hpp"

#include <functional>
#include <stdexcept>

namespace fh::indexing {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

} // namespace

std::int64_t ParacyclicOp::operator()(std::int64_t i) const
{
    const std::int64_t period = m + 1;
    const std::int64_t q = floor_div(i, period);
    return values[i - q * period] + q * (n + 1);
}

std::int64_t ParacyclicOp::offset() const
{
    return floor_div(values.front(), n + 1) * (n + 1);
}

bool is_valid(const ParacyclicOp& f)
{
    if (f.m < 0 || f.n < 0 || static_cast<int>(f.values.size()) != f.m + 1)
        return false;
    for (int i = 1; i <= f.m; ++i) {
        if (f.values[i] < f.values[i - 1])
            return false;
    }
    return f.values.back() <= f.values.front() + f.n + 1;
}

ParacyclicOp paracyclic_identity(int n)
{
    return rotation(n, 0);
}

ParacyclicOp rotation(int n, std::int64_t power)
{
    ParacyclicOp f{n, n, {}};
    for (int i = 0; i <= n; ++i)
        f.values.push_back(i + power);
    return f;
}

ParacyclicOp para_coface(int n, int i)
{
    ParacyclicOp f{n - 1, n, {}};
    for (int j = 0; j < n; ++j)
        f.values.push_back(j < i ? j : j + 1);
    return f;
}

ParacyclicOp para_codegeneracy(int n, int i)
{
    ParacyclicOp f{n + 1, n, {}};
    for (int j = 0; j <= n + 1; ++j)
        f.values.push_back(j <= i ? j : j - 1);
    return f;
}

ParacyclicOp paracyclic_compose(const ParacyclicOp& g, const ParacyclicOp& f)
{
    if (f.n != g.m)
        throw std::invalid_argument("paracyclic maps are not composable");
    ParacyclicOp h{f.m, g.n, {}};
    for (std::int64_t v : f.values)
        h.values.push_back(g(v));
    return h;
}

ParacyclicOp cyclic_reduce(const ParacyclicOp& f)
{
    ParacyclicOp r = f;
    const std::int64_t shift = f.offset();
    for (auto& v : r.values)
        v -= shift;
    return r;
}

std::vector<ParacyclicOp> paracyclic_homs(int m, int n, std::int64_t low, std::int64_t high)
{
    std::vector<ParacyclicOp> out;
    ParacyclicOp f{m, n, std::vector<std::int64_t>(m + 1)};
    std::function<void(int)> fill = [&](int i) {
        if (i > m) {
            out.push_back(f);
            return;
        }
        for (std::int64_t v = f.values[i - 1]; v <= f.values[0] + n + 1; ++v) {
            f.values[i] = v;
            fill(i + 1);
        }
    };
    for (std::int64_t start = low; start < high; ++start) {
        f.values[0] = start;
        fill(1);
    }
    return out;
}

std::vector<ParacyclicOp> cyclic_homs(int m, int n)
{
    return paracyclic_homs(m, n, 0, n + 1);
}

ParacyclicOp CoverOperator::operator()(const ParacyclicOp& f) const
{
    ParacyclicOp g{level(f.m), level(f.n), {}};
    for (int i = 0; i <= g.m; ++i)
        g.values.push_back(f(i));
    return g;
}

CoverOperator cover_operator(int r)
{
    if (r < 1)
        throw std::invalid_argument("cover degree must be positive");
    return {r};
}

} // namespace fh::indexing
