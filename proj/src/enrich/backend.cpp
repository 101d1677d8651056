#include "fh/enrich/backend.hpp"

#include <stdexcept>

namespace fh::enrich {

std::size_t FinSetBackend::tensor_all(const std::vector<std::size_t>& family) const
{
    std::size_t out = 1;
    for (std::size_t v : family)
        out *= v;
    return out;
}

std::size_t FinSetBackend::encode(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& coords)
{
    std::size_t x = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (coords[i] >= sizes[i])
            throw std::out_of_range("coordinate outside its factor");
        x = x * sizes[i] + coords[i];
    }
    return x;
}

std::vector<std::size_t> FinSetBackend::decode(const std::vector<std::size_t>& sizes, std::size_t element)
{
    std::vector<std::size_t> coords(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
        coords[i] = element % sizes[i];
        element /= sizes[i];
    }
    return coords;
}

BasedModule ExactLinearBackend::tensor(const BasedModule& a, const BasedModule& b) const
{
    BasedModule out;
    out.basis.reserve(a.dim() * b.dim());
    for (const auto& x : a.basis)
        for (const auto& y : b.basis)
            out.basis.push_back(x + "⊗" + y);
    return out;
}

BasedModule ExactLinearBackend::tensor_all(const std::vector<BasedModule>& family) const
{
    if (family.empty())
        return unit();
    BasedModule out = family.front();
    for (std::size_t i = 1; i < family.size(); ++i)
        out = tensor(out, family[i]);
    return out;
}

linalg::SparseMatrix kronecker(const linalg::SparseMatrix& a, const linalg::SparseMatrix& b)
{
    linalg::SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (const auto& [r, x] : a.column(i))
            for (std::size_t j = 0; j < b.cols(); ++j)
                for (const auto& [s, y] : b.column(j))
                    out.add(r * b.rows() + s, i * b.cols() + j, x * y);
    return out;
}

} // namespace fh::enrich
