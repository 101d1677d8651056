#include "fh/facthom/cyclic_bar.hpp"

#include <algorithm>
#include <stdexcept>

namespace fh::facthom {

using fincat::MorphismId;
using fincat::ObjectId;
using linalg::SparseMatrix;

std::vector<CyclicBarLevel> cyclic_bar_levels(const fincat::FinCategory& c, int top)
{
    if (c.truncation())
        throw std::domain_error("the cyclic bar construction needs every composite");
    std::vector<CyclicBarLevel> levels(static_cast<std::size_t>(top + 1));
    std::vector<std::map<std::vector<MorphismId>, std::size_t>> index(levels.size());
    for (int n = 0; n <= top; ++n) {
        auto& lv = levels[n];
        lv.n = n;
        std::vector<MorphismId> word;
        auto extend = [&](auto&& self, ObjectId start, ObjectId at) -> void {
            if (static_cast<int>(word.size()) == n) {
                for (MorphismId f : c.hom(at, start)) {
                    word.push_back(f);
                    lv.elements.push_back(word);
                    word.pop_back();
                }
                return;
            }
            for (ObjectId y = 0; y < static_cast<ObjectId>(c.object_count()); ++y) {
                for (MorphismId f : c.hom(at, y)) {
                    word.push_back(f);
                    self(self, start, y);
                    word.pop_back();
                }
            }
        };
        for (ObjectId x = 0; x < static_cast<ObjectId>(c.object_count()); ++x)
            extend(extend, x, x);
        std::sort(lv.elements.begin(), lv.elements.end());
        for (std::size_t i = 0; i < lv.elements.size(); ++i)
            index[n].emplace(lv.elements[i], i);
    }
    for (int n = 0; n <= top; ++n) {
        auto& lv = levels[n];
        const std::size_t size = lv.elements.size();
        lv.cyclic.resize(size);
        if (n > 0)
            lv.faces.assign(n + 1, std::vector<std::size_t>(size));
        if (n < top)
            lv.degeneracies.assign(n + 1, std::vector<std::size_t>(size));
        for (std::size_t x = 0; x < size; ++x) {
            const auto& a = lv.elements[x];
            std::vector<MorphismId> rotated{a.back()};
            rotated.insert(rotated.end(), a.begin(), a.end() - 1);
            lv.cyclic[x] = index[n].at(rotated);
            for (int i = 0; i < n; ++i) {
                auto w = a;
                w[i] = c.compose_or_throw(a[i + 1], a[i]);
                w.erase(w.begin() + i + 1);
                lv.faces[i][x] = index[n - 1].at(w);
            }
            if (n > 0) {
                std::vector<MorphismId> w(a.begin(), a.end() - 1);
                w[0] = c.compose_or_throw(a[0], a[n]);
                lv.faces[n][x] = index[n - 1].at(w);
            }
            if (n < top) {
                for (int i = 0; i <= n; ++i) {
                    auto w = a;
                    w.insert(w.begin() + i + 1, c.unit(c.target(a[i])));
                    lv.degeneracies[i][x] = index[n + 1].at(w);
                }
            }
        }
    }
    return levels;
}

CyclicBar::CyclicBar(const enrich::LinearCategory& c) : c_(c) {}

const CyclicBar::Basis& CyclicBar::basis(int n) const
{
    if (n < 0)
        throw std::out_of_range("negative cyclic bar level");
    auto it = bases_.find(n);
    if (it != bases_.end())
        return it->second;
    Basis b;
    const std::size_t no = c_.object_count();
    std::vector<std::size_t> objs(static_cast<std::size_t>(n + 1)), idx(static_cast<std::size_t>(n + 1));
    auto indices = [&](auto&& self, int k) -> void {
        if (k > n) {
            b.lookup.emplace(std::make_pair(objs, idx), b.objects.size());
            b.objects.push_back(objs);
            b.indices.push_back(idx);
            return;
        }
        const std::size_t d = c_.hom_dim(objs[k], objs[(k + 1) % (n + 1)]);
        for (std::size_t i = 0; i < d; ++i) {
            idx[k] = i;
            self(self, k + 1);
        }
    };
    auto objects = [&](auto&& self, int k) -> void {
        if (k > n) {
            indices(indices, 0);
            return;
        }
        for (std::size_t x = 0; x < no; ++x) {
            objs[k] = x;
            self(self, k + 1);
        }
    };
    objects(objects, 0);
    return bases_.emplace(n, std::move(b)).first->second;
}

std::size_t CyclicBar::dim(int n) const
{
    return basis(n).objects.size();
}

enrich::BasedModule CyclicBar::level(int n) const
{
    const auto& b = basis(n);
    enrich::BasedModule m;
    for (std::size_t i = 0; i < b.objects.size(); ++i) {
        std::string s;
        for (std::size_t k = 0; k < b.objects[i].size(); ++k)
            s += (k ? "," : "") + c_.object_name(b.objects[i][k]);
        s += "|";
        for (std::size_t k = 0; k < b.indices[i].size(); ++k)
            s += (k ? "," : "") + std::to_string(b.indices[i][k]);
        m.basis.push_back(s);
    }
    return m;
}

SparseMatrix CyclicBar::face(int n, int i) const
{
    if (n < 1 || i < 0 || i > n)
        throw std::out_of_range("face index out of range");
    const auto& src = basis(n);
    const auto& dst = basis(n - 1);
    SparseMatrix m(dst.objects.size(), src.objects.size());
    for (std::size_t col = 0; col < src.objects.size(); ++col) {
        const auto& x = src.objects[col];
        const auto& t = src.indices[col];
        std::vector<std::size_t> objs, idx;
        std::size_t a, b, cz, left, right;
        if (i < n) {
            a = x[i];
            b = x[i + 1];
            cz = x[(i + 2) % (n + 1)];
            left = t[i];
            right = t[i + 1];
            objs = x;
            objs.erase(objs.begin() + i + 1);
            idx = t;
            idx.erase(idx.begin() + i + 1);
        } else {
            a = x[n];
            b = x[0];
            cz = x[1];
            left = t[n];
            right = t[0];
            objs.assign(x.begin(), x.end() - 1);
            objs[0] = x[n];
            idx.assign(t.begin(), t.end() - 1);
        }
        const std::size_t slot = i < n ? static_cast<std::size_t>(i) : 0;
        const auto& mu = c_.compose(a, b, cz);
        for (const auto& [k, v] : mu.column(left * c_.hom_dim(b, cz) + right)) {
            idx[slot] = k;
            m.add(dst.lookup.at({objs, idx}), col, v);
        }
    }
    return m;
}

SparseMatrix CyclicBar::degeneracy(int n, int i) const
{
    if (i < 0 || i > n)
        throw std::out_of_range("degeneracy index out of range");
    const auto& src = basis(n);
    const auto& dst = basis(n + 1);
    SparseMatrix m(dst.objects.size(), src.objects.size());
    for (std::size_t col = 0; col < src.objects.size(); ++col) {
        auto objs = src.objects[col];
        auto idx = src.indices[col];
        const std::size_t y = objs[(i + 1) % (n + 1)];
        objs.insert(objs.begin() + i + 1, y);
        idx.insert(idx.begin() + i + 1, 0);
        const auto& u = c_.unit(y);
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (u[k] == 0)
                continue;
            idx[i + 1] = k;
            m.add(dst.lookup.at({objs, idx}), col, u[k]);
        }
    }
    return m;
}

const SparseMatrix& CyclicBar::boundary(int n) const
{
    auto it = boundaries_.find(n);
    if (it != boundaries_.end())
        return it->second;
    SparseMatrix b(n > 0 ? dim(n - 1) : 0, dim(n));
    for (int i = 0; n > 0 && i <= n; ++i) {
        SparseMatrix d = face(n, i);
        b = i % 2 ? b - d : b + d;
    }
    return boundaries_.emplace(n, std::move(b)).first->second;
}

SparseMatrix CyclicBar::cyclic(int n) const
{
    const auto& src = basis(n);
    SparseMatrix m(src.objects.size(), src.objects.size());
    for (std::size_t col = 0; col < src.objects.size(); ++col) {
        const auto& x = src.objects[col];
        const auto& t = src.indices[col];
        std::vector<std::size_t> objs{x.back()}, idx{t.back()};
        objs.insert(objs.end(), x.begin(), x.end() - 1);
        idx.insert(idx.end(), t.begin(), t.end() - 1);
        m.add(src.lookup.at({objs, idx}), col, 1);
    }
    return m;
}

SparseMatrix CyclicBar::lambda(int n) const
{
    return n % 2 ? cyclic(n).scaled(-1) : cyclic(n);
}

SparseMatrix CyclicBar::norm(int n) const
{
    const SparseMatrix l = lambda(n);
    SparseMatrix power = SparseMatrix::identity(dim(n));
    SparseMatrix sum = power;
    for (int k = 1; k <= n; ++k) {
        power = l * power;
        sum = sum + power;
    }
    return sum;
}

SparseMatrix CyclicBar::extra_degeneracy(int n) const
{
    const auto& src = basis(n);
    const auto& dst = basis(n + 1);
    SparseMatrix m(dst.objects.size(), src.objects.size());
    for (std::size_t col = 0; col < src.objects.size(); ++col) {
        auto objs = src.objects[col];
        auto idx = src.indices[col];
        const std::size_t x0 = objs[0];
        objs.insert(objs.begin(), x0);
        idx.insert(idx.begin(), 0);
        const auto& u = c_.unit(x0);
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (u[k] == 0)
                continue;
            idx[0] = k;
            m.add(dst.lookup.at({objs, idx}), col, u[k]);
        }
    }
    return m;
}

const SparseMatrix& CyclicBar::connes_B(int n) const
{
    auto it = connes_.find(n);
    if (it != connes_.end())
        return it->second;
    SparseMatrix one_minus = SparseMatrix::identity(dim(n + 1)) - lambda(n + 1);
    SparseMatrix b = one_minus * (extra_degeneracy(n) * norm(n));
    return connes_.emplace(n, std::move(b)).first->second;
}

SparseMatrix connes_B(const enrich::LinearCategory& c, int n)
{
    return CyclicBar(c).connes_B(n);
}

} // namespace fh::facthom
