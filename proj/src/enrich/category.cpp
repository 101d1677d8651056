#include "fh/enrich/category.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fh/linalg/ring.hpp"

namespace fh::enrich {

using fincat::MorphismId;
using fincat::ObjectId;
using linalg::SparseMatrix;

ValidationReport validate_enriched_cat(const SetEnrichedCategory& c)
{
    ValidationReport report = fincat::validate_axioms(c.cat);
    for (MorphismId f : c.core) {
        if (f < 0 || f >= static_cast<MorphismId>(c.cat.morphism_count()))
            report.add("core morphism " + std::to_string(f) + " does not exist");
        else if (!c.cat.is_isomorphism(f))
            report.add("core morphism " + c.cat.morphism_name(f) + " is not invertible");
    }
    return report;
}

LinearCategory::LinearCategory(linalg::Ring ring, std::vector<std::string> objects)
    : ring_(ring), objects_(std::move(objects)), dims_(objects_.size() * objects_.size(), 0), units_(objects_.size())
{
}

std::size_t LinearCategory::hom_dim(std::size_t x, std::size_t y) const
{
    return dims_[x * objects_.size() + y];
}

void LinearCategory::set_hom_dim(std::size_t x, std::size_t y, std::size_t dim)
{
    dims_[x * objects_.size() + y] = dim;
    if (x == y)
        units_[x].assign(dim, 0);
    for (auto it = compose_.begin(); it != compose_.end();) {
        auto [a, b, c] = it->first;
        if ((a == x && b == y) || (b == x && c == y) || (a == x && c == y))
            it = compose_.erase(it);
        else
            ++it;
    }
}

void LinearCategory::set_constant(std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j,
                                  std::size_t k, const mpq_class& value)
{
    const std::size_t dz = hom_dim(y, z);
    if (i >= hom_dim(x, y) || j >= dz || k >= hom_dim(x, z))
        throw std::out_of_range("structure constant index out of range");
    auto key = std::make_tuple(x, y, z);
    auto it = compose_.find(key);
    if (it == compose_.end())
        it = compose_.emplace(key, SparseMatrix(hom_dim(x, z), hom_dim(x, y) * dz)).first;
    mpq_class old = it->second.at(k, i * dz + j);
    it->second.add(k, i * dz + j, value - old);
}

void LinearCategory::set_unit(std::size_t x, std::vector<mpq_class> coords)
{
    if (coords.size() != hom_dim(x, x))
        throw std::invalid_argument("unit of " + objects_[x] + " has the wrong length");
    units_[x] = std::move(coords);
}

const SparseMatrix& LinearCategory::compose(std::size_t x, std::size_t y, std::size_t z) const
{
    auto it = compose_.find({x, y, z});
    if (it != compose_.end())
        return it->second;
    auto& self = const_cast<LinearCategory&>(*this);
    return self.compose_.emplace(std::make_tuple(x, y, z), SparseMatrix(hom_dim(x, z), hom_dim(x, y) * hom_dim(y, z)))
        .first->second;
}

std::vector<mpq_class> LinearCategory::multiply(std::size_t x, std::size_t y, std::size_t z,
                                                const std::vector<mpq_class>& a,
                                                const std::vector<mpq_class>& b) const
{
    const SparseMatrix& m = compose(x, y, z);
    const std::size_t dz = hom_dim(y, z);
    std::vector<mpq_class> out(hom_dim(x, z));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0)
                continue;
            mpq_class s = a[i] * b[j];
            for (const auto& [k, v] : m.column(i * dz + j))
                out[k] += s * v;
        }
    }
    return out;
}

std::size_t LinearCategory::total_dim() const
{
    std::size_t n = 0;
    for (auto d : dims_)
        n += d;
    return n;
}

LinearCategory algebra(linalg::Ring ring, const std::vector<std::vector<std::vector<mpq_class>>>& constants,
                       std::vector<mpq_class> unit)
{
    LinearCategory a(ring, {"*"});
    const std::size_t n = unit.size();
    a.set_hom_dim(0, 0, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (constants[i][j][k] != 0)
                    a.set_constant(0, 0, 0, i, j, k, constants[i][j][k]);
    a.set_unit(0, std::move(unit));
    return a;
}

namespace {

std::vector<mpq_class> basis_vector(std::size_t n, std::size_t i)
{
    std::vector<mpq_class> v(n);
    v[i] = 1;
    return v;
}

bool equal_in(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, const linalg::Ring& ring)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (linalg::normalize(a[i] - b[i], ring) != 0)
            return false;
    }
    return true;
}

} // namespace

ValidationReport validate_enriched_cat(const LinearCategory& c)
{
    ValidationReport report;
    const std::size_t n = c.object_count();
    const auto& ring = c.ring();
    try {
        for (std::size_t x = 0; x < n; ++x) {
            for (const auto& u : c.unit(x))
                (void)linalg::normalize(u, ring);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    (void)c.compose(x, y, z).normalized(ring);
        }
    } catch (const std::domain_error& e) {
        report.add(std::string("coefficient outside ") + linalg::to_string(ring) + ": " + e.what());
        return report;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (c.unit(x).size() != c.hom_dim(x, x))
            report.add("unit of " + c.object_name(x) + " has the wrong length");
    }
    if (!report.ok())
        return report;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t d = c.hom_dim(x, y);
            for (std::size_t i = 0; i < d; ++i) {
                auto e = basis_vector(d, i);
                if (!equal_in(c.multiply(x, x, y, c.unit(x), e), e, ring) ||
                    !equal_in(c.multiply(x, y, y, e, c.unit(y)), e, ring)) {
                    report.add("unit law fails on (" + c.object_name(x) + "," + c.object_name(y) + ")");
                    break;
                }
            }
        }
    }
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                for (std::size_t z = 0; z < n; ++z) {
                    const std::size_t d1 = c.hom_dim(w, x), d2 = c.hom_dim(x, y), d3 = c.hom_dim(y, z);
                    bool ok = true;
                    for (std::size_t i = 0; i < d1 && ok; ++i) {
                        auto a = basis_vector(d1, i);
                        for (std::size_t j = 0; j < d2 && ok; ++j) {
                            auto b = basis_vector(d2, j);
                            auto ab = c.multiply(w, x, y, a, b);
                            for (std::size_t k = 0; k < d3 && ok; ++k) {
                                auto e = basis_vector(d3, k);
                                ok = equal_in(c.multiply(w, y, z, ab, e),
                                              c.multiply(w, x, z, a, c.multiply(x, y, z, b, e)), ring);
                            }
                        }
                    }
                    if (!ok)
                        report.add("associativity fails on (" + c.object_name(w) + "," + c.object_name(x) + "," +
                                   c.object_name(y) + "," + c.object_name(z) + ")");
                }
            }
        }
    }
    return report;
}

LinearCategory change_ring(const LinearCategory& c, const linalg::Ring& ring)
{
    const std::size_t n = c.object_count();
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x)
        names.push_back(c.object_name(x));
    LinearCategory out(ring, names);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            out.set_hom_dim(x, y, c.hom_dim(x, y));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                const auto& m = c.compose(x, y, z);
                const std::size_t dz = c.hom_dim(y, z);
                for (std::size_t col = 0; col < m.cols(); ++col)
                    for (const auto& [k, v] : m.column(col)) {
                        mpq_class w = linalg::normalize(v, ring);
                        if (w != 0)
                            out.set_constant(x, y, z, col / dz, col % dz, k, w);
                    }
            }
        }
        std::vector<mpq_class> u;
        for (const auto& v : c.unit(x))
            u.push_back(linalg::normalize(v, ring));
        out.set_unit(x, std::move(u));
    }
    return out;
}

LinearCategory linearize(const fincat::FinCategory& c, const linalg::Ring& ring)
{
    if (c.truncation())
        throw std::domain_error("cannot linearize a truncated category");
    const std::size_t n = c.object_count();
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x)
        names.push_back(c.object_name(static_cast<ObjectId>(x)));
    LinearCategory out(ring, names);
    std::vector<std::size_t> position(c.morphism_count());
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            auto hom = c.hom(static_cast<ObjectId>(x), static_cast<ObjectId>(y));
            out.set_hom_dim(x, y, hom.size());
            for (std::size_t i = 0; i < hom.size(); ++i)
                position[hom[i]] = i;
        }
    }
    for (auto [g, f, gf] : c.composites()) {
        out.set_constant(c.source(f), c.target(f), c.target(g), position[f], position[g], position[gf], 1);
    }
    for (std::size_t x = 0; x < n; ++x)
        out.set_unit(x, basis_vector(out.hom_dim(x, x), position[c.unit(static_cast<ObjectId>(x))]));
    return out;
}

namespace {

// Splits `key` into `parts` known object names joined by `sep`; the split
// must be unique.
std::vector<std::size_t> split_key(const std::string& key, const std::string& sep, std::size_t parts,
                                   const std::map<std::string, std::size_t>& known)
{
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> current;
    auto search = [&](auto&& self, std::size_t start) -> void {
        if (current.size() + 1 == parts) {
            auto it = known.find(key.substr(start));
            if (it != known.end()) {
                current.push_back(it->second);
                found.push_back(current);
                current.pop_back();
            }
            return;
        }
        for (std::size_t pos = key.find(sep, start); pos != std::string::npos; pos = key.find(sep, pos + 1)) {
            auto it = known.find(key.substr(start, pos - start));
            if (it == known.end())
                continue;
            current.push_back(it->second);
            self(self, pos + sep.size());
            current.pop_back();
        }
    };
    search(search, 0);
    if (found.size() != 1)
        throw SchemaError("cannot read key \"" + key + "\" as " + std::to_string(parts) + " object names");
    return found.front();
}

mpq_class rational_from_json(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return mpq_class(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        try {
            return linalg::parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw SchemaError("expected an integer or a \"p/q\" string, got " + v.dump());
}

nlohmann::json rational_to_json(const mpq_class& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return linalg::to_string(q);
}

} // namespace

LinearCategory linear_category_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw SchemaError("linear category must be a JSON object");
    for (const char* field : {"ring", "objects", "hom_dims", "structure_constants", "units"}) {
        if (!doc.contains(field))
            throw SchemaError(std::string("missing field \"") + field + "\"");
    }
    if (!doc["ring"].is_string() || !doc["objects"].is_array() || !doc["hom_dims"].is_object() ||
        !doc["structure_constants"].is_object() || !doc["units"].is_object())
        throw SchemaError("linear category fields have the wrong types");
    linalg::Ring ring;
    try {
        ring = linalg::parse_ring(doc["ring"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (const auto& o : doc["objects"]) {
        if (!o.is_string())
            throw SchemaError("object names must be strings");
        if (!index.emplace(o.get<std::string>(), names.size()).second)
            throw SchemaError("duplicate object " + o.get<std::string>());
        names.push_back(o.get<std::string>());
    }
    LinearCategory c(ring, names);
    for (const auto& [key, v] : doc["hom_dims"].items()) {
        if (!v.is_number_unsigned())
            throw SchemaError("hom dimension of " + key + " must be a non-negative integer");
        auto xy = split_key(key, "->", 2, index);
        c.set_hom_dim(xy[0], xy[1], v.get<std::size_t>());
    }
    for (const auto& [key, v] : doc["structure_constants"].items()) {
        auto xyz = split_key(key, "->", 3, index);
        const std::size_t d1 = c.hom_dim(xyz[0], xyz[1]), d2 = c.hom_dim(xyz[1], xyz[2]),
                          d3 = c.hom_dim(xyz[0], xyz[2]);
        if (!v.is_array() || v.size() != d1)
            throw SchemaError("structure constants of " + key + " must have shape " + std::to_string(d1) + "x" +
                              std::to_string(d2) + "x" + std::to_string(d3));
        for (std::size_t i = 0; i < d1; ++i) {
            if (!v[i].is_array() || v[i].size() != d2)
                throw SchemaError("structure constants of " + key + " have a malformed row");
            for (std::size_t j = 0; j < d2; ++j) {
                if (!v[i][j].is_array() || v[i][j].size() != d3)
                    throw SchemaError("structure constants of " + key + " have a malformed row");
                for (std::size_t k = 0; k < d3; ++k) {
                    mpq_class q = rational_from_json(v[i][j][k]);
                    if (q != 0)
                        c.set_constant(xyz[0], xyz[1], xyz[2], i, j, k, q);
                }
            }
        }
    }
    for (const auto& [key, v] : doc["units"].items()) {
        auto it = index.find(key);
        if (it == index.end())
            throw SchemaError("unit given for unknown object " + key);
        if (!v.is_array() || v.size() != c.hom_dim(it->second, it->second))
            throw SchemaError("unit of " + key + " must have length " +
                              std::to_string(c.hom_dim(it->second, it->second)));
        std::vector<mpq_class> u;
        for (const auto& e : v)
            u.push_back(rational_from_json(e));
        c.set_unit(it->second, std::move(u));
    }
    return c;
}

nlohmann::json to_json(const LinearCategory& c)
{
    const std::size_t n = c.object_count();
    nlohmann::json doc;
    doc["ring"] = linalg::to_string(c.ring());
    doc["objects"] = nlohmann::json::array();
    for (std::size_t x = 0; x < n; ++x)
        doc["objects"].push_back(c.object_name(x));
    doc["hom_dims"] = nlohmann::json::object();
    doc["structure_constants"] = nlohmann::json::object();
    doc["units"] = nlohmann::json::object();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (c.hom_dim(x, y))
                doc["hom_dims"][c.object_name(x) + "->" + c.object_name(y)] = c.hom_dim(x, y);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                const std::size_t d1 = c.hom_dim(x, y), d2 = c.hom_dim(y, z), d3 = c.hom_dim(x, z);
                if (!d1 || !d2 || !d3)
                    continue;
                const auto& m = c.compose(x, y, z);
                nlohmann::json t = nlohmann::json::array();
                for (std::size_t i = 0; i < d1; ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (std::size_t j = 0; j < d2; ++j) {
                        nlohmann::json cell = nlohmann::json::array();
                        for (std::size_t k = 0; k < d3; ++k)
                            cell.push_back(rational_to_json(m.at(k, i * d2 + j)));
                        row.push_back(cell);
                    }
                    t.push_back(row);
                }
                doc["structure_constants"][c.object_name(x) + "->" + c.object_name(y) + "->" + c.object_name(z)] = t;
            }
        }
        nlohmann::json u = nlohmann::json::array();
        for (const auto& v : c.unit(x))
            u.push_back(rational_to_json(v));
        doc["units"][c.object_name(x)] = u;
    }
    return doc;
}

fincat::SimplicialSet nerve(const SetEnrichedCategory& c, int top)
{
    if (!c.discrete_core())
        throw std::invalid_argument("the nerve needs a discrete underlying groupoid");
    const auto& cat = c.cat;
    if (cat.truncation())
        throw std::domain_error("the nerve of a truncated category is not defined");
    fincat::SimplicialSet s;
    s.levels.resize(static_cast<std::size_t>(top + 1));
    s.labels.resize(static_cast<std::size_t>(top + 1));
    // strings[n][x] is the n-string of level n numbered x.
    std::vector<std::vector<std::vector<MorphismId>>> strings(static_cast<std::size_t>(top + 1));
    std::vector<std::map<std::vector<MorphismId>, std::size_t>> index(static_cast<std::size_t>(top + 1));
    for (ObjectId x = 0; x < static_cast<ObjectId>(cat.object_count()); ++x)
        strings[0].push_back({x});
    for (int n = 1; n <= top; ++n) {
        for (const auto& prev : strings[n - 1]) {
            ObjectId end = n == 1 ? prev[0] : cat.target(prev.back());
            for (ObjectId y = 0; y < static_cast<ObjectId>(cat.object_count()); ++y) {
                for (MorphismId f : cat.hom(end, y)) {
                    auto next = n == 1 ? std::vector<MorphismId>{} : prev;
                    next.push_back(f);
                    strings[n].push_back(std::move(next));
                }
            }
        }
    }
    for (int n = 0; n <= top; ++n) {
        std::sort(strings[n].begin(), strings[n].end());
        for (std::size_t i = 0; i < strings[n].size(); ++i)
            index[n].emplace(strings[n][i], i);
        for (const auto& w : strings[n]) {
            std::string label;
            for (std::size_t i = 0; i < w.size(); ++i)
                label += (i ? "," : "") + (n == 0 ? cat.object_name(w[i]) : cat.morphism_name(w[i]));
            s.labels[n].push_back(label);
        }
        s.levels[n].size = strings[n].size();
    }
    auto vertex = [&](const std::vector<MorphismId>& w, int i) {
        return i == 0 ? cat.source(w[0]) : cat.target(w[i - 1]);
    };
    for (int n = 0; n <= top; ++n) {
        auto& lv = s.levels[n];
        if (n > 0) {
            lv.faces.assign(n + 1, std::vector<std::size_t>(lv.size));
            for (std::size_t x = 0; x < lv.size; ++x) {
                const auto& w = strings[n][x];
                for (int i = 0; i <= n; ++i) {
                    std::vector<MorphismId> v;
                    if (n == 1) {
                        v = {i == 0 ? cat.target(w[0]) : cat.source(w[0])};
                    } else if (i == 0) {
                        v.assign(w.begin() + 1, w.end());
                    } else if (i == n) {
                        v.assign(w.begin(), w.end() - 1);
                    } else {
                        v = w;
                        v[i - 1] = cat.compose_or_throw(w[i], w[i - 1]);
                        v.erase(v.begin() + i);
                    }
                    lv.faces[i][x] = index[n - 1].at(v);
                }
            }
        }
        if (n < top) {
            lv.degeneracies.assign(n + 1, std::vector<std::size_t>(lv.size));
            for (std::size_t x = 0; x < lv.size; ++x) {
                const auto& w = strings[n][x];
                for (int i = 0; i <= n; ++i) {
                    std::vector<MorphismId> v;
                    if (n == 0) {
                        v = {cat.unit(w[0])};
                    } else {
                        v = w;
                        v.insert(v.begin() + i, cat.unit(vertex(w, i)));
                    }
                    lv.degeneracies[i][x] = index[n + 1].at(v);
                }
            }
        }
    }
    return s;
}

} // namespace fh::enrich
