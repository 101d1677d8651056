#include "fh/fincat/category.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace fh {

std::string ValidationReport::summary() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i)
            out << "; ";
        out << violations[i];
    }
    return out.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("validation failed: " + report.summary()), report_(std::move(report))
{
}

} // namespace fh

namespace fh::fincat {

std::optional<ObjectId> FinCategory::find_object(std::string_view name) const
{
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<MorphismId> FinCategory::find_morphism(std::string_view name) const
{
    auto it = morphism_index_.find(std::string(name));
    if (it == morphism_index_.end())
        return std::nullopt;
    return it->second;
}

Composite FinCategory::compose(MorphismId g, MorphismId f) const
{
    if (target_[f] != source_[g])
        return {Composite::Kind::not_composable, -1};
    auto it = compose_.find(key(g, f));
    if (it != compose_.end())
        return {Composite::Kind::defined, it->second};
    return {Composite::Kind::bound_exceeded, -1};
}

MorphismId FinCategory::compose_or_throw(MorphismId g, MorphismId f) const
{
    Composite c = compose(g, f);
    if (!c.defined())
        throw std::logic_error("composite " + morphism_names_[g] + "*" + morphism_names_[f] + " is not defined");
    return c.value;
}

std::optional<MorphismId> FinCategory::inverse(MorphismId f) const
{
    for (MorphismId g : hom(target_[f], source_[f])) {
        Composite gf = compose(g, f);
        Composite fg = compose(f, g);
        if (gf.defined() && fg.defined() && gf.value == units_[source_[f]] && fg.value == units_[target_[f]])
            return g;
    }
    return std::nullopt;
}

FinCategory FinCategory::opposite() const
{
    FinCategory op = *this;
    op.source_ = target_;
    op.target_ = source_;
    op.composite_list_.clear();
    op.compose_.clear();
    for (auto [g, f, gf] : composite_list_) {
        op.composite_list_.push_back({f, g, gf});
        op.compose_.emplace(key(f, g), gf);
    }
    op.homs_.assign(object_count() * object_count(), {});
    for (MorphismId m = 0; m < static_cast<MorphismId>(morphism_count()); ++m)
        op.homs_[static_cast<std::size_t>(op.source_[m]) * object_count() + op.target_[m]].push_back(m);
    return op;
}

void FinCategory::index()
{
    object_index_.clear();
    morphism_index_.clear();
    for (ObjectId x = 0; x < static_cast<ObjectId>(object_names_.size()); ++x)
        object_index_.emplace(object_names_[x], x);
    for (MorphismId m = 0; m < static_cast<MorphismId>(morphism_names_.size()); ++m)
        morphism_index_.emplace(morphism_names_[m], m);
    homs_.assign(object_count() * object_count(), {});
    for (MorphismId m = 0; m < static_cast<MorphismId>(morphism_count()); ++m)
        homs_[static_cast<std::size_t>(source_[m]) * object_count() + target_[m]].push_back(m);
    compose_.clear();
    compose_.reserve(composite_list_.size());
    for (auto [g, f, gf] : composite_list_)
        compose_.emplace(key(g, f), gf);
}

ValidationReport validate_axioms(const FinCategory& c)
{
    ValidationReport report;
    const auto n = static_cast<MorphismId>(c.morphism_count());

    for (auto [g, f, gf] : c.composites()) {
        if (c.target(f) != c.source(g))
            report.add("composite (" + c.morphism_name(g) + "," + c.morphism_name(f) + ") given for a non-composable pair");
        else if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g))
            report.add("composite (" + c.morphism_name(g) + "," + c.morphism_name(f) + ") lands in the wrong hom");
    }

    // Totality: every composable pair must be tabulated unless the category
    // is declared truncated.
    if (!c.truncation()) {
        for (MorphismId f = 0; f < n; ++f) {
            for (ObjectId z = 0; z < static_cast<ObjectId>(c.object_count()); ++z) {
                for (MorphismId g : c.hom(c.target(f), z)) {
                    if (c.compose(g, f).kind == Composite::Kind::bound_exceeded)
                        report.add("missing composite (" + c.morphism_name(g) + "," + c.morphism_name(f) + ")");
                }
            }
        }
    }

    for (MorphismId f = 0; f < n; ++f) {
        Composite left = c.compose(c.unit(c.target(f)), f);
        Composite right = c.compose(f, c.unit(c.source(f)));
        if (!left.defined() || left.value != f)
            report.add("left unit law fails for " + c.morphism_name(f));
        if (!right.defined() || right.value != f)
            report.add("right unit law fails for " + c.morphism_name(f));
    }
    if (!report.ok())
        return report;

    // Associativity over every defined chain h∘g∘f.
    std::vector<std::vector<std::pair<MorphismId, MorphismId>>> post(static_cast<std::size_t>(n));
    for (auto [g, f, gf] : c.composites())
        post[f].push_back({g, gf});
    for (auto [g, f, gf] : c.composites()) {
        for (auto [h, hg] : post[g]) {
            Composite a = c.compose(h, gf);
            Composite b = c.compose(hg, f);
            if (a.defined() && b.defined() && a.value != b.value)
                report.add("associativity fails on (" + c.morphism_name(h) + "," + c.morphism_name(g) + "," +
                           c.morphism_name(f) + ")");
        }
    }
    return report;
}

namespace {

ValidationReport structural_report(const CategoryTable& t)
{
    ValidationReport report;
    std::set<std::string> objects;
    for (const auto& x : t.objects) {
        if (!objects.insert(x).second)
            report.add("duplicate object " + x);
    }
    std::map<std::string, std::pair<std::string, std::string>> typing;
    for (const auto& [key, list] : t.homs) {
        const auto& [x, y] = key;
        if (!objects.count(x) || !objects.count(y))
            report.add("hom " + x + "->" + y + " references an unknown object");
        for (const auto& f : list) {
            if (!typing.emplace(f, key).second)
                report.add("morphism " + f + " appears in more than one hom");
        }
    }
    for (const auto& x : t.objects) {
        auto it = t.units.find(x);
        if (it == t.units.end()) {
            report.add("missing unit for " + x);
            continue;
        }
        auto ty = typing.find(it->second);
        if (ty == typing.end())
            report.add("unit " + it->second + " of " + x + " is not a declared morphism");
        else if (ty->second != std::make_pair(x, x))
            report.add("unit " + it->second + " of " + x + " is not an endomorphism of " + x);
    }
    for (const auto& [x, u] : t.units) {
        if (!objects.count(x))
            report.add("unit given for unknown object " + x);
    }
    for (const auto& [pair, h] : t.compose) {
        const auto& [g, f] = pair;
        auto tg = typing.find(g);
        auto tf = typing.find(f);
        auto th = typing.find(h);
        if (tg == typing.end() || tf == typing.end() || th == typing.end()) {
            report.add("composite (" + g + "," + f + ")=" + h + " references an unknown morphism");
            continue;
        }
        if (tf->second.second != tg->second.first)
            report.add("composite (" + g + "," + f + ") given for a non-composable pair");
        else if (th->second != std::make_pair(tf->second.first, tg->second.second))
            report.add("composite (" + g + "," + f + ") lands in the wrong hom");
    }
    return report;
}

FinCategory build_from_table(const CategoryTable& t, bool check)
{
    CategoryBuilder b;
    std::map<std::string, ObjectId> obj;
    for (const auto& x : t.objects)
        obj[x] = b.add_object(x);
    std::map<std::string, MorphismId> mor;
    for (const auto& [key, list] : t.homs) {
        for (const auto& f : list)
            mor[f] = b.add_morphism(f, obj.at(key.first), obj.at(key.second));
    }
    for (const auto& x : t.objects)
        b.set_unit(obj.at(x), mor.at(t.units.at(x)));
    for (const auto& [pair, h] : t.compose)
        b.set_composite(mor.at(pair.first), mor.at(pair.second), mor.at(h));
    if (t.truncation)
        b.set_truncation(*t.truncation);
    return check ? b.build() : b.build_unchecked();
}

} // namespace

ObjectId CategoryBuilder::add_object(std::string name)
{
    objects_.push_back(std::move(name));
    units_.push_back(-1);
    return static_cast<ObjectId>(objects_.size() - 1);
}

MorphismId CategoryBuilder::add_morphism(std::string name, ObjectId source, ObjectId target)
{
    morphisms_.push_back({std::move(name), source, target});
    return static_cast<MorphismId>(morphisms_.size() - 1);
}

MorphismId CategoryBuilder::add_identity(ObjectId x, std::string name)
{
    MorphismId id = add_morphism(std::move(name), x, x);
    units_[x] = id;
    return id;
}

void CategoryBuilder::set_unit(ObjectId x, MorphismId id)
{
    units_[x] = id;
}

void CategoryBuilder::set_composite(MorphismId g, MorphismId f, MorphismId gf)
{
    composites_.push_back({g, f, gf});
}

FinCategory CategoryBuilder::build_unchecked() const
{
    FinCategory c;
    c.object_names_ = objects_;
    for (const auto& a : morphisms_) {
        c.morphism_names_.push_back(a.name);
        c.source_.push_back(a.source);
        c.target_.push_back(a.target);
    }
    c.units_ = units_;
    c.truncation_ = truncation_;
    c.composite_list_ = composites_;
    // Identity composites are implied and need not be tabulated.
    std::set<std::pair<MorphismId, MorphismId>> seen;
    for (auto [g, f, gf] : composites_)
        seen.insert({g, f});
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms_.size()); ++f) {
        MorphismId lu = units_[morphisms_[f].target];
        MorphismId ru = units_[morphisms_[f].source];
        if (lu >= 0 && !seen.count({lu, f})) {
            c.composite_list_.push_back({lu, f, f});
            seen.insert({lu, f});
        }
        if (ru >= 0 && !seen.count({f, ru})) {
            c.composite_list_.push_back({f, ru, f});
            seen.insert({f, ru});
        }
    }
    c.index();
    return c;
}

FinCategory CategoryBuilder::build() const
{
    ValidationReport report;
    for (std::size_t x = 0; x < objects_.size(); ++x) {
        if (units_[x] < 0)
            report.add("missing unit for " + objects_[x]);
    }
    std::set<std::pair<MorphismId, MorphismId>> seen;
    for (auto [g, f, gf] : composites_) {
        if (!seen.insert({g, f}).second)
            report.add("composite (" + morphisms_[g].name + "," + morphisms_[f].name + ") given twice");
    }
    if (!report.ok())
        throw ValidationError(report);
    FinCategory c = build_unchecked();
    report = validate_axioms(c);
    if (!report.ok())
        throw ValidationError(report);
    return c;
}

ValidationReport validate_category(const CategoryTable& table)
{
    ValidationReport report = structural_report(table);
    if (!report.ok())
        return report;
    try {
        (void)FinCategory::from_table(table);
    } catch (const ValidationError& e) {
        return e.report();
    }
    return report;
}

FinCategory FinCategory::from_table(const CategoryTable& table)
{
    ValidationReport report = structural_report(table);
    if (!report.ok())
        throw ValidationError(report);
    return build_from_table(table, true);
}

CategoryTable FinCategory::to_table() const
{
    CategoryTable t;
    t.objects = object_names_;
    for (MorphismId m = 0; m < static_cast<MorphismId>(morphism_count()); ++m)
        t.homs[{object_names_[source_[m]], object_names_[target_[m]]}].push_back(morphism_names_[m]);
    for (ObjectId x = 0; x < static_cast<ObjectId>(object_count()); ++x)
        t.units[object_names_[x]] = morphism_names_[units_[x]];
    for (auto [g, f, gf] : composite_list_)
        t.compose[{morphism_names_[g], morphism_names_[f]}] = morphism_names_[gf];
    t.truncation = truncation_;
    return t;
}

} // namespace fh::fincat
