#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fh/util/report.hpp"

namespace fh::fincat {

using ObjectId = int;
using MorphismId = int;

/// Plain mirror of the category interchange format
///   {"objects":[...], "homs":{"x->y":[...]}, "compose":{"g*f":"h"}, "units":{"x":"id_x"}}.
/// Identifiers are arbitrary strings; nothing is checked until validate_category.
struct CategoryTable {
    std::vector<std::string> objects;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> homs;
    /// (g, f) -> g∘f
    std::map<std::pair<std::string, std::string>, std::string> compose;
    std::map<std::string, std::string> units;
    /// When set, composable pairs absent from `compose` are treated as lying
    /// past a truncation bound instead of being missing. The string records
    /// the bound (e.g. "length > 4").
    std::optional<std::string> truncation;
};

/// Outcome of composing two morphisms in a (possibly truncated) finite category.
struct Composite {
    enum class Kind { defined, not_composable, bound_exceeded };
    Kind kind = Kind::not_composable;
    MorphismId value = -1;

    bool defined() const { return kind == Kind::defined; }
};

class CategoryBuilder;

/// A finite category with indexed objects and morphisms. Immutable once
/// built; construction validates all category axioms (see validate_category).
class FinCategory {
public:
    FinCategory() = default;

    /// Throws ValidationError listing every violated axiom.
    static FinCategory from_table(const CategoryTable& table);
    CategoryTable to_table() const;

    std::size_t object_count() const { return object_names_.size(); }
    std::size_t morphism_count() const { return morphism_names_.size(); }

    const std::string& object_name(ObjectId x) const { return object_names_[x]; }
    const std::string& morphism_name(MorphismId f) const { return morphism_names_[f]; }
    std::optional<ObjectId> find_object(std::string_view name) const;
    std::optional<MorphismId> find_morphism(std::string_view name) const;

    ObjectId source(MorphismId f) const { return source_[f]; }
    ObjectId target(MorphismId f) const { return target_[f]; }
    MorphismId unit(ObjectId x) const { return units_[x]; }
    bool is_identity(MorphismId f) const { return units_[source_[f]] == f; }

    std::span<const MorphismId> hom(ObjectId x, ObjectId y) const
    {
        return homs_[static_cast<std::size_t>(x) * object_count() + y];
    }

    /// g∘f.
    Composite compose(MorphismId g, MorphismId f) const;
    /// g∘f, throwing std::logic_error unless defined.
    MorphismId compose_or_throw(MorphismId g, MorphismId f) const;

    /// All defined composites as (g, f, g∘f).
    const std::vector<std::array<MorphismId, 3>>& composites() const { return composite_list_; }

    const std::optional<std::string>& truncation() const { return truncation_; }

    std::optional<MorphismId> inverse(MorphismId f) const;
    bool is_isomorphism(MorphismId f) const { return inverse(f).has_value(); }

    FinCategory opposite() const;

private:
    friend class CategoryBuilder;
    friend ValidationReport validate_axioms(const FinCategory& c);

    static std::uint64_t key(MorphismId g, MorphismId f)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(f);
    }
    void index();

    std::vector<std::string> object_names_;
    std::vector<std::string> morphism_names_;
    std::vector<ObjectId> source_;
    std::vector<ObjectId> target_;
    std::vector<MorphismId> units_;
    std::vector<std::vector<MorphismId>> homs_;
    std::vector<std::array<MorphismId, 3>> composite_list_;
    std::unordered_map<std::uint64_t, MorphismId> compose_;
    std::unordered_map<std::string, ObjectId> object_index_;
    std::unordered_map<std::string, MorphismId> morphism_index_;
    std::optional<std::string> truncation_;
};

/// Programmatic construction by index, bypassing string tables.
class CategoryBuilder {
public:
    ObjectId add_object(std::string name);
    MorphismId add_morphism(std::string name, ObjectId source, ObjectId target);
    /// Adds a morphism named `name` as the identity of x.
    MorphismId add_identity(ObjectId x, std::string name);
    void set_unit(ObjectId x, MorphismId id);
    void set_composite(MorphismId g, MorphismId f, MorphismId gf);
    void set_truncation(std::string description) { truncation_ = std::move(description); }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }

    /// Validates and freezes; throws ValidationError.
    FinCategory build() const;
    /// Freezes without the associativity scan (callers that construct
    /// associative tables by design, e.g. large free categories).
    FinCategory build_unchecked() const;

private:
    struct Arrow {
        std::string name;
        ObjectId source;
        ObjectId target;
    };
    std::vector<std::string> objects_;
    std::vector<Arrow> morphisms_;
    std::vector<MorphismId> units_;
    std::vector<std::array<MorphismId, 3>> composites_;
    std::optional<std::string> truncation_;
};

/// Structural and algebraic validation of an interchange table. Dangling
/// identifiers, missing composites, unit and associativity failures are each
/// reported, never raised.
ValidationReport validate_category(const CategoryTable& table);

/// Algebraic validation of an indexed category: totality (unless truncated),
/// unit laws, associativity on every triple whose composites are defined.
ValidationReport validate_axioms(const FinCategory& c);

} // namespace fh::fincat
