#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fh/fincat/category.hpp"

namespace fh::fincat {

/// A functor from a finite category to finite sets. The set over object x
/// is {0, ..., sizes[x]-1}; maps[f] is the function table of f.
struct SetDiagram {
    FinCategory shape;
    std::vector<std::size_t> sizes;
    std::vector<std::vector<std::size_t>> maps;
};

/// Checks table shapes and functoriality on every defined composite.
ValidationReport validate_diagram(const SetDiagram& d);

struct Colimit {
    std::size_t size = 0;
    /// cocone[x][i] is the class of element i over object x.
    std::vector<std::vector<std::size_t>> cocone;
    /// Least (object, element) member of each class.
    std::vector<std::pair<ObjectId, std::size_t>> representatives;
};

/// Quotient of the disjoint union by the relation generated by i ~ D(f)(i).
/// Classes are numbered by their least member in (object, element) order.
Colimit colimit_of_sets(const SetDiagram& d);

struct Limit {
    /// Each family picks one element per shape object, compatibly with every
    /// morphism. The cone projections are the coordinates.
    std::vector<std::vector<std::size_t>> families;

    std::size_t size() const { return families.size(); }
};

/// Compatible families, enumerated in lexicographic order of coordinates.
Limit limit_of_sets(const SetDiagram& d);

/// Shape helpers used throughout the toolkit.
FinCategory discrete_category(std::size_t n);
/// Two objects s, t with two parallel arrows d0, d1: s -> t.
FinCategory parallel_pair();
/// a -> c <- b.
FinCategory cospan_shape();
/// One object with endomorphisms given by a group multiplication table
/// (element 0 is the identity).
FinCategory group_category(const std::vector<std::vector<int>>& table);

} // namespace fh::fincat
