#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace fh {

// Disjoint sets whose root is always the least element of its class, so
// class representatives are canonical without a separate pass.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t size() const { return parent_.size(); }

    std::size_t add()
    {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
    }

    std::size_t find(std::size_t x)
    {
        std::size_t root = x;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[x] != root) {
            std::size_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    // Dense class labels 0..k-1, numbered in order of least member.
    std::vector<std::size_t> labels(std::size_t* class_count = nullptr)
    {
        std::vector<std::size_t> label(parent_.size());
        std::vector<std::size_t> root_label(parent_.size(), static_cast<std::size_t>(-1));
        std::size_t next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            std::size_t r = find(i);
            if (root_label[r] == static_cast<std::size_t>(-1))
                root_label[r] = next++;
            label[i] = root_label[r];
        }
        if (class_count)
            *class_count = next;
        return label;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace fh
