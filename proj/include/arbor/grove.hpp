#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

// Nonempty set of distinct trees of one common degree, kept sorted in
// canonical order. The degree-0 grove is exactly {leaf}.
class Grove {
public:
    int degree() const { return degree_; }
    std::size_t count() const { return trees_.size(); }
    const std::vector<Tree>& trees() const { return trees_; }
    bool contains(Tree t) const;

    friend bool operator==(const Grove& a, const Grove& b) {
        return a.degree_ == b.degree_ && a.trees_ == b.trees_;
    }
    // Orders by degree, then lexicographically by member indices. Used for
    // deterministic sets of groves; not a containment order.
    friend std::strong_ordering operator<=>(const Grove& a, const Grove& b);

private:
    Grove(int degree, std::vector<Tree> sorted) : degree_(degree), trees_(std::move(sorted)) {}
    int degree_;
    std::vector<Tree> trees_;

    friend Grove make_grove(std::vector<Tree>);
};

// Sorts, removes duplicates, and checks the members share one degree.
// Throws DomainError on an empty list or mixed degrees.
Grove make_grove(std::vector<Tree> trees);

Grove tree_grove(Tree t);

// Set union; degrees must match.
Grove grove_union(const Grove& a, const Grove& b);

inline std::size_t count(const Grove& g) { return g.count(); }

// All of Y_n as a grove (the image of the natural number n).
Grove total_grove(int n);

Grove reflect_grove(const Grove& g);

enum class Inheritance { left, right, both, neither };

// left: every member has a leaf right part; right: mirror; both/neither.
// Degree-0 input has no parts to classify and is a domain error.
Inheritance classify_inheritance(const Grove& g);

bool is_total(const Grove& g);
bool is_tree(const Grove& g);

// a ⊆ b. Degrees must match.
bool is_subgrove(const Grove& a, const Grove& b);

// Result of a one-sided sum: either a grove or the absorbing Empty value.
// Empty models the annihilating zero of the one-sided operations and never
// appears in public grove-valued results.
class SumTerm {
public:
    SumTerm() = default;  // Empty
    SumTerm(Grove g) : value_(std::move(g)) {}

    bool is_empty() const { return !value_.has_value(); }
    const Grove& grove() const {
        if (!value_) throw DomainError("empty sum term has no grove");
        return *value_;
    }

    friend bool operator==(const SumTerm& a, const SumTerm& b) {
        return a.value_ == b.value_;
    }

private:
    std::optional<Grove> value_;
};

// Union with Empty as the neutral element.
SumTerm term_union(const SumTerm& a, const SumTerm& b);

}  // namespace arbor
