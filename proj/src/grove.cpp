#include "arbor/grove.hpp"

#include <algorithm>
#include <iterator>

#include "arbor/counting.hpp"
#include "arbor/settings.hpp"

namespace arbor {

bool Grove::contains(Tree t) const {
    return std::binary_search(trees_.begin(), trees_.end(), t);
}

std::strong_ordering operator<=>(const Grove& a, const Grove& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(),
                                                  b.trees_.begin(), b.trees_.end());
}

Grove make_grove(std::vector<Tree> trees) {
    if (trees.empty()) throw DomainError("make_grove: a grove has at least one tree");
    std::sort(trees.begin(), trees.end());
    trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
    const int d = trees.front().degree();
    for (Tree t : trees)
        if (t.degree() != d) throw DomainError("make_grove: members must share one degree");
    if (trees.size() > settings().max_result_trees)
        throw ResourceError("make_grove: grove exceeds settings().max_result_trees");
    return Grove(d, std::move(trees));
}

Grove tree_grove(Tree t) { return make_grove({t}); }

Grove grove_union(const Grove& a, const Grove& b) {
    if (a.degree() != b.degree()) throw DomainError("grove_union: degrees differ");
    std::vector<Tree> merged;
    merged.reserve(a.count() + b.count());
    std::set_union(a.trees().begin(), a.trees().end(), b.trees().begin(), b.trees().end(),
                   std::back_inserter(merged));
    return make_grove(std::move(merged));
}

Grove total_grove(int n) {
    const auto all = enumerate_trees(n);
    return make_grove(std::vector<Tree>(all.begin(), all.end()));
}

Grove reflect_grove(const Grove& g) {
    std::vector<Tree> out;
    out.reserve(g.count());
    for (Tree t : g.trees()) out.push_back(reflect(t));
    return make_grove(std::move(out));
}

Inheritance classify_inheritance(const Grove& g) {
    if (g.degree() == 0) throw DomainError("classify_inheritance: degree-0 grove has no parts");
    bool all_left = true;   // every member's right part is a leaf
    bool all_right = true;  // every member's left part is a leaf
    for (Tree t : g.trees()) {
        if (!t.right().is_leaf()) all_left = false;
        if (!t.left().is_leaf()) all_right = false;
    }
    if (all_left && all_right) return Inheritance::both;
    if (all_left) return Inheritance::left;
    if (all_right) return Inheritance::right;
    return Inheritance::neither;
}

bool is_total(const Grove& g) { return g.count() == catalan_u64(g.degree()); }

bool is_tree(const Grove& g) { return g.count() == 1; }

bool is_subgrove(const Grove& a, const Grove& b) {
    if (a.degree() != b.degree()) throw DomainError("is_subgrove: degrees differ");
    return std::includes(b.trees().begin(), b.trees().end(), a.trees().begin(), a.trees().end());
}

SumTerm term_union(const SumTerm& a, const SumTerm& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return SumTerm(grove_union(a.grove(), b.grove()));
}

}  // namespace arbor
