#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "arbor/errors.hpp"

namespace arbor {

// Planar binary tree: a leaf, or an ordered pair of subtrees. Degree is the
// number of internal vertices. Values are immutable and interned, so copies
// are pointer-sized, equality is O(1), and identical shapes share storage.
class Tree {
public:
    struct Node {
        const Node* left;
        const Node* right;
        int degree;
        std::uint64_t index;  // position within the canonical enumeration of Y_degree
    };

    Tree();  // the leaf

    bool is_leaf() const { return node_->degree == 0; }
    int degree() const { return node_->degree; }
    std::uint64_t index() const { return node_->index; }

    Tree left() const {
        if (is_leaf()) throw DomainError("leaf has no parts");
        return Tree(node_->left);
    }
    Tree right() const {
        if (is_leaf()) throw DomainError("leaf has no parts");
        return Tree(node_->right);
    }

    friend bool operator==(Tree a, Tree b) { return a.node_ == b.node_; }
    friend std::strong_ordering operator<=>(Tree a, Tree b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.index() <=> b.index();
    }

    const Node* node() const { return node_; }

private:
    explicit Tree(const Node* n) : node_(n) {}
    const Node* node_;

    friend Tree graft(Tree, Tree);
};

Tree leaf();

// Join two trees under a new root; degree(result) = degree(l) + degree(r) + 1.
Tree graft(Tree l, Tree r);

// Inverse of graft. Throws DomainError on the leaf.
std::pair<Tree, Tree> split(Tree t);

inline int degree(Tree t) { return t.degree(); }

// Identify the root of x with the leftmost leaf of y ("x over y").
Tree over(Tree x, Tree y);

// Identify the rightmost leaf of x with the root of y ("x under y").
Tree under(Tree x, Tree y);

// Left-right mirror image. An involution.
Tree reflect(Tree t);

enum class Side { left, right };

// The comb of degree n: every internal vertex on the chosen spine.
// primitive(Side::left, n) is the Tamari minimum of its degree,
// primitive(Side::right, n) the maximum.
Tree primitive(Side side, int n);

// All trees of degree n in canonical order (larger left subtrees first,
// then left index, then right index). The returned span stays valid for
// the life of the process. Throws ResourceError past settings().max_degree.
std::span<const Tree> enumerate_trees(int n);

struct TreeRank {
    int degree = 0;
    std::uint64_t index = 0;
};

TreeRank rank_of(Tree t);
Tree unrank(TreeRank r);

}  // namespace arbor

template <>
struct std::hash<arbor::Tree> {
    std::size_t operator()(arbor::Tree t) const noexcept {
        return std::hash<const void*>()(t.node());
    }
};
