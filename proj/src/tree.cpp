#include "arbor/tree.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "arbor/counting.hpp"
#include "arbor/settings.hpp"

namespace arbor {

namespace {

// Ranks are 64-bit, so grafts are capped at the largest degree whose Catalan
// number still fits.
constexpr int kMaxDegree = 36;

using NodePair = std::pair<const Tree::Node*, const Tree::Node*>;

struct NodePairHash {
    std::size_t operator()(const NodePair& p) const noexcept {
        std::size_t h = std::hash<const void*>()(p.first);
        h ^= std::hash<const void*>()(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Pool {
    std::mutex mu;
    std::deque<Tree::Node> arena;  // deque: nodes never move once created
    std::unordered_map<NodePair, const Tree::Node*, NodePairHash> interned;
    Tree::Node leaf_node{nullptr, nullptr, 0, 0};
};

Pool& pool() {
    static Pool p;
    return p;
}

}  // namespace

Tree::Tree() : node_(&pool().leaf_node) {}

Tree leaf() { return Tree(); }

Tree graft(Tree l, Tree r) {
    const int n = l.degree() + r.degree() + 1;
    if (n > kMaxDegree) throw ResourceError("graft: degree exceeds supported maximum (36)");

    Pool& p = pool();
    std::scoped_lock lock(p.mu);
    const NodePair key{l.node(), r.node()};
    if (auto it = p.interned.find(key); it != p.interned.end()) return Tree(it->second);

    // Canonical position: all blocks with a larger left subtree come first,
    // then row-major within the (left degree, right degree) block.
    const int dl = l.degree();
    const int dr = r.degree();
    std::uint64_t index = 0;
    for (int j = dl + 1; j <= n - 1; ++j) index += catalan_u64(j) * catalan_u64(n - 1 - j);
    index += l.index() * catalan_u64(dr) + r.index();

    p.arena.push_back(Tree::Node{l.node(), r.node(), n, index});
    const Tree::Node* node = &p.arena.back();
    p.interned.emplace(key, node);
    return Tree(node);
}

std::pair<Tree, Tree> split(Tree t) { return {t.left(), t.right()}; }

Tree over(Tree x, Tree y) {
    if (y.is_leaf()) return x;
    return graft(over(x, y.left()), y.right());
}

Tree under(Tree x, Tree y) {
    if (x.is_leaf()) return y;
    return graft(x.left(), under(x.right(), y));
}

Tree reflect(Tree t) {
    if (t.is_leaf()) return t;
    return graft(reflect(t.right()), reflect(t.left()));
}

Tree primitive(Side side, int n) {
    if (n < 0) throw DomainError("primitive: negative degree");
    Tree t = leaf();
    for (int i = 0; i < n; ++i) t = side == Side::left ? graft(t, leaf()) : graft(leaf(), t);
    return t;
}

std::span<const Tree> enumerate_trees(int n) {
    if (n < 0) throw DomainError("enumerate_trees: negative degree");
    if (n > settings().max_degree)
        throw ResourceError("enumerate_trees: degree exceeds settings().max_degree");

    static std::mutex mu;
    static std::vector<std::vector<Tree>> levels;
    std::scoped_lock lock(mu);
    while (static_cast<int>(levels.size()) <= n) {
        const int d = static_cast<int>(levels.size());
        std::vector<Tree> level;
        if (d == 0) {
            level.push_back(leaf());
        } else {
            level.reserve(catalan_u64(d));
            for (int j = d - 1; j >= 0; --j)
                for (Tree l : levels[j])
                    for (Tree r : levels[d - 1 - j]) level.push_back(graft(l, r));
        }
        levels.push_back(std::move(level));
    }
    return levels[n];
}

TreeRank rank_of(Tree t) { return {t.degree(), t.index()}; }

Tree unrank(TreeRank r) {
    if (r.degree < 0) throw DomainError("unrank: negative degree");
    if (r.degree > kMaxDegree) throw ResourceError("unrank: degree exceeds supported maximum (36)");
    if (r.index >= catalan_u64(r.degree)) throw DomainError("unrank: index out of range");
    if (r.degree == 0) return leaf();

    std::uint64_t i = r.index;
    for (int j = r.degree - 1; j >= 0; --j) {
        const std::uint64_t right_count = catalan_u64(r.degree - 1 - j);
        const std::uint64_t block = catalan_u64(j) * right_count;
        if (i < block)
            return graft(unrank({j, i / right_count}),
                         unrank({r.degree - 1 - j, i % right_count}));
        i -= block;
    }
    throw DomainError("unrank: index out of range");  // unreachable
}

}  // namespace arbor
