#include "arbor/tamari.hpp"

#include <algorithm>

namespace arbor {

namespace {

void append_right_sizes(Tree t, std::vector<int>& out) {
    if (t.is_leaf()) return;
    append_right_sizes(t.left(), out);
    out.push_back(t.right().degree());
    append_right_sizes(t.right(), out);
}

// One entry per internal vertex in infix order: the number of internal
// vertices in its right subtree. A rotation (a∨b)∨c -> a∨(b∨c) raises the
// entry at the rotated vertex and leaves the rest unchanged, and the rotation
// order is exactly the componentwise order on these vectors.
std::vector<int> right_size_vector(Tree t) {
    std::vector<int> v;
    v.reserve(t.degree());
    append_right_sizes(t, v);
    return v;
}

void dedupe(std::vector<Tree>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Tree> covers(Tree t) {
    std::vector<Tree> out;
    if (t.is_leaf()) return out;
    const Tree l = t.left();
    const Tree r = t.right();
    if (!l.is_leaf()) out.push_back(graft(l.left(), graft(l.right(), r)));
    for (Tree lc : covers(l)) out.push_back(graft(lc, r));
    for (Tree rc : covers(r)) out.push_back(graft(l, rc));
    dedupe(out);
    return out;
}

std::vector<Tree> covers_inverse(Tree t) {
    std::vector<Tree> out;
    if (t.is_leaf()) return out;
    const Tree l = t.left();
    const Tree r = t.right();
    if (!r.is_leaf()) out.push_back(graft(graft(l, r.left()), r.right()));
    for (Tree lc : covers_inverse(l)) out.push_back(graft(lc, r));
    for (Tree rc : covers_inverse(r)) out.push_back(graft(l, rc));
    dedupe(out);
    return out;
}

bool tamari_leq(Tree x, Tree y) {
    if (x.degree() != y.degree()) throw DomainError("tamari_leq: degrees differ");
    if (x == y) return true;
    const auto vx = right_size_vector(x);
    const auto vy = right_size_vector(y);
    for (std::size_t i = 0; i < vx.size(); ++i)
        if (vx[i] > vy[i]) return false;
    return true;
}

std::vector<Tree> tamari_interval(Tree lo, Tree hi) {
    if (lo.degree() != hi.degree()) throw DomainError("tamari_interval: degrees differ");
    std::vector<Tree> out;
    for (Tree z : enumerate_trees(lo.degree()))
        if (tamari_leq(lo, z) && tamari_leq(z, hi)) out.push_back(z);
    return out;
}

}  // namespace arbor
