#include "arbor/arithmetic.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

namespace arbor {

namespace {

using NodePair = std::pair<const Tree::Node*, const Tree::Node*>;

struct NodePairHash {
    std::size_t operator()(const NodePair& p) const noexcept {
        std::size_t h = std::hash<const void*>()(p.first);
        h ^= std::hash<const void*>()(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Values are heap-allocated so references stay valid across rehashes.
template <typename Value>
struct PairCache {
    std::mutex mu;
    std::unordered_map<NodePair, std::unique_ptr<const Value>, NodePairHash> map;

    const Value* find(Tree x, Tree y) {
        std::scoped_lock lock(mu);
        auto it = map.find({x.node(), y.node()});
        return it == map.end() ? nullptr : it->second.get();
    }

    // First insertion wins; concurrent computations of the same key agree.
    const Value& insert(Tree x, Tree y, Value v) {
        auto owned = std::make_unique<const Value>(std::move(v));
        std::scoped_lock lock(mu);
        auto [it, inserted] = map.emplace(NodePair{x.node(), y.node()}, nullptr);
        if (inserted) it->second = std::move(owned);
        return *it->second;
    }
};

const std::vector<Tree>& add_pair(Tree x, Tree y);

std::vector<Tree> compute_add_pair(Tree x, Tree y) {
    if (x.is_leaf()) return {y};
    if (y.is_leaf()) return {x};
    std::vector<Tree> out;
    for (Tree s : add_pair(x.right(), y)) out.push_back(graft(x.left(), s));   // x ⊣ y
    for (Tree s : add_pair(x, y.left())) out.push_back(graft(s, y.right()));   // x ⊢ y
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Sum of two trees with the leaf as two-sided neutral element.
const std::vector<Tree>& add_pair(Tree x, Tree y) {
    static PairCache<std::vector<Tree>> cache;
    if (const auto* hit = cache.find(x, y)) return *hit;
    return cache.insert(x, y, compute_add_pair(x, y));
}

}  // namespace

SumTerm left_sum(const SumTerm& a, const SumTerm& b) {
    if (a.is_empty() || b.is_empty()) return SumTerm();
    const Grove& ga = a.grove();
    const Grove& gb = b.grove();
    if (ga.degree() == 0) return SumTerm();
    if (gb.degree() == 0) return a;
    std::vector<Tree> out;
    for (Tree x : ga.trees())
        for (Tree y : gb.trees())
            for (Tree s : add_pair(x.right(), y)) out.push_back(graft(x.left(), s));
    return SumTerm(make_grove(std::move(out)));
}

SumTerm right_sum(const SumTerm& a, const SumTerm& b) {
    if (a.is_empty() || b.is_empty()) return SumTerm();
    const Grove& ga = a.grove();
    const Grove& gb = b.grove();
    if (gb.degree() == 0) return SumTerm();
    if (ga.degree() == 0) return b;
    std::vector<Tree> out;
    for (Tree x : ga.trees())
        for (Tree y : gb.trees())
            for (Tree s : add_pair(x, y.left())) out.push_back(graft(s, y.right()));
    return SumTerm(make_grove(std::move(out)));
}

Grove add(const Grove& a, const Grove& b) {
    if (a.degree() == 0) return b;
    if (b.degree() == 0) return a;
    std::vector<Tree> out;
    for (Tree x : a.trees())
        for (Tree y : b.trees()) {
            const auto& s = add_pair(x, y);
            out.insert(out.end(), s.begin(), s.end());
        }
    return make_grove(std::move(out));
}

struct Word::NodeRep {
    Op op;
    Word lhs;
    Word rhs;
    int letters;
};

Word Word::letter() { return Word(); }

Word Word::combine(Op op, Word lhs, Word rhs) {
    Word w;
    w.node_ = std::make_shared<const NodeRep>(
        NodeRep{op, lhs, rhs, lhs.letter_count() + rhs.letter_count()});
    return w;
}

Word::Op Word::op() const {
    if (is_letter()) throw DomainError("the letter is not a compound word");
    return node_->op;
}

const Word& Word::lhs() const {
    if (is_letter()) throw DomainError("the letter is not a compound word");
    return node_->lhs;
}

const Word& Word::rhs() const {
    if (is_letter()) throw DomainError("the letter is not a compound word");
    return node_->rhs;
}

int Word::letter_count() const { return is_letter() ? 1 : node_->letters; }

bool operator==(const Word& a, const Word& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_letter() || b.is_letter()) return false;
    return a.node_->op == b.node_->op && a.node_->lhs == b.node_->lhs &&
           a.node_->rhs == b.node_->rhs;
}

namespace {

// Precedence: ⊢ = 1, ⊣ = 2, the letter = 3; ⊢ associates to the left and
// ⊣ to the right, so only the opposite-side child of equal precedence and
// any lower-precedence child get parentheses.
void render_word(const Word& w, int min_level, std::string& out) {
    if (w.is_letter()) {
        out += 'a';
        return;
    }
    const bool is_left_op = w.op() == Word::Op::left;
    const int level = is_left_op ? 2 : 1;
    const bool parens = level < min_level;
    if (parens) out += '(';
    if (is_left_op) {
        render_word(w.lhs(), 3, out);
        out += " -| ";
        render_word(w.rhs(), 2, out);
    } else {
        render_word(w.lhs(), 1, out);
        out += " |- ";
        render_word(w.rhs(), 2, out);
    }
    if (parens) out += ')';
}

}  // namespace

std::string Word::str() const {
    std::string out;
    render_word(*this, 1, out);
    return out;
}

Word universal_expression(Tree t) {
    if (t.is_leaf()) throw DomainError("universal_expression: the leaf has no word");
    const Tree l = t.left();
    const Tree r = t.right();
    Word w = Word::letter();
    if (!r.is_leaf()) w = Word::combine(Word::Op::left, w, universal_expression(r));
    if (!l.is_leaf()) w = Word::combine(Word::Op::right, universal_expression(l), w);
    return w;
}

namespace {

SumTerm evaluate_term(const Word& w, const SumTerm& y) {
    if (w.is_letter()) return y;
    const SumTerm l = evaluate_term(w.lhs(), y);
    const SumTerm r = evaluate_term(w.rhs(), y);
    return w.op() == Word::Op::left ? left_sum(l, r) : right_sum(l, r);
}

// Product of a tree and a single tree, cached.
const Grove& mult_pair(Tree x, Tree y) {
    static PairCache<Grove> cache;
    if (const auto* hit = cache.find(x, y)) return *hit;
    Grove value = evaluate_term(universal_expression(x), SumTerm(tree_grove(y))).grove();
    return cache.insert(x, y, std::move(value));
}

}  // namespace

Grove evaluate_word(const Word& w, const Grove& y) {
    const SumTerm t = evaluate_term(w, SumTerm(y));
    if (t.is_empty()) throw DomainError("word evaluation collapsed to the empty sum");
    return t.grove();
}

Grove multiply(const Grove& a, const Grove& b) {
    if (a.degree() == 0 || b.degree() == 0) return total_grove(0);
    std::optional<Grove> acc;
    for (Tree x : a.trees()) {
        if (b.count() == 1) {
            const Grove& p = mult_pair(x, b.trees().front());
            acc = acc ? grove_union(*acc, p) : p;
        } else {
            Grove p = evaluate_word(universal_expression(x), b);
            acc = acc ? grove_union(*acc, p) : std::move(p);
        }
    }
    return *acc;
}

}  // namespace arbor
