#pragma once

#include <memory>
#include <string>

#include "arbor/grove.hpp"

namespace arbor {

// One-sided sums. Zero conventions, applied in this order:
//   Empty absorbs both operations;
//   0 ⊣ y = Empty,  x ⊣ 0 = x;
//   x ⊢ 0 = Empty,  0 ⊢ y = y;
// where 0 is the degree-0 grove. Otherwise the operation distributes over
// members: for trees, x ⊣ y grafts every member of x^r + y under x^l, and
// x ⊢ y grafts x + y^l over y^r.
SumTerm left_sum(const SumTerm& a, const SumTerm& b);
SumTerm right_sum(const SumTerm& a, const SumTerm& b);

// Grove addition: union of the two one-sided sums, distributed over member
// pairs. The degree-0 grove is the two-sided neutral element. Degrees add.
Grove add(const Grove& a, const Grove& b);

// Expression over one letter and the two one-sided sums. Words produced by
// universal_expression are in normal form: every ⊣ vertex has the bare
// letter as its left operand, so "w_l ⊢ a ⊣ w_r" groups as w_l ⊢ (a ⊣ w_r).
class Word {
public:
    enum class Op { left, right };  // ⊣ / ⊢

    static Word letter();
    static Word combine(Op op, Word lhs, Word rhs);

    bool is_letter() const { return node_ == nullptr; }
    Op op() const;
    const Word& lhs() const;
    const Word& rhs() const;
    int letter_count() const;

    // "-|" renders ⊣ and "|-" renders ⊢; ⊣ binds tighter, ⊢ is
    // left-associative, parentheses only where the conventions need them.
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b);

private:
    struct NodeRep;
    std::shared_ptr<const NodeRep> node_;  // null = the letter
};

// The word writing a tree as an iterated one-sided sum of degree-1 trees:
// w(x) = w(x^l) ⊢ a ⊣ w(x^r) with empty parts dropped. Letter count equals
// the degree. Degree-0 input is a domain error.
Word universal_expression(Tree t);

// Substitutes y for every letter and evaluates. Throws DomainError if the
// zero conventions collapse the result to Empty (only possible for a
// multi-letter word at the degree-0 grove).
Grove evaluate_word(const Word& w, const Grove& y);

// Grove product: union over members x of a of the evaluation of w(x) at b.
// Degrees multiply; a degree-0 operand forces the degree-0 result.
// Distributes over union on the left only.
Grove multiply(const Grove& a, const Grove& b);

}  // namespace arbor
