#include <vector>

#include "doctest.h"

#include "arbor/arithmetic.hpp"
#include "arbor/counting.hpp"
#include "arbor/errors.hpp"
#include "arbor/grove.hpp"
#include "arbor/text.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {
const Tree u = graft(leaf(), leaf());
const Grove zero = total_grove(0);
const Grove one = total_grove(1);
const Grove l2 = tree_grove(primitive(Side::left, 2));
const Grove r2 = tree_grove(primitive(Side::right, 2));
}

TEST_CASE("one-sided sums follow the zero conventions") {
    const SumTerm empty;
    CHECK(left_sum(empty, SumTerm(one)).is_empty());
    CHECK(left_sum(SumTerm(one), empty).is_empty());
    CHECK(right_sum(empty, SumTerm(one)).is_empty());
    CHECK(right_sum(SumTerm(one), empty).is_empty());

    CHECK(left_sum(SumTerm(zero), SumTerm(one)).is_empty());
    CHECK(left_sum(SumTerm(one), SumTerm(zero)) == SumTerm(one));
    CHECK(right_sum(SumTerm(one), SumTerm(zero)).is_empty());
    CHECK(right_sum(SumTerm(zero), SumTerm(one)) == SumTerm(one));
    // Both rules fire on 0 op 0: the annihilating one wins in each direction.
    CHECK(left_sum(SumTerm(zero), SumTerm(zero)).is_empty());
    CHECK(right_sum(SumTerm(zero), SumTerm(zero)).is_empty());
}

TEST_CASE("one-sided sums on degree-1 trees") {
    const SumTerm a(one);
    const SumTerm left = left_sum(a, a);
    const SumTerm right = right_sum(a, a);
    REQUIRE_FALSE(left.is_empty());
    REQUIRE_FALSE(right.is_empty());
    // u ⊣ u = leaf ∨ (0 + u) = R_2 and u ⊢ u = (u + 0) ∨ leaf = L_2.
    CHECK(left.grove() == r2);
    CHECK(right.grove() == l2);
}

TEST_CASE("addition basics") {
    CHECK(add(one, one) == total_grove(2));
    CHECK(add(zero, l2) == l2);
    CHECK(add(l2, zero) == l2);
    CHECK(add(zero, zero) == zero);

    const Grove s = add(l2, r2);
    CHECK(s.degree() == 4);
    CHECK(s.count() == 2);
    CHECK(s.contains(parse_tree("(((. .) .) (. .))")));
    CHECK(s.contains(parse_tree("((. .) (. (. .)))")));

    const Grove t = add(r2, l2);
    CHECK(t.count() == 6);
    CHECK_FALSE(s == t);

    // Total groves add to total groves.
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(add(total_grove(m), total_grove(n)) == total_grove(m + n));
}

TEST_CASE("universal words") {
    CHECK_THROWS_AS(universal_expression(leaf()), DomainError);
    const Word wu = universal_expression(u);
    CHECK(wu.is_letter());
    CHECK(wu.letter_count() == 1);
    CHECK(wu.str() == "a");

    CHECK(universal_expression(primitive(Side::left, 2)).str() == "a |- a");
    CHECK(universal_expression(primitive(Side::right, 2)).str() == "a -| a");
    CHECK(universal_expression(graft(u, u)).str() == "a |- a -| a");
    CHECK(universal_expression(primitive(Side::left, 3)).str() == "a |- a |- a");
    CHECK(universal_expression(primitive(Side::right, 3)).str() == "a -| a -| a");

    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n))
            CHECK(universal_expression(t).letter_count() == n);

    const Word w = universal_expression(primitive(Side::left, 2));
    CHECK(w.op() == Word::Op::right);
    CHECK(w.lhs() == Word::letter());
    CHECK(w.rhs() == Word::letter());
    CHECK_THROWS_AS(Word::letter().op(), DomainError);
    CHECK_THROWS_AS(Word::letter().lhs(), DomainError);
    CHECK_THROWS_AS(Word::letter().rhs(), DomainError);
}

TEST_CASE("word evaluation recovers trees at the unit") {
    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n))
            CHECK(evaluate_word(universal_expression(t), one) == tree_grove(t));
    // Multi-letter words collapse at the degree-0 grove.
    CHECK(evaluate_word(Word::letter(), zero) == zero);
    CHECK_THROWS_AS(evaluate_word(universal_expression(primitive(Side::left, 2)), zero),
                    DomainError);
}

TEST_CASE("multiplication basics") {
    for (int n = 0; n <= 4; ++n) {
        CHECK(multiply(one, total_grove(n)) == total_grove(n));
        CHECK(multiply(total_grove(n), one) == total_grove(n));
        CHECK(multiply(zero, total_grove(n)) == zero);
        CHECK(multiply(total_grove(n), zero) == zero);
    }
    CHECK(multiply(l2, one) == l2);
    CHECK(multiply(one, l2) == l2);

    const Grove p = multiply(l2, r2);
    CHECK(p.degree() == 4);
    CHECK(p == tree_grove(parse_tree("((. (. .)) (. .))")));
    const Grove q = multiply(r2, l2);
    CHECK(q == tree_grove(parse_tree("((. .) ((. .) .))")));
    CHECK_FALSE(p == q);

    // Degrees multiply.
    CHECK(multiply(total_grove(2), total_grove(3)).degree() == 6);
}

TEST_CASE("reflection swaps addition order and is a product morphism") {
    CHECK(reflect_grove(add(l2, l2)) == add(r2, r2));
    // σ(x + y) = σ(y) + σ(x), so this particular sum is self-dual.
    CHECK(reflect_grove(add(l2, r2)) == add(l2, r2));
    CHECK(reflect_grove(multiply(l2, r2)) == multiply(r2, l2));
}
