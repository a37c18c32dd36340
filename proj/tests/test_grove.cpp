#include <vector>

#include "doctest.h"

#include "arbor/counting.hpp"
#include "arbor/errors.hpp"
#include "arbor/grove.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {
const Tree u = graft(leaf(), leaf());
}

TEST_CASE("make_grove sorts, deduplicates, and validates") {
    const Tree l2 = primitive(Side::left, 2);
    const Tree r2 = primitive(Side::right, 2);
    const Grove g = make_grove({r2, l2, r2});
    CHECK(g.degree() == 2);
    CHECK(g.count() == 2);
    CHECK(g.trees() == std::vector<Tree>{l2, r2});
    CHECK(g.contains(l2));
    CHECK_FALSE(tree_grove(l2).contains(r2));
    CHECK_THROWS_AS(make_grove({}), DomainError);
    CHECK_THROWS_AS(make_grove({u, l2}), DomainError);
}

TEST_CASE("total groves") {
    CHECK(total_grove(0).count() == 1);
    CHECK(total_grove(0).trees().front() == leaf());
    for (int n = 0; n <= 6; ++n) {
        const Grove g = total_grove(n);
        CHECK(g.degree() == n);
        CHECK(g.count() == catalan_u64(n));
        CHECK(is_total(g));
    }
    CHECK_FALSE(is_total(tree_grove(primitive(Side::left, 2))));
    CHECK(is_tree(tree_grove(u)));
    CHECK_FALSE(is_tree(total_grove(2)));
}

TEST_CASE("union and containment") {
    const Grove l2 = tree_grove(primitive(Side::left, 2));
    const Grove r2 = tree_grove(primitive(Side::right, 2));
    CHECK(grove_union(l2, r2) == total_grove(2));
    CHECK(grove_union(l2, l2) == l2);
    CHECK(is_subgrove(l2, total_grove(2)));
    CHECK_FALSE(is_subgrove(total_grove(2), l2));
    CHECK_THROWS_AS(grove_union(l2, total_grove(3)), DomainError);
    CHECK_THROWS_AS(is_subgrove(l2, total_grove(3)), DomainError);
}

TEST_CASE("inheritance classification") {
    CHECK(classify_inheritance(tree_grove(u)) == Inheritance::both);
    CHECK(classify_inheritance(tree_grove(primitive(Side::left, 3))) == Inheritance::left);
    CHECK(classify_inheritance(tree_grove(primitive(Side::right, 3))) == Inheritance::right);
    CHECK(classify_inheritance(total_grove(2)) == Inheritance::neither);
    CHECK_THROWS_AS(classify_inheritance(total_grove(0)), DomainError);
}

TEST_CASE("grove reflection") {
    CHECK(reflect_grove(tree_grove(primitive(Side::left, 3))) ==
          tree_grove(primitive(Side::right, 3)));
    for (int n = 0; n <= 5; ++n) CHECK(reflect_grove(total_grove(n)) == total_grove(n));
}

TEST_CASE("sum terms model the absorbing empty value") {
    const SumTerm empty;
    CHECK(empty.is_empty());
    CHECK_THROWS_AS(empty.grove(), DomainError);
    const SumTerm some(total_grove(2));
    CHECK_FALSE(some.is_empty());
    CHECK(some.grove() == total_grove(2));
    CHECK(term_union(empty, some) == some);
    CHECK(term_union(some, empty) == some);
    CHECK(term_union(empty, empty).is_empty());
    const SumTerm l2(tree_grove(primitive(Side::left, 2)));
    const SumTerm r2(tree_grove(primitive(Side::right, 2)));
    CHECK(term_union(l2, r2) == SumTerm(total_grove(2)));
}

TEST_CASE("grove ordering is deterministic") {
    const Grove a = tree_grove(primitive(Side::left, 2));
    const Grove b = tree_grove(primitive(Side::right, 2));
    CHECK(a < b);
    CHECK(a < total_grove(3));
    CHECK(!(a < a));
}
