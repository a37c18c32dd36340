#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"

#include "arbor/arithmetic.hpp"
#include "arbor/counting.hpp"
#include "arbor/errors.hpp"
#include "arbor/factorization.hpp"
#include "arbor/grove.hpp"
#include "arbor/text.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {
const Tree u = graft(leaf(), leaf());
const Tree l2 = primitive(Side::left, 2);
const Tree r2 = primitive(Side::right, 2);
}

TEST_CASE("shape factoring of degree-4 composites") {
    const Tree lform = parse_tree("((. (. .)) (. .))");  // L2 x R2
    const auto fl = shape_factor_tree(lform);
    REQUIRE(fl.has_value());
    CHECK(fl->comb == l2);
    CHECK(fl->inherited == r2);
    CHECK(fl->inner == u);
    CHECK(fl->k == 2);
    CHECK(fl->d == 2);
    CHECK(multiply(tree_grove(fl->comb), tree_grove(fl->inherited)) == tree_grove(lform));

    const Tree rform = parse_tree("((. .) ((. .) .))");  // R2 x L2
    const auto fr = shape_factor_tree(rform);
    REQUIRE(fr.has_value());
    CHECK(fr->comb == r2);
    CHECK(fr->inherited == l2);
    CHECK(multiply(tree_grove(fr->comb), tree_grove(fr->inherited)) == tree_grove(rform));

    CHECK_FALSE(shape_factor_tree(leaf()).has_value());
    CHECK_FALSE(shape_factor_tree(u).has_value());
    int composite = 0;
    for (const Tree& t : enumerate_trees(4))
        if (shape_factor_tree(t).has_value()) ++composite;
    CHECK(composite == 2);
}

TEST_CASE("composite enumeration matches shape matching") {
    CHECK(brute_force_composites(4) ==
          std::vector<Tree>{parse_tree("((. (. .)) (. .))"), parse_tree("((. .) ((. .) .))")});
    for (int n = 2; n <= 8; ++n) {
        const auto brute = brute_force_composites(n);
        CHECK(brute.size() == shape_composite_count(n));
        for (const Tree& t : brute) CHECK(shape_factor_tree(t).has_value());
    }
    CHECK_THROWS_AS(brute_force_composites(0), DomainError);
    CHECK_THROWS_AS(brute_force_composites(11), ResourceError);
}

TEST_CASE("composite counts and the printed formula") {
    const std::vector<int> degrees = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    const std::vector<std::uint64_t> oracle = {0, 0, 2, 0, 6, 0, 12, 4, 30};
    const std::vector<long long> printed = {0, 0, 4, 0, 14, 0, 32, 10, 88};
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const CompositeCount c = composite_count(degrees[i]);
        CHECK(c.oracle == oracle[i]);
        CHECK(c.printed_formula == printed[i]);
    }
    CHECK_THROWS_AS(composite_count(31), ResourceError);
}

TEST_CASE("division recovers factors") {
    const Grove gl2 = tree_grove(l2);
    const Grove gr2 = tree_grove(r2);
    const Grove product = multiply(gl2, gr2);

    const DivisionResult right = divide(gl2, product, Side::right);
    CHECK(right.complete);
    CHECK(right.quotients == std::vector<Grove>{gr2});

    const DivisionResult left = divide(gr2, product, Side::left);
    CHECK(left.complete);
    CHECK(left.quotients == std::vector<Grove>{gl2});

    // {L2} does not divide {L4} on either side.
    const DivisionResult none = divide(gl2, tree_grove(primitive(Side::left, 4)), Side::right);
    CHECK(none.complete);
    CHECK(none.quotients.empty());

    CHECK_THROWS_AS(divide(total_grove(1), product, Side::right), DomainError);
    CHECK_THROWS_AS(divide(total_grove(3), product, Side::right), DomainError);
}

TEST_CASE("factor reports") {
    CHECK(factor_grove(total_grove(1)).primality == Primality::unit);
    CHECK(factor_grove(tree_grove(u)).primality == Primality::unit);
    CHECK_THROWS_AS(factor_grove(total_grove(0)), DomainError);

    const FactorReport prime = factor_grove(tree_grove(primitive(Side::left, 4)));
    CHECK(prime.primality == Primality::prime);
    CHECK(prime.complete);
    CHECK(prime.factorizations.empty());

    const FactorReport comp = factor_grove(tree_grove(parse_tree("((. (. .)) (. .))")));
    CHECK(comp.primality == Primality::composite);
    CHECK(comp.complete);
    REQUIRE(comp.factorizations.size() == 1);
    CHECK(comp.factorizations.front() ==
          std::vector<Grove>{tree_grove(l2), tree_grove(r2)});

    const FactorReport total4 = factor_grove(total_grove(4));
    CHECK(total4.primality == Primality::composite);
    CHECK(total4.complete);
    REQUIRE(total4.factorizations.size() == 1);
    CHECK(total4.factorizations.front() ==
          std::vector<Grove>{total_grove(2), total_grove(2)});

    // A starved budget must be reported, never silently truncated.
    SearchLimits tight;
    tight.node_budget = 1;
    tight.enumerate_cap = 1;
    const FactorReport starved = factor_grove(total_grove(4), tight);
    CHECK_FALSE(starved.complete);
}

TEST_CASE("sum decompositions") {
    for (int n = 1; n <= 5; ++n)
        for (const Tree& t : enumerate_trees(n))
            CHECK_FALSE(exists_sum_decomposition(tree_grove(t)).parts.has_value());

    const SumDecomposition total4 = exists_sum_decomposition(total_grove(4));
    CHECK(total4.complete);
    REQUIRE(total4.parts.has_value());
    CHECK(total4.parts->first == total_grove(1));
    CHECK(total4.parts->second == total_grove(3));

    const Grove sum = add(tree_grove(l2), tree_grove(r2));
    const SumDecomposition split = exists_sum_decomposition(sum);
    REQUIRE(split.parts.has_value());
    CHECK(add(split.parts->first, split.parts->second) == sum);
}

TEST_CASE("factorization experiment at desk scale") {
    UfdOptions options;
    options.max_degree = 4;
    const UfdReport report = ufd_experiment(options);
    REQUIRE(report.degrees.size() == 4);
    const std::vector<std::uint64_t> checked = {0, 2, 30, 16382};
    for (std::size_t i = 0; i < report.degrees.size(); ++i) {
        CHECK(report.degrees[i].degree == static_cast<int>(i) + 1);
        CHECK(report.degrees[i].exhaustive);
        CHECK(report.degrees[i].checked == checked[i]);
        CHECK(report.degrees[i].nonunique == 0);
        CHECK(report.degrees[i].bounded == 0);
        CHECK(report.degrees[i].unique == report.degrees[i].checked);
    }
    CHECK(report.counterexamples.empty());
    CHECK(report.totals_ok);
    CHECK(report.text.find("degree 4") != std::string::npos);
    UfdOptions bad;
    bad.max_degree = 0;
    CHECK_THROWS_AS(ufd_experiment(bad), DomainError);
}

TEST_CASE("additive experiment at desk scale") {
    AdditiveOptions options;
    options.max_degree = 4;
    const AdditiveReport report = additive_experiment(options);
    REQUIRE(report.degrees.size() == 4);
    for (std::size_t i = 0; i < report.degrees.size(); ++i) {
        const AdditiveDegreeSummary& d = report.degrees[i];
        CHECK(d.degree == static_cast<int>(i) + 1);
        CHECK(d.exhaustive);
        CHECK(d.checked == catalan_u64(d.degree));
        CHECK(d.decomposable == 0);
        CHECK(d.bounded == 0);
        CHECK(d.total_decomposes == (d.degree >= 2));
    }
    CHECK(report.counterexamples.empty());
    AdditiveOptions bad;
    bad.max_degree = -1;
    CHECK_THROWS_AS(additive_experiment(bad), DomainError);
}
