#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arbor/grove.hpp"

namespace arbor {

// Decomposition of a composite tree: primitive left factor (a comb) times an
// inherited right factor whose spine carries copies of `inner`.
//   comb = L_k:  tree = (…((0∨T)∨T)…)∨T,  inherited = 0∨T
//   comb = R_k:  tree = T∨(…∨(T∨0)…),     inherited = T∨0
// k >= 2 copies of T = inner, d = degree(inherited) >= 2, k*d = degree(tree).
struct TreeFactorization {
    Tree comb;
    Tree inherited;
    Tree inner;
    int k = 0;
    int d = 0;
};

// Matches the two composite shapes directly and validates by recomputing the
// product. nullopt means the tree is the unit (degree 1) or prime.
std::optional<TreeFactorization> shape_factor_tree(Tree t);

// Every degree-n tree equal to a product of two trees of degree >= 2,
// found by multiplying out all tree pairs over all divisor splits.
// Tree factors suffice: the count bound forces factors of a tree to be
// trees. Quadratic in Catalan numbers; requires n <= 10.
std::vector<Tree> brute_force_composites(int n);

// Trees of degree n matching either composite shape.
std::uint64_t shape_composite_count(int n);

struct CompositeCount {
    std::uint64_t oracle;         // enumerated count (brute force for n <= 10, shapes beyond)
    long long printed_formula;    // 2 * (-c_1 - c_n + sum over d|n of c_d)
};

// The two published counts of composite degree-n trees. They disagree (the
// divisor formula appears to be off by an index shift); callers compare.
CompositeCount composite_count(int n);

struct SearchLimits {
    // Enumerate a factor side outright when its grove space 2^c - 1 fits.
    std::uint64_t enumerate_cap = 31;
    // Division search node budget; exceeding it marks results incomplete.
    std::uint64_t node_budget = 200'000;
    // Stop collecting factorizations past this many.
    std::size_t max_factorizations = 64;
};

struct DivisionResult {
    std::vector<Grove> quotients;
    bool complete = true;
};

// Solve known × y = product (unknown == Side::right) or x × known = product
// (unknown == Side::left) exactly. degree(known) must be >= 2 and divide
// degree(product). Solutions come from the candidate sets
//   S = { t : known × {t} ⊆ product }   resp.   { t : {t} × known ⊆ product },
// searched with subset pruning: the product is monotone in each argument, so
// a partial candidate already escaping `product` can never be completed.
DivisionResult divide(const Grove& known, const Grove& product, Side unknown,
                      const SearchLimits& limits = {});

enum class Primality { unit, prime, composite, unknown };

struct FactorReport {
    Grove input;
    Primality primality = Primality::unknown;
    // Each entry is an ordered sequence of prime grove factors whose product
    // is the input; empty for unit/prime inputs.
    std::vector<std::vector<Grove>> factorizations;
    bool complete = true;
    SearchLimits limits;
};

// Recursively factors over all divisor splits, enumerating the smaller-degree
// side of each split and dividing for the other. Trees are factored through
// shape_factor_tree directly. Degree-0 input is a domain error.
FactorReport factor_grove(const Grove& g, const SearchLimits& limits = {});

struct SumDecomposition {
    std::optional<std::pair<Grove, Grove>> parts;
    bool complete = true;
};

// First (x, y) with x + y = g in split-then-canonical order, if any within
// limits. Addition distributes over union in both arguments, so for a fixed
// x the maximal feasible y is { t : x + {t} ⊆ g } and testing that single
// candidate set is a complete search.
SumDecomposition exists_sum_decomposition(const Grove& g, const SearchLimits& limits = {});

struct UfdOptions {
    int max_degree = 8;
    int samples_per_degree = 1000;
    std::uint64_t seed = 1;
    // Check every grove of a degree when the grove space fits this cap.
    std::uint64_t exhaustive_cap = 20'000;
    SearchLimits limits;
    bool per_grove_records = true;
};

struct UfdDegreeSummary {
    int degree = 0;
    bool exhaustive = false;
    std::uint64_t checked = 0;
    std::uint64_t unique = 0;     // zero or one factorization
    std::uint64_t nonunique = 0;  // two or more: a counterexample
    std::uint64_t bounded = 0;    // search hit a budget
};

struct UfdReport {
    std::vector<UfdDegreeSummary> degrees;
    std::vector<std::string> counterexamples;  // serialized, verbatim
    bool totals_ok = true;  // total groves factor as their integer does, all orders
    std::string text;       // full line-oriented report
};

// Sweeps degrees 1..max_degree: exhaustive where the grove space fits,
// otherwise seeded samples (uniform membership coin flips, empty and total
// rejected). Non-total groves are factored and their factorization counts
// recorded; total groves are checked against the commuting factorizations of
// the integer they embed.
UfdReport ufd_experiment(const UfdOptions& options);

struct AdditiveOptions {
    int max_degree = 6;
    int samples_per_degree = 200;  // used only when a tree set is too big to sweep
    std::uint64_t seed = 1;
    std::uint64_t exhaustive_cap = 20'000;
    SearchLimits limits;
    bool per_tree_records = true;
};

struct AdditiveDegreeSummary {
    int degree = 0;
    bool exhaustive = false;
    std::uint64_t checked = 0;
    std::uint64_t decomposable = 0;  // trees with a sum decomposition: counterexamples
    std::uint64_t bounded = 0;
    bool total_decomposes = false;
};

struct AdditiveReport {
    std::vector<AdditiveDegreeSummary> degrees;
    std::vector<std::string> counterexamples;
    std::string text;
};

// Trees should admit no sum decomposition; total groves of degree >= 2 should
// split as a sum of two total groves.
AdditiveReport additive_experiment(const AdditiveOptions& options);

}  // namespace arbor
