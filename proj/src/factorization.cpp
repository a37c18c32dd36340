#include "arbor/factorization.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "arbor/arithmetic.hpp"
#include "arbor/counting.hpp"
#include "arbor/text.hpp"

namespace arbor {

namespace {

// Walks one composite shape: with side == left, every vertex on the left
// spine must carry `inner` as its right part and the spine must end in a
// leaf; mirrored for side == right.
std::optional<TreeFactorization> match_shape(Tree t, Side side) {
    const Tree inner = side == Side::left ? t.right() : t.left();
    if (inner.is_leaf()) return std::nullopt;
    int k = 0;
    Tree cur = t;
    while (!cur.is_leaf()) {
        if ((side == Side::left ? cur.right() : cur.left()) != inner) return std::nullopt;
        ++k;
        cur = side == Side::left ? cur.left() : cur.right();
    }
    if (k < 2) return std::nullopt;
    const Tree inherited =
        side == Side::left ? graft(leaf(), inner) : graft(inner, leaf());
    return TreeFactorization{primitive(side, k), inherited, inner, k, inherited.degree()};
}

}  // namespace

std::optional<TreeFactorization> shape_factor_tree(Tree t) {
    if (t.degree() < 4) return std::nullopt;
    auto f = match_shape(t, Side::left);
    if (!f) f = match_shape(t, Side::right);
    if (!f) return std::nullopt;
    if (!(multiply(tree_grove(f->comb), tree_grove(f->inherited)) == tree_grove(t)))
        return std::nullopt;  // shape matched but the product disagrees
    return f;
}

std::vector<Tree> brute_force_composites(int n) {
    if (n < 1) throw DomainError("brute_force_composites: degree must be positive");
    if (n > 10) throw ResourceError("brute_force_composites: quadratic sweep capped at degree 10");
    std::vector<Tree> out;
    for (int a : divisors(n)) {
        const int b = n / a;
        if (a < 2 || b < 2) continue;
        for (Tree x : enumerate_trees(a))
            for (Tree y : enumerate_trees(b)) {
                const Grove p = multiply(tree_grove(x), tree_grove(y));
                if (p.count() == 1) out.push_back(p.trees().front());
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t shape_composite_count(int n) {
    if (n < 1) throw DomainError("shape_composite_count: degree must be positive");
    std::uint64_t per_side = 0;
    for (int k : divisors(n)) {
        const int d = n / k;
        if (k >= 2 && d >= 2) per_side += catalan_u64(d - 1);  // choices of the inner tree
    }
    return 2 * per_side;
}

CompositeCount composite_count(int n) {
    if (n < 1) throw DomainError("composite_count: degree must be positive");
    if (n > 30) throw ResourceError("composite_count: degree capped at 30");
    CompositeCount out{};
    out.oracle = n <= 10 ? brute_force_composites(n).size() : shape_composite_count(n);
    long long divisor_sum = 0;
    for (int d : divisors(n)) divisor_sum += static_cast<long long>(catalan_u64(d));
    out.printed_formula =
        2 * (divisor_sum - static_cast<long long>(catalan_u64(1)) -
             static_cast<long long>(catalan_u64(n)));
    return out;
}

namespace {

Grove mask_grove(std::span<const Tree> trees, std::uint64_t mask) {
    std::vector<Tree> members;
    for (std::size_t i = 0; i < trees.size(); ++i)
        if (mask >> i & 1) members.push_back(trees[i]);
    return make_grove(std::move(members));
}

// All nonempty groves of the degree, canonically sorted. Callers must check
// the space fits their cap first.
std::vector<Grove> all_groves(int degree) {
    const auto trees = enumerate_trees(degree);
    std::vector<Grove> out;
    out.reserve((std::uint64_t(1) << trees.size()) - 1);
    for (std::uint64_t mask = 1; mask >> trees.size() == 0; ++mask)
        out.push_back(mask_grove(trees, mask));
    std::sort(out.begin(), out.end());
    return out;
}

// 2^catalan(degree) - 1 nonempty groves, or nullopt when that overflows.
std::optional<std::uint64_t> grove_space(int degree) {
    const std::uint64_t c = catalan_u64(degree);
    if (c > 63) return std::nullopt;
    return (std::uint64_t(1) << c) - 1;
}

// Solve known × y = target over subsets of the candidate trees. The product
// is monotone in its right argument, so a partial choice whose product
// already escapes the target is pruned with all its supersets; the count
// bound C(x × y) >= C(x) * C(y)^deg(x) caps the subset size. Candidates are
// taken include-first, so the maximal set is examined before its subsets.
struct RightDivisionSearch {
    RightDivisionSearch(const Grove& k, const Grove& t, const SearchLimits& l)
        : known(k), target(t), limits(l) {}

    const Grove& known;
    const Grove& target;
    const SearchLimits& limits;
    std::size_t max_count = 0;  // largest C(y) the count bound allows
    std::vector<Tree> candidates;
    std::vector<Tree> chosen;
    std::vector<Grove> solutions;
    std::uint64_t nodes = 0;
    bool complete = true;

    void run(std::size_t idx, bool product_matches) {
        if (!complete) return;
        if (idx == candidates.size()) {
            if (!chosen.empty() && product_matches) {
                if (solutions.size() >= limits.max_factorizations) {
                    complete = false;
                    return;
                }
                solutions.push_back(make_grove(chosen));
            }
            return;
        }
        if (chosen.size() < max_count) {  // with candidates[idx]
            if (++nodes > limits.node_budget) {
                complete = false;
                return;
            }
            chosen.push_back(candidates[idx]);
            const Grove product = multiply(known, make_grove(chosen));
            if (is_subgrove(product, target)) run(idx + 1, product == target);
            chosen.pop_back();
            if (!complete) return;
        }
        run(idx + 1, product_matches);  // without candidates[idx]
    }
};

// Largest k with factor_count * k^degree <= product_count.
std::size_t count_bound_cap(std::size_t factor_count, int degree, std::size_t product_count) {
    std::size_t k = 0;
    while (true) {
        long double value = factor_count;
        for (int i = 0; i < degree; ++i) value *= static_cast<long double>(k + 1);
        if (value > static_cast<long double>(product_count)) return k;
        ++k;
    }
}

// Solve x × known = target. The product distributes over unions in its left
// argument, so solutions are exactly the subsets of the feasible trees whose
// individual products cover the target.
struct LeftDivisionSearch {
    const SearchLimits& limits;
    std::size_t words = 0;
    std::size_t max_count = 0;  // largest C(x) the count bound allows
    std::vector<Tree> candidates;
    std::vector<std::vector<std::uint64_t>> masks;       // per candidate
    std::vector<std::vector<std::uint64_t>> suffix_any;  // OR of masks[idx..]
    std::vector<std::uint64_t> full;
    std::vector<Tree> chosen;
    std::vector<Grove> solutions;
    std::uint64_t nodes = 0;
    bool complete = true;

    explicit LeftDivisionSearch(const SearchLimits& l) : limits(l) {}

    void run(std::size_t idx, const std::vector<std::uint64_t>& covered) {
        if (!complete) return;
        if (++nodes > limits.node_budget) {
            complete = false;
            return;
        }
        // The remaining candidates must be able to finish the cover.
        std::vector<std::uint64_t> reachable(words);
        for (std::size_t w = 0; w < words; ++w)
            reachable[w] = covered[w] | (idx < candidates.size() ? suffix_any[idx][w] : 0);
        if (reachable != full) return;
        if (idx == candidates.size()) {
            if (!chosen.empty()) {
                if (solutions.size() >= limits.max_factorizations) {
                    complete = false;
                    return;
                }
                solutions.push_back(make_grove(chosen));
            }
            return;
        }
        if (chosen.size() < max_count) {  // with candidates[idx]
            chosen.push_back(candidates[idx]);
            std::vector<std::uint64_t> next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = covered[w] | masks[idx][w];
            run(idx + 1, next);
            chosen.pop_back();
            if (!complete) return;
        }
        run(idx + 1, covered);  // without candidates[idx]
    }
};

}  // namespace

DivisionResult divide(const Grove& known, const Grove& product, Side unknown,
                      const SearchLimits& limits) {
    if (known.degree() < 2) throw DomainError("divide: known factor needs degree >= 2");
    if (product.degree() % known.degree() != 0)
        throw DomainError("divide: known degree does not divide the product degree");
    const int q = product.degree() / known.degree();

    DivisionResult out;
    if (unknown == Side::right) {
        RightDivisionSearch search(known, product, limits);
        search.max_count = count_bound_cap(known.count(), known.degree(), product.count());
        for (Tree t : enumerate_trees(q)) {
            ++search.nodes;
            if (is_subgrove(multiply(known, tree_grove(t)), product))
                search.candidates.push_back(t);
        }
        search.run(0, false);
        out.quotients = std::move(search.solutions);
        out.complete = search.complete;
    } else {
        LeftDivisionSearch search(limits);
        // C(x * known) >= C(x) * C(known)^deg(x), so C(x) <= C(product) / C(known)^q.
        long double pow_known = 1;
        for (int i = 0; i < q; ++i) pow_known *= static_cast<long double>(known.count());
        search.max_count = static_cast<std::size_t>(
            static_cast<long double>(product.count()) / pow_known);
        const std::size_t m = product.count();
        search.words = (m + 63) / 64;
        search.full.assign(search.words, 0);
        for (std::size_t i = 0; i < m; ++i) search.full[i / 64] |= std::uint64_t(1) << i % 64;
        for (Tree t : enumerate_trees(q)) {
            ++search.nodes;
            const Grove p = multiply(tree_grove(t), known);
            if (!is_subgrove(p, product)) continue;
            std::vector<std::uint64_t> mask(search.words, 0);
            for (Tree member : p.trees()) {
                const auto& ts = product.trees();
                const std::size_t pos = std::lower_bound(ts.begin(), ts.end(), member) - ts.begin();
                mask[pos / 64] |= std::uint64_t(1) << pos % 64;
            }
            search.candidates.push_back(t);
            search.masks.push_back(std::move(mask));
        }
        search.suffix_any.assign(search.candidates.size(), std::vector<std::uint64_t>(search.words, 0));
        for (std::size_t i = search.candidates.size(); i-- > 0;)
            for (std::size_t w = 0; w < search.words; ++w)
                search.suffix_any[i][w] =
                    search.masks[i][w] | (i + 1 < search.candidates.size() ? search.suffix_any[i + 1][w] : 0);
        std::vector<std::uint64_t> covered(search.words, 0);
        search.run(0, covered);
        out.quotients = std::move(search.solutions);
        out.complete = search.complete;
    }
    std::sort(out.quotients.begin(), out.quotients.end());
    return out;
}

namespace {

struct PairSearch {
    std::vector<std::pair<Grove, Grove>> pairs;
    bool complete = true;
};

// All (x, y) with x × y = g and both degrees >= 2: per divisor split, the
// side with the smaller grove space is enumerated outright and the other
// side recovered by division.
PairSearch two_factor_pairs(const Grove& g, const SearchLimits& limits) {
    PairSearch out;
    const int n = g.degree();
    for (int a : divisors(n)) {
        const int b = n / a;
        if (a < 2 || b < 2) continue;
        const int small = std::min(a, b);
        const auto space = grove_space(small);
        if (!space || *space > limits.enumerate_cap) {
            out.complete = false;  // neither side enumerable: split unexplored
            continue;
        }
        for (const Grove& c : all_groves(small)) {
            if (c.count() > g.count()) continue;  // products never shrink below a factor
            if (a <= b) {
                DivisionResult d = divide(c, g, Side::right, limits);
                out.complete = out.complete && d.complete;
                for (Grove& y : d.quotients) out.pairs.emplace_back(c, std::move(y));
            } else {
                DivisionResult d = divide(c, g, Side::left, limits);
                out.complete = out.complete && d.complete;
                for (Grove& x : d.quotients) out.pairs.emplace_back(std::move(x), c);
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

struct FactorEntry {
    std::set<std::vector<Grove>> sequences;  // prime sequences multiplying to the key
    bool complete = true;
};

const FactorEntry& complete_factorizations(const Grove& g, const SearchLimits& limits,
                                           std::map<Grove, FactorEntry>& memo) {
    if (auto it = memo.find(g); it != memo.end()) return it->second;

    FactorEntry e;
    if (is_tree(g)) {
        // Composite trees split as comb × inherited, and both of those shapes
        // fail the shape match themselves, so tree recursion stops here.
        if (auto f = shape_factor_tree(g.trees().front()))
            e.sequences.insert({tree_grove(f->comb), tree_grove(f->inherited)});
        else
            e.sequences.insert({g});
    } else {
        PairSearch ps = two_factor_pairs(g, limits);
        e.complete = ps.complete;
        if (ps.pairs.empty()) {
            e.sequences.insert({g});
        } else {
            for (const auto& [x, y] : ps.pairs) {
                const FactorEntry& ex = complete_factorizations(x, limits, memo);
                const FactorEntry& ey = complete_factorizations(y, limits, memo);
                e.complete = e.complete && ex.complete && ey.complete;
                for (const auto& sx : ex.sequences)
                    for (const auto& sy : ey.sequences) {
                        if (e.sequences.size() >= limits.max_factorizations) {
                            e.complete = false;
                            break;
                        }
                        std::vector<Grove> seq = sx;
                        seq.insert(seq.end(), sy.begin(), sy.end());
                        e.sequences.insert(std::move(seq));
                    }
            }
        }
    }
    return memo.emplace(g, std::move(e)).first->second;
}

bool is_self_sequence(const FactorEntry& e, const Grove& g) {
    return e.sequences.size() == 1 && e.sequences.begin()->size() == 1 &&
           e.sequences.begin()->front() == g;
}

}  // namespace

FactorReport factor_grove(const Grove& g, const SearchLimits& limits) {
    if (g.degree() == 0) throw DomainError("factor_grove: the degree-0 grove is the zero");
    FactorReport r{g, Primality::unknown, {}, true, limits};
    if (g.degree() == 1) {
        r.primality = Primality::unit;
        return r;
    }
    std::map<Grove, FactorEntry> memo;
    const FactorEntry& e = complete_factorizations(g, limits, memo);
    r.complete = e.complete;
    if (is_self_sequence(e, g)) {
        r.primality = e.complete ? Primality::prime : Primality::unknown;
    } else {
        r.primality = Primality::composite;
        r.factorizations.assign(e.sequences.begin(), e.sequences.end());
    }
    return r;
}

SumDecomposition exists_sum_decomposition(const Grove& g, const SearchLimits& limits) {
    SumDecomposition out;
    const int n = g.degree();
    if (n < 2) return out;  // both parts need degree >= 1

    std::uint64_t nodes = 0;
    for (int a = 1; a < n; ++a) {
        const int b = n - a;
        const int small = std::min(a, b);
        const auto space = grove_space(small);
        if (!space || *space > limits.enumerate_cap) {
            out.complete = false;
            continue;
        }
        // Addition distributes over unions in both arguments, so for a fixed
        // side the maximal candidate for the other side decides the split.
        for (const Grove& c : all_groves(small)) {
            if (++nodes > limits.node_budget) {
                out.complete = false;
                return out;
            }
            std::vector<Tree> other;
            if (a <= b) {
                for (Tree v : enumerate_trees(b))
                    if (is_subgrove(add(c, tree_grove(v)), g)) other.push_back(v);
            } else {
                for (Tree u : enumerate_trees(a))
                    if (is_subgrove(add(tree_grove(u), c), g)) other.push_back(u);
            }
            if (other.empty()) continue;
            const Grove rest = make_grove(std::move(other));
            if (a <= b) {
                if (add(c, rest) == g) {
                    out.parts = {c, rest};
                    return out;
                }
            } else {
                if (add(rest, c) == g) {
                    out.parts = {rest, c};
                    return out;
                }
            }
        }
    }
    return out;
}

namespace {

std::string format_sequence(const std::vector<Grove>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += " * ";
        out += format_grove(seq[i], Style::shorthand);
    }
    return out;
}

std::vector<int> integer_prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

UfdReport ufd_experiment(const UfdOptions& options) {
    if (options.max_degree < 1) throw DomainError("ufd_experiment: max_degree must be positive");
    UfdReport report;
    std::ostringstream text;
    text << "unique-factorization sweep, degrees 1.." << options.max_degree << ", seed "
         << options.seed << "\n";

    for (int n = 1; n <= options.max_degree; ++n) {
        UfdDegreeSummary s;
        s.degree = n;
        const auto trees = enumerate_trees(n);
        const auto space = grove_space(n);
        s.exhaustive = space && *space <= options.exhaustive_cap;

        const auto process = [&](const Grove& g) {
            const FactorReport r = factor_grove(g, options.limits);
            ++s.checked;
            if (!r.complete) ++s.bounded;
            if (r.factorizations.size() >= 2) {
                ++s.nonunique;
                std::string line = format_grove(g, Style::shorthand) + " factors " +
                                   std::to_string(r.factorizations.size()) + " ways";
                if (options.per_grove_records) {
                    for (std::size_t i = 0; i < r.factorizations.size() && i < 4; ++i)
                        line += (i ? "; " : ": ") + format_sequence(r.factorizations[i]);
                }
                if (report.counterexamples.size() < 100) report.counterexamples.push_back(line);
            } else {
                ++s.unique;
            }
        };

        if (s.exhaustive) {
            for (std::uint64_t mask = 1; mask >> trees.size() == 0; ++mask) {
                const Grove g = mask_grove(trees, mask);
                if (is_total(g)) continue;  // totals get the integer check below
                process(g);
            }
        } else {
            std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n));
            for (int k = 0; k < options.samples_per_degree; ++k) {
                std::vector<Tree> members;
                do {
                    members.clear();
                    for (Tree t : trees)
                        if (rng() & 1) members.push_back(t);
                } while (members.empty() || members.size() == trees.size());
                process(make_grove(std::move(members)));
            }
        }

        text << "degree " << n << ": " << (s.exhaustive ? "exhaustive" : "sampled")
             << ", checked=" << s.checked << ", unique=" << s.unique
             << ", nonunique=" << s.nonunique << ", bounded=" << s.bounded << "\n";
        report.degrees.push_back(s);
    }

    for (int n = 2; n <= options.max_degree; ++n) {
        std::vector<int> primes = integer_prime_factors(n);
        if (primes.size() < 2) {
            text << "total @" << n << ": prime degree\n";
            continue;
        }
        std::sort(primes.begin(), primes.end());
        do {
            Grove acc = total_grove(primes.front());
            std::string shown = "@" + std::to_string(primes.front());
            for (std::size_t i = 1; i < primes.size(); ++i) {
                acc = multiply(acc, total_grove(primes[i]));
                shown += " * @" + std::to_string(primes[i]);
            }
            const bool ok = acc == total_grove(n);
            report.totals_ok = report.totals_ok && ok;
            text << "total @" << n << " = " << shown << (ok ? ": ok" : ": MISMATCH") << "\n";
        } while (std::next_permutation(primes.begin(), primes.end()));
    }

    if (report.counterexamples.empty()) {
        text << "counterexamples: none\n";
    } else {
        text << "counterexamples:\n";
        for (const auto& line : report.counterexamples) text << "  " << line << "\n";
    }
    report.text = text.str();
    return report;
}

AdditiveReport additive_experiment(const AdditiveOptions& options) {
    if (options.max_degree < 1)
        throw DomainError("additive_experiment: max_degree must be positive");
    AdditiveReport report;
    std::ostringstream text;
    text << "sum-decomposition sweep, degrees 1.." << options.max_degree << ", seed "
         << options.seed << "\n";

    for (int n = 1; n <= options.max_degree; ++n) {
        AdditiveDegreeSummary s;
        s.degree = n;
        const std::uint64_t c = catalan_u64(n);
        s.exhaustive = c <= options.exhaustive_cap;

        const auto process = [&](Tree t) {
            const SumDecomposition d = exists_sum_decomposition(tree_grove(t), options.limits);
            ++s.checked;
            if (!d.complete) ++s.bounded;
            if (d.parts) {
                ++s.decomposable;
                if (report.counterexamples.size() < 100) {
                    std::string line = format_tree(t, Style::shorthand) + " = " +
                                       format_grove(d.parts->first, Style::shorthand) + " + " +
                                       format_grove(d.parts->second, Style::shorthand);
                    if (options.per_tree_records) report.counterexamples.push_back(line);
                }
            }
        };

        if (s.exhaustive) {
            for (Tree t : enumerate_trees(n)) process(t);
        } else {
            std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n));
            std::uniform_int_distribution<std::uint64_t> pick(0, c - 1);
            for (int k = 0; k < options.samples_per_degree; ++k)
                process(unrank({n, pick(rng)}));
        }

        std::string total_note = "not split";
        if (n >= 2) {
            const SumDecomposition d = exists_sum_decomposition(total_grove(n), options.limits);
            s.total_decomposes =
                d.parts && is_total(d.parts->first) && is_total(d.parts->second);
            if (d.parts)
                total_note = "@" + std::to_string(n) + " = " +
                             format_grove(d.parts->first, Style::shorthand) + " + " +
                             format_grove(d.parts->second, Style::shorthand);
        }

        text << "degree " << n << ": " << (s.exhaustive ? "exhaustive" : "sampled")
             << ", checked=" << s.checked << ", decomposable=" << s.decomposable
             << ", bounded=" << s.bounded;
        if (n >= 2) text << ", total " << total_note;
        text << "\n";
        report.degrees.push_back(s);
    }

    if (report.counterexamples.empty()) {
        text << "counterexamples: none\n";
    } else {
        text << "counterexamples:\n";
        for (const auto& line : report.counterexamples) text << "  " << line << "\n";
    }
    report.text = text.str();
    return report;
}

}  // namespace arbor
