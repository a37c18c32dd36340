#include "arbor/counting.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

// c_0 = 1, c_k = c_{k-1} * 2(2k-1) / (k+1); the division is exact.
BigInt catalan_big(int n) {
    BigInt c = 1;
    for (int k = 1; k <= n; ++k) {
        c *= 2 * (2 * k - 1);
        c /= k + 1;
    }
    return c;
}

constexpr int kU64Limit = 36;  // catalan(37) does not fit in 64 bits

const std::array<std::uint64_t, kU64Limit + 1>& u64_table() {
    static const auto table = [] {
        std::array<std::uint64_t, kU64Limit + 1> t{};
        for (int n = 0; n <= kU64Limit; ++n) t[n] = catalan_big(n).convert_to<std::uint64_t>();
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t catalan_u64(int n) {
    if (n < 0) throw DomainError("catalan: negative degree");
    if (n > kU64Limit) throw ResourceError("catalan: value exceeds 64 bits");
    return u64_table()[n];
}

BigInt catalan(int n) {
    if (n < 0) throw DomainError("catalan: negative degree");
    return catalan_big(n);
}

BigInt grove_count(int n) {
    const BigInt c = catalan(n);
    if (c > 10'000'000) throw ResourceError("grove_count: value too large to materialize");
    return (BigInt(1) << c.convert_to<unsigned>()) - 1;
}

std::vector<int> divisors(int n) {
    if (n < 1) throw DomainError("divisors: n must be positive");
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::string render_count_table(int max_degree) {
    if (max_degree < 1) throw DomainError("render_count_table: max degree must be positive");
    std::ostringstream os;
    os << "n #trees #groves\n";
    for (int n = 1; n <= max_degree; ++n)
        os << n << ' ' << catalan(n) << ' ' << grove_count(n) << '\n';
    return os.str();
}

}  // namespace arbor
