#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

using BigInt = boost::multiprecision::cpp_int;

// Number of planar binary trees with n internal vertices (Catalan number).
// The fixed-width variant is exact for n <= 36 and throws beyond.
std::uint64_t catalan_u64(int n);
BigInt catalan(int n);

// Number of groves of degree n: nonempty tree sets, 2^catalan(n) - 1.
BigInt grove_count(int n);

// Positive divisors of n in ascending order.
std::vector<int> divisors(int n);

// Plain text table "n #trees #groves" for degrees 1..max_degree.
std::string render_count_table(int max_degree);

}  // namespace arbor
