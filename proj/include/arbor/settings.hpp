#pragma once

#include <cstddef>

namespace arbor {

// Process-wide resource caps. Operations that could blow up (enumeration,
// sums and products of large degree) consult these and throw ResourceError
// instead of silently truncating. Adjust before starting heavy work; the
// struct itself is not synchronized.
struct Settings {
    int max_degree = 12;
    std::size_t max_result_trees = 1'000'000;
};

Settings& settings();

}  // namespace arbor
