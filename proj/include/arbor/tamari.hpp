#pragma once

#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

// Trees reachable from t by one left-to-right rotation (a∨b)∨c -> a∨(b∨c)
// applied at a single vertex. Sorted canonically.
std::vector<Tree> covers(Tree t);

// Trees reachable by one right-to-left rotation; the covered elements.
std::vector<Tree> covers_inverse(Tree t);

// Rotation order: reflexive-transitive closure of covers. Both arguments
// must have equal degree. Decided in linear time by componentwise
// comparison of the right-subtree-size vectors taken in infix order.
bool tamari_leq(Tree x, Tree y);

// All z with lo <= z <= hi, canonically sorted; empty when lo is not below hi.
std::vector<Tree> tamari_interval(Tree lo, Tree hi);

}  // namespace arbor
