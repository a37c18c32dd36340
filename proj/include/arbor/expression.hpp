#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "arbor/grove.hpp"

namespace arbor {

// Parsed calculator input.
//   expr := term ("+" term)*
//   term := atom ("*" atom)*
//   atom := tree | grove | "@"n | "(" expr ")"
// "*" binds tighter than "+", both associate left. A "(" opens a tree
// literal when a balanced child followed by a second child and ")" can be
// read from it; otherwise it groups.
struct Expression {
    enum class Kind { value, add, multiply };

    Kind kind = Kind::value;
    std::optional<Grove> value;  // set when kind == value
    std::unique_ptr<Expression> lhs;
    std::unique_ptr<Expression> rhs;
};

Expression parse_expression(std::string_view text);

Grove evaluate(const Expression& e);

}  // namespace arbor
