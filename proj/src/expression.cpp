#include "arbor/expression.hpp"

#include <cctype>
#include <cstddef>
#include <optional>
#include <utility>

#include "arbor/arithmetic.hpp"
#include "arbor/errors.hpp"
#include "arbor/text.hpp"

namespace arbor {
namespace {

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Expression value_node(Grove g) {
    Expression e;
    e.kind = Expression::Kind::value;
    e.value = std::move(g);
    return e;
}

Expression combine(Expression::Kind kind, Expression lhs, Expression rhs) {
    Expression e;
    e.kind = kind;
    e.lhs = std::make_unique<Expression>(std::move(lhs));
    e.rhs = std::make_unique<Expression>(std::move(rhs));
    return e;
}

Expression parse_expr(std::string_view text, std::size_t& pos);

Expression parse_atom(std::string_view text, std::size_t& pos) {
    skip_space(text, pos);
    if (pos >= text.size()) throw ParseError("expected a value", pos);
    if (text[pos] == '(') {
        // A '(' is a tree literal exactly when a whole tree reads from it;
        // otherwise it groups a subexpression.
        std::size_t probe = pos;
        std::optional<Tree> literal;
        try {
            literal = parse_tree_at(text, probe);
        } catch (const ParseError&) {
        }
        if (literal) {
            pos = probe;
            return value_node(tree_grove(*literal));
        }
        ++pos;
        Expression inner = parse_expr(text, pos);
        skip_space(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        return inner;
    }
    return value_node(parse_grove_at(text, pos));
}

Expression parse_term(std::string_view text, std::size_t& pos) {
    Expression e = parse_atom(text, pos);
    while (true) {
        skip_space(text, pos);
        if (pos == text.size() || text[pos] != '*') return e;
        ++pos;
        e = combine(Expression::Kind::multiply, std::move(e), parse_atom(text, pos));
    }
}

Expression parse_expr(std::string_view text, std::size_t& pos) {
    Expression e = parse_term(text, pos);
    while (true) {
        skip_space(text, pos);
        if (pos == text.size() || text[pos] != '+') return e;
        ++pos;
        e = combine(Expression::Kind::add, std::move(e), parse_term(text, pos));
    }
}

}  // namespace

Expression parse_expression(std::string_view text) {
    std::size_t pos = 0;
    Expression e = parse_expr(text, pos);
    skip_space(text, pos);
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    return e;
}

Grove evaluate(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::value:
            return *e.value;
        case Expression::Kind::add:
            return add(evaluate(*e.lhs), evaluate(*e.rhs));
        case Expression::Kind::multiply:
            return multiply(evaluate(*e.lhs), evaluate(*e.rhs));
    }
    throw DomainError("expression node has no kind");
}

}  // namespace arbor
