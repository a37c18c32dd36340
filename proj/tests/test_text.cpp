#include <cstddef>
#include <string>

#include "doctest.h"

#include "arbor/errors.hpp"
#include "arbor/grove.hpp"
#include "arbor/text.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {
const Tree u = graft(leaf(), leaf());
}

TEST_CASE("canonical and shorthand tree formatting") {
    CHECK(format_tree(leaf()) == ".");
    CHECK(format_tree(u) == "(. .)");
    CHECK(format_tree(primitive(Side::left, 2)) == "((. .) .)");
    CHECK(format_tree(primitive(Side::right, 2)) == "(. (. .))");
    CHECK(format_tree(graft(u, u)) == "((. .) (. .))");

    CHECK(format_tree(leaf(), Style::shorthand) == ".");
    CHECK(format_tree(u, Style::shorthand) == "L1");
    CHECK(format_tree(primitive(Side::left, 3), Style::shorthand) == "L3");
    CHECK(format_tree(primitive(Side::right, 3), Style::shorthand) == "R3");
    // Not itself a comb: keeps the parenthesized form, children abbreviated.
    CHECK(format_tree(graft(u, u), Style::shorthand) == "(L1 L1)");
    CHECK(format_tree(graft(primitive(Side::right, 2), u), Style::shorthand) == "(R2 L1)");
}

TEST_CASE("grove formatting") {
    CHECK(format_grove(tree_grove(u)) == "(. .)");
    CHECK(format_grove(total_grove(2)) == "{((. .) .), (. (. .))}");
    CHECK(format_grove(total_grove(2), Style::shorthand) == "@2");
    CHECK(format_grove(make_grove({primitive(Side::left, 3), primitive(Side::right, 3)}),
                       Style::shorthand) == "{L3, R3}");
}

TEST_CASE("parsing accepts both styles and ignores whitespace") {
    CHECK(parse_tree(".") == leaf());
    CHECK(parse_tree("(. .)") == u);
    CHECK(parse_tree(" ( .   . ) ") == u);
    CHECK(parse_tree("((. .) .)") == primitive(Side::left, 2));
    CHECK(parse_tree("L2") == primitive(Side::left, 2));
    CHECK(parse_tree("R4") == primitive(Side::right, 4));
    CHECK(parse_tree("(L2 R2)") == graft(primitive(Side::left, 2), primitive(Side::right, 2)));

    CHECK(parse_grove("@0") == total_grove(0));
    CHECK(parse_grove("@3") == total_grove(3));
    CHECK(parse_grove("{L2, R2}") == total_grove(2));
    CHECK(parse_grove("{ L2 ,R2 , L2 }") == total_grove(2));
    CHECK(parse_grove("L2") == tree_grove(primitive(Side::left, 2)));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    CHECK_THROWS_AS(parse_tree("(. .) junk"), ParseError);
    CHECK_THROWS_AS(parse_tree("(. ."), ParseError);
    CHECK_THROWS_AS(parse_tree("(.)"), ParseError);
    CHECK_THROWS_AS(parse_tree("@2"), ParseError);
    CHECK_THROWS_AS(parse_grove("{}"), ParseError);
    CHECK_THROWS_AS(parse_grove("{L1, L2}"), ParseError);
    CHECK_THROWS_AS(parse_grove("@1000001"), ParseError);

    try {
        parse_tree("(. x)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
        CHECK(std::string(e.what()).find("(at offset 3)") != std::string::npos);
    }
}

TEST_CASE("ascii pictures") {
    CHECK(format_tree(u, Style::ascii) == "| |\n V\n |");
    CHECK(format_tree(primitive(Side::left, 2), Style::ascii) ==
          "| |  |\n V   |\n  \\ /\n   V\n   |");
    CHECK(format_tree(primitive(Side::right, 2), Style::ascii) ==
          "|  | |\n|   V\n \\ /\n  V\n  |");
    const std::string both = format_grove(total_grove(2), Style::ascii);
    CHECK(both == format_tree(primitive(Side::left, 2), Style::ascii) + "\n\n" +
                      format_tree(primitive(Side::right, 2), Style::ascii));
}

TEST_CASE("formatting and parsing round trip") {
    for (int n = 0; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            CHECK(parse_tree(format_tree(t)) == t);
            CHECK(parse_tree(format_tree(t, Style::shorthand)) == t);
        }
    for (int n = 0; n <= 7; ++n) CHECK(parse_grove("@" + std::to_string(n)) == total_grove(n));
    const Grove g = make_grove({primitive(Side::left, 4), graft(u, primitive(Side::left, 2)),
                                primitive(Side::right, 4)});
    CHECK(parse_grove(format_grove(g)) == g);
    CHECK(parse_grove(format_grove(g, Style::shorthand)) == g);
}
