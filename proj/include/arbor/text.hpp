#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "arbor/grove.hpp"
#include "arbor/tree.hpp"

namespace arbor {

// canonical:  "." leaves, "(left right)" vertices, groves as "{t, t}" in
//             canonical order, single-tree groves bare.
// shorthand:  canonical plus "L<k>"/"R<k>" for combs and "@n" for total groves.
// ascii:      monospace picture, leaves up, root trunk at the bottom.
enum class Style { canonical, shorthand, ascii };

std::string format_tree(Tree t, Style style = Style::canonical);
std::string format_grove(const Grove& g, Style style = Style::canonical);

// Parsers accept canonical and shorthand forms interchangeably; whitespace
// between tokens is ignored. Errors carry the byte offset.
Tree parse_tree(std::string_view text);
Grove parse_grove(std::string_view text);

// Cursor-style variants for embedding in a larger grammar. On success `pos`
// is advanced past the value; on failure it is unspecified and ParseError
// is thrown.
Tree parse_tree_at(std::string_view text, std::size_t& pos);
Grove parse_grove_at(std::string_view text, std::size_t& pos);

}  // namespace arbor
