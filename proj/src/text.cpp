#include "arbor/text.hpp"

#include <string>
#include <vector>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

bool is_comb(Tree t, Side side) {
    for (Tree cur = t; !cur.is_leaf(); cur = side == Side::left ? cur.left() : cur.right())
        if (side == Side::left ? !cur.right().is_leaf() : !cur.left().is_leaf()) return false;
    return true;
}

void format_plain(Tree t, bool shorthand, std::string& out) {
    if (t.is_leaf()) {
        out += '.';
        return;
    }
    if (shorthand) {
        if (is_comb(t, Side::left)) {
            out += 'L' + std::to_string(t.degree());
            return;
        }
        if (is_comb(t, Side::right)) {
            out += 'R' + std::to_string(t.degree());
            return;
        }
    }
    out += '(';
    format_plain(t.left(), shorthand, out);
    out += ' ';
    format_plain(t.right(), shorthand, out);
    out += ')';
}

// Monospace picture block: leaves as "|" at the top, every vertex a "V"
// reached by "\" and "/" diagonals, root centred in the bottom line.
// All lines are padded to a common width.
struct Block {
    std::vector<std::string> lines;
    std::size_t width = 0;
    std::size_t root = 0;  // root column in the last line
};

Block render_block(Tree t) {
    if (t.is_leaf()) return {{"|"}, 1, 0};

    Block l = render_block(t.left());
    Block r = render_block(t.right());
    while (l.lines.size() < r.lines.size())
        l.lines.push_back(std::string(l.root, ' ') + '|' + std::string(l.width - l.root - 1, ' '));
    while (r.lines.size() < l.lines.size())
        r.lines.push_back(std::string(r.root, ' ') + '|' + std::string(r.width - r.root - 1, ' '));

    const std::size_t a = l.root;
    std::size_t sep = 1;
    if ((l.width + sep + r.root - a) % 2 != 0) sep = 2;  // keep the joint centred
    const std::size_t b = l.width + sep + r.root;

    Block out;
    out.width = l.width + sep + r.width;
    for (std::size_t i = 0; i < l.lines.size(); ++i)
        out.lines.push_back(l.lines[i] + std::string(sep, ' ') + r.lines[i]);

    std::size_t left = a;
    std::size_t right = b;
    while (right - left > 2) {
        std::string row(out.width, ' ');
        row[left + 1] = '\\';
        row[right - 1] = '/';
        out.lines.push_back(std::move(row));
        ++left;
        --right;
    }
    std::string row(out.width, ' ');
    row[left + 1] = 'V';
    out.lines.push_back(std::move(row));
    out.root = left + 1;
    return out;
}

std::string render_ascii(Tree t) {
    Block b = render_block(t);
    b.lines.push_back(std::string(b.root, ' ') + '|');
    std::string out;
    for (std::size_t i = 0; i < b.lines.size(); ++i) {
        std::string& line = b.lines[i];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        if (i) out += '\n';
        out += line;
    }
    return out;
}

void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
        ++pos;
}

int parse_uint(std::string_view text, std::size_t& pos, const char* what) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw ParseError(std::string("expected ") + what, pos);
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError(std::string(what) + " is too large", pos);
        ++pos;
    }
    return static_cast<int>(value);
}

}  // namespace

std::string format_tree(Tree t, Style style) {
    if (style == Style::ascii) return render_ascii(t);
    std::string out;
    format_plain(t, style == Style::shorthand, out);
    return out;
}

std::string format_grove(const Grove& g, Style style) {
    if (g.count() == 1) return format_tree(g.trees().front(), style);
    if (style == Style::ascii) {
        std::string out;
        for (std::size_t i = 0; i < g.count(); ++i) {
            if (i) out += "\n\n";
            out += render_ascii(g.trees()[i]);
        }
        return out;
    }
    if (style == Style::shorthand && is_total(g)) return '@' + std::to_string(g.degree());
    std::string out = "{";
    for (std::size_t i = 0; i < g.count(); ++i) {
        if (i) out += ", ";
        format_plain(g.trees()[i], style == Style::shorthand, out);
    }
    out += '}';
    return out;
}

Tree parse_tree_at(std::string_view text, std::size_t& pos) {
    skip_ws(text, pos);
    if (pos >= text.size()) throw ParseError("expected a tree", pos);
    const char c = text[pos];
    if (c == '.') {
        ++pos;
        return leaf();
    }
    if (c == '(') {
        ++pos;
        const Tree l = parse_tree_at(text, pos);
        const Tree r = parse_tree_at(text, pos);
        skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        return graft(l, r);
    }
    if (c == 'L' || c == 'R') {
        ++pos;
        const int k = parse_uint(text, pos, "a comb degree");
        return primitive(c == 'L' ? Side::left : Side::right, k);
    }
    throw ParseError("expected '.', '(', 'L<k>', or 'R<k>'", pos);
}

Grove parse_grove_at(std::string_view text, std::size_t& pos) {
    skip_ws(text, pos);
    if (pos >= text.size()) throw ParseError("expected a grove", pos);
    if (text[pos] == '@') {
        ++pos;
        const int n = parse_uint(text, pos, "a degree");
        return total_grove(n);
    }
    if (text[pos] == '{') {
        const std::size_t start = pos;
        ++pos;
        std::vector<Tree> members{parse_tree_at(text, pos)};
        skip_ws(text, pos);
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            members.push_back(parse_tree_at(text, pos));
            skip_ws(text, pos);
        }
        if (pos >= text.size() || text[pos] != '}') throw ParseError("expected ',' or '}'", pos);
        ++pos;
        try {
            return make_grove(std::move(members));
        } catch (const DomainError&) {
            throw ParseError("grove members must share one degree", start);
        }
    }
    return tree_grove(parse_tree_at(text, pos));
}

namespace {

template <typename Parse>
auto parse_whole(std::string_view text, Parse parse) {
    std::size_t pos = 0;
    auto value = parse(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("unexpected trailing text", pos);
    return value;
}

}  // namespace

Tree parse_tree(std::string_view text) { return parse_whole(text, parse_tree_at); }

Grove parse_grove(std::string_view text) { return parse_whole(text, parse_grove_at); }

}  // namespace arbor
