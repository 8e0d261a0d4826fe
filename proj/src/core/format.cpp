#include "core/format.hpp"

#include <algorithm>
#include <map>

namespace fintopo::format {

namespace {

bool id_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
}

// Cursor over one logical line, tracking 1-based columns for diagnostics.
struct LineCursor {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(line, static_cast<int>(pos) + 1, msg);
    }
    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string_view identifier() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && id_char(text[pos])) ++pos;
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }
};

struct Line {
    std::string_view text;
    int number;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t last = line.find_last_not_of(" \t\r");
        line = last == std::string_view::npos ? std::string_view{} : line.substr(0, last + 1);
        if (!line.empty()) lines.push_back({line, number});
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

int lookup(LineCursor& c, const std::vector<std::string>& labels, std::size_t at,
           std::string_view id) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == id) return static_cast<int>(i);
    throw parse_error(c.line, static_cast<int>(at) + 1,
                      "unknown point '" + std::string(id) + "'");
}

PointSet parse_braced_set(LineCursor& c, const std::vector<std::string>& labels) {
    c.skip_ws();
    if (!c.eat('{')) c.fail("expected '{'");
    PointSet s;
    for (;;) {
        c.skip_ws();
        if (c.eat('}')) break;
        if (c.peek() == '\0') c.fail("unterminated set, expected '}'");
        const std::size_t at = c.pos;
        const auto id = c.identifier();
        s |= PointSet::single(lookup(c, labels, at, id));
    }
    return s;
}

}  // namespace

Space parse_space(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw parse_error(1, 1, "empty input, expected a points: line");

    LineCursor head{lines[0].text, lines[0].number};
    if (head.identifier() != "points" || !head.eat(':'))
        head.fail("expected 'points:'");
    std::vector<std::string> labels;
    while (!head.done()) {
        const std::size_t at = head.pos;
        const auto id = head.identifier();
        for (const auto& seen : labels)
            if (seen == id)
                throw parse_error(head.line, static_cast<int>(at) + 1,
                                  "duplicate point '" + std::string(id) + "'");
        labels.emplace_back(id);
    }
    if (labels.empty()) head.fail("expected at least one point");
    if (labels.size() > PointSet::max_points)
        throw parse_error(head.line, 1, "more than 64 points");
    const int n = static_cast<int>(labels.size());

    if (lines.size() < 2)
        throw parse_error(lines[0].number, 1,
                          "expected an opens:, minbase: or order: line");
    if (lines.size() > 2)
        throw parse_error(lines[2].number, 1, "unexpected extra content");

    LineCursor body{lines[1].text, lines[1].number};
    const auto kind = body.identifier();
    if (!body.eat(':')) body.fail("expected ':'");

    if (kind == "opens") {
        std::vector<PointSet> opens;
        while (!body.done()) opens.push_back(parse_braced_set(body, labels));
        return Space::from_opens(n, std::move(opens), std::move(labels));
    }
    if (kind == "minbase") {
        std::vector<PointSet> nbhd(static_cast<std::size_t>(n));
        std::vector<bool> assigned(static_cast<std::size_t>(n), false);
        while (!body.done()) {
            const std::size_t at = body.pos;
            const auto id = body.identifier();
            const int p = lookup(body, labels, at, id);
            if (!body.eat(':')) body.fail("expected ':' after point");
            if (assigned[static_cast<std::size_t>(p)])
                throw parse_error(body.line, static_cast<int>(at) + 1,
                                  "duplicate assignment for '" + std::string(id) + "'");
            assigned[static_cast<std::size_t>(p)] = true;
            nbhd[static_cast<std::size_t>(p)] = parse_braced_set(body, labels);
        }
        for (int p = 0; p < n; ++p)
            if (!assigned[static_cast<std::size_t>(p)])
                throw parse_error(body.line, 1,
                                  "point '" + labels[static_cast<std::size_t>(p)] +
                                      "' has no neighborhood assignment");
        return Space::from_minbase(n, nbhd, std::move(labels));
    }
    if (kind == "order") {
        std::vector<std::pair<int, int>> leq;
        while (!body.done()) {
            std::size_t at = body.pos;
            const auto u = body.identifier();
            const int up = lookup(body, labels, at, u);
            body.skip_ws();
            if (!body.eat('<')) body.fail("expected '<' between points");
            at = body.pos;
            const auto v = body.identifier();
            leq.emplace_back(up, lookup(body, labels, at, v));
        }
        return Space::from_preorder(Preorder::from_leq_pairs(n, leq), std::move(labels));
    }
    body.fail("expected opens:, minbase: or order:");
}

std::string set_to_string(const Space& sp, PointSet s) {
    std::string out = "{";
    bool first = true;
    for (int p : points(s)) {
        if (!first) out += ' ';
        out += sp.label(p);
        first = false;
    }
    return out + "}";
}

std::string format_space_opens(const Space& sp) {
    std::string out = "points:";
    for (const auto& l : sp.labels()) out += " " + l;
    out += "\nopens:";
    for (PointSet g : sp.opens()) out += " " + set_to_string(sp, g);
    out += "\n";
    return out;
}

std::string format_space_minbase(const Space& sp) {
    std::string out = "points:";
    for (const auto& l : sp.labels()) out += " " + l;
    out += "\nminbase:";
    for (int x = 0; x < sp.size(); ++x)
        out += " " + sp.label(x) + ":" + set_to_string(sp, sp.min_nbhd(x));
    out += "\n";
    return out;
}

PointSet parse_point_set(const Space& sp, std::string_view text) {
    LineCursor c{text, 1};
    const PointSet s = parse_braced_set(c, sp.labels());
    if (!c.done()) c.fail("unexpected content after set");
    return s;
}

namespace {

template <typename ParseValue>
void parse_assignments(const Space& src, std::string_view text, ParseValue&& value) {
    LineCursor c{text, 1};
    std::vector<bool> assigned(static_cast<std::size_t>(src.size()), false);
    while (!c.done()) {
        const std::size_t at = c.pos;
        const auto id = c.identifier();
        const int x = lookup(c, src.labels(), at, id);
        if (!c.eat(':')) c.fail("expected ':' after point");
        if (assigned[static_cast<std::size_t>(x)])
            throw parse_error(1, static_cast<int>(at) + 1,
                              "duplicate assignment for '" + std::string(id) + "'");
        assigned[static_cast<std::size_t>(x)] = true;
        value(c, x);
    }
    for (int x = 0; x < src.size(); ++x)
        if (!assigned[static_cast<std::size_t>(x)])
            throw parse_error(1, 1, "point '" + src.label(x) + "' has no image");
}

}  // namespace

PointFunction parse_point_map(const Space& src, const Space& dst, std::string_view text) {
    std::vector<int> image(static_cast<std::size_t>(src.size()), 0);
    parse_assignments(src, text, [&](LineCursor& c, int x) {
        const std::size_t at = c.pos;
        const auto id = c.identifier();
        image[static_cast<std::size_t>(x)] = lookup(c, dst.labels(), at, id);
    });
    return {src, dst, std::move(image)};
}

Multifunction parse_multi_map(const Space& src, const Space& dst, std::string_view text) {
    std::vector<PointSet> image(static_cast<std::size_t>(src.size()));
    parse_assignments(src, text, [&](LineCursor& c, int x) {
        image[static_cast<std::size_t>(x)] = parse_braced_set(c, dst.labels());
    });
    return {src, dst, std::move(image)};
}

std::string hasse_dot(const Space& sp) {
    // group neighborhood-equivalent points; class order by smallest member
    std::vector<int> cls(static_cast<std::size_t>(sp.size()), -1);
    std::vector<PointSet> members;
    for (int x = 0; x < sp.size(); ++x) {
        for (std::size_t c = 0; c < members.size(); ++c)
            if (sp.min_nbhd(members[c].lowest()) == sp.min_nbhd(x)) {
                cls[static_cast<std::size_t>(x)] = static_cast<int>(c);
                members[c] |= PointSet::single(x);
                break;
            }
        if (cls[static_cast<std::size_t>(x)] < 0) {
            cls[static_cast<std::size_t>(x)] = static_cast<int>(members.size());
            members.push_back(PointSet::single(x));
        }
    }
    const int k = static_cast<int>(members.size());
    auto node_name = [&](int c) {
        std::string name;
        for (int p : points(members[static_cast<std::size_t>(c)])) {
            if (!name.empty()) name += ',';
            name += sp.label(p);
        }
        return name;
    };
    auto strictly_below = [&](int c, int d) {
        const int rc = members[static_cast<std::size_t>(c)].lowest();
        const int rd = members[static_cast<std::size_t>(d)].lowest();
        return c != d && sp.leq(rc, rd);
    };

    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (int c = 0; c < k; ++c) out += "  \"" + node_name(c) + "\";\n";
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            if (!strictly_below(c, d)) continue;
            bool covering = true;
            for (int e = 0; e < k && covering; ++e)
                if (strictly_below(c, e) && strictly_below(e, d)) covering = false;
            if (covering) out += "  \"" + node_name(c) + "\" -> \"" + node_name(d) + "\";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace fintopo::format
