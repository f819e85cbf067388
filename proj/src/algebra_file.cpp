#include "homdim/algebra_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace homdim {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t column() const { return pos_ + 1; }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void advance() { ++pos_; }

    std::string_view name(const char* what)
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail(start, std::string("expected ") + what);
        return text_.substr(start, pos_ - start);
    }

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw SyntaxError(line_, at + 1, msg); }
    [[noreturn]] void fail(const std::string& msg) const { fail(pos_, msg); }

    // Position of the next token.
    std::size_t pos()
    {
        skip_space();
        return pos_;
    }
    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Parser {
    Presentation p;
    bool field_seen = false;
    bool relations_seen = false;
    std::map<std::string, std::size_t, std::less<>> vertex_index;
    std::map<std::string, std::size_t, std::less<>> arrow_index;

    std::size_t vertex(LineCursor& cur)
    {
        const std::size_t at = cur.pos();
        const std::string_view n = cur.name("a vertex name");
        auto it = vertex_index.find(n);
        if (it == vertex_index.end()) cur.fail(at, "unknown vertex '" + std::string(n) + "'");
        return it->second;
    }

    void field(LineCursor& cur)
    {
        if (field_seen) cur.fail("field declared twice");
        if (relations_seen) cur.fail("field must be declared before any relation");
        field_seen = true;
        const std::size_t at = cur.pos();
        const std::string_view kind = cur.name("Q or F");
        if (kind == "Q") {
            p.field = FieldSpec::rationals();
        } else if (kind == "F") {
            const std::size_t pat = cur.pos();
            const std::string_view num = cur.name("a prime");
            if (!all_digits(num) || num.size() > 10) cur.fail(pat, "expected a prime");
            const unsigned long long v = std::stoull(std::string(num));
            if (!is_prime(v) || v >= (1ULL << 31)) cur.fail(pat, "characteristic must be a prime below 2^31");
            p.field = FieldSpec::prime(v);
        } else {
            cur.fail(at, "expected Q or F");
        }
    }

    void vertices(LineCursor& cur)
    {
        if (cur.at_end()) cur.fail("expected at least one vertex name");
        while (!cur.at_end()) {
            const std::size_t at = cur.pos();
            const std::string n(cur.name("a vertex name"));
            if (vertex_index.count(n)) cur.fail(at, "duplicate vertex '" + n + "'");
            vertex_index.emplace(n, p.quiver.vertices.size());
            p.quiver.vertices.push_back(n);
        }
    }

    void arrow(LineCursor& cur)
    {
        const std::size_t at = cur.pos();
        const std::string n(cur.name("an arrow name"));
        if (arrow_index.count(n)) cur.fail(at, "duplicate arrow '" + n + "'");
        const std::size_t s = vertex(cur);
        const std::size_t t = vertex(cur);
        arrow_index.emplace(n, p.quiver.arrows.size());
        p.quiver.arrows.push_back({n, s, t});
    }

    // [int[/int] *] name*name*...
    RelationTerm term(LineCursor& cur, bool negative)
    {
        mpz_class num = 1;
        mpz_class den = 1;
        std::size_t start = cur.pos();
        std::string_view first = cur.name("a coefficient or arrow name");
        if (all_digits(first) && (cur.peek() == '/' || cur.peek() == '*')) {
            num = mpz_class(std::string(first));
            if (cur.peek() == '/') {
                cur.advance();
                const std::size_t dat = cur.pos();
                const std::string_view d = cur.name("a denominator");
                if (!all_digits(d)) cur.fail(dat, "denominator must be a positive integer");
                den = mpz_class(std::string(d));
                if (den == 0) cur.fail(dat, "zero denominator");
            }
            if (cur.peek() != '*') cur.fail("expected '*' after the coefficient");
            cur.advance();
            start = cur.pos();
            first = cur.name("an arrow name");
        }
        if (negative) num = -num;

        RelationTerm t;
        try {
            t.coefficient = p.field.from_fraction(num, den);
        } catch (const std::domain_error&) {
            cur.fail(start, "coefficient denominator vanishes in " + p.field.name());
        }
        std::vector<std::pair<std::size_t, std::string_view>> names{{start, first}};
        while (cur.peek() == '*') {
            cur.advance();
            cur.skip_space();
            const std::size_t at = cur.pos();
            names.emplace_back(at, cur.name("an arrow name"));
        }
        for (const auto& [at, n] : names) {
            auto it = arrow_index.find(n);
            if (it == arrow_index.end()) throw UnknownArrow(cur.line(), at + 1, "unknown arrow '" + std::string(n) + "'");
            t.path.arrows.push_back(it->second);
        }
        const auto& arrows = p.quiver.arrows;
        for (std::size_t i = 0; i + 1 < t.path.arrows.size(); ++i) {
            if (arrows[t.path.arrows[i]].target != arrows[t.path.arrows[i + 1]].source) {
                throw NonComposablePath(cur.line(), names[i + 1].first + 1,
                                        "arrow '" + std::string(names[i + 1].second) + "' does not start where '" +
                                            std::string(names[i].second) + "' ends");
            }
        }
        if (t.path.length() < 2) cur.fail(start, "relation paths must have length at least 2");
        t.path.source = arrows[t.path.arrows.front()].source;
        t.path.target = arrows[t.path.arrows.back()].target;
        return t;
    }

    void relation(LineCursor& cur)
    {
        relations_seen = true;
        Relation r;
        bool negative = false;
        if (cur.peek() == '-' || cur.peek() == '+') {
            negative = cur.peek() == '-';
            cur.advance();
        }
        const std::size_t first_at = cur.pos();
        r.terms.push_back(term(cur, negative));
        while (!cur.at_end()) {
            const char c = cur.peek();
            if (c != '+' && c != '-') cur.fail("expected '+' or '-' between terms");
            cur.advance();
            const std::size_t at = cur.pos();
            r.terms.push_back(term(cur, c == '-'));
            const Path& a = r.terms.front().path;
            const Path& b = r.terms.back().path;
            if (a.source != b.source || a.target != b.target) cur.fail(at, "terms are not parallel");
            if (a.length() != b.length()) cur.fail(at, "terms have different lengths");
        }
        if (std::all_of(r.terms.begin(), r.terms.end(), [](const RelationTerm& t) { return t.coefficient.is_zero(); })) {
            cur.fail(first_at, "relation has no nonzero coefficient");
        }
        p.relations.push_back(std::move(r));
    }

    void cap(LineCursor& cur)
    {
        const std::size_t at = cur.pos();
        const std::string_view n = cur.name("a degree cap");
        if (!all_digits(n) || n.size() > 6) cur.fail(at, "degree cap must be an integer");
        const std::size_t v = std::stoul(std::string(n));
        if (v < 2) cur.fail(at, "degree cap must be at least 2");
        p.degree_cap = v;
    }

    void line(std::string_view text, std::size_t number)
    {
        LineCursor cur(text, number);
        if (cur.at_end()) return;
        const std::size_t at = cur.pos();
        const std::string_view kw = cur.name("a directive");
        if (kw == "field") {
            field(cur);
        } else if (kw == "vertices") {
            vertices(cur);
        } else if (kw == "arrow") {
            arrow(cur);
        } else if (kw == "relation") {
            relation(cur);
        } else if (kw == "cap") {
            cap(cur);
        } else {
            cur.fail(at, "unknown directive '" + std::string(kw) + "'");
        }
        if (!cur.at_end()) cur.fail("unexpected trailing input");
    }
};

}  // namespace

Presentation parse_algebra_file(std::string_view text)
{
    Parser parser;
    parser.p.field = FieldSpec::rationals();
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        ++number;
        parser.line(line, number);
        start = end + 1;
    }
    if (parser.p.quiver.vertices.empty()) throw SyntaxError(number, 1, "no vertices declared");
    return std::move(parser.p);
}

AlgebraFile load_algebra_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return {path, parse_algebra_file(buf.str())};
}

}  // namespace homdim
