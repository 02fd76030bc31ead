#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Input text did not match the polytope file format (or a rational/integer
/// token is malformed). line is 1-based; 0 means "not file positional".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Strict "p" or "p/q" with optional leading '-'; no spaces, no '+'.
inline Rational parse_rational(const std::string& s, int line = 0) {
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        return j;
    };
    if (i < s.size() && s[i] == '-') ++i;
    size_t num_end = digits(i);
    if (num_end == i)
        throw ParseError(line, "malformed rational '" + s + "'");
    std::string num = s.substr(0, num_end);
    if (num_end == s.size())
        return Rational(Int(num), Int(1));
    if (s[num_end] != '/')
        throw ParseError(line, "malformed rational '" + s + "'");
    size_t den_start = num_end + 1;
    size_t den_end = digits(den_start);
    if (den_end == den_start || den_end != s.size())
        throw ParseError(line, "malformed rational '" + s + "'");
    Int den(s.substr(den_start));
    if (den == 0)
        throw ParseError(line, "zero denominator in '" + s + "'");
    return Rational(Int(num), den);
}

inline Int parse_integer(const std::string& s, int line = 0) {
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw ParseError(line, "malformed integer '" + s + "'");
    for (size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw ParseError(line, "malformed integer '" + s + "'");
    return Int(s);
}

namespace detail {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

/// Tokenized non-empty lines with '#' comments stripped.
inline std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

} // namespace detail

/**
 * Polytope text format:
 *
 *   dim <n>
 *   kind polygon|simplex|general
 *   <one vertex per line: n rationals>
 *   [halfspaces                      (general kind only)
 *    <one per line: n integers, then one rational offset>]
 *
 * '#' starts a comment anywhere; blank lines are ignored. Rationals are
 * "p/q" or "p". Values round-trip bit-exactly through write_polytope.
 */
inline Polytope parse_polytope(std::istream& in) {
    std::vector<detail::Line> lines = detail::tokenize(in);
    size_t li = 0;
    auto need = [&](const char* what) -> const detail::Line& {
        if (li >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number,
                             std::string("unexpected end of file, expected ") + what);
        return lines[li];
    };

    const detail::Line& dl = need("'dim <n>'");
    if (dl.tokens.size() != 2 || dl.tokens[0] != "dim")
        throw ParseError(dl.number, "expected 'dim <n>'");
    Int nz = parse_integer(dl.tokens[1], dl.number);
    if (nz < 1 || nz > 64)
        throw ParseError(dl.number, "unreasonable dimension '" + dl.tokens[1] + "'");
    const int n = static_cast<int>(nz.get_si());
    ++li;

    const detail::Line& kl = need("'kind polygon|simplex|general'");
    if (kl.tokens.size() != 2 || kl.tokens[0] != "kind")
        throw ParseError(kl.number, "expected 'kind polygon|simplex|general'");
    const std::string kind = kl.tokens[1];
    if (kind != "polygon" && kind != "simplex" && kind != "general")
        throw ParseError(kl.number, "unknown kind '" + kind + "'");
    ++li;

    std::vector<Point> verts;
    while (li < lines.size() && lines[li].tokens[0] != "halfspaces") {
        const detail::Line& vl = lines[li];
        if (static_cast<int>(vl.tokens.size()) != n)
            throw ParseError(vl.number, "vertex needs exactly " + std::to_string(n) +
                                            " coordinates");
        Point v;
        for (const std::string& tok : vl.tokens)
            v.push_back(parse_rational(tok, vl.number));
        verts.push_back(std::move(v));
        ++li;
    }

    if (kind == "polygon") {
        if (li != lines.size())
            throw ParseError(lines[li].number, "halfspaces section not allowed for kind polygon");
        if (n != 2)
            throw ParseError(dl.number, "kind polygon requires dim 2");
        return build_polygon(std::move(verts));
    }
    if (kind == "simplex") {
        if (li != lines.size())
            throw ParseError(lines[li].number, "halfspaces section not allowed for kind simplex");
        return build_simplex(std::move(verts));
    }

    const detail::Line& hl = need("'halfspaces' section");
    if (hl.tokens.size() != 1)
        throw ParseError(hl.number, "expected bare 'halfspaces' line");
    ++li;
    std::vector<Halfspace> hs;
    while (li < lines.size()) {
        const detail::Line& l = lines[li];
        if (static_cast<int>(l.tokens.size()) != n + 1)
            throw ParseError(l.number, "halfspace needs " + std::to_string(n) +
                                           " integers and one rational offset");
        Halfspace h;
        for (int j = 0; j < n; ++j)
            h.normal.push_back(parse_integer(l.tokens[j], l.number));
        h.offset = parse_rational(l.tokens[n], l.number);
        hs.push_back(std::move(h));
        ++li;
    }
    if (hs.empty())
        throw ParseError(hl.number, "general kind needs at least one halfspace");
    return make_general(n, std::move(verts), std::move(hs));
}

inline Polytope parse_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return parse_polytope(in);
}

inline void write_polytope(std::ostream& out, const Polytope& P) {
    out << "dim " << P.ambient_dim() << "\n";
    out << "kind " << kind_name(P.kind()) << "\n";
    for (const Point& v : P.vertices()) {
        for (size_t j = 0; j < v.size(); ++j)
            out << (j ? " " : "") << v[j].str();
        out << "\n";
    }
    if (P.kind() == PolytopeKind::General) {
        out << "halfspaces\n";
        for (const Halfspace& h : P.halfspaces()) {
            for (const Int& a : h.normal) out << a.get_str() << " ";
            out << h.offset.str() << "\n";
        }
    }
}

} // namespace ehrhart
