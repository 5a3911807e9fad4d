#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foliage/error.hpp"
#include "foliage/polynomial.hpp"
#include "foliage/projective.hpp"
#include "foliage/rational.hpp"

namespace foliage {

using Bindings = std::map<std::string, Rational>;

namespace detail {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src, std::size_t line, std::size_t column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '\n') {
            ++line, column = 1, ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++column, ++i;
            continue;
        }
        const std::size_t start = i, col = column;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::number, std::string(src.substr(start, i - start)), line, col});
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(src.substr(start, i - start)), line, col});
        } else {
            Tok k;
            switch (ch) {
                case '+': k = Tok::plus; break;
                case '-': k = Tok::minus; break;
                case '*': k = Tok::star; break;
                case '/': k = Tok::slash; break;
                case '^': k = Tok::caret; break;
                case '(': k = Tok::lparen; break;
                case ')': k = Tok::rparen; break;
                default: throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
            }
            ++i;
            out.push_back({k, std::string(1, ch), line, col});
        }
        column += i - start;
    }
    out.push_back({Tok::end, "", line, column});
    return out;
}

template <std::size_t N>
class ExpressionParser {
public:
    using Poly = Polynomial<N>;

    ExpressionParser(std::vector<Token> tokens, const Bindings& bindings, const std::array<std::string, N>& vars)
        : toks_(std::move(tokens)), bindings_(bindings), vars_(vars) {}

    Poly parse() {
        if (peek().kind == Tok::end) fail("empty expression");
        Poly p = expr();
        if (peek().kind != Tok::end) {
            const Tok k = peek().kind;
            if (k == Tok::number || k == Tok::ident || k == Tok::lparen) fail("implicit multiplication is not allowed");
            fail("unexpected '" + peek().text + "'");
        }
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

    Poly expr() {
        Poly acc = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool add = next().kind == Tok::plus;
            Poly rhs = term();
            acc = add ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const bool mul = next().kind == Tok::star;
            const Token& at = peek();
            Poly rhs = unary();
            if (mul) {
                acc = acc * rhs;
                continue;
            }
            if (rhs.is_zero()) throw ParseError("division by zero", at.line, at.column);
            if (rhs.total_degree() != 0) throw ParseError("division by a non-constant expression", at.line, at.column);
            acc = acc * (Rational(1) / rhs.constant_term());
        }
        return acc;
    }

    Poly unary() {
        if (peek().kind == Tok::minus) {
            next();
            return unary() * Rational(-1);
        }
        if (peek().kind == Tok::plus) {
            next();
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (peek().kind != Tok::caret) return base;
        next();
        if (peek().kind == Tok::minus) fail("negative exponent");
        if (peek().kind != Tok::number) fail("exponent must be a non-negative integer literal");
        const Token& t = next();
        if (t.text.size() > 4) throw ParseError("exponent too large", t.line, t.column);
        return base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }

    Poly primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                next();
                return Poly(Rational(Integer(t.text)));
            }
            case Tok::ident: {
                next();
                for (std::size_t i = 0; i < N; ++i)
                    if (vars_[i] == t.text) return Poly::variable(i);
                auto it = bindings_.find(t.text);
                if (it == bindings_.end()) throw ParseError("unbound identifier '" + t.text + "'", t.line, t.column);
                return Poly(it->second);
            }
            case Tok::lparen: {
                next();
                Poly inner = expr();
                if (peek().kind != Tok::rparen) fail("expected ')'");
                next();
                return inner;
            }
            case Tok::end: fail("unexpected end of expression");
            default: fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Bindings& bindings_;
    const std::array<std::string, N>& vars_;
};

}  // namespace detail

/// Parses a polynomial in x, y: integers, a/b, bound parameters, + − * / ^ and
/// parentheses. Positions in errors are 1-based and offset by (line, column).
inline BiPoly parse_expression(std::string_view text, const Bindings& bindings = {}, std::size_t line = 1,
                               std::size_t column = 1) {
    return detail::ExpressionParser<2>(detail::tokenize(text, line, column), bindings, bivariate_names()).parse();
}

/// Same grammar over x, y, z.
inline TriPoly parse_homogeneous_expression(std::string_view text, const Bindings& bindings = {},
                                            std::size_t line = 1, std::size_t column = 1) {
    return detail::ExpressionParser<3>(detail::tokenize(text, line, column), bindings, trivariate_names()).parse();
}

enum class InputKind { local, projective };

struct InputSpec {
    InputKind kind = InputKind::local;
    BiPoly p, q;
    ProjForm form;
    Bindings bindings;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace detail

/// Input file: `P = …` and `Q = …` for a germ, or `A = …`, `B = …`, `C = …`
/// for a projective form; `param NAME = RAT` lines; `#` comments.
/// `overrides` take precedence over file parameters.
inline InputSpec parse_input(std::string_view text, const Bindings& overrides = {}) {
    struct Assignment {
        std::string value;
        std::size_t line, column;
    };
    std::map<std::string, Assignment> exprs;
    Bindings bindings;
    std::size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (detail::trim(line).empty()) continue;
        const std::size_t eq = line.find('=');
        const std::size_t indent = line.find_first_not_of(" \t");
        if (eq == std::string_view::npos) throw ParseError("expected '='", lineno, indent + 1);
        std::string lhs = detail::trim(line.substr(0, eq));
        const std::size_t rhs_col = eq + 2;
        if (lhs.rfind("param", 0) == 0 && lhs.size() > 5 && std::isspace(static_cast<unsigned char>(lhs[5]))) {
            const std::string name = detail::trim(lhs.substr(5));
            if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
                throw ParseError("malformed parameter name", lineno, indent + 1);
            if (name == "x" || name == "y" || name == "z")
                throw ParseError("parameter name '" + name + "' is a variable", lineno, indent + 1);
            try {
                bindings[name] = parse_rational(line.substr(eq + 1));
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), lineno, rhs_col);
            }
            continue;
        }
        static const std::vector<std::string> keys{"P", "Q", "A", "B", "C"};
        if (std::find(keys.begin(), keys.end(), lhs) == keys.end())
            throw ParseError("unknown key '" + lhs + "'", lineno, indent + 1);
        if (exprs.count(lhs)) throw ParseError("duplicate key '" + lhs + "'", lineno, indent + 1);
        exprs[lhs] = {std::string(line.substr(eq + 1)), lineno, rhs_col};
    }
    for (const auto& [k, v] : overrides) bindings[k] = v;

    InputSpec spec;
    spec.bindings = bindings;
    const bool local = exprs.count("P") || exprs.count("Q");
    const bool proj = exprs.count("A") || exprs.count("B") || exprs.count("C");
    if (local && proj) throw ParseError("mixing P/Q with A/B/C", 1, 1);
    if (!local && !proj) throw ParseError("no form given (expected P/Q or A/B/C)", lineno ? lineno : 1, 1);
    auto get = [&](const std::string& key) -> const Assignment& {
        auto it = exprs.find(key);
        if (it == exprs.end()) throw ParseError("missing key '" + key + "'", lineno ? lineno : 1, 1);
        return it->second;
    };
    if (local) {
        spec.kind = InputKind::local;
        const auto& p = get("P");
        const auto& q = get("Q");
        spec.p = parse_expression(p.value, bindings, p.line, p.column);
        spec.q = parse_expression(q.value, bindings, q.line, q.column);
    } else {
        spec.kind = InputKind::projective;
        const auto& a = get("A");
        const auto& b = get("B");
        const auto& c = get("C");
        spec.form.a = parse_homogeneous_expression(a.value, bindings, a.line, a.column);
        spec.form.b = parse_homogeneous_expression(b.value, bindings, b.line, b.column);
        spec.form.c = parse_homogeneous_expression(c.value, bindings, c.line, c.column);
    }
    return spec;
}

/// Point list: one point per line as `[a:b:c]`, `a:b:c` or `a b c`.
inline std::vector<ProjPoint> parse_points(std::string_view text) {
    std::vector<ProjPoint> out;
    std::size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (char& ch : line)
            if (ch == '[' || ch == ']' || ch == ':' || ch == ',') ch = ' ';
        std::vector<std::string> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t s = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > s) fields.push_back(line.substr(s, i - s));
        }
        if (fields.empty()) continue;
        if (fields.size() != 3) throw ParseError("a point needs three coordinates", lineno, 1);
        ProjPoint p;
        try {
            for (int k = 0; k < 3; ++k) p[k] = parse_rational(fields[k]);
            out.push_back(normalize_point(p));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what(), lineno, 1);
        }
    }
    return out;
}

}  // namespace foliage
