#include "sepdiff/parser.hpp"

#include <cctype>
#include <optional>

#include "sepdiff/error.hpp"

namespace sepdiff {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c))
            fail(Errc::ParseError, std::string("parse error at position ") +
                                       std::to_string(pos) + ": expected '" + c +
                                       "' (" + what + ")");
    }
    [[noreturn]] void error(const std::string& msg) {
        fail(Errc::ParseError,
             "parse error at position " + std::to_string(pos) + ": " + msg);
    }
    std::optional<std::string> try_name() {
        skip_ws();
        if (pos >= text.size()) return std::nullopt;
        char c = text[pos];
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
    std::optional<std::uint64_t> try_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (std::uint64_t(1) << 60)) error("integer literal too large");
            v = v * 10 + std::uint64_t(text[pos] - '0');
            ++pos;
        }
        return v;
    }
};

struct ExprParser {
    Lexer lex;
    const FieldPresentation& K;
    std::span<const std::string> vars;

    DiffPoly mk_zero() { return DiffPoly::zero(K, std::uint32_t(vars.size())); }

    std::optional<std::uint32_t> var_index(const std::string& name) const {
        for (std::uint32_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    DiffPoly parse_expr() {
        bool neg = lex.accept('-');
        DiffPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (lex.accept('+'))
                acc += parse_term();
            else if (lex.accept('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    DiffPoly parse_term() {
        DiffPoly acc = parse_factor();
        while (true) {
            if (lex.accept('*')) {
                acc *= parse_factor();
            } else if (lex.accept('/')) {
                std::size_t at = lex.pos;
                DiffPoly d = parse_factor();
                if (!d.in_coefficient_field()) {
                    lex.pos = at;
                    lex.error("division by a differential polynomial");
                }
                RationalFunction dv = d.coefficient_value();
                if (dv.is_zero()) {
                    lex.pos = at;
                    lex.error("division by zero");
                }
                acc = acc.scaled(dv.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    DiffPoly parse_factor() {
        if (lex.accept('-')) return -parse_factor();
        DiffPoly b = parse_base();
        while (lex.accept('^')) {
            auto e = lex.try_uint();
            if (!e) lex.error("expected a nonnegative integer exponent");
            if (*e > 1u << 16) lex.error("exponent too large");
            b = b.pow(std::uint32_t(*e));
        }
        return b;
    }

    DiffPoly parse_base() {
        if (lex.accept('(')) {
            DiffPoly e = parse_expr();
            lex.expect(')', "closing parenthesis");
            return e;
        }
        if (auto n = lex.try_uint())
            return DiffPoly::scalar(K, std::uint32_t(vars.size()), *n % K.characteristic());
        if (auto name = lex.try_name()) {
            if (*name == "d" && lex.peek() == '(') {
                lex.expect('(', "derivative");
                auto vn = lex.try_name();
                if (!vn) lex.error("expected a variable name in d(...)");
                auto idx = var_index(*vn);
                if (!idx) lex.error("unknown variable '" + *vn + "' in d(...)");
                lex.expect(',', "derivative order");
                auto k = lex.try_uint();
                if (!k) lex.error("expected a derivative order in d(...)");
                if (*k > 1u << 16) lex.error("derivative order too large");
                lex.expect(')', "closing parenthesis of d(...)");
                return DiffPoly::var(K, std::uint32_t(vars.size()),
                                     DerivVar{*idx, std::uint32_t(*k)});
            }
            if (auto idx = var_index(*name)) {
                std::uint32_t order = 0;
                while (lex.pos < lex.text.size() && lex.text[lex.pos] == '\'') {
                    ++order;
                    ++lex.pos;
                }
                return DiffPoly::var(K, std::uint32_t(vars.size()), DerivVar{*idx, order});
            }
            if (auto slot = K.slot_of(*name)) {
                if (lex.pos < lex.text.size() && lex.text[lex.pos] == '\'')
                    lex.error("'" + *name + "' is a field generator and has no derivatives here");
                return DiffPoly::constant(K, std::uint32_t(vars.size()),
                                          RationalFunction::generator(K, *slot));
            }
            lex.error("unknown symbol '" + *name + "'");
        }
        lex.error(lex.eof() ? std::string("unexpected end of input")
                            : "unexpected '" + std::string(1, lex.peek()) + "'");
    }
};

}  // namespace

FieldPresentation parse_field(std::string_view text) {
    Lexer lex{text};
    auto kw = lex.try_name();
    if (!kw || *kw != "GF") lex.error("expected 'GF'");
    lex.expect('(', "characteristic");
    auto p = lex.try_uint();
    if (!p) lex.error("expected a prime characteristic");
    lex.expect(')', "characteristic");
    lex.expect('(', "generator list");
    std::vector<std::string> gens;
    bool has_t = false;
    if (!lex.accept(')')) {
        if (lex.peek() != ';') {
            while (true) {
                auto g = lex.try_name();
                if (!g) lex.error("expected a generator name");
                gens.push_back(*g);
                if (!lex.accept(',')) break;
            }
        }
        if (lex.accept(';')) {
            auto t = lex.try_name();
            if (!t || *t != "t") lex.error("expected 't' after ';'");
            has_t = true;
        }
        lex.expect(')', "generator list");
    }
    if (!lex.eof()) lex.error("trailing input after field presentation");
    return make_presentation(*p, std::move(gens), has_t);
}

DiffPoly parse_dpoly(std::string_view text, const FieldPresentation& K,
                     std::span<const std::string> var_names) {
    for (const auto& v : var_names)
        if (K.slot_of(v))
            fail(Errc::ParseError,
                 "ring variable '" + v + "' collides with a field generator");
    ExprParser p{Lexer{text}, K, var_names};
    DiffPoly e = p.parse_expr();
    if (!p.lex.eof()) p.lex.error("trailing input");
    return e;
}

RationalFunction parse_element(std::string_view text, const FieldPresentation& K) {
    DiffPoly e = parse_dpoly(text, K, {});
    return e.coefficient_value();
}

}  // namespace sepdiff
