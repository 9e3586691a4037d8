#pragma once

// Text form of monomials and characters. The grammar is
//   monomial := "1" | factor ("*" factor)*
//   factor   := "Y[" int "," int "]" ("^" nonzero-int)?
// with whitespace ignored everywhere. Printing emits exactly this grammar,
// so print and parse round-trip. Characters print one term per line as
// "coeff*monomial" in canonical term order.

#include <cctype>
#include <string>
#include <string_view>

#include "core.hpp"

namespace epschar {

// Malformed input text; offset is the byte position of the problem.
struct parse_error : std::runtime_error {
    size_t offset;
    parse_error(const std::string& what, size_t offset_)
        : std::runtime_error(what + " at byte " + std::to_string(offset_)), offset(offset_) {}
};

inline std::string format_monomial(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& [key, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += "Y[" + std::to_string(key.node) + "," + std::to_string(key.spectral) + "]";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline std::string format_character(const Character& c) {
    if (c.is_zero()) return "0\n";
    std::string out;
    for (const auto& [m, coeff] : c.terms()) {
        out += coeff.str() + "*" + format_monomial(m) + "\n";
    }
    return out;
}

namespace detail {

class MonomialParser {
public:
    MonomialParser(std::string_view text, const LatticeConfig& cfg) : text_(text), cfg_(cfg) {}

    Monomial parse() {
        Monomial m;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '1') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) throw parse_error("trailing input after \"1\"", pos_);
            return m;
        }
        parse_factor(m);
        skip_ws();
        while (pos_ < text_.size()) {
            expect('*');
            parse_factor(m);
            skip_ws();
        }
        return m;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected an integer", start);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000) throw parse_error("integer out of range", start);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    void parse_factor(Monomial& m) {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= text_.size() || text_[pos_] != 'Y')
            throw parse_error("expected a factor \"Y[...]\"", pos_);
        ++pos_;
        expect('[');
        int node = parse_int();
        if (node < 1 || node > cfg_.n)
            throw parse_error("node " + std::to_string(node) + " out of 1.." +
                                  std::to_string(cfg_.n),
                              start);
        expect(',');
        int spectral = parse_int();
        expect(']');
        int exp = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            size_t at = pos_;
            exp = parse_int();
            if (exp == 0) throw parse_error("zero exponent", at);
        }
        m.accumulate(node, spectral, exp, cfg_);
    }

    std::string_view text_;
    const LatticeConfig& cfg_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Monomial parse_monomial(std::string_view text, const LatticeConfig& cfg) {
    return detail::MonomialParser(text, cfg).parse();
}

// Parses a character written as terms joined by "+", each term either a
// monomial or "coeff*monomial" (coefficient an integer). The inverse of
// format_character up to whitespace; used by tests to state expected
// characters literally.
inline Character parse_character(std::string_view text, const LatticeConfig& cfg) {
    Character out;
    size_t pos = 0;
    auto next_term = [&]() -> std::string_view {
        size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char ch = text[pos];
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if ((ch == '+' || ch == '\n') && depth == 0) break;
            ++pos;
        }
        std::string_view term = text.substr(start, pos - start);
        if (pos < text.size()) ++pos;  // consume separator
        return term;
    };
    while (pos < text.size()) {
        std::string_view term = next_term();
        // split a leading integer coefficient, if any, at its '*'
        size_t p = 0;
        while (p < term.size() && std::isspace(static_cast<unsigned char>(term[p]))) ++p;
        if (p == term.size()) continue;
        Coeff coeff = 1;
        size_t q = p;
        if (term[q] == '-' || term[q] == '+') ++q;
        size_t digits_start = q;
        while (q < term.size() && std::isdigit(static_cast<unsigned char>(term[q]))) ++q;
        if (q > digits_start) {
            size_t r = q;
            while (r < term.size() && std::isspace(static_cast<unsigned char>(term[r]))) ++r;
            if (r < term.size() && term[r] == '*') {
                coeff = Coeff(std::string(term.substr(p, q - p)));
                term = term.substr(r + 1);
            } else if (r == term.size()) {
                // bare integer term: coefficient times the unit monomial
                out.add_term(Monomial::unit(), Coeff(std::string(term.substr(p, q - p))));
                continue;
            }
        }
        out.add_term(parse_monomial(term, cfg), coeff);
    }
    return out;
}

}  // namespace epschar
