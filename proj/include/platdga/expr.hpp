/*
 * expr.hpp
 * --------
 * Recursive-descent parser for algebra elements in the canonical text
 * grammar:
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor ( ['*'] factor )*
 *   factor := INT | 't' ['^' ['-'] INT] | 'x' ['_'] INT | '(' expr ')'
 *
 * Juxtaposition multiplies, so "x_2 x_13" and "x2*x13" parse alike.
 */
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "platdga/ncpoly.hpp"

namespace platdga {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class R>
class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    NCPoly<R> parse() {
        NCPoly<R> p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("unexpected character '" + std::string(1, s_[pos_]) +
                              "' at offset " + std::to_string(pos_));
        return p;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expected integer at offset " + std::to_string(pos_));
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    NCPoly<R> expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '-') { eat('-'); neg = true; }
        NCPoly<R> p = term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                eat('+');
                p += term();
            } else if (c == '-') {
                eat('-');
                p += -term();
            } else {
                break;
            }
        }
        return p;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 'x' || c == 't' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    NCPoly<R> term() {
        NCPoly<R> p = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                p = p * factor();
            } else if (starts_factor()) {
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    NCPoly<R> factor() {
        skip_ws();
        if (eat('(')) {
            NCPoly<R> p = expr();
            if (!eat(')')) throw parse_error("missing ')'");
            return p;
        }
        char c = peek();
        if (c == 'x') {
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
            long long idx = integer();
            if (idx < 1) throw parse_error("generator index must be positive");
            return NCPoly<R>::gen(static_cast<GenId>(idx));
        }
        if (c == 't') {
            ++pos_;
            int e = 1;
            if (eat('^')) e = static_cast<int>(integer());
            return NCPoly<R>::from_term(unit_word(), R::t_power(e));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            return NCPoly<R>::from_term(unit_word(), R::from_int(v));
        }
        throw parse_error("expected factor at offset " + std::to_string(pos_));
    }
};

template <class R>
NCPoly<R> parse_poly(const std::string& text) {
    return ExprParser<R>(text).parse();
}

}  // namespace platdga
