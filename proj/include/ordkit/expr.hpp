#pragma once

#include <cctype>
#include <string>

#include "ordkit/symreal.hpp"

namespace ordkit {

// Recursive-descent parser for the expression grammar used by the CLI and
// test fixtures: rationals as p/q, symbols as identifiers, operators + - * /,
// unary -, parentheses.  '^' with a nonnegative integer exponent is accepted
// as a convenience superset (the printer uses it).
class ExprParser {
public:
    ExprParser(std::string src, RegistryPtr reg) : src_(std::move(src)), reg_(std::move(reg)) {}

    SymbolicReal parse() {
        SymbolicReal v = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("trailing input in expression: " + src_);
        return v;
    }

private:
    SymbolicReal parse_sum() {
        SymbolicReal v = parse_product();
        for (;;) {
            skip_ws();
            if (eat('+'))
                v = v + parse_product();
            else if (eat('-'))
                v = v - parse_product();
            else
                return v;
        }
    }

    SymbolicReal parse_product() {
        SymbolicReal v = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }

    SymbolicReal parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        SymbolicReal base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::string digits = take_digits();
            if (digits.empty()) throw ParseError("expected integer exponent");
            long e = std::stol(digits);
            SymbolicReal r(Rat(1));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    SymbolicReal parse_atom() {
        skip_ws();
        if (eat('(')) {
            SymbolicReal v = parse_sum();
            skip_ws();
            if (!eat(')')) throw ParseError("expected ')'");
            return v;
        }
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            return SymbolicReal(Rat(parse_int(take_digits())));
        }
        std::string id = take_ident();
        if (id.empty()) throw ParseError("expected number, symbol or '(' in expression");
        if (!reg_) throw UnknownSymbol("unknown symbol: " + id);
        return SymbolicReal::symbol(reg_, id);
    }

    std::string take_digits() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    std::string take_ident() {
        size_t start = pos_;
        auto ok = [&](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        while (pos_ < src_.size() && ok(src_[pos_], pos_ == start)) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string src_;
    RegistryPtr reg_;
    size_t pos_ = 0;
};

inline SymbolicReal parse_expr(const std::string& src, const RegistryPtr& reg) {
    return ExprParser(src, reg).parse();
}

}  // namespace ordkit
