#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "kudef/errors.hpp"
#include "kudef/group_expr.hpp"

namespace kudef {

// Recursive-descent parser for the expression grammar
//
//   expr    := term { ('x' | '*') term }
//   term    := primary { '^' int }
//   primary := 'Z' | 'S1' | 'F(' int ')' | 'M(' int ')' | 'N(' int ')' | '(' expr ')'
//
// Whitespace is ignored everywhere; '^' binds tighter than the product.
// 'Z' and 'S1' both denote the infinite cyclic group.
namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    GroupExpr parse() {
        GroupExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input at position " + std::to_string(pos_),
                             pos_);
        return e;
    }

private:
    GroupExpr parse_expr() {
        std::vector<GroupExpr> factors;
        factors.push_back(parse_term());
        while (true) {
            skip_ws();
            if (peek() == 'x' || peek() == '*') {
                ++pos_;
                factors.push_back(parse_term());
            } else {
                break;
            }
        }
        return GroupExpr::product(std::move(factors));
    }

    GroupExpr parse_term() {
        GroupExpr e = parse_primary();
        while (true) {
            skip_ws();
            if (peek() != '^') break;
            ++pos_;
            e = GroupExpr::power(e, parse_int("exponent"));
        }
        return e;
    }

    GroupExpr parse_primary() {
        skip_ws();
        const std::size_t start = pos_;
        switch (peek()) {
            case 'Z':
                ++pos_;
                return GroupExpr::integers();
            case 'S': {
                ++pos_;
                if (peek() != '1')
                    throw ParseError("expected 'S1' at position " + std::to_string(start), start);
                ++pos_;
                return GroupExpr::integers();
            }
            case 'F':
            case 'M':
            case 'N':
                return parse_parameterized(text_[pos_]);
            case '(': {
                ++pos_;
                GroupExpr e = parse_expr();
                skip_ws();
                if (peek() != ')')
                    throw ParseError("expected ')' at position " + std::to_string(pos_), pos_);
                ++pos_;
                return e;
            }
            case '\0':
                throw ParseError("unexpected end of input", pos_);
            default:
                throw ParseError(std::string("unexpected character '") + peek() +
                                     "' at position " + std::to_string(pos_),
                                 pos_);
        }
    }

    GroupExpr parse_parameterized(char letter) {
        ++pos_;
        skip_ws();
        if (peek() != '(')
            throw ParseError(std::string("expected '(' after '") + letter + "' at position " +
                                 std::to_string(pos_),
                             pos_);
        ++pos_;
        const int value = parse_int("parameter");
        skip_ws();
        if (peek() != ')')
            throw ParseError("expected ')' at position " + std::to_string(pos_), pos_);
        ++pos_;
        switch (letter) {
            case 'F': return GroupExpr::free_group(value);
            case 'M': return GroupExpr::orientable(value);
            default: return GroupExpr::non_orientable(value);
        }
    }

    int parse_int(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000)
                throw SemanticError(std::string(what) + " out of range at position " +
                                    std::to_string(start));
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError(std::string("expected ") + what + " at position " +
                                 std::to_string(start),
                             start);
        return static_cast<int>(value);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupExpr parse_expr(std::string_view text) {
    return detail::ExprParser(text).parse();
}

}  // namespace kudef
