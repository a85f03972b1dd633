#ifndef WCIDP_EXPR_HPP
#define WCIDP_EXPR_HPP

// Integer expressions over named parameters, used to write down family
// formulas and their side conditions as auditable text.
//
// Grammar:
//   comparison := additive [("==" | "!=" | "<=" | ">=" | "<" | ">") additive]
//   additive   := term {("+" | "-") term}
//   term       := unary {("*" | "/" | "%") unary}
//   unary      := "-" unary | primary
//   primary    := integer | name | name "(" comparison {"," comparison} ")" | "(" comparison ")"
//
// Functions: gcd(x, y), max(x, y), min(x, y). Division must be exact; "%"
// returns the non-negative residue. Comparisons evaluate to 0 or 1.

#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wcidp/types.hpp"

namespace wcidp {

enum class EvalError { none, overflow, inexact_division, division_by_zero };

inline const char* to_string(EvalError e) {
    switch (e) {
        case EvalError::none:
            return "none";
        case EvalError::overflow:
            return "arithmetic overflow";
        case EvalError::inexact_division:
            return "non-integral division";
        case EvalError::division_by_zero:
            return "division by zero";
    }
    return "?";
}

struct EvalResult {
    Int value = 0;
    EvalError error = EvalError::none;

    [[nodiscard]] bool ok() const { return error == EvalError::none; }
};

class ExprParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Expr {
public:
    Expr() = default;

    /// Parses `text`; identifiers must appear in `names` and are bound by position.
    static Expr parse(std::string_view text, const std::vector<std::string>& names) {
        Expr e;
        e.text_ = std::string(text);
        Parser p{text, names, e.nodes_, 0};
        e.root_ = p.comparison();
        p.skip_ws();
        if (p.pos != text.size()) {
            throw ExprParseError("unexpected '" + std::string(text.substr(p.pos, 1)) + "' in \"" + e.text_ + "\"");
        }
        for (const auto& n : e.nodes_) {
            if (n.op == Op::var) {
                e.var_mask_ |= 1U << n.value;
            }
        }
        return e;
    }

    [[nodiscard]] EvalResult eval(std::span<const Int> params) const { return eval_node(root_, params); }
    [[nodiscard]] const std::string& text() const { return text_; }
    /// Bit p is set iff the expression mentions parameter p.
    [[nodiscard]] std::uint32_t variables() const { return var_mask_; }

private:
    enum class Op : std::uint8_t { num, var, neg, add, sub, mul, div, mod, eq, ne, lt, le, gt, ge, gcd, max, min };

    struct Node {
        Op op;
        Int value = 0;  // literal, or parameter index
        int lhs = -1;
        int rhs = -1;
    };

    struct Parser {
        std::string_view src;
        const std::vector<std::string>& names;
        std::vector<Node>& nodes;
        std::size_t pos;

        void skip_ws() {
            while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) {
                ++pos;
            }
        }
        bool accept(std::string_view tok) {
            skip_ws();
            if (src.substr(pos, tok.size()) == tok) {
                pos += tok.size();
                return true;
            }
            return false;
        }
        void expect(std::string_view tok) {
            if (!accept(tok)) {
                throw ExprParseError("expected '" + std::string(tok) + "' at offset " + std::to_string(pos) + " in \"" +
                                     std::string(src) + "\"");
            }
        }
        int add(Op op, int lhs, int rhs, Int value = 0) {
            nodes.push_back({op, value, lhs, rhs});
            return static_cast<int>(nodes.size()) - 1;
        }

        int comparison() {
            int lhs = additive();
            static constexpr std::pair<std::string_view, Op> ops[] = {
                {"==", Op::eq}, {"!=", Op::ne}, {"<=", Op::le}, {">=", Op::ge}, {"<", Op::lt}, {">", Op::gt}};
            for (const auto& [tok, op] : ops) {
                if (accept(tok)) {
                    return add(op, lhs, additive());
                }
            }
            return lhs;
        }
        int additive() {
            int lhs = term();
            for (;;) {
                if (accept("+")) {
                    lhs = add(Op::add, lhs, term());
                } else if (accept("-")) {
                    lhs = add(Op::sub, lhs, term());
                } else {
                    return lhs;
                }
            }
        }
        int term() {
            int lhs = unary();
            for (;;) {
                if (accept("*")) {
                    lhs = add(Op::mul, lhs, unary());
                } else if (accept("/")) {
                    lhs = add(Op::div, lhs, unary());
                } else if (accept("%")) {
                    lhs = add(Op::mod, lhs, unary());
                } else {
                    return lhs;
                }
            }
        }
        int unary() {
            if (accept("-")) {
                return add(Op::neg, unary(), -1);
            }
            return primary();
        }
        int primary() {
            skip_ws();
            if (accept("(")) {
                const int inner = comparison();
                expect(")");
                return inner;
            }
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                Int v = 0;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                    if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, src[pos++] - '0', &v)) {
                        throw ExprParseError("integer literal too large in \"" + std::string(src) + "\"");
                    }
                }
                return add(Op::num, -1, -1, v);
            }
            const std::size_t start = pos;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                ++pos;
            }
            if (start == pos) {
                throw ExprParseError("expected a value at offset " + std::to_string(pos) + " in \"" + std::string(src) +
                                     "\"");
            }
            const std::string_view name = src.substr(start, pos - start);
            if (accept("(")) {
                Op op;
                if (name == "gcd") {
                    op = Op::gcd;
                } else if (name == "max") {
                    op = Op::max;
                } else if (name == "min") {
                    op = Op::min;
                } else {
                    throw ExprParseError("unknown function '" + std::string(name) + "'");
                }
                const int lhs = comparison();
                expect(",");
                const int rhs = comparison();
                expect(")");
                return add(op, lhs, rhs);
            }
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (names[i] == name) {
                    return add(Op::var, -1, -1, static_cast<Int>(i));
                }
            }
            throw ExprParseError("unknown parameter '" + std::string(name) + "'");
        }
    };

    [[nodiscard]] EvalResult eval_node(int idx, std::span<const Int> params) const {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        switch (n.op) {
            case Op::num:
                return {n.value};
            case Op::var:
                return {params[static_cast<std::size_t>(n.value)]};
            case Op::neg: {
                const auto x = eval_node(n.lhs, params);
                if (!x.ok()) return x;
                return {-x.value};
            }
            default:
                break;
        }
        const auto l = eval_node(n.lhs, params);
        if (!l.ok()) return l;
        const auto r = eval_node(n.rhs, params);
        if (!r.ok()) return r;
        const Int a = l.value;
        const Int b = r.value;
        Int out = 0;
        switch (n.op) {
            case Op::add:
                if (__builtin_add_overflow(a, b, &out)) return {0, EvalError::overflow};
                return {out};
            case Op::sub:
                if (__builtin_sub_overflow(a, b, &out)) return {0, EvalError::overflow};
                return {out};
            case Op::mul:
                if (__builtin_mul_overflow(a, b, &out)) return {0, EvalError::overflow};
                return {out};
            case Op::div:
                if (b == 0) return {0, EvalError::division_by_zero};
                if (a % b != 0) return {0, EvalError::inexact_division};
                return {a / b};
            case Op::mod:
                if (b <= 0) return {0, EvalError::division_by_zero};
                return {((a % b) + b) % b};
            case Op::eq:
                return {a == b};
            case Op::ne:
                return {a != b};
            case Op::lt:
                return {a < b};
            case Op::le:
                return {a <= b};
            case Op::gt:
                return {a > b};
            case Op::ge:
                return {a >= b};
            case Op::gcd:
                return {std::gcd(a, b)};
            case Op::max:
                return {a > b ? a : b};
            case Op::min:
                return {a < b ? a : b};
            default:
                return {0, EvalError::overflow};
        }
    }

    std::string text_;
    std::vector<Node> nodes_;
    int root_ = -1;
    std::uint32_t var_mask_ = 0;
};

}  // namespace wcidp

#endif  // WCIDP_EXPR_HPP
