#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gysin/polynomial.hpp"

namespace gysin {

// Positioned failure of the expression front-end (1-based line and column).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

constexpr std::int64_t kMaxExponent = 2147483647;  // 2^31 - 1

namespace detail {

enum class TokKind { Plus, Minus, Star, Slash, Caret, LParen, RParen, Integer, Var, End };

struct Token {
    TokKind kind;
    std::string text;   // digits for Integer, index digits for Var
    char letter = 0;    // variable alphabet for Var
    int line = 1;
    int column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            bump(c);
            ++i;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = col;
        switch (c) {
            case '+': tok.kind = TokKind::Plus; break;
            case '-': tok.kind = TokKind::Minus; break;
            case '*': tok.kind = TokKind::Star; break;
            case '/': tok.kind = TokKind::Slash; break;
            case '^': tok.kind = TokKind::Caret; break;
            case '(': tok.kind = TokKind::LParen; break;
            case ')': tok.kind = TokKind::RParen; break;
            default: {
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    tok.kind = TokKind::Integer;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                        tok.text += src[i];
                        bump(src[i]);
                        ++i;
                    }
                    out.push_back(std::move(tok));
                    continue;
                }
                if (c == 'x' || c == 'u' || c == 'a') {
                    tok.kind = TokKind::Var;
                    tok.letter = c;
                    bump(c);
                    ++i;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                        tok.text += src[i];
                        bump(src[i]);
                        ++i;
                    }
                    if (tok.text.empty())
                        throw parse_error(std::string("expected index after variable letter '") +
                                              c + "'",
                                          tok.line, tok.column);
                    out.push_back(std::move(tok));
                    continue;
                }
                throw parse_error(std::string("unexpected character '") + c + "'", line, col);
            }
        }
        bump(c);
        ++i;
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = TokKind::End;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

// Parses a digit string, clamping detection at the given cap.
inline std::int64_t digits_to_bounded(const std::string& digits, std::int64_t cap, bool& overflow) {
    std::int64_t v = 0;
    overflow = false;
    for (char c : digits) {
        v = v * 10 + (c - '0');
        if (v > cap) {
            overflow = true;
            return cap;
        }
    }
    return v;
}

class Parser {
public:
    Parser(std::vector<Token> toks, int nvars) : toks_(std::move(toks)), nvars_(nvars) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        if (peek().kind != TokKind::End) fail("unexpected trailing input");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, peek().line, peek().column);
    }

    Polynomial parse_expr() {
        bool negate = false;
        if (peek().kind == TokKind::Minus) {
            advance();
            negate = true;
        }
        Polynomial p = parse_term();
        if (negate) p = -p;
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            const bool minus = advance().kind == TokKind::Minus;
            const Polynomial t = parse_term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (peek().kind == TokKind::Star) {
            advance();
            p = p * parse_factor();
        }
        return p;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (peek().kind != TokKind::Caret) return base;
        advance();
        if (peek().kind != TokKind::Integer) fail("expected exponent after '^'");
        const Token& tok = advance();
        bool overflow = false;
        const std::int64_t e = digits_to_bounded(tok.text, kMaxExponent, overflow);
        if (overflow) throw parse_error("exponent overflow", tok.line, tok.column);
        return power(base, e);
    }

    Polynomial parse_base() {
        switch (peek().kind) {
            case TokKind::Integer: {
                const Token& num = advance();
                Rational value = Rational::from_integer_string(num.text);
                if (peek().kind == TokKind::Slash) {
                    advance();
                    if (peek().kind != TokKind::Integer) fail("expected denominator after '/'");
                    const Token& den = advance();
                    const Rational d = Rational::from_integer_string(den.text);
                    if (d.is_zero()) throw parse_error("zero denominator", den.line, den.column);
                    value = value / d;
                }
                return Polynomial::constant(nvars_, value);
            }
            case TokKind::Var: {
                const Token& tok = advance();
                if (alphabet_ == 0) {
                    alphabet_ = tok.letter;
                } else if (alphabet_ != tok.letter) {
                    throw parse_error("mixed variable alphabets in one expression", tok.line,
                                      tok.column);
                }
                bool overflow = false;
                const std::int64_t idx = digits_to_bounded(tok.text, kMaxExponent, overflow);
                if (overflow || idx < 1 || idx > nvars_)
                    throw parse_error("variable index out of range", tok.line, tok.column);
                return Polynomial::variable(nvars_, static_cast<int>(idx));
            }
            case TokKind::LParen: {
                advance();
                Polynomial p = parse_expr();
                if (peek().kind != TokKind::RParen) fail("expected ')'");
                advance();
                return p;
            }
            default:
                fail("expected variable, number, or '('");
        }
    }

    static Polynomial power(const Polynomial& base, std::int64_t e) {
        Polynomial result = Polynomial::one(base.nvars());
        Polynomial sq = base;
        while (e > 0) {
            if (e & 1) result = result * sq;
            e >>= 1;
            if (e) sq = sq * sq;
        }
        return result;
    }

    std::vector<Token> toks_;
    int nvars_;
    std::size_t pos_ = 0;
    char alphabet_ = 0;
};

} // namespace detail

// Parses an expression over x/u/a variables with 1-based indices into a
// fully expanded canonical polynomial. '^' binds tighter than '*', which
// binds tighter than '+'/'-'; a single leading '-' is allowed per
// (sub)expression; juxtaposition is not multiplication; the three variable
// alphabets may not be mixed in one expression.
inline Polynomial parse(std::string_view src, int nvars) {
    if (nvars < 1) throw std::invalid_argument("parse: nvars must be positive");
    return detail::Parser(detail::tokenize(src), nvars).run();
}

// First variable alphabet appearing in the text, if any.
inline std::optional<char> input_alphabet(std::string_view src) {
    for (std::size_t i = 0; i < src.size(); ++i) {
        const char c = src[i];
        if ((c == 'x' || c == 'u' || c == 'a') && i + 1 < src.size() &&
            std::isdigit(static_cast<unsigned char>(src[i + 1])))
            return c;
    }
    return std::nullopt;
}

// Canonical printing: terms in descending graded-lex order, '-' absorbed
// into coefficients, unit coefficients suppressed, zero printed as "0".
inline std::string print(const Polynomial& p, char alphabet = 'x') {
    if (alphabet != 'x' && alphabet != 'u' && alphabet != 'a')
        throw std::invalid_argument("print: alphabet must be one of x, u, a");
    if (p.is_zero()) return "0";

    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }

        std::string monomial;
        for (int i = 0; i < p.nvars(); ++i) {
            const auto e = m[i];
            if (e == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += alphabet;
            monomial += std::to_string(i + 1);
            if (e > 1) monomial += "^" + std::to_string(e);
        }

        if (monomial.empty()) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += monomial;
        } else {
            out += mag.to_string() + "*" + monomial;
        }
    }
    return out;
}

} // namespace gysin
