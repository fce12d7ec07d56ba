#ifndef CHOWCALC_EXPR_HPP
#define CHOWCALC_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chowcalc/ring.hpp"

namespace chowcalc {

// Expression language over a selected ring:
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | symbol | '(' expr ')'
//
// Rational literals are "p" or "p/q"; symbols resolve against the ring's
// basis or its declared parameters. Errors carry the byte offset and the
// set of tokens that would have been accepted.

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error("parse error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct Expression {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Pow, Neg };

    Kind kind;
    Rational number;        // Kind::Number
    std::string symbol;     // Kind::Symbol
    std::size_t offset = 0; // where this node started, for error reporting
    int exponent = 0;       // Kind::Pow
    std::unique_ptr<Expression> lhs, rhs;
};

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t offset;
    Rational number;
    std::string text;
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            std::size_t slash = i;
            if (i < text.size() && text[i] == '/' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                i = slash + 1;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
            }
            Token t{Token::Kind::Number, start, parse_rational(text.substr(start, i - start)), ""};
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({Token::Kind::Ident, start, 0, std::string(text.substr(start, i - start))});
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Kind::Plus; break;
        case '-': k = Token::Kind::Minus; break;
        case '*': k = Token::Kind::Star; break;
        case '^': k = Token::Kind::Caret; break;
        case '(': k = Token::Kind::LParen; break;
        case ')': k = Token::Kind::RParen; break;
        default:
            throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, i, 0, ""});
        ++i;
    }
    out.push_back({Token::Kind::End, text.size(), 0, ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::unique_ptr<Expression> parse() {
        auto e = expr();
        if (peek().kind != Token::Kind::End)
            throw ParseError(peek().offset, "expected '+', '-', '*', '^' or end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    static std::unique_ptr<Expression> node(Expression::Kind k, std::size_t offset) {
        auto e = std::make_unique<Expression>();
        e->kind = k;
        e->offset = offset;
        return e;
    }

    std::unique_ptr<Expression> expr() {
        std::unique_ptr<Expression> acc;
        if (peek().kind == Token::Kind::Minus || peek().kind == Token::Kind::Plus) {
            const Token& sign = next();
            auto t = term();
            if (sign.kind == Token::Kind::Minus) {
                auto n = node(Expression::Kind::Neg, sign.offset);
                n->lhs = std::move(t);
                acc = std::move(n);
            } else {
                acc = std::move(t);
            }
        } else {
            acc = term();
        }
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const Token& op = next();
            auto rhs = term();
            auto n = node(op.kind == Token::Kind::Plus ? Expression::Kind::Add
                                                       : Expression::Kind::Sub,
                          op.offset);
            n->lhs = std::move(acc);
            n->rhs = std::move(rhs);
            acc = std::move(n);
        }
        return acc;
    }

    std::unique_ptr<Expression> term() {
        auto acc = factor();
        while (peek().kind == Token::Kind::Star) {
            const Token& op = next();
            auto rhs = factor();
            auto n = node(Expression::Kind::Mul, op.offset);
            n->lhs = std::move(acc);
            n->rhs = std::move(rhs);
            acc = std::move(n);
        }
        return acc;
    }

    std::unique_ptr<Expression> factor() {
        auto base = atom();
        if (peek().kind == Token::Kind::Caret) {
            const Token& op = next();
            if (peek().kind != Token::Kind::Number || denominator(peek().number) != 1 ||
                peek().number < 0)
                throw ParseError(peek().offset, "expected a non-negative integer exponent");
            const Token& e = next();
            auto n = node(Expression::Kind::Pow, op.offset);
            n->lhs = std::move(base);
            n->exponent = static_cast<int>(numerator(e.number));
            return n;
        }
        return base;
    }

    std::unique_ptr<Expression> atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Number: {
            next();
            auto n = node(Expression::Kind::Number, t.offset);
            n->number = t.number;
            return n;
        }
        case Token::Kind::Ident: {
            next();
            auto n = node(Expression::Kind::Symbol, t.offset);
            n->symbol = t.text;
            return n;
        }
        case Token::Kind::LParen: {
            next();
            auto e = expr();
            if (peek().kind != Token::Kind::RParen)
                throw ParseError(peek().offset, "expected ')'");
            next();
            return e;
        }
        default:
            throw ParseError(t.offset, "expected a number, a symbol or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline void check_symbols(const Expression& e, const RingPresentation& ring, bool basis_allowed) {
    switch (e.kind) {
    case Expression::Kind::Symbol:
        if (ring.has_parameter(e.symbol))
            return;
        if (basis_allowed && ring.index_of(e.symbol))
            return;
        throw ParseError(e.offset, "unknown symbol '" + e.symbol + "' in ring " + ring.name());
    case Expression::Kind::Number:
        return;
    case Expression::Kind::Neg:
    case Expression::Kind::Pow:
        check_symbols(*e.lhs, ring, basis_allowed);
        return;
    default:
        check_symbols(*e.lhs, ring, basis_allowed);
        check_symbols(*e.rhs, ring, basis_allowed);
        return;
    }
}

} // namespace detail

/// AST for `text` with every symbol resolved against the ring's basis or its
/// declared parameters.
inline std::unique_ptr<Expression> parse_expression(std::string_view text,
                                                    const RingPresentation& ring) {
    detail::Parser parser(detail::lex(text));
    auto e = parser.parse();
    detail::check_symbols(*e, ring, /*basis_allowed=*/true);
    return e;
}

inline GradedClass evaluate(const Expression& e, const RingPresentation::Ptr& ring) {
    switch (e.kind) {
    case Expression::Kind::Number:
        return ParamPolynomial(e.number) * ring->one();
    case Expression::Kind::Symbol:
        if (ring->has_parameter(e.symbol))
            return ParamPolynomial::parameter(e.symbol) * ring->one();
        return ring->basis_class(e.symbol);
    case Expression::Kind::Add:
        return evaluate(*e.lhs, ring) + evaluate(*e.rhs, ring);
    case Expression::Kind::Sub:
        return evaluate(*e.lhs, ring) - evaluate(*e.rhs, ring);
    case Expression::Kind::Mul:
        return evaluate(*e.lhs, ring) * evaluate(*e.rhs, ring);
    case Expression::Kind::Neg:
        return -evaluate(*e.lhs, ring);
    case Expression::Kind::Pow: {
        GradedClass base = evaluate(*e.lhs, ring);
        GradedClass acc = ring->one();
        for (int i = 0; i < e.exponent; ++i)
            acc = acc * base;
        return acc;
    }
    }
    throw Error("unreachable expression kind");
}

/// Parse and evaluate in one step.
inline GradedClass evaluate_expression(std::string_view text, const RingPresentation::Ptr& ring) {
    return evaluate(*parse_expression(text, *ring), ring);
}

/// Coefficient-level parser: rationals and declared parameters only (no basis
/// symbols). This is what ring/map documents use for their entries.
inline ParamPolynomial parse_polynomial(std::string_view text,
                                        const std::vector<std::string>& parameters) {
    detail::Parser parser(detail::lex(text));
    auto e = parser.parse();

    auto eval = [&](auto&& self, const Expression& node) -> ParamPolynomial {
        switch (node.kind) {
        case Expression::Kind::Number:
            return ParamPolynomial(node.number);
        case Expression::Kind::Symbol:
            if (std::find(parameters.begin(), parameters.end(), node.symbol) == parameters.end())
                throw ParseError(node.offset, "unknown parameter '" + node.symbol + "'");
            return ParamPolynomial::parameter(node.symbol);
        case Expression::Kind::Add:
            return self(self, *node.lhs) + self(self, *node.rhs);
        case Expression::Kind::Sub:
            return self(self, *node.lhs) - self(self, *node.rhs);
        case Expression::Kind::Mul:
            return self(self, *node.lhs) * self(self, *node.rhs);
        case Expression::Kind::Neg:
            return -self(self, *node.lhs);
        case Expression::Kind::Pow: {
            ParamPolynomial base = self(self, *node.lhs);
            ParamPolynomial acc(1);
            for (int i = 0; i < node.exponent; ++i)
                acc *= base;
            return acc;
        }
        }
        throw Error("unreachable expression kind");
    };
    return eval(eval, *e);
}

} // namespace chowcalc

#endif
