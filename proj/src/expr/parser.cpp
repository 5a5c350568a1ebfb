#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "surf4/error.hpp"
#include "surf4/expr/expression.hpp"

namespace surf4::expr {
namespace {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    TokenKind kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::End: return "end of input";
        case TokenKind::Number: return "number '" + std::string(t.text) + "'";
        case TokenKind::Ident: return "identifier '" + std::string(t.text) + "'";
        default: return "'" + std::string(t.text) + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {TokenKind::End, start, {}};

        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            return {TokenKind::Ident, start, src_.substr(start, pos_ - start)};
        }

        ++pos_;
        const auto single = src_.substr(start, 1);
        switch (c) {
            case '+': return {TokenKind::Plus, start, single};
            case '-': return {TokenKind::Minus, start, single};
            case '*': return {TokenKind::Star, start, single};
            case '/': return {TokenKind::Slash, start, single};
            case '^': return {TokenKind::Caret, start, single};
            case '(': return {TokenKind::LParen, start, single};
            case ')': return {TokenKind::RParen, start, single};
            case ',': return {TokenKind::Comma, start, single};
            default: break;
        }
        throw ParseError(start, "number, identifier, operator or parenthesis",
                         "unexpected character '" + std::string(single) + "'");
    }

private:
    Token lex_number(std::size_t start) {
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) throw ParseError(start, "digit", "malformed number");
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            const std::size_t exp_pos = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) throw ParseError(exp_pos, "exponent digits", "malformed number");
        }
        const auto text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
            throw ParseError(start, "finite number", "malformed number");
        }
        return {TokenKind::Number, start, text, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& constants)
        : lexer_(src), constants_(constants) {
        advance();
    }

    Expression parse() {
        if (cur_.kind == TokenKind::End) throw ParseError(cur_.offset, "expression", "empty input");
        NodePtr root = parse_sum();
        if (cur_.kind != TokenKind::End) {
            throw ParseError(cur_.offset, "operator or end of input", "unexpected " + describe(cur_));
        }
        return Expression(std::move(root));
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(TokenKind kind, const char* what) {
        if (cur_.kind != kind) throw ParseError(cur_.offset, what, "unexpected " + describe(cur_));
        advance();
    }

    static NodePtr make(Node::Binary b) { return std::make_shared<const Node>(Node{std::move(b)}); }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        while (cur_.kind == TokenKind::Plus || cur_.kind == TokenKind::Minus) {
            const auto op = cur_.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            lhs = make({op, lhs, parse_product()});
        }
        return lhs;
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        while (cur_.kind == TokenKind::Star || cur_.kind == TokenKind::Slash) {
            const auto op = cur_.kind == TokenKind::Star ? BinaryOp::Mul : BinaryOp::Div;
            advance();
            lhs = make({op, lhs, parse_unary()});
        }
        return lhs;
    }

    NodePtr parse_unary() {
        if (cur_.kind == TokenKind::Minus) {
            advance();
            return std::make_shared<const Node>(Node{Node::Negate{parse_unary()}});
        }
        if (cur_.kind == TokenKind::Plus) {
            advance();
            return parse_unary();
        }
        return parse_power();
    }

    // ^ binds tighter than unary minus (-u^2 == -(u^2)); the exponent may carry
    // its own sign (u^-2).
    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (cur_.kind == TokenKind::Caret) {
            advance();
            return make({BinaryOp::Pow, base, parse_unary()});
        }
        return base;
    }

    NodePtr parse_primary() {
        const Token tok = cur_;
        switch (tok.kind) {
            case TokenKind::Number:
                advance();
                return std::make_shared<const Node>(Node{Node::Number{tok.number}});
            case TokenKind::LParen: {
                advance();
                NodePtr inner = parse_sum();
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::Ident: return parse_identifier(tok);
            default:
                throw ParseError(tok.offset, "number, identifier or '('", "unexpected " + describe(tok));
        }
    }

    NodePtr parse_identifier(const Token& tok) {
        advance();
        if (cur_.kind == TokenKind::LParen) {
            const auto fn = function_from_name(tok.text);
            if (!fn) {
                throw ParseError(tok.offset, "function name",
                                 "unknown function '" + std::string(tok.text) + "'");
            }
            advance();
            std::vector<NodePtr> args;
            args.push_back(parse_sum());
            while (cur_.kind == TokenKind::Comma) {
                advance();
                args.push_back(parse_sum());
            }
            const std::size_t close = cur_.offset;
            expect(TokenKind::RParen, "')' or ','");
            if (args.size() != function_arity(*fn)) {
                throw ParseError(close, std::to_string(function_arity(*fn)) + " argument(s)",
                                 "wrong argument count for '" + std::string(tok.text) + "'");
            }
            return std::make_shared<const Node>(Node{Node::Call{*fn, std::move(args)}});
        }
        if (tok.text == "u") return std::make_shared<const Node>(Node{Node::Var{Variable::U}});
        if (tok.text == "v") return std::make_shared<const Node>(Node{Node::Var{Variable::V}});
        if (function_from_name(tok.text)) {
            throw ParseError(cur_.offset, "'('", "function '" + std::string(tok.text) + "' needs arguments");
        }
        for (const auto& name : constants_) {
            if (name == tok.text) {
                return std::make_shared<const Node>(Node{Node::Constant{std::string(tok.text)}});
            }
        }
        throw ParseError(tok.offset, "u, v or a bound constant",
                         "unknown identifier '" + std::string(tok.text) + "'");
    }

    Lexer lexer_;
    const std::vector<std::string>& constants_;
    Token cur_{TokenKind::End, 0, {}};
};

}  // namespace

Expression parse_expression(std::string_view text, const std::vector<std::string>& constant_names) {
    return Parser(text, constant_names).parse();
}

Expression parse_expression(std::string_view text, const ConstantBindings& known_constants) {
    std::vector<std::string> names;
    names.reserve(known_constants.values().size());
    for (const auto& [name, value] : known_constants.values()) names.push_back(name);
    return parse_expression(text, names);
}

}  // namespace surf4::expr
