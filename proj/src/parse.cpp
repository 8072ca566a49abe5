#include "pbw/parse.hpp"

#include <cctype>
#include <map>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

enum class TokenKind { number, ident, symbol, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    char symbol = 0;
    int column = 0; // 1-based
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        Token token;
        token.column = static_cast<int>(pos) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            token.kind = TokenKind::number;
            token.text = text.substr(pos, end - pos);
            pos = end;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos;
            while (end < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
                ++end;
            token.kind = TokenKind::ident;
            token.text = text.substr(pos, end - pos);
            pos = end;
        } else if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            token.kind = TokenKind::symbol;
            token.symbol = c;
            ++pos;
        } else {
            throw ParseError("column " + std::to_string(token.column) +
                             ": unexpected character '" + std::string(1, c) + "'");
        }
        tokens.push_back(std::move(token));
    }
    Token end_token;
    end_token.kind = TokenKind::end;
    end_token.column = static_cast<int>(text.size()) + 1;
    tokens.push_back(std::move(end_token));
    return tokens;
}

class Parser {
public:
    Parser(const std::string& text, const BracketTable* table, int standalone_n)
        : tokens_(lex(text)), table_(table), n_(table ? table->n : standalone_n) {
        if (table_)
            for (int i = 1; i <= table_->n; ++i)
                names_.emplace(table_->name_of(i), i);
    }

    FreePoly run() {
        FreePoly result = parse_expr();
        expect_end();
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw ParseError("column " + std::to_string(at.column) + ": " + message);
    }

    bool at_symbol(char c) const {
        return peek().kind == TokenKind::symbol && peek().symbol == c;
    }

    void expect_symbol(char c, const char* context) {
        if (!at_symbol(c))
            fail(peek(), std::string("expected '") + c + "' " + context);
        advance();
    }

    void expect_end() {
        if (peek().kind != TokenKind::end)
            fail(peek(), "unexpected trailing input");
    }

    FreePoly parse_expr() {
        bool negate_first = false;
        if (at_symbol('-')) {
            advance();
            negate_first = true;
        }
        FreePoly result = parse_term();
        if (negate_first)
            result = -result;
        while (at_symbol('+') || at_symbol('-')) {
            const bool plus = peek().symbol == '+';
            advance();
            FreePoly rhs = parse_term();
            if (plus)
                result += rhs;
            else
                result -= rhs;
        }
        return result;
    }

    FreePoly parse_term() {
        FreePoly result = parse_factor();
        while (at_symbol('*')) {
            advance();
            result = result * parse_factor();
        }
        return result;
    }

    FreePoly parse_factor() {
        FreePoly base = parse_atom();
        if (at_symbol('^')) {
            advance();
            if (peek().kind != TokenKind::number)
                fail(peek(), "expected a nonnegative integer exponent");
            const int e = parse_nat(advance());
            base = pow(base, e);
        }
        return base;
    }

    int parse_nat(const Token& token) const {
        if (token.text.size() > 9)
            fail(token, "number too large");
        return std::stoi(token.text);
    }

    FreePoly parse_atom() {
        const Token& token = peek();
        if (token.kind == TokenKind::number) {
            advance();
            BigInt num(token.text);
            if (at_symbol('/')) {
                advance();
                if (peek().kind != TokenKind::number)
                    fail(peek(), "expected a positive integer denominator");
                const Token& den_token = advance();
                BigInt den(den_token.text);
                if (den == 0)
                    fail(den_token, "zero denominator");
                return FreePoly::unit(n_, Rational(num, den));
            }
            return FreePoly::unit(n_, Rational(num));
        }
        if (token.kind == TokenKind::ident)
            return parse_generator();
        if (at_symbol('(')) {
            advance();
            FreePoly inner = parse_expr();
            expect_symbol(')', "to close the parenthesis");
            return inner;
        }
        if (at_symbol('[')) {
            const Token open = token;
            if (!table_)
                fail(open, "the bracket form requires an algebra context");
            advance();
            FreePoly left = parse_expr();
            expect_symbol(',', "between bracket operands");
            FreePoly right = parse_expr();
            expect_symbol(']', "to close the bracket");
            require_linear(left, open);
            require_linear(right, open);
            return bracket(*table_, left, right);
        }
        fail(token, "expected a rational, a generator, '(' or '['");
    }

    void require_linear(const FreePoly& p, const Token& at) const {
        for (const auto& [w, c] : p.terms())
            if (w.degree() != 1)
                fail(at, "bracket operand is not degree-1 homogeneous");
    }

    FreePoly parse_generator() {
        const Token token = advance();
        auto named = names_.find(token.text);
        if (named != names_.end())
            return FreePoly::generator(n_, named->second);
        if (token.text.size() > 1 && token.text[0] == 'X') {
            bool digits = true;
            for (std::size_t k = 1; k < token.text.size(); ++k)
                digits = digits && std::isdigit(static_cast<unsigned char>(token.text[k]));
            if (digits) {
                if (token.text.size() > 9)
                    fail(token, "generator index too large");
                const int i = std::stoi(token.text.substr(1));
                if (i < 1 || i > n_)
                    fail(token, "generator index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(n_));
                return FreePoly::generator(n_, i);
            }
        }
        fail(token, "unknown generator name '" + token.text + "'");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const BracketTable* table_;
    int n_;
    std::map<std::string, int> names_;
};

// Largest X<k> index mentioned, for the context-free parse.
int scan_max_index(const std::string& text) {
    int max_index = 1;
    for (const Token& token : lex(text)) {
        if (token.kind != TokenKind::ident || token.text.size() < 2 || token.text[0] != 'X')
            continue;
        bool digits = true;
        for (std::size_t k = 1; k < token.text.size(); ++k)
            digits = digits && std::isdigit(static_cast<unsigned char>(token.text[k]));
        if (digits && token.text.size() <= 9)
            max_index = std::max(max_index, std::stoi(token.text.substr(1)));
    }
    return max_index;
}

} // namespace

ParsedExpression parse_expression(const std::string& text, const BracketTable& context) {
    Parser parser(text, &context, 0);
    return {text, parser.run()};
}

ParsedExpression parse_expression(const std::string& text) {
    Parser parser(text, nullptr, scan_max_index(text));
    return {text, parser.run()};
}

ParsedExpression parse_expression(const std::string& text, int gen_count) {
    if (gen_count < 1)
        throw DomainError("generator count must be >= 1");
    Parser parser(text, nullptr, gen_count);
    return {text, parser.run()};
}

} // namespace pbw
