#include "germ/parser.hpp"

#include <cctype>

#include "germ/error.hpp"

namespace germ {

namespace {

enum class TokKind { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        int line = line_, column = column_;
        if (pos_ >= text_.size()) return {TokKind::End, "", line, column};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_]);
                advance();
            }
            return {TokKind::Integer, digits, line, column};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name.push_back(text_[pos_]);
                advance();
            }
            return {TokKind::Ident, name, line, column};
        }
        advance();
        switch (c) {
        case '+': return {TokKind::Plus, "+", line, column};
        case '-': return {TokKind::Minus, "-", line, column};
        case '*': return {TokKind::Star, "*", line, column};
        case '^': return {TokKind::Caret, "^", line, column};
        case '/': return {TokKind::Slash, "/", line, column};
        case '(': return {TokKind::LParen, "(", line, column};
        case ')': return {TokKind::RParen, ")", line, column};
        default:
            throw ParseError(line, column, DiagnosticKind::Syntax,
                             std::string("unexpected character '") + c + "'");
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, RingPtr ring)
        : lexer_(text), ring_(std::move(ring)), tok_(lexer_.next()) {}

    Polynomial run() {
        Polynomial f = expression();
        expect_end();
        return f;
    }

private:
    static constexpr std::uint32_t kMaxExponent = 100000;

    [[noreturn]] void fail(const Token& at, DiagnosticKind kind, const std::string& msg) {
        throw ParseError(at.line, at.column, kind, msg);
    }

    void bump() { tok_ = lexer_.next(); }

    void expect_end() {
        if (tok_.kind != TokKind::End) {
            fail(tok_, DiagnosticKind::Syntax, "expected operator or end of input");
        }
    }

    Polynomial expression() {
        bool negate = false;
        if (tok_.kind == TokKind::Plus) {
            bump();
        } else if (tok_.kind == TokKind::Minus) {
            negate = true;
            bump();
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (tok_.kind == TokKind::Plus || tok_.kind == TokKind::Minus) {
            bool minus = tok_.kind == TokKind::Minus;
            bump();
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (tok_.kind == TokKind::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (tok_.kind == TokKind::Minus) {
            bump();
            return -factor();
        }
        return base();
    }

    Polynomial base() {
        Token at = tok_;
        switch (tok_.kind) {
        case TokKind::Integer: {
            Scalar c = literal();
            Polynomial f = Polynomial::constant(ring_, c);
            if (tok_.kind == TokKind::Caret) return f.pow(exponent());
            return f;
        }
        case TokKind::Ident: {
            auto idx = ring_->var_index(at.text);
            if (!idx) {
                fail(at, DiagnosticKind::UnknownVariable, "unknown variable '" + at.text + "'");
            }
            bump();
            Polynomial f = Polynomial::variable(ring_, *idx);
            if (tok_.kind == TokKind::Caret) return f.pow(exponent());
            return f;
        }
        case TokKind::LParen: {
            bump();
            Polynomial f = expression();
            if (tok_.kind != TokKind::RParen) {
                fail(tok_, DiagnosticKind::Syntax, "expected ')'");
            }
            bump();
            if (tok_.kind == TokKind::Caret) return f.pow(exponent());
            return f;
        }
        default:
            fail(at, DiagnosticKind::Syntax, "expected a literal, variable or '('");
        }
    }

    // Integer or num/den literal, mapped into the coefficient field.
    Scalar literal() {
        Token at = tok_;
        mpz_class num(at.text);
        bump();
        if (tok_.kind != TokKind::Slash) {
            return Scalar::of_integer(num, ring_->field());
        }
        bump();
        if (tok_.kind != TokKind::Integer) {
            fail(tok_, DiagnosticKind::Syntax, "expected denominator");
        }
        mpz_class den(tok_.text);
        bump();
        try {
            return Scalar::fraction(num, den, ring_->field());
        } catch (const DivisionByZeroError&) {
            if (den == 0) {
                fail(at, DiagnosticKind::BadCoefficient, "zero denominator");
            }
            fail(at, DiagnosticKind::BadCoefficient,
                 "denominator vanishes in characteristic " +
                     std::to_string(ring_->field().characteristic()));
        }
    }

    std::uint32_t exponent() {
        bump(); // past '^'
        if (tok_.kind != TokKind::Integer) {
            fail(tok_, DiagnosticKind::Syntax, "expected a non-negative integer exponent");
        }
        mpz_class e(tok_.text);
        if (e > kMaxExponent) fail(tok_, DiagnosticKind::Syntax, "exponent too large");
        bump();
        return static_cast<std::uint32_t>(e.get_ui());
    }

    Lexer lexer_;
    RingPtr ring_;
    Token tok_;
};

std::string monomial_str(const Monomial& m, const RingContext& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.var_name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

std::string print_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const RingContext& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Scalar c = t.coeff;
        bool negative = false;
        if (ring.field().is_rationals() && sgn(c.rational()) < 0) {
            negative = true;
            c = -c;
        }
        std::string mono = monomial_str(t.mono, ring);
        std::string body;
        if (mono.empty()) {
            body = c.str();
        } else if (c.is_one()) {
            body = mono;
        } else {
            body = c.str() + "*" + mono;
        }
        if (first) {
            out += negative ? "-" : "";
            first = false;
        } else {
            out += negative ? "-" : "+";
        }
        out += body;
    }
    return out;
}

} // namespace germ
