#include <cctype>
#include <sstream>

#include "cbcheck/polynomial.hpp"

namespace cbcheck {

namespace {

// Recursive-descent parser for the polynomial input language.
//
//   expr   := ['-'] product (('+'|'-') product)*
//   product:= power (['*'] power)*          (implicit '*' allowed)
//   power  := atom ('^' nat)*
//   atom   := number | var | 'a' | '(' expr ')'
//   number := nat ['/' nat]
class Parser {
public:
    Parser(const std::string& text, PolyRingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at line " << line_ << ", column " << col_ << ": " << msg;
        throw PolyError(os.str());
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    bool starts_atom() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial parse_expr() {
        bool neg = accept('-');
        if (!neg) accept('+');
        Polynomial p = parse_product();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                advance();
                p = p + parse_product();
            } else if (peek() == '-') {
                advance();
                p = p - parse_product();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_product() {
        Polynomial p = parse_power();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                advance();
                p = p * parse_power();
            } else if (starts_atom()) {
                p = p * parse_power();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        while (accept('^')) {
            long e = parse_nat("exponent");
            Polynomial r = Polynomial::constant(ring_, FieldElement::one(ring_->field()));
            for (long i = 0; i < e; ++i) r = r * base;
            base = std::move(r);
        }
        return base;
    }

    long parse_nat(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        if (digits.size() > 18) fail("integer literal too large");
        return std::stol(digits);
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            advance();
            Polynomial p = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) num += advance();
            mpq_class q(num);
            // a '/' directly after a number forms a fraction coefficient
            size_t save_pos = pos_, save_line = line_, save_col = col_;
            skip_ws();
            if (peek() == '/') {
                advance();
                skip_ws();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    std::string den;
                    while (std::isdigit(static_cast<unsigned char>(peek()))) den += advance();
                    if (den == "0") fail("zero denominator");
                    q /= mpq_class(den);
                } else {
                    pos_ = save_pos;
                    line_ = save_line;
                    col_ = save_col;
                }
            } else {
                pos_ = save_pos;
                line_ = save_line;
                col_ = save_col;
            }
            q.canonicalize();
            return Polynomial::constant(ring_, FieldElement::from_mpq(ring_->field(), q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += advance();
            if (auto idx = ring_->var_index(name)) return Polynomial::variable(ring_, *idx);
            if (name == "a" && ring_->field()->kind() == FieldKind::ExtensionField)
                return Polynomial::constant(ring_, FieldElement::generator(ring_->field()));
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }

    const std::string& text_;
    PolyRingPtr ring_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring) {
    return Parser(text, ring).parse();
}

}  // namespace cbcheck
