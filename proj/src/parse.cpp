#include "whtk/parse.hpp"

#include <cctype>

#include "whtk/error.hpp"

namespace whtk {
namespace {

// Recursive-descent evaluator over RationalFunction:
//   expr   -> unary (('+' | '-') unary)*
//   unary  -> ('+' | '-') unary | power
//   power  -> atom ('^' INTEGER)?
//   atom   -> RATIONAL 'i'? | 'i' | 'z' | '(' expr ')'
// with '*' and '/' between unary and expr levels:
//   unary-product chain handled in term().
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RationalFunction run() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    RationalFunction term() {
        RationalFunction v = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v *= unary();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                RationalFunction d = unary();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RationalFunction unary() {
        skip_ws();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(peek())) fail("expected a nonnegative integer exponent");
        long e = 0;
        while (std::isdigit(peek())) {
            e = e * 10 + (text_[pos_++] - '0');
            if (e > 4096) throw ParseError(at, "exponent too large");
        }
        RationalFunction v = RationalFunction::one();
        for (long s = 0; s < e; ++s) v *= base;
        return v;
    }

    RationalFunction atom() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return RationalFunction(Polynomial::z());
        }
        if (c == 'i') {
            ++pos_;
            return RationalFunction(GR::i());
        }
        if (std::isdigit(c)) {
            Rational r = number(at);
            if (accept('i')) return RationalFunction(GR(Rational(0), r));
            return RationalFunction(GR(r));
        }
        fail("expected a number, 'z', 'i' or '('");
    }

    // digits ('/' digits)?; the '/' is consumed only when a digit follows, so
    // "1/(z-1)" lexes as the number 1 followed by the division operator.
    Rational number(std::size_t at) {
        mpz_class num = digits();
        if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(text_[pos_ + 1])) {
            ++pos_;
            mpz_class den = digits();
            if (den == 0) throw ParseError(at, "rational with zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    mpz_class digits() {
        std::string d;
        while (std::isdigit(peek())) d += text_[pos_++];
        return mpz_class(d);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
    return Parser(text).run();
}

Polynomial parse_polynomial(const std::string& text) {
    RationalFunction f = parse_rational_function(text);
    if (!f.is_polynomial()) throw ParseError(0, "expression is not a polynomial");
    return f.num();
}

RatMatFun parse_matrix(const InputDocument& doc) {
    const int m = doc.size > 0 ? doc.size : static_cast<int>(doc.entries.size());
    if (m == 0 || static_cast<int>(doc.entries.size()) != m)
        throw ParseError(0, "matrix grid is empty or its row count does not match the size");
    std::vector<std::vector<RationalFunction>> entries(m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(doc.entries[i].size()) != m)
            throw ParseError(0, "matrix grid is not square (row " + std::to_string(i) + ")");
        for (int j = 0; j < m; ++j) {
            try {
                entries[i].push_back(parse_rational_function(doc.entries[i][j]));
            } catch (const ParseError& e) {
                std::string w = e.what();
                if (auto cut = w.rfind(" (at offset"); cut != std::string::npos) w.resize(cut);
                if (w.rfind("ParseError: ", 0) == 0) w = w.substr(12);
                throw ParseError(e.offset, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                               "): " + w);
            }
        }
    }
    try {
        return ratmat_from_entries(entries);
    } catch (const ZeroDeterminant& e) {
        throw SingularMatrix(e.what());
    }
}

}  // namespace whtk
