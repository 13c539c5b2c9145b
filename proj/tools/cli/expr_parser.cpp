#include "expr_parser.hpp"

#include "symtaut/errors.hpp"

#include <cctype>
#include <string>

namespace symtaut::cli {

namespace {

Polynomial constant(const Rational& c) {
    Polynomial p;
    if (c != 0) {
        p[{0, 0}] = c;
    }
    return p;
}

void accumulate(Polynomial& p, std::pair<int, int> key, const Rational& c) {
    auto& slot = p[key];
    slot += c;
    if (slot == 0) {
        p.erase(key);
    }
}

Polynomial times(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            accumulate(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
        }
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParameterError("expression error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= s_.size()) {
            return false;
        }
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == 'x' || c == 't' || c == '(' ||
               s_.substr(pos_, 2) == "\xce\xb8";
    }

    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    int exponent() {
        if (!eat('^')) {
            return 1;
        }
        const Integer e = integer();
        if (!e.fits_sint_p() || e > 1000) {
            fail("exponent too large");
        }
        return static_cast<int>(e.get_si());
    }

    Polynomial expr() {
        Polynomial p;
        bool negate = false;
        if (eat('-')) {
            negate = true;
        } else {
            eat('+');
        }
        for (;;) {
            Polynomial t = term();
            for (const auto& [k, c] : t) {
                accumulate(p, k, negate ? Rational(-c) : c);
            }
            if (eat('+')) {
                negate = false;
            } else if (eat('-')) {
                negate = true;
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            if (eat('*')) {
                p = times(p, factor());
            } else if (eat('/')) {
                const Integer den = integer();
                if (den == 0) {
                    fail("division by zero");
                }
                for (auto& [k, c] : p) {
                    c /= Rational(den);
                }
            } else if (at_factor_start()) {
                p = times(p, factor());
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= s_.size()) {
            fail("unexpected end of expression");
        }
        if (eat('(')) {
            Polynomial inner = expr();
            if (!eat(')')) {
                fail("missing ')'");
            }
            Polynomial out = constant(1);
            for (int e = exponent(); e > 0; --e) {
                out = times(out, inner);
            }
            return out;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
            return constant(Rational(integer()));
        }
        if (s_.substr(pos_, 5) == "theta") {
            pos_ += 5;
            return Polynomial{{{0, exponent()}, Rational(1)}};
        }
        if (s_.substr(pos_, 2) == "\xce\xb8") {
            pos_ += 2;
            return Polynomial{{{0, exponent()}, Rational(1)}};
        }
        if (s_[pos_] == 'x') {
            ++pos_;
            return Polynomial{{{exponent(), 0}, Rational(1)}};
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    return Parser(text).parse();
}

TautClass parse_class(std::string_view text, const Ambient& amb) {
    const Polynomial p = parse_polynomial(text);
    int codim = -1;
    for (const auto& [k, c] : p) {
        const int deg = k.first + k.second;
        if (codim >= 0 && deg != codim) {
            throw ParameterError("expression is not homogeneous (degrees " + std::to_string(codim) + " and " +
                                 std::to_string(deg) + ")");
        }
        codim = deg;
    }
    if (codim < 0) {
        throw ParameterError("expression is identically zero; its codimension is undetermined");
    }
    if (codim > amb.degree) {
        throw ParameterError("expression has codimension " + std::to_string(codim) + " > d = " +
                             std::to_string(amb.degree));
    }
    TautClass out(amb, codim);
    for (const auto& [k, c] : p) {
        out.add_monomial(Monomial{k.first, k.second}, c);
    }
    return out;
}

}  // namespace symtaut::cli
