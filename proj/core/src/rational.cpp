#include "symtaut/rational.hpp"

#include "symtaut/errors.hpp"

#include <cctype>

namespace symtaut {

Integer factorial(int n) {
    if (n < 0) {
        throw ParameterError("factorial of negative integer " + std::to_string(n));
    }
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer falling_factorial(int g, int s) {
    if (s < 0) {
        throw ParameterError("falling factorial with negative length");
    }
    Integer out = 1;
    for (int k = 0; k < s; ++k) {
        out *= (g - k);
    }
    return out;
}

Rational binomial(const Rational& upper, int n) {
    if (n < 0) {
        throw ParameterError("binomial with negative lower index");
    }
    Rational out = 1;
    for (int k = 0; k < n; ++k) {
        out *= (upper - k);
        out /= (k + 1);
    }
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    for (std::size_t k = start; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParameterError("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num.front() == '+' ? num.substr(1) : num);
    Integer p(n, 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw ParameterError("zero denominator in '" + std::string(text) + "'");
    }
    Rational out(p, q);
    out.canonicalize();
    return out;
}

long ceil_div(long num, long den) {
    long q = num / den;
    if (num % den != 0 && ((num > 0) == (den > 0))) {
        ++q;
    }
    return q;
}

}  // namespace symtaut
