#include "symtaut/taut_ring.hpp"

#include "symtaut/errors.hpp"

#include <sstream>

namespace symtaut {

namespace {

void check_ambient(const Ambient& amb) {
    if (amb.genus < 0) {
        throw ParameterError("genus must be non-negative");
    }
    if (amb.degree < 1) {
        throw ParameterError("degree must be positive");
    }
}

void check_codim(const Ambient& amb, int codim) {
    if (codim < 0 || codim > amb.degree) {
        throw ParameterError("codimension " + std::to_string(codim) + " outside [0, " +
                             std::to_string(amb.degree) + "]");
    }
}

std::string ring_name(const Ambient& amb) {
    return "R*(C_" + std::to_string(amb.degree) + ", g=" + std::to_string(amb.genus) + ")";
}

}  // namespace

TautClass::TautClass(Ambient amb, int codim) : amb_(amb), codim_(codim) {
    check_ambient(amb);
    check_codim(amb, codim);
}

TautClass TautClass::monomial(Ambient amb, Monomial mono, const Rational& coeff) {
    TautClass c(amb, mono.codim());
    c.add_monomial(mono, coeff);
    return c;
}

TautClass TautClass::monomial(Ambient amb, int x_exp, int theta_exp, const Rational& coeff) {
    return monomial(amb, Monomial{x_exp, theta_exp}, coeff);
}

Rational TautClass::coefficient(int theta_exp) const {
    auto it = terms_.find(theta_exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

TautClass& TautClass::add_monomial(Monomial mono, const Rational& coeff) {
    if (mono.x_exp < 0 || mono.theta_exp < 0) {
        throw ParameterError("negative exponent in monomial");
    }
    if (mono.codim() != codim_) {
        throw ParameterError("monomial of codimension " + std::to_string(mono.codim()) +
                             " added to a class of codimension " + std::to_string(codim_));
    }
    if (mono.theta_exp > amb_.genus || coeff == 0) {
        return *this;
    }
    // Callers may hand in an unreduced p/q; GMP arithmetic assumes canonical operands.
    Rational c = coeff;
    c.canonicalize();
    auto& slot = terms_[mono.theta_exp];
    slot += c;
    if (slot == 0) {
        terms_.erase(mono.theta_exp);
    }
    return *this;
}

void TautClass::check_same_ring(const TautClass& other) const {
    if (amb_ != other.amb_) {
        throw ContextMismatch("classes live in different rings: " + ring_name(amb_) + " vs " +
                              ring_name(other.amb_));
    }
}

TautClass& TautClass::operator+=(const TautClass& other) {
    check_same_ring(other);
    if (codim_ != other.codim_) {
        throw ParameterError("cannot add classes of different codimension");
    }
    for (const auto& [b, c] : other.terms_) {
        add_monomial(Monomial{codim_ - b, b}, c);
    }
    return *this;
}

TautClass& TautClass::operator-=(const TautClass& other) {
    return *this += (-1 * other);
}

TautClass& TautClass::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    Rational s = scalar;
    s.canonicalize();
    for (auto& [b, c] : terms_) {
        c *= s;
    }
    return *this;
}

std::string to_string(const TautClass& c) {
    if (c.is_raw_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest theta power first, matching the usual way these classes are written.
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        const int b = it->first;
        const int a = c.codim() - b;
        Rational coeff = it->second;
        if (first) {
            if (coeff < 0) {
                os << "-";
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        coeff = abs(coeff);
        std::ostringstream mono;
        if (a > 0) {
            mono << "x";
            if (a > 1) {
                mono << "^" << a;
            }
        }
        if (b > 0) {
            if (a > 0) {
                mono << "*";
            }
            mono << "theta";
            if (b > 1) {
                mono << "^" << b;
            }
        }
        const std::string m = mono.str();
        if (m.empty()) {
            os << to_string(coeff);
        } else if (coeff == 1) {
            os << m;
        } else {
            os << to_string(coeff) << "*" << m;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TautClass& c) {
    return os << to_string(c);
}

Rational intersection_number(const Ambient& amb, int s) {
    check_ambient(amb);
    if (s < 0 || s > amb.degree) {
        throw ParameterError("theta exponent " + std::to_string(s) + " outside [0, d]");
    }
    if (s > amb.genus) {
        return 0;
    }
    return Rational(falling_factorial(amb.genus, s));
}

TautClass multiply(const TautClass& a, const TautClass& b) {
    if (a.ambient() != b.ambient()) {
        throw ContextMismatch("cannot multiply classes from different rings");
    }
    const int codim = a.codim() + b.codim();
    if (codim > a.ambient().degree) {
        throw ParameterError("product codimension " + std::to_string(codim) + " exceeds d = " +
                             std::to_string(a.ambient().degree));
    }
    TautClass out(a.ambient(), codim);
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            out.add_monomial(Monomial{codim - ba - bb, ba + bb}, ca * cb);
        }
    }
    return out;
}

TautClass operator*(const TautClass& a, const TautClass& b) {
    return multiply(a, b);
}

TautClass theta_power(const Ambient& amb, int k) {
    return TautClass::monomial(amb, 0, k);
}

TautClass x_power(const Ambient& amb, int k) {
    return TautClass::monomial(amb, k, 0);
}

Rational eval_top(const TautClass& a) {
    if (a.codim() != a.ambient().degree) {
        throw ParameterError("eval_top needs a class of codimension d");
    }
    Rational total = 0;
    for (const auto& [b, c] : a.terms()) {
        total += c * intersection_number(a.ambient(), b);
    }
    return total;
}

Rational pairing(const TautClass& a, const TautClass& b) {
    if (a.ambient() != b.ambient()) {
        throw ContextMismatch("cannot pair classes from different rings");
    }
    if (a.codim() + b.codim() != a.ambient().degree) {
        throw ParameterError("pairing needs complementary codimensions");
    }
    return eval_top(multiply(a, b));
}

RatMatrix gram_matrix(const Ambient& amb, int m) {
    check_ambient(amb);
    check_codim(amb, m);
    const auto n = static_cast<std::size_t>(standard_rank(amb, m) + 1);
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gram(i, j) = intersection_number(amb, static_cast<int>(i + j));
        }
    }
    return gram;
}

std::vector<Monomial> standard_basis(const Ambient& amb, int m) {
    check_codim(amb, m);
    std::vector<Monomial> basis;
    for (int b = 0; b <= standard_rank(amb, m); ++b) {
        basis.push_back(Monomial{m - b, b});
    }
    return basis;
}

Vector pairing_vector(const TautClass& a) {
    const Ambient& amb = a.ambient();
    const int r = standard_rank(amb, a.codim());
    Vector p(static_cast<std::size_t>(r + 1), Rational(0));
    for (int j = 0; j <= r; ++j) {
        for (const auto& [b, c] : a.terms()) {
            p[static_cast<std::size_t>(j)] += c * intersection_number(amb, b + j);
        }
    }
    return p;
}

NormalForm normal_form(const TautClass& a) {
    // The Gram matrix is Hankel, hence symmetric, so G c = p gives the
    // coordinates c whose pairings with the complementary basis are p.
    NormalForm nf{a.ambient(), a.codim(), {}};
    nf.coords = solve(gram_matrix(a.ambient(), a.codim()), pairing_vector(a));
    return nf;
}

Vector coordinates(const TautClass& a) {
    return normal_form(a).coords;
}

TautClass NormalForm::to_class() const {
    TautClass c(ambient, codim);
    for (std::size_t b = 0; b < coords.size(); ++b) {
        c.add_monomial(Monomial{codim - static_cast<int>(b), static_cast<int>(b)}, coords[b]);
    }
    return c;
}

bool is_zero(const TautClass& a) {
    return is_zero_vector(pairing_vector(a));
}

bool equals(const TautClass& a, const TautClass& b) {
    if (a.ambient() != b.ambient()) {
        throw ContextMismatch("cannot compare classes from different rings");
    }
    if (a.codim() != b.codim()) {
        throw ParameterError("cannot compare classes of different codimension");
    }
    return is_zero(a - b);
}

std::optional<Rational> multiple_factor(const TautClass& a, const TautClass& b) {
    if (a.ambient() != b.ambient() || a.codim() != b.codim()) {
        return std::nullopt;
    }
    const Vector va = coordinates(a);
    const Vector vb = coordinates(b);
    std::optional<Rational> lambda;
    for (std::size_t k = 0; k < vb.size(); ++k) {
        if (vb[k] != 0) {
            lambda = va[k] / vb[k];
            break;
        }
    }
    if (!lambda) {
        return std::nullopt;
    }
    for (std::size_t k = 0; k < vb.size(); ++k) {
        if (va[k] != *lambda * vb[k]) {
            return std::nullopt;
        }
    }
    return lambda;
}

bool is_positive_multiple(const TautClass& a, const TautClass& b) {
    if (a.ambient() != b.ambient() || a.codim() != b.codim()) {
        return false;
    }
    const bool za = is_zero(a);
    const bool zb = is_zero(b);
    if (za || zb) {
        return za && zb;
    }
    auto lambda = multiple_factor(a, b);
    return lambda.has_value() && *lambda > 0;
}

Subspace span_of(const Ambient& amb, int codim, const std::vector<TautClass>& classes) {
    const auto n = static_cast<std::size_t>(standard_rank(amb, codim) + 1);
    std::vector<Vector> coords;
    coords.reserve(classes.size());
    for (const auto& c : classes) {
        if (c.ambient() != amb || c.codim() != codim) {
            throw ContextMismatch("class does not live in R^" + std::to_string(codim));
        }
        coords.push_back(coordinates(c));
    }
    return Subspace::span(n, coords);
}

}  // namespace symtaut
