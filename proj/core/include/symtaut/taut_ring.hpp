#pragma once

// The tautological ring R*(C_d) of the d-th symmetric product of a genus-g
// curve, generated by the point class x and the theta pullback theta.
//
// Classes are stored as raw polynomials in x and theta of a fixed
// codimension m. Monomials with theta exponent > g vanish (theta^{g+1} = 0)
// and are dropped on construction; all other linear relations are only
// resolved by normal_form(), which solves the Gram system of the (perfect)
// intersection pairing against the standard basis of R^{d-m}.

#include "symtaut/curve.hpp"
#include "symtaut/linalg.hpp"
#include "symtaut/rational.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace symtaut {

struct Monomial {
    int x_exp = 0;
    int theta_exp = 0;

    int codim() const noexcept { return x_exp + theta_exp; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class TautClass {
public:
    /// The zero class of codimension `codim` in R*(C_d).
    TautClass(Ambient amb, int codim);

    static TautClass monomial(Ambient amb, Monomial mono, const Rational& coeff = 1);
    static TautClass monomial(Ambient amb, int x_exp, int theta_exp, const Rational& coeff = 1);

    const Ambient& ambient() const noexcept { return amb_; }
    int codim() const noexcept { return codim_; }
    int dimension() const noexcept { return amb_.degree - codim_; }

    /// theta exponent -> coefficient; the x exponent is codim - theta exponent.
    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(int theta_exp) const;

    /// Adds coeff * x^a theta^b; a + b must equal codim().
    TautClass& add_monomial(Monomial mono, const Rational& coeff);

    /// True when no monomial survives; a class can be numerically zero
    /// without being raw zero, see is_zero().
    bool is_raw_zero() const noexcept { return terms_.empty(); }

    TautClass& operator+=(const TautClass& other);
    TautClass& operator-=(const TautClass& other);
    TautClass& operator*=(const Rational& scalar);

    friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
    friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
    friend TautClass operator-(TautClass a) { return a *= Rational(-1); }
    friend TautClass operator*(TautClass a, const Rational& s) { return a *= s; }
    friend TautClass operator*(const Rational& s, TautClass a) { return a *= s; }

    /// Structural (coefficient-wise) equality. Numerical equivalence is equals().
    friend bool operator==(const TautClass&, const TautClass&) = default;

private:
    void check_same_ring(const TautClass& other) const;

    Ambient amb_;
    int codim_;
    std::map<int, Rational> terms_;
};

std::string to_string(const TautClass& c);
std::ostream& operator<<(std::ostream& os, const TautClass& c);

/// theta^s x^{d-s} = s! C(g, s).
Rational intersection_number(const Ambient& amb, int s);

/// Intersection product; theta exponents beyond g are dropped.
TautClass multiply(const TautClass& a, const TautClass& b);
TautClass operator*(const TautClass& a, const TautClass& b);

/// theta^k as a codimension-k class.
TautClass theta_power(const Ambient& amb, int k);
TautClass x_power(const Ambient& amb, int k);

/// Degree of a top-codimension class.
Rational eval_top(const TautClass& a);

/// a . b for classes of complementary codimension.
Rational pairing(const TautClass& a, const TautClass& b);

/// Entry (i, j) = theta^{i+j} x^{d-i-j} = (i+j)! C(g, i+j), the pairing of the
/// i-th standard basis monomial x^{m-i} theta^i of R^m with the j-th one of R^{d-m}.
RatMatrix gram_matrix(const Ambient& amb, int m);

/// Standard basis of R^m: x^m, x^{m-1} theta, ..., x^{m-r(m)} theta^{r(m)}.
std::vector<Monomial> standard_basis(const Ambient& amb, int m);

struct NormalForm {
    Ambient ambient;
    int codim = 0;
    Vector coords;

    TautClass to_class() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const TautClass& a);

/// Pairings of `a` against the standard basis of the complementary degree.
Vector pairing_vector(const TautClass& a);

bool is_zero(const TautClass& a);
bool equals(const TautClass& a, const TautClass& b);

/// normal_form(a) = lambda normal_form(b) with lambda > 0, or both zero.
bool is_positive_multiple(const TautClass& a, const TautClass& b);

/// The lambda with normal_form(a) = lambda normal_form(b), if any (b non-zero).
std::optional<Rational> multiple_factor(const TautClass& a, const TautClass& b);

/// Span of the normal forms of `classes` inside R^codim.
Subspace span_of(const Ambient& amb, int codim, const std::vector<TautClass>& classes);

/// Coordinates of a class in the standard basis (same as normal_form(a).coords).
Vector coordinates(const TautClass& a);

}  // namespace symtaut
