#include "symtaut/bn_classes.hpp"

#include "symtaut/errors.hpp"

#include <algorithm>
#include <string>

namespace symtaut {

namespace {

std::string triple(int g, int r, int d) {
    return "(g, r, d) = (" + std::to_string(g) + ", " + std::to_string(r) + ", " + std::to_string(d) + ")";
}

// sum_{k=0}^{top} C(upper, k) x^{k+shift} theta^{top-k}/(top-k)!
TautClass binomial_series(const Ambient& amb, const Rational& upper, int top, int shift) {
    TautClass c(amb, top + shift);
    for (int k = 0; k <= top; ++k) {
        Rational coeff = binomial(upper, k) / Rational(factorial(top - k));
        c.add_monomial(Monomial{k + shift, top - k}, coeff);
    }
    return c;
}

// sum_{a=0}^{top} (-1)^a x^{a+shift} theta^{top-a}/(top-a)!
TautClass alternating_series(const Ambient& amb, int top, int shift) {
    return binomial_series(amb, Rational(-1), top, shift);
}

void require_hyperelliptic(const CurveParams& curve) {
    if (curve.kind() != CurveKind::Hyperelliptic) {
        throw ParameterError("hyperelliptic class requested on a " + std::string(to_string(curve.kind())) +
                             " curve");
    }
}

}  // namespace

long rho(int g, int r, int d) {
    return static_cast<long>(g) - static_cast<long>(r + 1) * (g - d + r);
}

std::optional<int> GonalityIndex::value() const {
    if (exact()) {
        return lower;
    }
    return std::nullopt;
}

GonalityIndex gonality_index(const CurveParams& curve, int r) {
    if (r < 1) {
        throw ParameterError("gonality index needs r >= 1");
    }
    const int g = curve.genus();
    if (r >= g) {
        return {g + r, g + r};
    }
    if (r == g - 1) {
        return {2 * g - 2, 2 * g - 2};
    }
    switch (curve.kind()) {
    case CurveKind::BrillNoetherGeneral: {
        const int gamma = gamma_bound(g, r);
        return {gamma, gamma};
    }
    case CurveKind::Hyperelliptic:
        return {2 * r, 2 * r};
    case CurveKind::Custom:
        if (auto it = curve.gonality_overrides().find(r); it != curve.gonality_overrides().end()) {
            return {it->second, it->second};
        }
        break;
    }
    return {2 * r, gamma_bound(g, r)};
}

bool degree_reaches_gonality(const CurveParams& curve, int r, int d) {
    return d >= gonality_index(curve, r).upper;
}

CastelnuovoCount castelnuovo_count(int g, int r, int d) {
    if (g < 0 || r < 0) {
        throw ParameterError("castelnuovo_count needs g, r >= 0");
    }
    if (rho(g, r, d) != 0) {
        throw ParameterError("castelnuovo_count needs rho = 0, got rho = " + std::to_string(rho(g, r, d)) +
                             " at " + triple(g, r, d));
    }
    // rho = 0 forces g - d + r >= 0, so every factorial below has a non-negative argument.
    const int k = g - d + r;
    Rational prod = 1;
    for (int i = 1; i <= r; ++i) {
        prod *= Rational(factorial(i)) / Rational(factorial(k + i));
    }
    CastelnuovoCount out;
    out.index_from_one = Rational(factorial(g)) * prod;
    out.index_from_zero = out.index_from_one / Rational(factorial(k));
    return out;
}

TautClass class_Cdr(const Ambient& amb, int r) {
    const int g = amb.genus;
    const int d = amb.degree;
    if (r < std::max(1, d - g + 1) || d > 2 * g - 2) {
        throw ParameterError("class_Cdr needs max{1, d-g+1} <= r and d <= 2g-2 at " + triple(g, r, d));
    }
    const int k = g - d + r;  // >= 1
    const int codim = r * k;
    if (codim > d) {
        throw ParameterError("c_d^r has codimension " + std::to_string(codim) + " > d at " + triple(g, r, d));
    }
    Rational prefactor = 1;
    for (int i = 0; i <= r; ++i) {
        prefactor *= Rational(factorial(i)) / Rational(factorial(k + i - 1));
    }
    TautClass c(amb, codim);
    for (int a = 0; a <= std::min(r, codim); ++a) {
        Rational coeff = Rational(factorial(k + a - 1)) / Rational(factorial(a) * factorial(r - a));
        if (a % 2 == 1) {
            coeff = -coeff;
        }
        c.add_monomial(Monomial{a, codim - a}, prefactor * coeff);
    }
    return c;
}

TautClass class_clBN(const Ambient& amb) {
    const int g = amb.genus;
    const int d = amb.degree;
    if (d < g || d > 2 * g - 2) {
        throw ParameterError("class_clBN needs g <= d <= 2g-2");
    }
    return alternating_series(amb, d - g + 1, 0);
}

TautClass class_subordinate(const Ambient& amb, int l, int s) {
    const int d = amb.degree;
    if (!(l >= d && d >= s && s >= 0)) {
        throw ParameterError("class_subordinate needs l >= d >= s >= 0");
    }
    return binomial_series(amb, Rational(l - amb.genus - s), d - s, 0);
}

TautClass class_Gamma_i(const CurveParams& curve, int n, int i) {
    const int g = curve.genus();
    const int d = curve.degree();
    if (n < 1 || n > d) {
        throw ParameterError("class_Gamma_i needs 1 <= n <= d");
    }
    if (i < 0 || i > std::min(n, g)) {
        throw ParameterError("class_Gamma_i needs 0 <= i <= min{n, g}");
    }
    if (!degree_reaches_gonality(curve, n, d)) {
        throw ParameterError("class_Gamma_i needs d >= gon_" + std::to_string(n) + "(C)");
    }
    const int top = d - i - n;
    if (top < 0) {
        return TautClass(curve.ambient(), d - n);
    }
    return binomial_series(curve.ambient(), Rational(d - g - n), top, i);
}

TautClass class_Upsilon_i(const Ambient& amb, int i) {
    const int g = amb.genus;
    const int d = amb.degree;
    if (d < g || d > 2 * g - 2) {
        throw ParameterError("class_Upsilon_i needs g <= d <= 2g-2");
    }
    if (i < 0 || i > d - g) {
        throw ParameterError("class_Upsilon_i needs 0 <= i <= d-g");
    }
    return alternating_series(amb, d - g + 1 - i, i);
}

TautClass class_Upsilon_i_hyper(const CurveParams& curve, int n, int i) {
    require_hyperelliptic(curve);
    const int g = curve.genus();
    const int d = curve.degree();
    if (!(0 <= d - n && d - n <= n && n < g)) {
        throw ParameterError("class_Upsilon_i_hyper needs 0 <= d-n <= n < g");
    }
    if (i < 0 || i > d - n) {
        throw ParameterError("class_Upsilon_i_hyper needs 0 <= i <= d-n");
    }
    return binomial_series(curve.ambient(), Rational(n - g), d - n - i, i);
}

TautClass class_Cdr_hyper(const CurveParams& curve, int r) {
    require_hyperelliptic(curve);
    const int g = curve.genus();
    const int d = curve.degree();
    if (d > 2 * g - 2 || r < std::max(0, d - g + 1) || 2 * r > d) {
        throw ParameterError("class_Cdr_hyper needs d <= 2g-2 and max{0, d-g+1} <= r <= d/2 at " +
                             triple(g, r, d));
    }
    return binomial_series(curve.ambient(), Rational(d - r - g), r, 0);
}

TautClass push_A_subordinate(int g, int r, int i) {
    if (g < 0 || r < 1 || i < 0) {
        throw ParameterError("push_A_subordinate needs g >= 0, r >= 1, i >= 0");
    }
    const Ambient amb{g, 2 * r + i};
    return Rational(factorial(i)) * binomial_series(amb, Rational(r - g + i), r, 0);
}

TautClass eta_class(const Ambient& amb) {
    TautClass c = TautClass::monomial(amb, 1, 0, Rational(amb.degree) * amb.genus);
    c.add_monomial(Monomial{0, 1}, Rational(-1));
    return c;
}

int contractibility_index(const TautClass& a) {
    const int k = a.dimension();
    for (int j = 0; j <= k; ++j) {
        if (is_zero(multiply(a, theta_power(a.ambient(), j)))) {
            return k + 1 - j;
        }
    }
    return 0;
}

}  // namespace symtaut
