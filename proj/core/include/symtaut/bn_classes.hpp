#pragma once

// Numeric Brill-Noether invariants and the closed-form classes of
// Brill-Noether loci, subordinate loci and their Abel-Jacobi degenerations.

#include "symtaut/curve.hpp"
#include "symtaut/rational.hpp"
#include "symtaut/taut_ring.hpp"

#include <optional>

namespace symtaut {

/// g - (r+1)(g-d+r).
long rho(int g, int r, int d);

/// gon_r(C), either exact (lower == upper) or only known to lie in [lower, upper].
struct GonalityIndex {
    int lower = 0;
    int upper = 0;

    bool exact() const noexcept { return lower == upper; }
    std::optional<int> value() const;
    friend bool operator==(const GonalityIndex&, const GonalityIndex&) = default;
};

GonalityIndex gonality_index(const CurveParams& curve, int r);

/// True when d >= gon_r(C) is certain; false when it fails or is undecidable.
bool degree_reaches_gonality(const CurveParams& curve, int r, int d);

/// g! prod i!/(g-d+r+i)!, once over i = 1..r and once over i = 0..r.
struct CastelnuovoCount {
    Rational index_from_one;
    Rational index_from_zero;
};

CastelnuovoCount castelnuovo_count(int g, int r, int d);

/// c_d^r, of codimension r(g-d+r). Needs max{1, d-g+1} <= r and d <= 2g-2.
TautClass class_Cdr(const Ambient& amb, int r);

/// sum_a (-1)^a x^a theta^{d-g+1-a}/(d-g+1-a)!, for g <= d <= 2g-2.
TautClass class_clBN(const Ambient& amb);

/// sum_k C(l-g-s, k) x^k theta^{d-s-k}/(d-s-k)!, the class of the degree-d
/// divisors subordinate to an s-dimensional series of degree l; l >= d >= s >= 0.
TautClass class_subordinate(const Ambient& amb, int l, int s);

/// [Gamma_i] of dimension n; needs d >= gon_n(C) and 0 <= i <= min{n, g}.
TautClass class_Gamma_i(const CurveParams& curve, int n, int i);

/// [Upsilon_i] of dimension g-1, for g <= d <= 2g-2 and 0 <= i <= d-g.
TautClass class_Upsilon_i(const Ambient& amb, int i);

/// [Upsilon_i^H] of dimension n on a hyperelliptic curve, 0 <= d-n <= n < g, 0 <= i <= d-n.
TautClass class_Upsilon_i_hyper(const CurveParams& curve, int n, int i);

/// Representative of the ray of [C_d^r] on a hyperelliptic curve.
TautClass class_Cdr_hyper(const CurveParams& curve, int r);

/// i! sum_k C(r-g+i, k) x^k theta^{r-k}/(r-k)! in R*(C_{2r+i}).
TautClass push_A_subordinate(int g, int r, int i);

/// dg x - theta.
TautClass eta_class(const Ambient& amb);

/// Largest c <= k+1 with a . theta^{k+1-c} = 0, where k is the dimension of a.
int contractibility_index(const TautClass& a);

}  // namespace symtaut
