#pragma once

// The theta-filtration theta^{>=i,m} of R^m(C_d): the span of the monomials
// theta^b x^{m-b} with b >= i.

#include "symtaut/linalg.hpp"
#include "symtaut/taut_ring.hpp"

#include <string_view>
#include <vector>

namespace symtaut {

/// Codimension of theta^{>=i,m} in R^m. Indices past min(m, g) + 1 give the
/// same (zero) piece as min(m, g) + 1.
int theta_codim(const Ambient& amb, int m, int i);

/// Monomial basis of theta^{>=i,m}. Inside the stationary range at the bottom
/// of the filtration the basis of the stationary piece is returned.
std::vector<Monomial> theta_basis(const Ambient& amb, int m, int i);

struct ThetaPiece {
    Ambient ambient;
    int m = 0;
    int i = 0;
    std::vector<Monomial> basis_monomials;
    Subspace subspace;  // in standard coordinates of R^m

    int codim() const noexcept;
};

ThetaPiece theta_piece(const Ambient& amb, int m, int i);

/// (theta^{>=i,m})^perp inside R^{d-m}, 0 <= i <= g+1.
Subspace theta_perp(const Ambient& amb, int m, int i);

/// Which condition (if any) makes (theta^{>=i,m})^perp = theta^{>=g+1-i,d-m}.
enum class PerpEquality {
    GenusBound,       // g <= max{m, d-m}
    BothWhole,        // both sides are R^{d-m}
    BothZero,         // both sides vanish
    StrictInclusion,
};

std::string_view to_string(PerpEquality e);

PerpEquality perp_equality_case(const Ambient& amb, int m, int i);

inline bool is_equality(PerpEquality e) {
    return e != PerpEquality::StrictInclusion;
}

}  // namespace symtaut
