#include "symtaut/theta_filtration.hpp"

#include "symtaut/errors.hpp"

#include <algorithm>
#include <string>

namespace symtaut {

namespace {

void check_range(const Ambient& amb, int m, int i) {
    if (m < 0 || m > amb.degree) {
        throw ParameterError("codimension " + std::to_string(m) + " outside [0, " + std::to_string(amb.degree) +
                             "]");
    }
    if (i < 0) {
        throw ParameterError("filtration index must be non-negative");
    }
}

// Lowest theta exponent needed to span R^m: below it the filtration is stationary.
int stationary_floor(const Ambient& amb, int m) {
    const int r = standard_rank(amb, m);
    if (r == m || r == amb.genus) {
        return 0;
    }
    // r = d - m < min{m, g}
    if (amb.genus <= m) {
        return amb.genus - (amb.degree - m);
    }
    return 2 * m - amb.degree;
}

int top_exponent(const Ambient& amb, int m) {
    return std::min(m, amb.genus);
}

}  // namespace

int theta_codim(const Ambient& amb, int m, int i) {
    check_range(amb, m, i);
    const int g = amb.genus;
    const int d = amb.degree;
    const int r = standard_rank(amb, m);
    i = std::min(i, top_exponent(amb, m) + 1);
    if (r == m || r == g) {
        return i;
    }
    if (g <= m) {
        return std::max(i - g + d - m, 0);
    }
    return std::max(i - 2 * m + d, 0);
}

std::vector<Monomial> theta_basis(const Ambient& amb, int m, int i) {
    check_range(amb, m, i);
    const int top = top_exponent(amb, m);
    const int from = std::max(i, stationary_floor(amb, m));
    std::vector<Monomial> basis;
    for (int b = from; b <= top; ++b) {
        basis.push_back(Monomial{m - b, b});
    }
    return basis;
}

int ThetaPiece::codim() const noexcept {
    return static_cast<int>(subspace.ambient_dim() - subspace.dim());
}

ThetaPiece theta_piece(const Ambient& amb, int m, int i) {
    ThetaPiece piece{amb, m, i, theta_basis(amb, m, i), Subspace()};
    std::vector<TautClass> classes;
    classes.reserve(piece.basis_monomials.size());
    for (const auto& mono : piece.basis_monomials) {
        classes.push_back(TautClass::monomial(amb, mono));
    }
    piece.subspace = span_of(amb, m, classes);
    return piece;
}

Subspace theta_perp(const Ambient& amb, int m, int i) {
    check_range(amb, m, i);
    if (i > amb.genus + 1) {
        throw ParameterError("filtration index " + std::to_string(i) + " exceeds g + 1");
    }
    return theta_piece(amb, m, i).subspace.perp(gram_matrix(amb, m));
}

std::string_view to_string(PerpEquality e) {
    switch (e) {
    case PerpEquality::GenusBound:
        return "genus-bound";
    case PerpEquality::BothWhole:
        return "both-whole";
    case PerpEquality::BothZero:
        return "both-zero";
    case PerpEquality::StrictInclusion:
        return "strict";
    }
    return "unknown";
}

PerpEquality perp_equality_case(const Ambient& amb, int m, int i) {
    check_range(amb, m, i);
    const int g = amb.genus;
    const int d = amb.degree;
    if (i > g + 1) {
        throw ParameterError("filtration index " + std::to_string(i) + " exceeds g + 1");
    }
    if (g <= std::max(m, d - m)) {
        return PerpEquality::GenusBound;
    }
    if (i == g + 1 || (m <= d - m && d - m <= g && g - (d - m) + m + 1 <= i)) {
        return PerpEquality::BothWhole;
    }
    if (i == 0 || (d - m <= m && m <= g && i <= 2 * m - d)) {
        return PerpEquality::BothZero;
    }
    return PerpEquality::StrictInclusion;
}

}  // namespace symtaut
