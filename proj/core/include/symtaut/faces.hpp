#pragma once

// Abel-Jacobi faces of the tautological pseudoeffective cone in dimension n:
// their linear spans, the regimes in which a maximal chain of perfect faces
// is known, and the linear-algebra certificates behind each face.

#include "symtaut/curve.hpp"
#include "symtaut/linalg.hpp"
#include "symtaut/taut_ring.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace symtaut {

enum class Regime {
    ThetaFaces,       // g <= max{n, d-n}
    Subordinate,      // d >= gon_n(C)
    BNDimGminus1,     // n = g-1, g <= d <= 2g-2
    HyperellipticBN,  // hyperelliptic, n, d-n < g, d <= 2n
    BoundsOnly,
};

std::string_view to_string(Regime r);

/// theta^{>=i,m}
struct DualPiece {
    int i = 0;
    int m = 0;
    friend bool operator==(const DualPiece&, const DualPiece&) = default;
};

struct Certificate {
    std::size_t span_dim = 0;
    int theta_codim = 0;
    int expected_dim = 0;
    bool independent = false;
    bool generators_in_span = false;
    bool count_matches = false;  // #generators = theta_codim = dim span
    bool dim_matches = false;    // #generators = expected_dim

    bool perfect() const noexcept {
        return independent && generators_in_span && count_matches && dim_matches;
    }
};

struct FaceDescriptor {
    Ambient ambient;
    int n = 0;
    int r = 0;
    int dim = 0;
    Subspace span;  // inside R_n = R^{d-n}
    std::vector<TautClass> generators;
    DualPiece dual_piece;
    Certificate certificate;
};

struct FaceChain {
    CurveParams curve;
    int n = 0;
    Regime regime = Regime::BoundsOnly;
    std::vector<FaceDescriptor> faces;    // increasing dimension
    std::vector<DualPiece> dual_chain;    // increasing pieces of R^n

    bool nested = false;
    bool dims_consecutive = false;  // 1, 2, ..., dim R_n - 1

    bool ok() const noexcept;
};

/// (theta^{>=n+1-r,n})^perp in R_n, for 1 + max{0, n-g} <= r <= n.
Subspace aj_span(const Ambient& amb, int n, int r);

/// All regimes that apply, most specific first; {BoundsOnly} when none does.
std::vector<Regime> regime(const CurveParams& curve, int n);

/// Range of r giving non-trivial faces in the given regime (may be empty).
std::pair<int, int> r_range(const CurveParams& curve, int n, Regime reg);

/// Dimension of the r-th face in the given regime.
int expected_face_dim(const CurveParams& curve, int n, int r, Regime reg);

/// Face with index r in the given regime, certificate filled in.
FaceDescriptor make_face(const CurveParams& curve, int n, int r, Regime reg);

FaceChain face_chain(const CurveParams& curve, int n, Regime reg);

/// One chain per applicable regime. Throws NoRegime if none applies.
std::vector<FaceChain> face_chains(const CurveParams& curve, int n);

/// The chain of the first applicable regime.
FaceChain face_chain(const CurveParams& curve, int n);

/// Chains for overlapping regimes must agree face by face.
bool chains_agree(const std::vector<FaceChain>& chains);

/// (max{d+1-g-r, 0}, r(n)-r+1), for g >= max{n, d-n} and 1 <= r <= min{n, d-n}.
std::pair<int, int> dim_bounds(const Ambient& amb, int n, int r);

/// The ray spanned by c_d^r in dimension r + rho on a Brill-Noether general curve.
FaceDescriptor bn_ray(const CurveParams& curve, int r);

/// Whether the BN ray hypotheses hold for (g, r, d).
bool bn_ray_admissible(int g, int r, int d);

/// rho = 0 or d = g+r-1.
bool bn_ray_perfect(int g, int r, int d);

enum class FacetCase {
    GenusAtMostN,  // g <= n: AJ^{n+1-g} is a facet
    Gonality,      // n <= g and gon_n <= d
    DimGminus1,    // n = g-1
    VeryGeneral,   // n <= g <= d, very general curve
};

std::string_view to_string(FacetCase c);

struct Nontriviality {
    bool exists_nontrivial_aj = false;  // 2d >= n+g+1
    bool tautological = false;          // d >= g+1, or 2d >= n+g+1 on a BN-general curve
    std::vector<FacetCase> facet_cases;
};

/// For 1 <= n <= d-1.
Nontriviality nontriviality(const CurveParams& curve, int n);

}  // namespace symtaut
