#include "symtaut/faces.hpp"

#include "symtaut/bn_classes.hpp"
#include "symtaut/errors.hpp"
#include "symtaut/theta_filtration.hpp"

#include <algorithm>
#include <string>

namespace symtaut {

namespace {

bool applies(const CurveParams& curve, int n, Regime reg) {
    const int g = curve.genus();
    const int d = curve.degree();
    switch (reg) {
    case Regime::ThetaFaces:
        return g <= std::max(n, d - n);
    case Regime::Subordinate:
        return n >= 1 && degree_reaches_gonality(curve, n, d);
    case Regime::BNDimGminus1:
        return g >= 2 && n == g - 1 && g <= d && d <= 2 * g - 2;
    case Regime::HyperellipticBN:
        return curve.kind() == CurveKind::Hyperelliptic && n < g && d - n < g && d <= 2 * n;
    case Regime::BoundsOnly:
        return false;
    }
    return false;
}

std::vector<TautClass> generators_for(const CurveParams& curve, int n, int r, Regime reg) {
    const Ambient& amb = curve.ambient();
    const int g = curve.genus();
    const int d = curve.degree();
    std::vector<TautClass> gens;
    switch (reg) {
    case Regime::ThetaFaces:
        for (const auto& mono : theta_basis(amb, d - n, g - n + r)) {
            gens.push_back(TautClass::monomial(amb, mono));
        }
        break;
    case Regime::Subordinate:
        for (int i = 0; i <= n - r; ++i) {
            gens.push_back(class_Gamma_i(curve, n, i));
        }
        break;
    case Regime::BNDimGminus1:
        for (int i = 0; i <= d - g + 1 - r; ++i) {
            gens.push_back(class_Upsilon_i(amb, i));
        }
        break;
    case Regime::HyperellipticBN:
        for (int i = 0; i <= d - n - r; ++i) {
            gens.push_back(class_Upsilon_i_hyper(curve, n, i));
        }
        break;
    case Regime::BoundsOnly:
        break;
    }
    return gens;
}

Certificate certify(const Ambient& amb, int n, int r, const Subspace& span, const std::vector<TautClass>& gens,
                    int expected_dim) {
    Certificate cert;
    cert.span_dim = span.dim();
    cert.theta_codim = theta_codim(amb, n, n + 1 - r);
    cert.expected_dim = expected_dim;
    std::vector<Vector> coords;
    coords.reserve(gens.size());
    for (const auto& c : gens) {
        coords.push_back(coordinates(c));
    }
    const std::size_t ambient_dim = span.ambient_dim();
    cert.independent = coords.empty() || rank(RatMatrix::from_rows(coords, ambient_dim)) == coords.size();
    cert.generators_in_span = std::all_of(coords.begin(), coords.end(),
                                          [&](const Vector& v) { return span.contains(v); });
    const auto count = static_cast<int>(gens.size());
    cert.count_matches = count == cert.theta_codim && static_cast<std::size_t>(count) == cert.span_dim;
    cert.dim_matches = count == expected_dim;
    return cert;
}

void check_chain_shape(FaceChain& chain) {
    const Ambient& amb = chain.curve.ambient();
    const int full = standard_rank(amb, amb.degree - chain.n) + 1;
    chain.dims_consecutive = true;
    for (std::size_t k = 0; k < chain.faces.size(); ++k) {
        if (chain.faces[k].dim != static_cast<int>(k) + 1 ||
            chain.faces[k].span.dim() != static_cast<std::size_t>(k) + 1) {
            chain.dims_consecutive = false;
        }
    }
    if (static_cast<int>(chain.faces.size()) != full - 1) {
        chain.dims_consecutive = false;
    }
    chain.nested = true;
    for (std::size_t k = 1; k < chain.faces.size(); ++k) {
        const auto& lo = chain.faces[k - 1].span;
        const auto& hi = chain.faces[k].span;
        if (!hi.contains(lo) || hi.dim() <= lo.dim()) {
            chain.nested = false;
        }
    }
}

}  // namespace

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::ThetaFaces:
        return "theta-faces";
    case Regime::Subordinate:
        return "subordinate";
    case Regime::BNDimGminus1:
        return "bn-dim-g-1";
    case Regime::HyperellipticBN:
        return "hyperelliptic-bn";
    case Regime::BoundsOnly:
        return "bounds-only";
    }
    return "unknown";
}

std::string_view to_string(FacetCase c) {
    switch (c) {
    case FacetCase::GenusAtMostN:
        return "g<=n";
    case FacetCase::Gonality:
        return "gonality";
    case FacetCase::DimGminus1:
        return "n=g-1";
    case FacetCase::VeryGeneral:
        return "very-general";
    }
    return "unknown";
}

bool FaceChain::ok() const noexcept {
    if (!nested || !dims_consecutive) {
        return false;
    }
    return std::all_of(faces.begin(), faces.end(),
                       [](const FaceDescriptor& f) { return f.certificate.perfect(); });
}

Subspace aj_span(const Ambient& amb, int n, int r) {
    if (n < 0 || n > amb.degree) {
        throw ParameterError("dimension n outside [0, d]");
    }
    if (r < 1 + std::max(0, n - amb.genus) || r > n) {
        throw ParameterError("Abel-Jacobi index r = " + std::to_string(r) + " outside [1 + max{0, n-g}, n]");
    }
    return theta_perp(amb, n, n + 1 - r);
}

std::vector<Regime> regime(const CurveParams& curve, int n) {
    if (n < 0 || n > curve.degree()) {
        throw ParameterError("dimension n outside [0, d]");
    }
    std::vector<Regime> out;
    for (Regime reg : {Regime::HyperellipticBN, Regime::BNDimGminus1, Regime::ThetaFaces, Regime::Subordinate}) {
        if (applies(curve, n, reg)) {
            out.push_back(reg);
        }
    }
    if (out.empty()) {
        out.push_back(Regime::BoundsOnly);
    }
    return out;
}

std::pair<int, int> r_range(const CurveParams& curve, int n, Regime reg) {
    const int g = curve.genus();
    const int d = curve.degree();
    switch (reg) {
    case Regime::ThetaFaces:
        return {1 + std::max(0, n - g), std::min(n, d - g)};
    case Regime::Subordinate:
        return {1 + std::max(0, n - g), n};
    case Regime::BNDimGminus1:
        return {1, d - g + 1};
    case Regime::HyperellipticBN:
        return {1, d - n};
    case Regime::BoundsOnly:
        break;
    }
    return {1, 0};
}

int expected_face_dim(const CurveParams& curve, int n, int r, Regime reg) {
    const int g = curve.genus();
    const int d = curve.degree();
    switch (reg) {
    case Regime::ThetaFaces:
        return std::min(n, d - g) - r + 1;
    case Regime::Subordinate:
        return n + 1 - r;
    case Regime::BNDimGminus1:
        return d - g + 2 - r;
    case Regime::HyperellipticBN:
        return d - n + 1 - r;
    case Regime::BoundsOnly:
        break;
    }
    throw NoRegime("no face dimension formula outside a regime");
}

FaceDescriptor make_face(const CurveParams& curve, int n, int r, Regime reg) {
    if (!applies(curve, n, reg)) {
        throw NoRegime(std::string(to_string(reg)) + " does not apply at n = " + std::to_string(n));
    }
    const auto [lo, hi] = r_range(curve, n, reg);
    if (r < lo || r > hi) {
        throw ParameterError("r = " + std::to_string(r) + " outside the non-trivial range [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    }
    const Ambient& amb = curve.ambient();
    FaceDescriptor face{amb, n, r, expected_face_dim(curve, n, r, reg), aj_span(amb, n, r),
                        generators_for(curve, n, r, reg), DualPiece{n + 1 - r, n}, Certificate{}};
    face.certificate = certify(amb, n, r, face.span, face.generators, face.dim);
    return face;
}

FaceChain face_chain(const CurveParams& curve, int n, Regime reg) {
    FaceChain chain{curve, n, reg, {}, {}, false, false};
    const auto [lo, hi] = r_range(curve, n, reg);
    for (int r = hi; r >= lo; --r) {
        chain.faces.push_back(make_face(curve, n, r, reg));
    }
    for (int r = lo; r <= hi; ++r) {
        chain.dual_chain.push_back(DualPiece{n + 1 - r, n});
    }
    check_chain_shape(chain);
    return chain;
}

std::vector<FaceChain> face_chains(const CurveParams& curve, int n) {
    const auto regs = regime(curve, n);
    if (regs.front() == Regime::BoundsOnly) {
        throw NoRegime("no face-chain theorem applies at g = " + std::to_string(curve.genus()) +
                       ", d = " + std::to_string(curve.degree()) + ", n = " + std::to_string(n));
    }
    std::vector<FaceChain> chains;
    for (Regime reg : regs) {
        chains.push_back(face_chain(curve, n, reg));
    }
    return chains;
}

FaceChain face_chain(const CurveParams& curve, int n) {
    return face_chains(curve, n).front();
}

bool chains_agree(const std::vector<FaceChain>& chains) {
    for (std::size_t k = 1; k < chains.size(); ++k) {
        const auto& a = chains[0].faces;
        const auto& b = chains[k].faces;
        if (a.size() != b.size()) {
            return false;
        }
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j].r != b[j].r || !(a[j].span == b[j].span)) {
                return false;
            }
        }
    }
    return true;
}

std::pair<int, int> dim_bounds(const Ambient& amb, int n, int r) {
    const int g = amb.genus;
    const int d = amb.degree;
    if (n < 0 || n > d || g < std::max(n, d - n)) {
        throw ParameterError("dim_bounds needs g >= max{n, d-n}");
    }
    if (r < 1 || r > std::min(n, d - n)) {
        throw ParameterError("dim_bounds needs 1 <= r <= min{n, d-n}");
    }
    return {std::max(d + 1 - g - r, 0), standard_rank(amb, d - n) - r + 1};
}

bool bn_ray_admissible(int g, int r, int d) {
    if (g < 0 || r < 1 || d < 1) {
        return false;
    }
    const long lr = r;
    return std::max(1, d - g + 1) <= r && lr * g + lr * (lr + 1) <= static_cast<long>(d) * (lr + 1) &&
           d <= 2 * g - 2;
}

bool bn_ray_perfect(int g, int r, int d) {
    return rho(g, r, d) == 0 || d == g + r - 1;
}

FaceDescriptor bn_ray(const CurveParams& curve, int r) {
    const int g = curve.genus();
    const int d = curve.degree();
    if (curve.kind() != CurveKind::BrillNoetherGeneral) {
        throw ParameterError("bn_ray needs a Brill-Noether general curve");
    }
    if (!bn_ray_admissible(g, r, d)) {
        throw ParameterError("bn_ray needs max{1, d-g+1} <= r and rg/(r+1) + r <= d <= 2g-2");
    }
    const Ambient& amb = curve.ambient();
    const int n = r + static_cast<int>(rho(g, r, d));
    TautClass gen = class_Cdr(amb, r);
    FaceDescriptor face{amb, n, r, 1, span_of(amb, d - n, {gen}), {gen}, DualPiece{n + 1 - r, n}, Certificate{}};
    // The ray is perfect exactly when the bounding span (theta^{>=n+1-r,n})^perp is the ray itself.
    const Subspace bound = aj_span(amb, n, r);
    face.certificate = certify(amb, n, r, bound, face.generators, 1);
    return face;
}

Nontriviality nontriviality(const CurveParams& curve, int n) {
    const int g = curve.genus();
    const int d = curve.degree();
    if (n < 1 || n > d - 1) {
        throw ParameterError("nontriviality needs 1 <= n <= d-1");
    }
    Nontriviality out;
    out.exists_nontrivial_aj = 2 * d >= n + g + 1;
    out.tautological =
        d >= g + 1 || (out.exists_nontrivial_aj && curve.kind() == CurveKind::BrillNoetherGeneral);
    if (g <= n) {
        out.facet_cases.push_back(FacetCase::GenusAtMostN);
    }
    if (n <= g) {
        if (degree_reaches_gonality(curve, n, d)) {
            out.facet_cases.push_back(FacetCase::Gonality);
        }
        if (n == g - 1) {
            out.facet_cases.push_back(FacetCase::DimGminus1);
        }
        if (g <= d) {
            out.facet_cases.push_back(FacetCase::VeryGeneral);
        }
    }
    return out;
}

}  // namespace symtaut
