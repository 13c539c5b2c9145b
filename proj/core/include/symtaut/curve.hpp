#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace symtaut {

/// The ring R*(C_d) depends only on the genus and the degree.
struct Ambient {
    int genus = 0;
    int degree = 1;

    friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

/// r(m) = min{m, d - m, g}; dim R^m(C_d) = r(m) + 1.
int standard_rank(const Ambient& amb, int m);

/// Brill-Noether upper bound ceil(r g / (r + 1)) + r for the r-th gonality index.
int gamma_bound(int genus, int r);

enum class CurveKind { BrillNoetherGeneral, Hyperelliptic, Custom };

std::string_view to_string(CurveKind kind);
CurveKind parse_curve_kind(std::string_view text);

/// Genus, degree and the kind of curve. Gonality overrides (r -> gon_r) are
/// only meaningful for CurveKind::Custom and are validated against
/// 2r <= gon_r <= gamma(r) (1 <= r <= g-2), gon_{g-1} = 2g-2, gon_r = g+r (r >= g).
class CurveParams {
public:
    CurveParams(int genus, int degree, CurveKind kind = CurveKind::BrillNoetherGeneral,
                std::map<int, int> gonality_overrides = {});

    int genus() const noexcept { return amb_.genus; }
    int degree() const noexcept { return amb_.degree; }
    const Ambient& ambient() const noexcept { return amb_; }
    CurveKind kind() const noexcept { return kind_; }
    const std::map<int, int>& gonality_overrides() const noexcept { return overrides_; }

    CurveParams with_degree(int degree) const;

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    Ambient amb_;
    CurveKind kind_;
    std::map<int, int> overrides_;
};

}  // namespace symtaut
