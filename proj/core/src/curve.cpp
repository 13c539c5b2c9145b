#include "symtaut/curve.hpp"

#include "symtaut/errors.hpp"
#include "symtaut/rational.hpp"

#include <algorithm>
#include <utility>

namespace symtaut {

int standard_rank(const Ambient& amb, int m) {
    return std::min({m, amb.degree - m, amb.genus});
}

int gamma_bound(int genus, int r) {
    return static_cast<int>(ceil_div(static_cast<long>(r) * genus, r + 1)) + r;
}

std::string_view to_string(CurveKind kind) {
    switch (kind) {
    case CurveKind::BrillNoetherGeneral:
        return "bn-general";
    case CurveKind::Hyperelliptic:
        return "hyperelliptic";
    case CurveKind::Custom:
        return "custom";
    }
    return "unknown";
}

CurveKind parse_curve_kind(std::string_view text) {
    if (text == "bn-general") {
        return CurveKind::BrillNoetherGeneral;
    }
    if (text == "hyperelliptic") {
        return CurveKind::Hyperelliptic;
    }
    if (text == "custom") {
        return CurveKind::Custom;
    }
    throw ParameterError("unknown curve kind '" + std::string(text) + "'");
}

CurveParams::CurveParams(int genus, int degree, CurveKind kind, std::map<int, int> gonality_overrides)
    : amb_{genus, degree}, kind_(kind), overrides_(std::move(gonality_overrides)) {
    if (genus < 0) {
        throw ParameterError("genus must be non-negative");
    }
    if (degree < 1) {
        throw ParameterError("degree must be positive");
    }
    if (kind == CurveKind::Hyperelliptic && genus < 2) {
        throw ParameterError("hyperelliptic curves have genus at least 2");
    }
    if (!overrides_.empty() && kind != CurveKind::Custom) {
        throw ParameterError("gonality overrides require the custom curve kind");
    }
    for (const auto& [r, gon] : overrides_) {
        const std::string where = "gonality override gon_" + std::to_string(r) + " = " + std::to_string(gon);
        if (r < 1) {
            throw ParameterError(where + ": index must be at least 1");
        }
        if (r >= genus) {
            if (gon != genus + r) {
                throw ParameterError(where + ": must equal g + r");
            }
        } else if (r == genus - 1) {
            if (gon != 2 * genus - 2) {
                throw ParameterError(where + ": must equal 2g - 2");
            }
        } else if (gon < 2 * r || gon > gamma_bound(genus, r)) {
            throw ParameterError(where + ": outside [2r, gamma(r)] = [" + std::to_string(2 * r) + ", " +
                                 std::to_string(gamma_bound(genus, r)) + "]");
        }
    }
}

CurveParams CurveParams::with_degree(int degree) const {
    return CurveParams(amb_.genus, degree, kind_, overrides_);
}

}  // namespace symtaut
