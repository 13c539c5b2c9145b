#include "symtaut/json_io.hpp"

#include "symtaut/errors.hpp"

#include <charconv>
#include <string>

namespace symtaut {

namespace {

Integer parse_integer(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw ParameterError(std::string("class JSON: '") + what + "' must be a decimal string");
    }
    const auto& s = j.get_ref<const std::string&>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) {
        throw ParameterError(std::string("class JSON: '") + what + "' is not a decimal integer: " + s);
    }
    return z;
}

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ParameterError(std::string("class JSON: missing integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

Json vector_json(const Vector& v) {
    Json arr = Json::array();
    for (const auto& e : v) {
        arr.push_back(to_string(e));
    }
    return arr;
}

}  // namespace

Json to_json(const TautClass& c) {
    Json j;
    j["g"] = c.ambient().genus;
    j["d"] = c.ambient().degree;
    j["codim"] = c.codim();
    Json coeffs = Json::array();
    for (const auto& [b, q] : c.terms()) {
        coeffs.push_back(Json{{"x", c.codim() - b},
                              {"theta", b},
                              {"num", q.get_num().get_str()},
                              {"den", q.get_den().get_str()}});
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

TautClass class_from_json(const Json& j) try {
    if (!j.is_object()) {
        throw ParameterError("class JSON must be an object");
    }
    const Ambient amb{get_int(j, "g"), get_int(j, "d")};
    TautClass c(amb, get_int(j, "codim"));
    if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw ParameterError("class JSON: 'coeffs' must be an array");
    }
    for (const auto& t : j.at("coeffs")) {
        const Integer num = parse_integer(t.at("num"), "num");
        const Integer den = parse_integer(t.at("den"), "den");
        if (den == 0) {
            throw ParameterError("class JSON: zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        c.add_monomial(Monomial{get_int(t, "x"), get_int(t, "theta")}, q);
    }
    return c;
} catch (const Json::exception& e) {
    throw ParameterError(std::string("malformed class JSON: ") + e.what());
}

Json to_json(const Subspace& s) {
    Json arr = Json::array();
    for (const auto& v : s.basis_vectors()) {
        arr.push_back(vector_json(v));
    }
    return arr;
}

Json to_json(const Certificate& c) {
    return Json{{"span_dim", c.span_dim},
                {"theta_codim", c.theta_codim},
                {"expected_dim", c.expected_dim},
                {"independent", c.independent},
                {"generators_in_span", c.generators_in_span},
                {"count_matches", c.count_matches},
                {"dim_matches", c.dim_matches},
                {"perfect", c.perfect()}};
}

Json to_json(const FaceDescriptor& f) {
    Json gens = Json::array();
    for (const auto& c : f.generators) {
        gens.push_back(to_json(c));
    }
    return Json{{"n", f.n},
                {"r", f.r},
                {"dim", f.dim},
                {"span", to_json(f.span)},
                {"generators", std::move(gens)},
                {"dual_piece", Json{{"i", f.dual_piece.i}, {"m", f.dual_piece.m}}},
                {"certificate", to_json(f.certificate)}};
}

Json to_json(const FaceChain& chain) {
    Json faces = Json::array();
    for (const auto& f : chain.faces) {
        faces.push_back(to_json(f));
    }
    Json dual = Json::array();
    for (const auto& p : chain.dual_chain) {
        dual.push_back(Json{{"i", p.i}, {"m", p.m}});
    }
    return Json{{"g", chain.curve.genus()},
                {"d", chain.curve.degree()},
                {"curve", std::string(to_string(chain.curve.kind()))},
                {"n", chain.n},
                {"regime", std::string(to_string(chain.regime))},
                {"faces", std::move(faces)},
                {"dual_chain", std::move(dual)},
                {"nested", chain.nested},
                {"dims_consecutive", chain.dims_consecutive},
                {"ok", chain.ok()}};
}

Json to_json(const RegionCell& cell) {
    return Json{{"n", cell.n},
                {"m", cell.m},
                {"colored", cell.colored},
                {"subordinate", cell.subordinate},
                {"theta", cell.theta},
                {"bn_ray_r", cell.bn_ray_r},
                {"bn_dim_g_minus_1", cell.bn_dim_g_minus_1},
                {"facet", cell.facet},
                {"very_general_facet", cell.very_general_facet}};
}

Json to_json(const RegionMap& map) {
    Json cells = Json::array();
    for (const auto& c : map.cells) {
        cells.push_back(to_json(c));
    }
    return Json{{"g", map.genus},
                {"curve", std::string(to_string(map.kind))},
                {"extent", map.extent},
                {"cells", std::move(cells)}};
}

std::map<int, int> parse_gonality_overrides(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParameterError(std::string("gonality file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParameterError("gonality file must be a JSON object mapping r to gon_r");
    }
    std::map<int, int> out;
    for (const auto& [key, value] : j.items()) {
        int r = 0;
        const auto* first = key.data();
        const auto* last = key.data() + key.size();
        auto [ptr, ec] = std::from_chars(first, last, r);
        if (ec != std::errc() || ptr != last) {
            throw ParameterError("gonality file: key '" + key + "' is not an integer");
        }
        if (!value.is_number_integer()) {
            throw ParameterError("gonality file: value for r = " + key + " is not an integer");
        }
        out[r] = value.get<int>();
    }
    return out;
}

}  // namespace symtaut
