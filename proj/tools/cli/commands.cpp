#include "commands.hpp"

#include "expr_parser.hpp"

#include "symtaut/bn_classes.hpp"
#include "symtaut/errors.hpp"
#include "symtaut/faces.hpp"
#include "symtaut/json_io.hpp"
#include "symtaut/region.hpp"
#include "symtaut/theta_filtration.hpp"
#include "symtaut/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace symtaut::cli {

namespace {

struct RunConfig {
    int genus = -1;
    int degree = -1;
    std::optional<int> dim;
    std::optional<int> rank;
    std::optional<int> index;
    std::optional<int> l;
    std::optional<int> s;
    std::string curve = "bn-general";
    bool curve_given = false;
    std::string gonality_file;
    std::string format = "text";
    std::string out_path;
    std::string expression;
    std::string family;
    std::string scope = "all";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int need(const std::optional<int>& v, const char* flag) {
    if (!v) {
        throw ParameterError(std::string("missing required option ") + flag);
    }
    return *v;
}

void need_genus_degree(const RunConfig& cfg) {
    if (cfg.genus < 0) {
        throw ParameterError("--genus is required and must be non-negative");
    }
    if (cfg.degree < 1) {
        throw ParameterError("--degree is required and must be positive");
    }
}

CurveParams make_curve(const RunConfig& cfg, int degree) {
    std::map<int, int> overrides;
    CurveKind kind = parse_curve_kind(cfg.curve);
    if (!cfg.gonality_file.empty()) {
        overrides = parse_gonality_overrides(read_file(cfg.gonality_file));
        if (!cfg.curve_given) {
            kind = CurveKind::Custom;
        }
    }
    return CurveParams(cfg.genus, degree, kind, std::move(overrides));
}

std::string coords_text(const Vector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? ", " : "") + to_string(v[k]);
    }
    return s + "]";
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw ParameterError("format '" + cfg.format + "' is not available for this command");
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
    need_genus_degree(cfg);
    require_format(cfg, {"text", "json"});
    const Ambient amb{cfg.genus, cfg.degree};
    const TautClass c = parse_class(cfg.expression, amb);
    const NormalForm nf = normal_form(c);
    std::optional<Rational> top;
    if (c.codim() == amb.degree) {
        top = eval_top(c);
    }
    if (cfg.format == "json") {
        Json j;
        j["class"] = to_json(c);
        j["normal_form"] = to_json(nf.to_class());
        Json coords = Json::array();
        for (const auto& q : nf.coords) {
            coords.push_back(to_string(q));
        }
        j["coords"] = std::move(coords);
        if (top) {
            j["top"] = to_string(*top);
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "ring: g=" << amb.genus << " d=" << amb.degree << '\n';
    out << "class: " << c << '\n';
    out << "codim: " << c.codim() << '\n';
    out << "normal form: " << nf.to_class() << '\n';
    out << "coords: " << coords_text(nf.coords) << '\n';
    if (top) {
        out << "top: " << to_string(*top) << '\n';
    }
    return kExitOk;
}

TautClass build_family(const RunConfig& cfg, const CurveParams& curve) {
    const Ambient& amb = curve.ambient();
    const std::string& f = cfg.family;
    if (f == "cdr") {
        return class_Cdr(amb, need(cfg.rank, "--rank"));
    }
    if (f == "clbn") {
        return class_clBN(amb);
    }
    if (f == "subordinate") {
        return class_subordinate(amb, need(cfg.l, "--l"), need(cfg.s, "--s"));
    }
    if (f == "gamma") {
        return class_Gamma_i(curve, need(cfg.dim, "--dim"), need(cfg.index, "--index"));
    }
    if (f == "upsilon") {
        return class_Upsilon_i(amb, need(cfg.index, "--index"));
    }
    if (f == "upsilon-hyper") {
        return class_Upsilon_i_hyper(curve, need(cfg.dim, "--dim"), need(cfg.index, "--index"));
    }
    if (f == "cdr-hyper") {
        return class_Cdr_hyper(curve, need(cfg.rank, "--rank"));
    }
    if (f == "eta") {
        return eta_class(amb);
    }
    throw ParameterError("unknown class family '" + f + "'");
}

int cmd_class(RunConfig cfg, std::ostream& out) {
    need_genus_degree(cfg);
    require_format(cfg, {"text", "json"});
    if ((cfg.family == "upsilon-hyper" || cfg.family == "cdr-hyper") && !cfg.curve_given) {
        cfg.curve = "hyperelliptic";
    }
    const CurveParams curve = make_curve(cfg, cfg.degree);
    const TautClass c = build_family(cfg, curve);
    const int contr = contractibility_index(c);
    if (cfg.format == "json") {
        Json j;
        j["family"] = cfg.family;
        j["class"] = to_json(c);
        j["normal_form"] = to_json(normal_form(c).to_class());
        j["contractibility"] = contr;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "family: " << cfg.family << '\n';
    out << "ring: g=" << curve.genus() << " d=" << curve.degree() << " curve=" << to_string(curve.kind()) << '\n';
    out << "class: " << c << '\n';
    out << "codim: " << c.codim() << "  dim: " << c.dimension() << '\n';
    out << "normal form: " << normal_form(c).to_class() << '\n';
    out << "contractibility: " << contr << '\n';
    return kExitOk;
}

std::string piece_text(const DualPiece& p) {
    return "theta^{>=" + std::to_string(p.i) + "," + std::to_string(p.m) + "}";
}

void print_chain(const FaceChain& ch, std::ostream& out) {
    out << "regime: " << to_string(ch.regime) << '\n';
    if (ch.faces.empty()) {
        out << "  (no non-trivial faces)\n";
    }
    out << "  " << std::left << std::setw(4) << "r" << std::setw(5) << "dim" << std::setw(7) << "codim"
        << std::setw(6) << "cert" << "generators\n";
    for (const auto& f : ch.faces) {
        std::string gens;
        for (std::size_t k = 0; k < f.generators.size(); ++k) {
            gens += (k ? " | " : "") + to_string(f.generators[k]);
        }
        out << "  " << std::left << std::setw(4) << f.r << std::setw(5) << f.dim << std::setw(7)
            << f.certificate.theta_codim << std::setw(6) << (f.certificate.perfect() ? "PASS" : "FAIL") << gens
            << '\n';
    }
    out << "  nested: " << (ch.nested ? "yes" : "no") << "  dims 1..dim R_n - 1: "
        << (ch.dims_consecutive ? "yes" : "no") << '\n';
    out << "  dual chain:";
    for (std::size_t k = 0; k < ch.dual_chain.size(); ++k) {
        out << (k ? " < " : " ") << piece_text(ch.dual_chain[k]);
    }
    out << '\n';
}

int cmd_chain(const RunConfig& cfg, std::ostream& out) {
    need_genus_degree(cfg);
    require_format(cfg, {"text", "json"});
    const CurveParams curve = make_curve(cfg, cfg.degree);
    const int n = need(cfg.dim, "--dim");
    if (n < 0 || n > curve.degree()) {
        throw ParameterError("--dim must lie in [0, d]");
    }
    const auto regs = regime(curve, n);
    const Ambient& amb = curve.ambient();
    if (regs.front() == Regime::BoundsOnly) {
        const int g = amb.genus;
        const int d = amb.degree;
        const bool bounded = g >= std::max(n, d - n);
        if (cfg.format == "json") {
            Json j{{"g", g}, {"d", d}, {"curve", std::string(to_string(curve.kind()))}, {"n", n},
                   {"regime", "bounds-only"}};
            Json rows = Json::array();
            if (bounded) {
                for (int r = 1; r <= std::min(n, d - n); ++r) {
                    const auto [lo, hi] = dim_bounds(amb, n, r);
                    rows.push_back(Json{{"r", r}, {"lower", lo}, {"upper", hi}});
                }
            }
            j["bounds"] = std::move(rows);
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        out << "g=" << g << " d=" << d << " n=" << n << " curve=" << to_string(curve.kind()) << '\n';
        out << "regime: bounds-only\n";
        if (!bounded) {
            out << "  no dimension bounds available (g < max{n, d-n})\n";
            return kExitOk;
        }
        out << "  " << std::left << std::setw(4) << "r" << std::setw(7) << "lower" << "upper\n";
        for (int r = 1; r <= std::min(n, d - n); ++r) {
            const auto [lo, hi] = dim_bounds(amb, n, r);
            out << "  " << std::left << std::setw(4) << r << std::setw(7) << lo << hi << '\n';
        }
        return kExitOk;
    }
    const auto chains = face_chains(curve, n);
    const bool agree = chains_agree(chains);
    const bool ok = agree && std::all_of(chains.begin(), chains.end(), [](const FaceChain& c) { return c.ok(); });
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& ch : chains) {
            arr.push_back(to_json(ch));
        }
        Json j{{"chains", std::move(arr)}, {"regimes_agree", agree}, {"ok", ok}};
        out << j.dump(2) << '\n';
    } else {
        out << "g=" << amb.genus << " d=" << amb.degree << " n=" << n << " curve=" << to_string(curve.kind())
            << '\n';
        for (const auto& ch : chains) {
            print_chain(ch, out);
        }
        if (chains.size() > 1) {
            out << "regimes agree: " << (agree ? "yes" : "no") << '\n';
        }
        out << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
    if (cfg.genus < 1) {
        throw ParameterError("--genus must be at least 1 for region");
    }
    require_format(cfg, {"text", "json", "svg"});
    const int extent = cfg.degree >= 0 ? cfg.degree : 2 * cfg.genus;
    const CurveParams curve = make_curve(cfg, 1);
    const RegionMap map = region_map(curve.genus(), curve.kind(), extent, curve.gonality_overrides());
    if (cfg.format == "json") {
        out << to_json(map).dump(2) << '\n';
    } else if (cfg.format == "svg") {
        out << render_svg(map);
    } else {
        out << render_text(map);
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    VerifyBounds bounds;
    if (cfg.genus >= 0) {
        bounds.max_genus = cfg.genus;
    }
    if (cfg.degree >= 1) {
        bounds.max_degree = cfg.degree;
    }
    const auto results = run_verification(parse_verify_scope(cfg.scope), bounds);
    const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(Json{{"family", r.family},
                               {"name", r.name},
                               {"cases", r.cases},
                               {"failures", r.failures},
                               {"first_failure", r.first_failure},
                               {"passed", r.passed()}});
        }
        out << Json{{"max_genus", bounds.max_genus}, {"max_degree", bounds.max_degree}, {"results", arr},
                    {"ok", ok}}
                   .dump(2)
            << '\n';
    } else {
        out << "verify " << cfg.scope << " g<=" << bounds.max_genus << " d<=" << bounds.max_degree << '\n';
        for (const auto& r : results) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.family << ": " << r.name << " (" << r.cases << " cases";
            if (r.failures > 0) {
                out << ", " << r.failures << " failed, first at " << r.first_failure;
            }
            out << ")\n";
        }
        out << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--genus,-g", cfg.genus, "Genus g of the curve");
    sub->add_option("--degree,-d", cfg.degree, "Degree d of the symmetric product");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "svg"}));
    sub->add_option("--out,-o", cfg.out_path, "Write the report to this file");
}

void add_curve(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--curve", cfg.curve, "Curve kind")
        ->check(CLI::IsMember({"bn-general", "hyperelliptic", "custom"}))
        ->each([&cfg](const std::string&) { cfg.curve_given = true; });
    sub->add_option("--gonality-file", cfg.gonality_file, "JSON map r -> gon_r (custom curves)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Tautological classes, theta-filtration and Abel-Jacobi faces of symmetric products of curves",
                 "symtaut"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Normal form and degree of a class given as an expression");
    eval->add_option("expression", cfg.expression, "Polynomial in x and theta")->required();
    add_common(eval, cfg);

    auto* cls = app.add_subcommand("class", "Closed-form class of a Brill-Noether or subordinate locus");
    cls->add_option("family", cfg.family, "Class family")
        ->required()
        ->check(CLI::IsMember({"cdr", "clbn", "subordinate", "gamma", "upsilon", "upsilon-hyper", "cdr-hyper", "eta"}));
    add_common(cls, cfg);
    add_curve(cls, cfg);
    cls->add_option("--rank,-r", cfg.rank, "Linear-series dimension r");
    cls->add_option("--dim,-n", cfg.dim, "Cycle dimension n");
    cls->add_option("--index,-i", cfg.index, "Family index i");
    cls->add_option("--l", cfg.l, "Degree l of the subordinating series");
    cls->add_option("--s", cfg.s, "Dimension s of the subordinating series");

    auto* chain = app.add_subcommand("chain", "Maximal chain of Abel-Jacobi faces in dimension n");
    add_common(chain, cfg);
    add_curve(chain, cfg);
    chain->add_option("--dim,-n", cfg.dim, "Cycle dimension n")->required();

    auto* region = app.add_subcommand("region", "Classify the (n, m) plane; --degree sets the plotted extent");
    add_common(region, cfg);
    add_curve(region, cfg);

    auto* verify = app.add_subcommand("verify", "Run invariant sweeps; --genus/--degree are upper bounds");
    verify->add_option("scope", cfg.scope, "Which invariant families")
        ->check(CLI::IsMember({"all", "ring", "filtration", "classes", "faces"}));
    add_common(verify, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);
        if (code == 0) {
            out << msg.str();
            return kExitOk;
        }
        err << msg.str();
        return kExitInvalid;
    }

    std::ostringstream report;
    int code = kExitOk;
    try {
        if (*eval) {
            code = cmd_eval(cfg, report);
        } else if (*cls) {
            code = cmd_class(cfg, report);
        } else if (*chain) {
            code = cmd_chain(cfg, report);
        } else if (*region) {
            code = cmd_region(cfg, report);
        } else {
            code = cmd_verify(cfg, report);
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NoRegime& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    if (cfg.out_path.empty()) {
        out << report.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        file << report.str();
        if (!file) {
            err << "error: cannot write '" << cfg.out_path << "'\n";
            return kExitInvalid;
        }
    }
    return code;
}

}  // namespace symtaut::cli
