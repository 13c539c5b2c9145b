#include "symtaut/verify.hpp"

#include "symtaut/bn_classes.hpp"
#include "symtaut/errors.hpp"
#include "symtaut/faces.hpp"
#include "symtaut/theta_filtration.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

namespace symtaut {

namespace {

class Recorder {
public:
    Recorder(std::string family, std::string name) {
        result_.family = std::move(family);
        result_.name = std::move(name);
    }

    void check(bool ok, const std::function<std::string()>& where) {
        ++result_.cases;
        if (!ok) {
            if (result_.failures == 0) {
                result_.first_failure = where();
            }
            ++result_.failures;
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string at(int g, int d) {
    return "g=" + std::to_string(g) + " d=" + std::to_string(d);
}

std::string at(int g, int d, const char* k, int v) {
    return at(g, d) + " " + k + "=" + std::to_string(v);
}

std::string at(int g, int d, const char* k, int v, const char* k2, int v2) {
    return at(g, d, k, v) + " " + k2 + "=" + std::to_string(v2);
}

// Pairing of a class against theta^j x^{dim - j}.
Rational pair_theta(const TautClass& z, int j) {
    const int k = z.dimension();
    return pairing(z, TautClass::monomial(z.ambient(), k - j, j));
}

// Sign pattern: z . theta^j x^{n-j} vanishes for j > image_dim and is positive otherwise.
bool sign_pattern(const TautClass& z, int image_dim) {
    const int n = z.dimension();
    for (int j = 0; j <= n; ++j) {
        const Rational p = pair_theta(z, j);
        if (j > image_dim ? p != 0 : p <= 0) {
            return false;
        }
    }
    return true;
}

bool pairs_nonnegatively(const TautClass& z) {
    const int n = z.dimension();
    for (int j = 0; j <= n; ++j) {
        if (pair_theta(z, j) < 0) {
            return false;
        }
    }
    return true;
}

std::vector<CurveParams> curves_for(int g, int d) {
    std::vector<CurveParams> out{CurveParams(g, d, CurveKind::BrillNoetherGeneral)};
    if (g >= 2) {
        out.emplace_back(g, d, CurveKind::Hyperelliptic);
    }
    return out;
}

}  // namespace

std::string_view to_string(VerifyScope s) {
    switch (s) {
    case VerifyScope::All:
        return "all";
    case VerifyScope::Ring:
        return "ring";
    case VerifyScope::Filtration:
        return "filtration";
    case VerifyScope::Classes:
        return "classes";
    case VerifyScope::Faces:
        return "faces";
    }
    return "unknown";
}

VerifyScope parse_verify_scope(std::string_view text) {
    for (VerifyScope s :
         {VerifyScope::All, VerifyScope::Ring, VerifyScope::Filtration, VerifyScope::Classes, VerifyScope::Faces}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    throw ParameterError("unknown verify scope '" + std::string(text) + "'");
}

std::vector<CheckResult> verify_ring(const VerifyBounds& b) {
    Recorder numbers("ring", "intersection numbers s! C(g,s)");
    Recorder gram("ring", "gram matrix Hankel and nondegenerate");
    Recorder nf("ring", "normal form idempotent and pairing-preserving");
    Recorder mult("ring", "product commutative and associative");
    for (int g = 0; g <= b.max_genus; ++g) {
        for (int d = 1; d <= b.max_degree; ++d) {
            const Ambient amb{g, d};
            for (int s = 0; s <= d; ++s) {
                const Rational expected = Rational(factorial(s)) * binomial(Rational(g), s);
                numbers.check(intersection_number(amb, s) == expected &&
                                  eval_top(theta_power(amb, s) * x_power(amb, d - s)) == expected,
                              [&] { return at(g, d, "s", s); });
            }
            for (int m = 0; m <= d; ++m) {
                const RatMatrix gm = gram_matrix(amb, m);
                bool hankel = gm == gm.transpose();
                for (std::size_t i = 0; i + 1 < gm.rows(); ++i) {
                    for (std::size_t j = 0; j + 1 < gm.cols(); ++j) {
                        hankel = hankel && gm(i + 1, j) == gm(i, j + 1);
                    }
                }
                gram.check(hankel && rank(gm) == static_cast<std::size_t>(standard_rank(amb, m) + 1),
                           [&] { return at(g, d, "m", m); });

                const auto dual = standard_basis(amb, d - m);
                for (int t = 0; t <= std::min(m, g); ++t) {
                    const TautClass mono = TautClass::monomial(amb, m - t, t);
                    const NormalForm n1 = normal_form(mono);
                    const TautClass back = n1.to_class();
                    bool ok = normal_form(back) == n1;
                    for (const auto& e : dual) {
                        const TautClass ec = TautClass::monomial(amb, e);
                        ok = ok && pairing(mono, ec) == pairing(back, ec);
                    }
                    nf.check(ok, [&] { return at(g, d, "m", m, "theta", t); });
                }
            }
            if (d <= 8) {
                for (int m1 = 0; m1 <= d; ++m1) {
                    for (int m2 = 0; m1 + m2 <= d; ++m2) {
                        const TautClass a = m1 == 0 ? x_power(amb, 0)
                                                    : x_power(amb, m1) + TautClass::monomial(amb, m1 - 1, 1, 2);
                        const TautClass c = theta_power(amb, m2) - x_power(amb, m2);
                        bool ok = equals(a * c, c * a);
                        if (m1 + m2 + 1 <= d) {
                            const TautClass e = eta_class(amb);
                            ok = ok && equals((a * c) * e, a * (c * e));
                        }
                        mult.check(ok, [&] { return at(g, d, "m1", m1, "m2", m2); });
                    }
                }
            }
        }
    }
    return {numbers.take(), gram.take(), nf.take(), mult.take()};
}

std::vector<CheckResult> verify_filtration(const VerifyBounds& b) {
    Recorder codim("filtration", "codimension formula vs rank");
    Recorder chain("filtration", "pieces decrease in i");
    Recorder incl("filtration", "perp contains the complementary piece");
    Recorder eq("filtration", "equality classifier vs direct comparison");
    Recorder multiplicative("filtration", "filtration is multiplicative");
    for (int g = 0; g <= b.max_genus; ++g) {
        for (int d = 1; d <= b.max_degree; ++d) {
            const Ambient amb{g, d};
            for (int m = 0; m <= d; ++m) {
                const int dim = standard_rank(amb, m) + 1;
                for (int i = 0; i <= g + 1; ++i) {
                    // Direct: span of all surviving monomials theta^t x^{m-t}, t >= i.
                    std::vector<TautClass> monos;
                    for (int t = i; t <= std::min(m, g); ++t) {
                        monos.push_back(TautClass::monomial(amb, m - t, t));
                    }
                    const Subspace direct = span_of(amb, m, monos);
                    const ThetaPiece piece = theta_piece(amb, m, i);
                    codim.check(piece.subspace == direct &&
                                    theta_codim(amb, m, i) == dim - static_cast<int>(direct.dim()) &&
                                    piece.basis_monomials.size() == direct.dim(),
                                [&] { return at(g, d, "m", m, "i", i); });
                    chain.check(theta_piece(amb, m, i).subspace.contains(theta_piece(amb, m, i + 1).subspace),
                                [&] { return at(g, d, "m", m, "i", i); });

                    const Subspace perp = theta_perp(amb, m, i);
                    const Subspace rhs = theta_piece(amb, d - m, g + 1 - i).subspace;
                    incl.check(perp.contains(rhs) && static_cast<int>(perp.dim()) == theta_codim(amb, m, i),
                               [&] { return at(g, d, "m", m, "i", i); });
                    eq.check(is_equality(perp_equality_case(amb, m, i)) == (perp == rhs),
                             [&] { return at(g, d, "m", m, "i", i); });
                }
            }
            if (d <= 8) {
                for (int m = 0; m <= d; ++m) {
                    for (int l = 0; m + l <= d; ++l) {
                        for (int t = 0; t <= std::min(m, g); ++t) {
                            for (int u = 0; u <= std::min(l, g); ++u) {
                                const TautClass prod =
                                    TautClass::monomial(amb, m - t, t) * TautClass::monomial(amb, l - u, u);
                                multiplicative.check(
                                    theta_piece(amb, m + l, t + u).subspace.contains(coordinates(prod)),
                                    [&] { return at(g, d, "m", m, "l", l); });
                            }
                        }
                    }
                }
            }
        }
    }
    return {codim.take(), chain.take(), incl.take(), eq.take(), multiplicative.take()};
}

std::vector<CheckResult> verify_classes(const VerifyBounds& b) {
    Recorder cdr("classes", "c_d^{d-g+1} equals the clBN expansion");
    Recorder canonical("classes", "subordinate to |K| equals the clBN expansion");
    Recorder ups0("classes", "Upsilon_0 equals the clBN expansion");
    Recorder gamma0("classes", "Gamma_0 equals the subordinate class (l=d, s=n)");
    Recorder hyper0("classes", "Upsilon^H_0 at n=g-1 equals the clBN expansion");
    Recorder signs("classes", "pairing sign pattern against theta^j x^{n-j}");
    Recorder contr("classes", "contractibility index of Gamma_i is n-i");
    Recorder push("classes", "push operator is a positive multiple of [C_d^r] (hyperelliptic)");
    for (int g = 0; g <= b.max_genus; ++g) {
        for (int d = 1; d <= b.max_degree; ++d) {
            const Ambient amb{g, d};
            if (g <= d && d <= 2 * g - 2) {
                const TautClass cl = class_clBN(amb);
                cdr.check(equals(class_Cdr(amb, d - g + 1), cl), [&] { return at(g, d); });
                // Gamma_d(|K|): l = 2g-2, s = g-1.
                canonical.check(equals(class_subordinate(amb, 2 * g - 2, g - 1), cl), [&] { return at(g, d); });
                ups0.check(equals(class_Upsilon_i(amb, 0), cl), [&] { return at(g, d); });
                for (int i = 0; i <= d - g; ++i) {
                    signs.check(sign_pattern(class_Upsilon_i(amb, i), 2 * g - 2 - d + i),
                                [&] { return "Upsilon " + at(g, d, "i", i); });
                }
                if (g >= 2) {
                    const CurveParams hyp(g, d, CurveKind::Hyperelliptic);
                    hyper0.check(equals(class_Upsilon_i_hyper(hyp, g - 1, 0), cl), [&] { return at(g, d); });
                }
            }
            for (const auto& curve : curves_for(g, d)) {
                for (int n = 1; n <= d; ++n) {
                    if (!degree_reaches_gonality(curve, n, d)) {
                        continue;
                    }
                    gamma0.check(equals(class_Gamma_i(curve, n, 0), class_subordinate(amb, d, n)),
                                 [&] { return at(g, d, "n", n); });
                    for (int i = 0; i <= std::min(n, g); ++i) {
                        const TautClass gi = class_Gamma_i(curve, n, i);
                        signs.check(sign_pattern(gi, i), [&] { return "Gamma " + at(g, d, "n", n, "i", i); });
                        contr.check(contractibility_index(gi) == n - i,
                                    [&] { return at(g, d, "n", n, "i", i); });
                    }
                }
                if (curve.kind() == CurveKind::Hyperelliptic) {
                    for (int n = 0; n < g; ++n) {
                        if (!(0 <= d - n && d - n <= n)) {
                            continue;
                        }
                        for (int i = 0; i <= d - n; ++i) {
                            signs.check(sign_pattern(class_Upsilon_i_hyper(curve, n, i), 2 * n - d + i),
                                        [&] { return "Upsilon^H " + at(g, d, "n", n, "i", i); });
                        }
                    }
                    if (d <= 2 * g - 2) {
                        for (int r = std::max(1, d - g + 1); 2 * r <= d; ++r) {
                            const TautClass pushed = push_A_subordinate(g, r, d - 2 * r);
                            push.check(is_positive_multiple(pushed, class_Cdr_hyper(curve, r)),
                                       [&] { return at(g, d, "r", r); });
                        }
                    }
                }
            }
        }
    }
    return {cdr.take(),   canonical.take(), ups0.take(), gamma0.take(),
            hyper0.take(), signs.take(),     contr.take(), push.take()};
}

std::vector<CheckResult> verify_faces(const VerifyBounds& b) {
    Recorder chains("faces", "maximal chains certified perfect");
    Recorder overlap("faces", "overlapping regimes give the same faces");
    Recorder theta("faces", "theta-face spans equal monomial spans");
    Recorder sigma("faces", "Sigma_{i+1} perp equals theta^{>=i+1,n}");
    Recorder effective("faces", "generators pair non-negatively with monomials");
    Recorder perfect("faces", "BN ray perfectness vs theta codimension");
    for (int g = 0; g <= b.max_genus; ++g) {
        for (int d = 1; d <= b.max_degree; ++d) {
            const Ambient amb{g, d};
            for (const auto& curve : curves_for(g, d)) {
                for (int n = 0; n <= d; ++n) {
                    const auto regs = regime(curve, n);
                    if (regs.front() == Regime::BoundsOnly) {
                        continue;
                    }
                    const auto all = face_chains(curve, n);
                    for (const auto& ch : all) {
                        chains.check(ch.ok(), [&] {
                            return std::string(to_string(curve.kind())) + " " + at(g, d, "n", n) + " " +
                                   std::string(to_string(ch.regime));
                        });
                        for (const auto& f : ch.faces) {
                            for (const auto& z : f.generators) {
                                effective.check(pairs_nonnegatively(z), [&] { return at(g, d, "n", n, "r", f.r); });
                            }
                            if (ch.regime == Regime::ThetaFaces) {
                                const Subspace mono = theta_piece(amb, d - n, g - n + f.r).subspace;
                                theta.check(mono == f.span, [&] { return at(g, d, "n", n, "r", f.r); });
                            }
                        }
                    }
                    overlap.check(chains_agree(all), [&] { return at(g, d, "n", n); });
                    if (std::find(regs.begin(), regs.end(), Regime::Subordinate) != regs.end()) {
                        std::vector<TautClass> gens;
                        for (int i = 0; i <= std::min(n, g); ++i) {
                            gens.push_back(class_Gamma_i(curve, n, i));
                            const Subspace s = span_of(amb, d - n, gens);
                            const bool independent = s.dim() == gens.size();
                            const Subspace p = s.perp(gram_matrix(amb, d - n));
                            sigma.check(independent && p == theta_piece(amb, n, i + 1).subspace,
                                        [&] { return at(g, d, "n", n, "i", i); });
                        }
                    }
                }
            }
        }
    }
    for (int g = 0; g <= std::max(b.max_genus, 8); ++g) {
        for (int d = 1; d <= 2 * g - 2; ++d) {
            for (int r = 1; r <= d; ++r) {
                if (!bn_ray_admissible(g, r, d)) {
                    continue;
                }
                const long rh = rho(g, r, d);
                const Ambient amb{g, d};
                const bool direct = theta_codim(amb, r + static_cast<int>(rh), static_cast<int>(rh) + 1) == 1;
                const FaceDescriptor ray = bn_ray(CurveParams(g, d), r);
                perfect.check(bn_ray_perfect(g, r, d) == direct && ray.certificate.perfect() == direct,
                              [&] { return at(g, d, "r", r); });
            }
        }
    }
    return {chains.take(), overlap.take(), theta.take(), sigma.take(), effective.take(), perfect.take()};
}

std::vector<CheckResult> run_verification(VerifyScope scope, const VerifyBounds& bounds) {
    if (bounds.max_genus < 0 || bounds.max_degree < 1) {
        throw ParameterError("verify bounds need genus >= 0 and degree >= 1");
    }
    using Family = std::vector<CheckResult> (*)(const VerifyBounds&);
    std::vector<Family> families;
    if (scope == VerifyScope::All || scope == VerifyScope::Ring) {
        families.push_back(&verify_ring);
    }
    if (scope == VerifyScope::All || scope == VerifyScope::Filtration) {
        families.push_back(&verify_filtration);
    }
    if (scope == VerifyScope::All || scope == VerifyScope::Classes) {
        families.push_back(&verify_classes);
    }
    if (scope == VerifyScope::All || scope == VerifyScope::Faces) {
        families.push_back(&verify_faces);
    }
    std::vector<std::future<std::vector<CheckResult>>> running;
    for (Family f : families) {
        running.push_back(std::async(std::launch::async, f, bounds));
    }
    std::vector<CheckResult> out;
    for (auto& r : running) {
        auto part = r.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace symtaut
