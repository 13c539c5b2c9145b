#include "symtaut/bn_classes.hpp"
#include "symtaut/errors.hpp"

#include <gtest/gtest.h>

#include <tuple>

using namespace symtaut;

namespace {

// sum of coeff * x^a theta^b
TautClass poly(const Ambient& amb, std::initializer_list<std::tuple<int, int, Rational>> terms) {
    auto it = terms.begin();
    TautClass c(amb, std::get<0>(*it) + std::get<1>(*it));
    for (const auto& [a, b, coeff] : terms) {
        c.add_monomial(Monomial{a, b}, coeff);
    }
    return c;
}

const CurveParams hyper(int g, int d) {
    return CurveParams(g, d, CurveKind::Hyperelliptic);
}

}  // namespace

TEST(Rho, Examples) {
    EXPECT_EQ(rho(4, 1, 3), 0);
    EXPECT_EQ(rho(3, 1, 3), 1);
    for (int g = 0; g < 6; ++g) {
        for (int d = 0; d < 8; ++d) {
            EXPECT_EQ(rho(g, 0, d), d);
        }
    }
    EXPECT_EQ(rho(10, 3, 4), 10 - 4 * 9);
}

TEST(Gonality, Examples) {
    EXPECT_EQ(gonality_index(CurveParams(4, 4), 1).value(), 3);
    EXPECT_EQ(gonality_index(CurveParams(5, 5), 4).value(), 8);
    EXPECT_EQ(gonality_index(hyper(4, 5), 1).value(), 2);
    EXPECT_EQ(gonality_index(CurveParams(3, 3), 5).value(), 8);
    EXPECT_EQ(gonality_index(hyper(3, 3), 3).value(), 6);
}

TEST(Gonality, CustomCurves) {
    const CurveParams open(6, 6, CurveKind::Custom);
    const GonalityIndex gi = gonality_index(open, 2);
    EXPECT_FALSE(gi.exact());
    EXPECT_FALSE(gi.value().has_value());
    EXPECT_EQ(gi.lower, 4);
    EXPECT_EQ(gi.upper, gamma_bound(6, 2));
    EXPECT_FALSE(degree_reaches_gonality(open, 2, 5));
    EXPECT_TRUE(degree_reaches_gonality(open, 2, gamma_bound(6, 2)));

    const CurveParams pinned(6, 6, CurveKind::Custom, {{1, 3}});
    EXPECT_EQ(gonality_index(pinned, 1).value(), 3);
    EXPECT_TRUE(degree_reaches_gonality(pinned, 1, 3));
    EXPECT_FALSE(degree_reaches_gonality(pinned, 1, 2));
}

TEST(Gonality, Errors) {
    EXPECT_THROW(gonality_index(CurveParams(4, 4), 0), ParameterError);
    EXPECT_THROW(CurveParams(6, 6, CurveKind::Custom, {{1, 1}}), ParameterError);
    EXPECT_THROW(CurveParams(6, 6, CurveKind::Custom, {{1, 9}}), ParameterError);
}

TEST(GonalityProperty, BoundsAndMonotone) {
    for (int g = 1; g <= 10; ++g) {
        for (auto kind : {CurveKind::BrillNoetherGeneral, CurveKind::Hyperelliptic, CurveKind::Custom}) {
            if (kind == CurveKind::Hyperelliptic && g < 2) {
                continue;
            }
            const CurveParams c(g, g, kind);
            int prev = 0;
            for (int r = 1; r <= g + 3; ++r) {
                const GonalityIndex gi = gonality_index(c, r);
                EXPECT_LE(gi.lower, gi.upper);
                EXPECT_GE(gi.lower, std::min(2 * r, g + r));
                EXPECT_GT(gi.lower, prev);
                prev = gi.lower;
                if (r >= g) {
                    EXPECT_EQ(gi.value(), g + r);
                }
            }
        }
    }
}

TEST(Castelnuovo, Examples) {
    const CastelnuovoCount c431 = castelnuovo_count(4, 1, 3);
    EXPECT_EQ(c431.index_from_one, Rational(4));
    EXPECT_EQ(c431.index_from_zero, Rational(2));

    // Both index conventions agree here: 2! (1!/2!) = 1 = 2! (0!/1!)(1!/2!).
    const CastelnuovoCount c212 = castelnuovo_count(2, 1, 2);
    EXPECT_EQ(c212.index_from_one, Rational(1));
    EXPECT_EQ(c212.index_from_zero, Rational(1));

    for (int g = 0; g <= 6; ++g) {
        const CastelnuovoCount c = castelnuovo_count(g, 0, 0);
        EXPECT_EQ(c.index_from_zero, Rational(1));
        EXPECT_EQ(c.index_from_one, Rational(factorial(g)));
    }
    EXPECT_THROW(castelnuovo_count(3, 1, 3), ParameterError);
}

TEST(Cdr, Examples) {
    const Ambient a33{3, 3};
    EXPECT_EQ(class_Cdr(a33, 1), poly(a33, {{0, 1, 1}, {1, 0, -1}}));
    const Ambient a43{4, 3};
    EXPECT_EQ(class_Cdr(a43, 1), poly(a43, {{0, 2, Rational(1, 2)}, {1, 1, -1}}));
    const Ambient a34{3, 4};
    EXPECT_TRUE(equals(class_Cdr(a34, 2), class_clBN(a34)));
    EXPECT_THROW(class_Cdr(a34, 0), ParameterError);
    EXPECT_THROW(class_Cdr({3, 5}, 2), ParameterError);
}

TEST(ClBN, Examples) {
    const Ambient a34{3, 4};
    EXPECT_EQ(class_clBN(a34), poly(a34, {{0, 2, Rational(1, 2)}, {1, 1, -1}, {2, 0, 1}}));
    const Ambient a33{3, 3};
    EXPECT_EQ(class_clBN(a33), poly(a33, {{0, 1, 1}, {1, 0, -1}}));
    const Ambient a22{2, 2};
    EXPECT_EQ(class_clBN(a22), poly(a22, {{0, 1, 1}, {1, 0, -1}}));
    EXPECT_THROW(class_clBN({3, 2}), ParameterError);
    EXPECT_THROW(class_clBN({3, 5}), ParameterError);
}

TEST(Subordinate, Examples) {
    const Ambient a22{2, 2};
    EXPECT_EQ(class_subordinate(a22, 2, 1), poly(a22, {{0, 1, 1}, {1, 0, -1}}));
    EXPECT_TRUE(equals(class_subordinate(a22, 2, 1), class_clBN(a22)));
    // theta^3 vanishes in genus 2, leaving x theta^2 / 2 as the raw class.
    const Ambient a24{2, 4};
    EXPECT_TRUE(equals(class_subordinate(a24, 4, 1),
                       poly(a24, {{1, 2, Rational(1, 2)}})));
    EXPECT_EQ(class_subordinate(a24, 4, 1).codim(), 3);
    for (int g = 2; g <= 7; ++g) {
        const Ambient amb{g, 2 * g - 2};
        EXPECT_TRUE(equals(class_subordinate(amb, 2 * g - 2, g - 1), class_clBN(amb)));
    }
    EXPECT_THROW(class_subordinate(a24, 3, 1), ParameterError);
    EXPECT_THROW(class_subordinate(a24, 4, 5), ParameterError);
}

TEST(GammaI, Examples) {
    const CurveParams c24(2, 4);
    EXPECT_EQ(class_Gamma_i(c24, 1, 1), poly(c24.ambient(), {{1, 2, Rational(1, 2)}, {2, 1, 1}}));
    for (int g = 1; g <= 4; ++g) {
        for (int d = 1; d <= 8; ++d) {
            const CurveParams c(g, d);
            for (int n = 1; n <= d; ++n) {
                if (!degree_reaches_gonality(c, n, d)) {
                    EXPECT_THROW(class_Gamma_i(c, n, 0), ParameterError);
                    continue;
                }
                EXPECT_TRUE(equals(class_Gamma_i(c, n, 0), class_subordinate(c.ambient(), d, n)));
                const int i = d - n;
                if (i <= std::min(n, g)) {
                    EXPECT_EQ(class_Gamma_i(c, n, i), x_power(c.ambient(), i));
                }
            }
        }
    }
    EXPECT_THROW(class_Gamma_i(c24, 1, 2), ParameterError);
}

TEST(UpsilonI, Examples) {
    const Ambient a34{3, 4};
    EXPECT_EQ(class_Upsilon_i(a34, 0), class_clBN(a34));
    EXPECT_EQ(class_Upsilon_i(a34, 1), poly(a34, {{1, 1, 1}, {2, 0, -1}}));
    const Ambient a46{4, 6};
    EXPECT_EQ(class_Upsilon_i(a46, 2), poly(a46, {{2, 1, 1}, {3, 0, -1}}));
    EXPECT_THROW(class_Upsilon_i(a34, 2), ParameterError);
    EXPECT_THROW(class_Upsilon_i({3, 5}, 0), ParameterError);
}

TEST(UpsilonIHyper, Examples) {
    const CurveParams c = hyper(4, 5);
    const Ambient& a = c.ambient();
    EXPECT_EQ(class_Upsilon_i_hyper(c, 3, 0), poly(a, {{0, 2, Rational(1, 2)}, {1, 1, -1}, {2, 0, 1}}));
    EXPECT_EQ(class_Upsilon_i_hyper(c, 3, 1), poly(a, {{1, 1, 1}, {2, 0, -1}}));
    EXPECT_EQ(class_Upsilon_i_hyper(c, 3, 2), x_power(a, 2));
    EXPECT_THROW(class_Upsilon_i_hyper(CurveParams(4, 5), 3, 0), ParameterError);
    EXPECT_THROW(class_Upsilon_i_hyper(c, 3, 3), ParameterError);
    EXPECT_THROW(class_Upsilon_i_hyper(c, 2, 0), ParameterError);
}

TEST(CdrHyper, Examples) {
    const CurveParams c22 = hyper(2, 2);
    EXPECT_EQ(class_Cdr_hyper(c22, 1), poly(c22.ambient(), {{0, 1, 1}, {1, 0, -1}}));
    EXPECT_TRUE(equals(class_Cdr_hyper(c22, 1), class_clBN(c22.ambient())));
    const CurveParams c34 = hyper(3, 4);
    // r = 1 < d-g+1: every divisor of degree 4 moves, so the locus is all of C_4.
    EXPECT_THROW(class_Cdr_hyper(c34, 1), ParameterError);
    // Upper index d-r-g = -2: C(-2, k) = (-1)^k (k+1).
    const CurveParams c56 = hyper(5, 6);
    EXPECT_EQ(class_Cdr_hyper(c56, 3),
              poly(c56.ambient(), {{0, 3, Rational(1, 6)}, {1, 2, -1}, {2, 1, 3}, {3, 0, -4}}));
    EXPECT_EQ(class_Cdr_hyper(c34, 2), poly(c34.ambient(), {{0, 2, Rational(1, 2)}, {1, 1, -1}, {2, 0, 1}}));
    EXPECT_THROW(class_Cdr_hyper(c34, 3), ParameterError);
    EXPECT_THROW(class_Cdr_hyper(CurveParams(3, 4), 1), ParameterError);
}

TEST(PushA, Examples) {
    const Ambient a22{2, 2};
    EXPECT_EQ(push_A_subordinate(2, 1, 0), poly(a22, {{0, 1, 1}, {1, 0, -1}}));
    const Ambient a33{3, 3};
    EXPECT_EQ(push_A_subordinate(3, 1, 1), poly(a33, {{0, 1, 1}, {1, 0, -1}}));
    const Ambient a23{2, 3};
    EXPECT_EQ(push_A_subordinate(2, 1, 1), theta_power(a23, 1));
    EXPECT_THROW(push_A_subordinate(2, 0, 1), ParameterError);
}

TEST(Contractibility, Examples) {
    EXPECT_EQ(contractibility_index(theta_power({1, 2}, 1)), 1);
    EXPECT_EQ(contractibility_index(class_Cdr({3, 3}, 1)), 1);
    EXPECT_EQ(contractibility_index(TautClass({3, 3}, 1)), 3);
    EXPECT_EQ(contractibility_index(x_power({3, 3}, 1)), 0);
}

TEST(Eta, Examples) {
    const Ambient a12{1, 2};
    EXPECT_EQ(eta_class(a12), poly(a12, {{1, 0, 2}, {0, 1, -1}}));
    const Ambient a34{3, 4};
    EXPECT_EQ(eta_class(a34), poly(a34, {{1, 0, 12}, {0, 1, -1}}));
    EXPECT_EQ(pairing(eta_class(a12), x_power(a12, 1)), Rational(1));
}

TEST(BNClassesProperty, CdrAtTopRankIsClBN) {
    for (int g = 1; g <= 8; ++g) {
        for (int d = g; d <= 2 * g - 2; ++d) {
            const Ambient amb{g, d};
            EXPECT_TRUE(equals(class_Cdr(amb, d - g + 1), class_clBN(amb))) << g << " " << d;
            EXPECT_TRUE(equals(class_subordinate(amb, 2 * g - 2, g - 1), class_clBN(amb))) << g << " " << d;
            EXPECT_EQ(class_Upsilon_i(amb, 0), class_clBN(amb));
        }
    }
}

TEST(BNClassesProperty, HyperUpsilonAtTopDimIsClBN) {
    for (int g = 2; g <= 7; ++g) {
        for (int d = g - 1; d <= 2 * g - 2; ++d) {
            const CurveParams c = hyper(g, d);
            if (d < g) {
                continue;
            }
            EXPECT_TRUE(equals(class_Upsilon_i_hyper(c, g - 1, 0), class_clBN(c.ambient())));
        }
    }
}

TEST(BNClassesProperty, IntersectionSignPattern) {
    auto check = [](const TautClass& z, int n, int image_dim, const std::string& label) {
        const Ambient& amb = z.ambient();
        for (int j = 0; j <= n; ++j) {
            const Rational p = pairing(z, TautClass::monomial(amb, n - j, j));
            if (j > image_dim) {
                EXPECT_EQ(p, 0) << label << " j=" << j;
            } else {
                EXPECT_GT(p, 0) << label << " j=" << j;
            }
        }
    };
    for (int g = 1; g <= 5; ++g) {
        for (int d = 1; d <= 2 * g + 2; ++d) {
            const CurveParams c(g, d);
            for (int n = 1; n <= d; ++n) {
                if (!degree_reaches_gonality(c, n, d)) {
                    continue;
                }
                for (int i = 0; i <= std::min({n, g, d - n}); ++i) {
                    const TautClass z = class_Gamma_i(c, n, i);
                    EXPECT_EQ(contractibility_index(z), n - i);
                    check(z, n, i, "Gamma g=" + std::to_string(g) + " d=" + std::to_string(d));
                }
            }
            if (g <= d && d <= 2 * g - 2) {
                for (int i = 0; i <= d - g; ++i) {
                    check(class_Upsilon_i(c.ambient(), i), g - 1, 2 * g - 2 - d + i, "Upsilon");
                }
            }
            if (g < 2) {
                continue;
            }
            const CurveParams h = hyper(g, d);
            for (int n = 1; n < g; ++n) {
                if (d - n < 0 || d - n > n) {
                    continue;
                }
                for (int i = 0; i <= d - n; ++i) {
                    check(class_Upsilon_i_hyper(h, n, i), n, 2 * n - d + i, "UpsilonH");
                }
            }
        }
    }
}

TEST(BNClassesProperty, PushAMatchesHyperCdr) {
    for (int g = 2; g <= 7; ++g) {
        for (int r = 1; 2 * r <= 2 * g - 2; ++r) {
            for (int d = 2 * r; d <= 2 * g - 2; ++d) {
                if (r < std::max(0, d - g + 1)) {
                    continue;
                }
                const TautClass push = push_A_subordinate(g, r, d - 2 * r);
                const TautClass cdr = class_Cdr_hyper(hyper(g, d), r);
                EXPECT_TRUE(is_positive_multiple(push, cdr)) << g << " " << r << " " << d;
            }
        }
    }
}
