#include "symtaut/errors.hpp"
#include "symtaut/taut_ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symtaut;

namespace {

TautClass mono(Ambient amb, int a, int b, Rational c = 1) {
    return TautClass::monomial(amb, a, b, c);
}

TautClass random_class(std::mt19937& rng, Ambient amb, int codim) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    TautClass c(amb, codim);
    for (int b = 0; b <= codim; ++b) {
        Rational q(coeff(rng), 1 + static_cast<int>(rng() % 3));
        q.canonicalize();
        c.add_monomial(Monomial{codim - b, b}, q);
    }
    return c;
}

}  // namespace

TEST(TautRing, IntersectionNumbers) {
    EXPECT_EQ(intersection_number({3, 4}, 2), 6);
    for (int g = 0; g < 5; ++g) {
        for (int d = 1; d < 6; ++d) {
            EXPECT_EQ(intersection_number({g, d}, 0), 1);
        }
    }
    EXPECT_EQ(intersection_number({2, 5}, 3), 0);
    EXPECT_THROW(intersection_number({2, 5}, 6), ParameterError);
    EXPECT_THROW(intersection_number({2, 5}, -1), ParameterError);
}

TEST(TautRing, ConstructionDropsHighThetaPowers) {
    const Ambient amb{2, 5};
    const TautClass t3 = theta_power(amb, 3);
    EXPECT_TRUE(t3.is_raw_zero());
    EXPECT_TRUE(is_zero(t3));
    EXPECT_THROW(TautClass(amb, 6), ParameterError);
    EXPECT_THROW(TautClass({-1, 3}, 1), ParameterError);
    EXPECT_THROW(TautClass({1, 0}, 0), ParameterError);
    TautClass c(amb, 2);
    EXPECT_THROW(c.add_monomial(Monomial{1, 0}, 1), ParameterError);
}

TEST(TautRing, Multiply) {
    const Ambient amb{3, 6};
    EXPECT_EQ(x_power(amb, 2) * x_power(amb, 3), x_power(amb, 5));
    EXPECT_TRUE((theta_power(amb, 3) * theta_power(amb, 1)).is_raw_zero());

    const Ambient a33{3, 3};
    const TautClass prod = (theta_power(a33, 1) - x_power(a33, 1)) * theta_power(a33, 1);
    EXPECT_EQ(prod, mono(a33, 0, 2) - mono(a33, 1, 1));
    EXPECT_EQ(normal_form(prod).coords, (Vector{-6, 3}));

    EXPECT_THROW(x_power(amb, 4) * x_power(amb, 3), ParameterError);
    EXPECT_THROW(x_power(amb, 1) * x_power({2, 6}, 1), ContextMismatch);
}

TEST(TautRing, EvalTop) {
    EXPECT_EQ(eval_top(x_power({4, 7}, 7)), 1);
    for (int g = 0; g <= 6; ++g) {
        const Ambient amb{g, g + 2};
        Rational gfact = 1;
        for (int k = 2; k <= g; ++k) {
            gfact *= k;
        }
        EXPECT_EQ(eval_top(mono(amb, amb.degree - g, g)), gfact);
    }
    const Ambient amb{3, 4};
    const TautClass cl = mono(amb, 0, 2, Rational(1, 2)) - mono(amb, 1, 1) + mono(amb, 2, 0);
    EXPECT_EQ(eval_top(cl * x_power(amb, 2)), 1);
    EXPECT_THROW(eval_top(cl), ParameterError);
}

TEST(TautRing, Pairing) {
    const Ambient amb{3, 4};
    EXPECT_EQ(pairing(x_power(amb, 1), x_power(amb, 3)), 1);
    EXPECT_EQ(pairing(theta_power(amb, 2), mono(amb, 1, 1)), 6);
    const Ambient a33{3, 3};
    EXPECT_EQ(pairing(mono(a33, 0, 2) - mono(a33, 1, 1), theta_power(a33, 1)), 0);
    EXPECT_THROW(pairing(x_power(amb, 1), x_power(amb, 1)), ParameterError);
}

TEST(TautRing, GramMatrix) {
    EXPECT_EQ(gram_matrix({3, 4}, 2), (RatMatrix{{1, 3, 6}, {3, 6, 6}, {6, 6, 0}}));
    EXPECT_EQ(gram_matrix({2, 3}, 2), (RatMatrix{{1, 2}, {2, 2}}));
    for (int g = 0; g < 5; ++g) {
        EXPECT_EQ(gram_matrix({g, 4}, 0), (RatMatrix{{1}}));
    }
}

TEST(TautRing, NormalForms) {
    const Ambient amb{4, 6};
    EXPECT_EQ(normal_form(x_power(amb, 3)).coords, (Vector{1, 0, 0, 0}));
    EXPECT_EQ(normal_form(theta_power({2, 3}, 2)).coords, (Vector{-2, 2}));
    for (int d = 3; d <= 8; ++d) {
        EXPECT_TRUE(is_zero(theta_power({1, d}, 2))) << d;
    }
}

TEST(TautRing, EqualityAndMultiples) {
    const Ambient amb{2, 3};
    const TautClass t2 = theta_power(amb, 2);
    const TautClass alt = mono(amb, 2, 0, -2) + mono(amb, 1, 1, 2);
    EXPECT_TRUE(equals(t2, alt));
    EXPECT_FALSE(equals(x_power(amb, 2), Rational(2) * x_power(amb, 2)));
    EXPECT_THROW(equals(x_power(amb, 2), x_power(amb, 1)), ParameterError);
    EXPECT_THROW(equals(x_power(amb, 1), x_power({3, 3}, 1)), ContextMismatch);

    EXPECT_TRUE(is_positive_multiple(Rational(2) * theta_power(amb, 1), theta_power(amb, 1)));
    EXPECT_FALSE(is_positive_multiple(-theta_power(amb, 1), theta_power(amb, 1)));
    EXPECT_TRUE(is_positive_multiple(t2, alt));
    EXPECT_EQ(multiple_factor(t2, alt), Rational(1));
    EXPECT_TRUE(is_positive_multiple(TautClass(amb, 1), TautClass(amb, 1)));
    EXPECT_FALSE(is_positive_multiple(theta_power(amb, 1), TautClass(amb, 1)));
}

TEST(TautRing, ToString) {
    const Ambient amb{3, 4};
    EXPECT_EQ(to_string(mono(amb, 0, 2, Rational(1, 2)) - mono(amb, 1, 1) + mono(amb, 2, 0)),
              "1/2*theta^2 - x*theta + x^2");
    EXPECT_EQ(to_string(TautClass(amb, 2)), "0");
    EXPECT_EQ(to_string(mono(amb, 0, 0, -3)), "-3");
    EXPECT_EQ(to_string(-theta_power(amb, 1) + Rational(12) * x_power(amb, 1)), "-theta + 12*x");
}

TEST(TautRingProperty, GramHankelAndNondegenerate) {
    for (int g = 0; g <= 8; ++g) {
        for (int d = 1; d <= 12; ++d) {
            for (int m = 0; m <= d; ++m) {
                const Ambient amb{g, d};
                const RatMatrix gm = gram_matrix(amb, m);
                EXPECT_EQ(rank(gm), static_cast<std::size_t>(standard_rank(amb, m) + 1));
                for (std::size_t i = 0; i < gm.rows(); ++i) {
                    for (std::size_t j = 0; j < gm.cols(); ++j) {
                        EXPECT_EQ(gm(i, j), intersection_number(amb, static_cast<int>(i + j)));
                    }
                }
                EXPECT_EQ(gm, gm.transpose());
            }
        }
    }
}

TEST(TautRingProperty, NormalFormIdempotentAndPairingPreserving) {
    std::mt19937 rng(5);
    for (int g = 0; g <= 5; ++g) {
        for (int d = 1; d <= 8; ++d) {
            const Ambient amb{g, d};
            for (int m = 0; m <= d; ++m) {
                const TautClass c = random_class(rng, amb, m);
                const NormalForm nf = normal_form(c);
                EXPECT_EQ(nf.coords.size(), static_cast<std::size_t>(standard_rank(amb, m) + 1));
                EXPECT_EQ(normal_form(nf.to_class()), nf);
                for (const auto& e : standard_basis(amb, d - m)) {
                    const TautClass ec = TautClass::monomial(amb, e);
                    EXPECT_EQ(pairing(c, ec), pairing(nf.to_class(), ec));
                }
                EXPECT_TRUE(equals(c, nf.to_class()));
            }
        }
    }
}

TEST(TautRingProperty, ProductCommutativeAssociativeGraded) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Ambient amb{static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 8)};
        const int d = amb.degree;
        const int m1 = static_cast<int>(rng() % (d + 1));
        const int m2 = static_cast<int>(rng() % (d - m1 + 1));
        const int m3 = static_cast<int>(rng() % (d - m1 - m2 + 1));
        const TautClass a = random_class(rng, amb, m1);
        const TautClass b = random_class(rng, amb, m2);
        const TautClass c = random_class(rng, amb, m3);
        EXPECT_TRUE(equals(a * b, b * a));
        EXPECT_TRUE(equals((a * b) * c, a * (b * c)));
        EXPECT_EQ((a * b).codim(), m1 + m2);
        // numerical equivalence is compatible with products
        EXPECT_TRUE(equals(normal_form(a).to_class() * b, a * b));
    }
}

TEST(TautRingProperty, EvalTopOfMonomialsMatchesIntersectionNumbers) {
    for (int g = 0; g <= 10; ++g) {
        for (int d = 1; d <= 14; ++d) {
            for (int s = 0; s <= d; ++s) {
                const Ambient amb{g, d};
                EXPECT_EQ(eval_top(multiply(theta_power(amb, s), x_power(amb, d - s))),
                          intersection_number(amb, s));
            }
        }
    }
}
