#include "walg/polysys.hpp"

#include <gtest/gtest.h>

using namespace walg;

namespace {

Poly var(int n, int v) { return Poly::variable(n, v); }
Poly cst(int n, const Rational &c) { return Poly::constant(n, c); }
const std::vector<std::string> kNames{"x", "y", "z"};

} // namespace

TEST(Poly, LexOrderPutsFirstVariableHighest) {
    Poly p = var(2, 1) * var(2, 1) * var(2, 1) + var(2, 0);
    EXPECT_EQ(p.lm(), (Monomial{1, 0}));
    EXPECT_EQ(p.str(kNames), "x + y^3");
}

TEST(Poly, ArithmeticAndEvaluation) {
    Poly x = var(2, 0), y = var(2, 1);
    Poly p = (x + y) * (x - y);
    EXPECT_EQ(p, x * x - y * y);
    EXPECT_EQ(p.evaluate({3, 2}), 5);
    EXPECT_EQ(p.substitute(0, 3), cst(2, 9) - y * y);
    EXPECT_EQ(p.support(), (std::set<int>{0, 1}));
    EXPECT_EQ(p.total_degree(), 2);
    EXPECT_TRUE(cst(2, 4).is_constant());
    EXPECT_EQ((x.scaled(2) + cst(2, 4)).monic(), x + cst(2, 2));
}

TEST(Groebner, CircleAndLine) {
    Poly x = var(2, 0), y = var(2, 1);
    auto G = groebner_basis({x * x + y * y - cst(2, 1), x - y});
    ASSERT_EQ(G.size(), 2u);
    EXPECT_EQ(G[0], y * y - cst(2, Rational(1, 2)));
    EXPECT_EQ(G[1], x - y);
    EXPECT_TRUE(is_zero_dimensional(G, 2));
    EXPECT_EQ(standard_monomials(G, 2).size(), 2u);
    EXPECT_TRUE(normal_form(x * x - y * y, G).is_zero());
}

TEST(Groebner, UnitAndPositiveDimensional) {
    Poly x = var(2, 0), y = var(2, 1);
    EXPECT_TRUE(is_unit_ideal(groebner_basis({x, x - cst(2, 1)})));
    auto G = groebner_basis({x * y});
    EXPECT_FALSE(is_zero_dimensional(G, 2));
    EXPECT_TRUE(groebner_basis({Poly(2)}).empty());
}

TEST(Groebner, ReducedAndUnique) {
    Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    std::vector<Poly> F{x * y - z, y * z - x, x * z - y};
    auto G1 = groebner_basis(F);
    std::vector<Poly> F2{F[2], F[0], F[1].scaled(3)};
    auto G2 = groebner_basis(F2);
    EXPECT_EQ(G1, G2);
    for (const auto &f : F) EXPECT_TRUE(normal_form(f, G1).is_zero());
    for (const auto &g : G1) EXPECT_EQ(g.lc(), 1);
}

TEST(Groebner, BoundsGiveUndecided) {
    Poly x = var(2, 0), y = var(2, 1);
    GroebnerBounds tight;
    tight.max_degree = 1;
    EXPECT_THROW(groebner_basis({x * y - cst(2, 1), x * x - y}, tight), Undecided);
}

TEST(Univariate, GcdAndSquarefree) {
    UPoly a{-1, 0, 1};      // x^2 - 1
    UPoly b{1, 2, 1};       // (x + 1)^2
    EXPECT_EQ(upoly_gcd(a, b), (UPoly{1, 1}));
    EXPECT_EQ(squarefree_part(UPoly{1, 3, 3, 1}), (UPoly{1, 1}));
    auto [q, r] = divmod(UPoly{-1, 0, 1}, UPoly{-1, 1});
    EXPECT_EQ(q, (UPoly{1, 1}));
    EXPECT_TRUE(r.empty());
    EXPECT_EQ(upoly_eval(UPoly{1, 2, 3}, 2), 17);
    EXPECT_EQ(upoly_str(UPoly{Rational(189, 2), Rational(39, 2), 1}, "t"), "t^2 + 39/2*t + 189/2");
}

TEST(Univariate, RealRootCounting) {
    UPoly p{-2, 0, 1};
    auto seq = sturm_sequence(p);
    EXPECT_EQ(count_real_roots(seq, -2, 2), 2);
    EXPECT_EQ(count_real_roots(seq, 0, 2), 1);
    auto iv = isolate_real_roots(p, Rational(1, 100));
    ASSERT_EQ(iv.size(), 2u);
    for (const auto &[a, b] : iv) {
        EXPECT_LE(b - a, Rational(1, 100));
        EXPECT_LE(upoly_eval(p, a) * upoly_eval(p, b), 0);
    }
    EXPECT_EQ(count_real_roots(sturm_sequence(UPoly{1, 0, 1}), -10, 10), 0);
}

TEST(Univariate, RationalRoots) {
    // (x - 3)(2x - 1)(x + 2)
    UPoly p{6, -11, -3, 2};
    EXPECT_EQ(rational_roots(p), (std::vector<Rational>{-2, Rational(1, 2), 3}));
    EXPECT_TRUE(rational_roots(UPoly{-2, 0, 1}).empty());
    EXPECT_EQ(rational_roots(UPoly{Rational(189, 4), Rational(39, 4), Rational(1, 2)}),
              (std::vector<Rational>{Rational(-21, 2), -9}));
    // repeated root counted once
    EXPECT_EQ(rational_roots(UPoly{1, 2, 1}), (std::vector<Rational>{-1}));
}

TEST(Univariate, SimplestRational) {
    EXPECT_EQ(simplest_rational(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(simplest_rational(Rational(3, 10), Rational(4, 10)), Rational(1, 3));
    EXPECT_EQ(simplest_rational(Rational(-7, 5), Rational(-6, 5)), Rational(-4, 3));
    EXPECT_EQ(simplest_rational(Rational(5, 2), Rational(7, 2)), 3);
}

TEST(Univariate, MinimalPolynomialModuloIdeal) {
    Poly x = var(2, 0), y = var(2, 1);
    auto G = groebner_basis({y * y - cst(2, 2), x - y});
    EXPECT_EQ(minimal_polynomial(G, 2, 0), (UPoly{-2, 0, 1}));
    EXPECT_EQ(minimal_polynomial(G, 2, 1), (UPoly{-2, 0, 1}));
    EXPECT_EQ(to_upoly(from_upoly(UPoly{1, 0, 3}, 2, 1), 1), (UPoly{1, 0, 3}));
}
