#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace walg;

namespace {

/// Free-algebra word (any letter order) as a normal-form element.
LinComb word_product(PbwEngine &E, const std::vector<int> &letters) {
    LinComb cur = constant(1);
    for (std::size_t p = letters.size(); p-- > 0;) cur = E.act(letters[p], cur);
    return cur;
}

std::vector<int> random_letters(std::mt19937 &rng, int dim, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), let(0, dim - 1);
    std::vector<int> out(len(rng));
    for (int &l : out) l = let(rng);
    return out;
}

} // namespace

TEST(Words, Encoding) {
    Word w = make_word({3, 1, 3});
    EXPECT_EQ(word_letters(w), (std::vector<int>{1, 3, 3}));
    EXPECT_EQ(word_name(w), "x2x4^2");
    EXPECT_EQ(exponents(w, 5), (std::vector<int>{0, 1, 0, 2, 0}));
}

TEST(Universal, Sl2Straightening) {
    // basis e, f, h
    auto L = chevalley_constants(build_root_system('A', 1));
    auto E = PbwEngine::universal(L.table);
    LinComb fe = word_product(E, {1, 0});
    LinComb want;
    add_term(want, make_word({0, 1}), 1);
    add_term(want, make_word({2}), -1);
    EXPECT_EQ(fe, want);
    LinComb ordered = word_product(E, {0, 1});
    EXPECT_EQ(ordered.size(), 1u);
    EXPECT_EQ(ordered.at(make_word({0, 1})), 1);
}

TEST(Universal, AssociativityG2) {
    auto L = chevalley_constants(build_root_system('G', 2));
    auto E = PbwEngine::universal(L.table);
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 150; ++trial) {
        auto a = random_letters(rng, 14, 2), b = random_letters(rng, 14, 1), c = random_letters(rng, 14, 1);
        LinComb A = word_product(E, a), B = word_product(E, b), C = word_product(E, c);
        LinComb left = E.multiply(E.multiply(A, B), C);
        LinComb right = E.multiply(A, E.multiply(B, C));
        EXPECT_EQ(left, right) << "trial " << trial;
        // the product of the words equals the straightened concatenation
        std::vector<int> all = a;
        all.insert(all.end(), b.begin(), b.end());
        all.insert(all.end(), c.begin(), c.end());
        EXPECT_EQ(left, word_product(E, all));
    }
}

TEST(Universal, AssociativityDegreeFour) {
    auto L = chevalley_constants(build_root_system('G', 2));
    auto E = PbwEngine::universal(L.table);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_letters(rng, 14, 4), b = random_letters(rng, 14, 4), c = random_letters(rng, 14, 4);
        LinComb A = word_product(E, a), B = word_product(E, b), C = word_product(E, c);
        EXPECT_EQ(E.multiply(E.multiply(A, B), C), E.multiply(A, E.multiply(B, C))) << "trial " << trial;
    }
}

TEST(Quotient, G2Reductions) {
    const auto &B = walg::testing::g2_example().B;
    auto E = PbwEngine::quotient(B);
    EXPECT_EQ(E.reduce(single(11)), constant(1));   // f
    EXPECT_TRUE(E.reduce(single(12)).empty());       // g(-3)
    LinComb u;
    add_term(u, make_word({3, 11, 11}), 1);
    EXPECT_EQ(E.reduce(u), single(3));
}

TEST(Quotient, CharacterOnM) {
    const auto &B = walg::testing::g2_example().B;
    auto E = PbwEngine::quotient(B);
    for (int x = B.cutoff(); x < B.dim(); ++x)
        for (int y = B.cutoff(); y < B.dim(); ++y) {
            LinComb xy = word_product(E, {x, y});
            EXPECT_EQ(xy, constant(B.chi[x] * B.chi[y])) << x << "," << y;
        }
}

TEST(Quotient, LeftModule) {
    // reduce(u v) = u . reduce(v) for u in the surviving letters
    const auto &B = walg::testing::g2_example().B;
    auto Q = PbwEngine::quotient(B);
    auto U = PbwEngine::universal(B.table);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> low(0, B.cutoff() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> u{low(rng), low(rng)};
        auto v = random_letters(rng, B.dim(), 3);
        LinComb uv_full = U.multiply(word_product(U, u), word_product(U, v));
        LinComb lhs = Q.reduce(uv_full);
        LinComb rhs = Q.multiply(word_product(U, u), Q.reduce(word_product(U, v)));
        EXPECT_EQ(lhs, rhs) << "trial " << trial;
    }
}

TEST(Quotient, AdNilpotent) {
    const auto &B = walg::testing::g2_example().B;
    auto E = PbwEngine::quotient(B);
    for (int k = B.cutoff(); k < B.dim(); ++k) EXPECT_TRUE(E.ad_nilpotent(k, constant(1)).empty());
    EXPECT_THROW(E.ad_nilpotent(0, constant(1)), InvalidInput);
    // Theta5 = x5 - 1/4 x10^2
    LinComb t5 = single(4);
    add_term(t5, make_word({9, 9}), Rational(-1, 4));
    for (int k = 10; k < 14; ++k) EXPECT_TRUE(E.ad_nilpotent(k, t5).empty()) << "x" << k + 1;
    // linearity
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> low(0, B.cutoff() - 1);
        LinComb u, v;
        add_term(u, make_word({low(rng), low(rng)}), Rational(trial + 1, 3));
        add_term(v, make_word({low(rng)}), -2);
        LinComb sum = u;
        add_scaled(sum, v, 1);
        for (int k = B.cutoff(); k < B.dim(); ++k) {
            LinComb lhs = E.ad_nilpotent(k, sum);
            LinComb rhs = E.ad_nilpotent(k, u);
            add_scaled(rhs, E.ad_nilpotent(k, v), 1);
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(Kazhdan, Degrees) {
    const auto &B = walg::testing::g2_example().B;
    for (int i = 0; i < B.r; ++i) EXPECT_EQ(kazhdan_degree(single(i), B.n), B.n[i] + 2);
    EXPECT_EQ(kazhdan_degree(LinComb{}, B.n), kMinusInfinity);
    EXPECT_EQ(kazhdan_degree(constant(5), B.n), 0);
}

TEST(Kazhdan, Subadditive) {
    const auto &B = walg::testing::g2_example().B;
    auto E = PbwEngine::quotient(B);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> low(0, B.cutoff() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        LinComb u, v;
        add_term(u, make_word({low(rng), low(rng)}), 1);
        add_term(v, make_word({low(rng), low(rng), low(rng)}), 1);
        LinComb uv = E.multiply(u, v);
        if (uv.empty()) continue;
        EXPECT_LE(kazhdan_degree(uv, B.n), kazhdan_degree(u, B.n) + kazhdan_degree(v, B.n));
        for (int k = B.cutoff(); k < B.dim(); ++k) {
            LinComb a = E.ad_nilpotent(k, u);
            if (!a.empty()) EXPECT_LE(kazhdan_degree(a, B.n), kazhdan_degree(u, B.n) + B.n[k] + 2);
        }
    }
}

TEST(Engine, ConcurrentEnginesAgree) {
    const auto &B = walg::testing::g2_example().B;
    std::vector<LinComb> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            auto E = PbwEngine::quotient(B);
            results[t] = E.reduce(word_product(E, {13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0}));
        });
    for (auto &th : pool) th.join();
    for (int t = 1; t < 4; ++t) EXPECT_EQ(results[t], results[0]);
}

TEST(Engine, RejectsHugeBasis) {
    std::vector<std::vector<SparseBracket>> table(300, std::vector<SparseBracket>(300));
    EXPECT_THROW(PbwEngine::universal(table), InvalidInput);
}
