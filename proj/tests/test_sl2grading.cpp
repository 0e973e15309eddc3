#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace walg;
using walg::testing::make_case;

namespace {

Vec cartan(int dim, int offset, std::vector<long> c) {
    Vec v = zero_vec(dim);
    for (std::size_t i = 0; i < c.size(); ++i) v[offset + i] = c[i];
    return v;
}

} // namespace

TEST(ParseLabels, AcceptsCommaList) {
    EXPECT_EQ(parse_labels("1,0,2").d, (std::vector<int>{1, 0, 2}));
    EXPECT_THROW(parse_labels("1,x"), InvalidInput);
    EXPECT_THROW(parse_labels("1.5"), InvalidInput);
}

TEST(Grading, RejectsBadLabels) {
    auto L = chevalley_constants(build_root_system('G', 2));
    EXPECT_THROW(grading_from_labels(L, parse_labels("3,0")), InvalidInput);
    EXPECT_THROW(grading_from_labels(L, parse_labels("1")), InvalidInput);
    EXPECT_THROW(grading_from_labels(L, parse_labels("-1,0")), InvalidInput);
}

TEST(Grading, ZeroLabelsGiveOnePiece) {
    auto L = chevalley_constants(build_root_system('F', 4));
    auto g = grading_from_labels(L, parse_labels("0,0,0,0"));
    EXPECT_EQ(g.pieces.size(), 1u);
    EXPECT_EQ(g.dim(0), 52);
}

TEST(Grading, Sl2Principal) {
    auto L = chevalley_constants(build_root_system('A', 1));
    auto g = grading_from_labels(L, parse_labels("2"));
    EXPECT_EQ(g.dim(2), 1);
    EXPECT_EQ(g.dim(0), 1);
    EXPECT_EQ(g.dim(-2), 1);
    EXPECT_EQ(g.pieces.at(2), std::vector<int>{0});
    EXPECT_EQ(g.pieces.at(-2), std::vector<int>{1});
}

TEST(Grading, G2ShortRootPieces) {
    const auto &c = walg::testing::g2_example();
    EXPECT_EQ(c.grading.dim(-1), 2);
    EXPECT_EQ(c.grading.dim(-2), 1);
    EXPECT_EQ(c.grading.dim(-3), 2);
    int total = 0;
    for (const auto &[j, idx] : c.grading.pieces) total += static_cast<int>(idx.size());
    EXPECT_EQ(total, 14);
}

TEST(Grading, AdHActsByDegree) {
    for (auto [t, r, lab] : std::vector<std::tuple<char, int, std::string>>{
             {'G', 2, "1,0"}, {'G', 2, "0,1"}, {'F', 4, "0,1,0,1"}, {'F', 4, "1,0,0,0"}}) {
        auto c = make_case(t, r, lab);
        for (const auto &[j, idx] : c->grading.pieces)
            for (int i : idx) {
                Vec x = unit_vec(c->L.dim(), i);
                EXPECT_EQ(c->L.bracket(c->triple.h, x), scaled(x, j)) << t << r << " " << lab << " index " << i;
            }
    }
}

TEST(Triple, G2ShortRoot) {
    const auto &c = walg::testing::g2_example();
    EXPECT_EQ(c.triple.e, unit_vec(14, 3));            // b4
    EXPECT_EQ(c.triple.f, unit_vec(14, 9));            // b10
    EXPECT_EQ(c.triple.h, cartan(14, 12, {2, 3}));     // 2 b13 + 3 b14
    EXPECT_EQ(c.triple.kappa_ef, 24);
    EXPECT_EQ(chi(c.triple, unit_vec(14, 9)), 1);
    EXPECT_EQ(c.triple.gamma, std::vector<int>{3});
}

TEST(Triple, Sl2Principal) {
    auto c = make_case('A', 1, "2");
    EXPECT_EQ(c->triple.e, unit_vec(3, 0));
    EXPECT_EQ(c->triple.f, unit_vec(3, 1));
    EXPECT_EQ(c->triple.h, unit_vec(3, 2));
    EXPECT_EQ(c->triple.kappa_ef, 4);
}

TEST(Triple, ZeroOrbit) {
    auto c = make_case('G', 2, "0,0");
    EXPECT_TRUE(c->triple.is_zero_orbit());
    EXPECT_TRUE(is_zero(c->triple.e));
    EXPECT_TRUE(is_zero(c->triple.h));
    EXPECT_TRUE(is_zero(c->triple.f));
}

TEST(Triple, RelationsAndChiForCatalogue) {
    for (const auto &entry : orbit_catalogue()) {
        if (entry.type == 'E') continue;
        auto L = chevalley_constants(build_root_system(entry.type, entry.rank));
        DynkinLabels lab{entry.labels};
        auto g = grading_from_labels(L, lab);
        auto t = build_triple(L, g, lab);
        EXPECT_EQ(L.bracket(t.h, t.e), scaled(t.e, 2));
        EXPECT_EQ(L.bracket(t.h, t.f), scaled(t.f, -2));
        EXPECT_EQ(L.bracket(t.e, t.f), t.h);
        EXPECT_EQ(chi(t, t.f), 1);
        for (int i = 0; i < L.dim(); ++i)
            if (g.degree_of_basis[i] != -2) EXPECT_EQ(t.chi_values[i], 0) << entry.name;
        // integral h with nonnegative coefficients, f in the Chevalley lattice
        for (int i = L.cartan_offset(); i < L.dim(); ++i) {
            EXPECT_TRUE(is_integer(t.h[i]));
            EXPECT_GE(t.h[i], 0);
        }
        for (const auto &c : t.f) EXPECT_TRUE(is_integer(c)) << entry.name;
    }
}

TEST(Triple, Deterministic) {
    auto a = make_case('F', 4, "0,1,0,1");
    auto b = make_case('F', 4, "0,1,0,1");
    EXPECT_EQ(a->triple.e, b->triple.e);
    EXPECT_EQ(a->triple.f, b->triple.f);
    EXPECT_EQ(a->triple.gamma, b->triple.gamma);
}

TEST(Triple, RejectsNonDiagrams) {
    auto L = chevalley_constants(build_root_system('G', 2));
    for (std::string lab : {"2,1", "1,1", "2,0", "1,2"}) {
        auto d = parse_labels(lab);
        auto g = grading_from_labels(L, d);
        EXPECT_THROW(build_triple(L, g, d), InvalidInput) << lab;
    }
}

TEST(Triple, AllFiveG2Orbits) {
    // 0, A1, ~A1, G2(a1), G2
    auto L = chevalley_constants(build_root_system('G', 2));
    for (std::string lab : {"0,0", "0,1", "1,0", "0,2", "2,2"}) {
        auto d = parse_labels(lab);
        auto g = grading_from_labels(L, d);
        EXPECT_NO_THROW(build_triple(L, g, d)) << lab;
    }
}

TEST(Triple, CentralizerDimensionMatchesGrading) {
    // dim g^e = dim g(0) + dim g(1) for the Dynkin grading
    for (const auto &entry : orbit_catalogue()) {
        if (entry.type == 'E' && entry.rank == 7) continue;
        auto L = chevalley_constants(build_root_system(entry.type, entry.rank));
        auto g = grading_from_labels(L, DynkinLabels{entry.labels});
        EXPECT_EQ(g.dim(0) + g.dim(1), entry.centralizer_dim) << entry.type << entry.rank << " " << entry.name;
    }
}
