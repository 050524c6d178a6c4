#include <gtest/gtest.h>

#include <set>

#include "bks/errors.hpp"
#include "bks/rootsys.hpp"

using namespace bks;

namespace {

std::vector<std::pair<char, int>> all_types() {
    std::vector<std::pair<char, int>> out;
    for (int r = 1; r <= 8; ++r) out.emplace_back('A', r);
    for (int r = 2; r <= 8; ++r) out.emplace_back('B', r);
    for (int r = 3; r <= 8; ++r) out.emplace_back('C', r);
    for (int r = 4; r <= 8; ++r) out.emplace_back('D', r);
    for (int r = 6; r <= 8; ++r) out.emplace_back('E', r);
    out.emplace_back('F', 4);
    out.emplace_back('G', 2);
    return out;
}

int classical_positive_count(char t, int r) {
    switch (t) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
        case 'F': return 24;
        default: return 6;
    }
}

Coords unit(int rank, int i) {
    Coords v(static_cast<std::size_t>(rank));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

}  // namespace

TEST(RootSystem, A1Example) {
    const RootSystem rs = build_root_system('A', 1);
    ASSERT_EQ(rs.positive_roots.size(), 1u);
    EXPECT_EQ(rs.gram(0, 0), Rational(2));
    EXPECT_EQ(rs.highest_root, unit(1, 0));
    EXPECT_EQ(rs.rho, Coords{Rational(1, 2)});
    EXPECT_EQ(inner_product(rs, rs.simple_root(0), rs.simple_root(0)), Rational(2));
    EXPECT_EQ(pairing_with_coroot(rs, rs.rho, rs.simple_root(0)), Rational(1));
}

TEST(RootSystem, G2Example) {
    const RootSystem rs = build_root_system('G', 2);
    EXPECT_EQ(rs.m(), 6);
    // alpha_1 is the short simple root.
    EXPECT_EQ(inner_product(rs, rs.simple_root(0), rs.simple_root(0)), Rational(2, 3));
    EXPECT_EQ(inner_product(rs, rs.simple_root(1), rs.simple_root(1)), Rational(2));
    EXPECT_EQ(pairing_with_coroot(rs, rs.highest_root, rs.highest_root), Rational(2));
    const std::set<std::string> expected{"(1, 0)", "(0, 1)", "(1, 1)", "(2, 1)", "(3, 1)", "(3, 2)"};
    std::set<std::string> got;
    for (const auto& a : rs.positive_roots) got.insert(to_string(a));
    EXPECT_EQ(got, expected);
}

TEST(RootSystem, B3Example) {
    const RootSystem rs = build_root_system('B', 3);
    EXPECT_EQ(rs.m(), 9);
    EXPECT_EQ(rs.n(), 21);
    EXPECT_EQ(rs.rank, 3);
}

TEST(RootSystem, F4RhoPairsToOne) {
    const RootSystem rs = build_root_system('F', 4);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(pairing_with_coroot(rs, rs.rho, rs.simple_root(i)), Rational(1));
}

TEST(RootSystem, InnerProductWithZero) {
    const RootSystem rs = build_root_system('C', 4);
    EXPECT_EQ(inner_product(rs, rs.rho, Coords(4)), Rational(0));
    EXPECT_THROW(inner_product(rs, rs.rho, Coords(3)), ValidationError);
}

TEST(RootSystem, RejectsInvalidTypes) {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'Z', 9}, {'A', 0}, {'B', 1}, {'C', 2}, {'D', 3},
                                                          {'E', 5}, {'E', 9}, {'F', 3}, {'G', 3}}) {
        EXPECT_FALSE(is_valid_type(t, r));
        try {
            build_root_system(t, r);
            FAIL() << t << r;
        } catch (const ValidationError& e) {
            EXPECT_NE(std::string(e.what()).find("rank"), std::string::npos);
        }
    }
}

TEST(RootSystem, PairingWithCorootRejectsNonRoot) {
    const RootSystem rs = build_root_system('A', 2);
    EXPECT_THROW(pairing_with_coroot(rs, rs.rho, Coords{Rational(2), Rational(0)}), ValidationError);
}

class AllTypes : public ::testing::TestWithParam<std::pair<char, int>> {};

TEST_P(AllTypes, Invariants) {
    const auto [t, r] = GetParam();
    const RootSystem rs = build_root_system(t, r);
    const auto n = static_cast<std::size_t>(r);

    // Symmetric, positive definite by leading principal minors.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(rs.gram(i, j), rs.gram(j, i));
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = rs.gram(i, j);
        EXPECT_GT(minor.determinant(), Rational(0));
    }

    EXPECT_EQ(inner_product(rs, rs.highest_root, rs.highest_root), Rational(2));
    EXPECT_EQ(rs.m(), classical_positive_count(t, r));
    EXPECT_EQ(rs.n() - rs.rank, 2 * rs.m());

    std::set<Rational> lengths;
    Coords sum(n);
    for (const auto& a : rs.positive_roots) {
        const Rational len = inner_product(rs, a, a);
        EXPECT_TRUE(len == Rational(2) || len == Rational(1) || len == Rational(2, 3)) << to_string(a);
        lengths.insert(len);
        for (std::size_t i = 0; i < n; ++i) EXPECT_GE(rs.highest_root[i] - a[i], Rational(0));
        for (int i = 0; i < r; ++i) EXPECT_TRUE(pairing_with_coroot(rs, a, rs.simple_root(i)).is_integer());
        sum = sum + a;
    }
    EXPECT_LE(lengths.size(), 2u);
    EXPECT_EQ(sum, Rational(2) * rs.rho);

    for (int i = 0; i < r; ++i) {
        EXPECT_EQ(pairing_with_coroot(rs, rs.rho, rs.simple_root(i)), Rational(1));
        EXPECT_TRUE(rs.highest_root_comarks[static_cast<std::size_t>(i)].is_integer());
        EXPECT_GE(rs.highest_root_comarks[static_cast<std::size_t>(i)], Rational(1));
    }
    // Fundamental weights are dual to the simple coroots.
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> e(n);
        e[static_cast<std::size_t>(i)] = 1;
        EXPECT_EQ(coords_to_weight(rs, weight_to_coords(rs, e)), e);
    }
}

INSTANTIATE_TEST_SUITE_P(RootSystem, AllTypes, ::testing::ValuesIn(all_types()),
                         [](const auto& info) { return std::string(1, info.param.first) + std::to_string(info.param.second); });
