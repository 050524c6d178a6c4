#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <unordered_set>

#include "bks/errors.hpp"
#include "bks/oracle.hpp"
#include "bks/weyl.hpp"
#include "bks/weyl_cache.hpp"

using namespace bks;

namespace {

RationalMatrix word_matrix(const RootSystem& rs, const std::vector<int>& word) {
    RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(rs.rank));
    for (int i : word) m = m * simple_reflection(rs, i).matrix;
    return m;
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("bks_test_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST(Weyl, SimpleReflectionExamples) {
    const RootSystem a1 = build_root_system('A', 1);
    EXPECT_EQ(act(simple_reflection(a1, 1), a1.simple_root(0)), Coords{Rational(-1)});

    const RootSystem a2 = build_root_system('A', 2);
    EXPECT_EQ(act(simple_reflection(a2, 1), a2.simple_root(1)), (Coords{Rational(1), Rational(1)}));
    for (int i = 1; i <= 2; ++i) {
        const auto s = simple_reflection(a2, i);
        EXPECT_EQ(s.matrix * s.matrix, RationalMatrix::identity(2));
    }
    EXPECT_THROW(simple_reflection(a2, 0), ValidationError);
    EXPECT_THROW(simple_reflection(a2, 3), ValidationError);
}

TEST(Weyl, EnumerationExamples) {
    const auto a1 = enumerate_weyl(build_root_system('A', 1));
    ASSERT_EQ(a1.size(), 2u);
    EXPECT_EQ(a1[0].length(), 0);
    EXPECT_EQ(a1[1].length(), 1);

    const auto g2 = enumerate_weyl(build_root_system('G', 2));
    EXPECT_EQ(g2.size(), 12u);
    EXPECT_EQ(g2.back().length(), 6);

    EXPECT_EQ(enumerate_weyl(build_root_system('F', 4)).size(), 1152u);
}

TEST(Weyl, LongestElementOfA2NegatesRho) {
    const RootSystem rs = build_root_system('A', 2);
    const auto W = enumerate_weyl(rs);
    const auto& w0 = W.back();
    EXPECT_EQ(w0.length(), 3);
    EXPECT_EQ(act(w0, rs.rho), Rational(-1) * rs.rho);
    EXPECT_EQ(act(W.front(), rs.rho), rs.rho);
}

TEST(Weyl, ActionPreservesNorm) {
    const RootSystem rs = build_root_system('B', 3);
    const auto W = enumerate_weyl(rs);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    for (int t = 0; t < 100; ++t) {
        Coords v{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        const auto& w = W[pick(rng)];
        EXPECT_EQ(inner_product(rs, act(w, v), act(w, v)), inner_product(rs, v, v));
    }
}

TEST(Weyl, ResourceCapAbortsWithPartialCount) {
    const RootSystem rs = build_root_system('E', 8);
    try {
        enumerate_weyl(rs, 500);
        FAIL();
    } catch (const ResourceLimitError& e) {
        EXPECT_EQ(e.partial(), 500u);
    }
}

class SmallWeyl : public ::testing::TestWithParam<std::pair<char, int>> {};

TEST_P(SmallWeyl, ElementInvariants) {
    const auto [t, r] = GetParam();
    const RootSystem rs = build_root_system(t, r);
    const auto W = enumerate_weyl(rs);
    EXPECT_EQ(W.size(), oracle::classical_weyl_order(rs));

    int identity_count = 0, longest_count = 0;
    for (std::size_t idx = 0; idx < W.size(); ++idx) {
        const auto& w = W[idx];
        EXPECT_EQ(w.matrix.transpose() * rs.gram * w.matrix, rs.gram);
        for (const auto& a : rs.positive_roots) EXPECT_TRUE(rs.is_root(w.matrix * a));
        EXPECT_EQ(inversion_count(rs, w.matrix), w.length()) << w.word_string();
        EXPECT_EQ(word_matrix(rs, w.word), w.matrix) << w.word_string();
        identity_count += w.length() == 0;
        longest_count += w.length() == rs.m();
        if (idx > 0) {
            const auto& prev = W[idx - 1];
            EXPECT_TRUE(prev.length() < w.length() || (prev.length() == w.length() && prev.word < w.word));
        }
    }
    EXPECT_EQ(identity_count, 1);
    EXPECT_EQ(longest_count, 1);
}

INSTANTIATE_TEST_SUITE_P(Weyl, SmallWeyl,
                         ::testing::Values(std::pair{'A', 1}, std::pair{'A', 2}, std::pair{'A', 3}, std::pair{'A', 4},
                                           std::pair{'A', 5}, std::pair{'A', 6}, std::pair{'B', 2}, std::pair{'B', 3},
                                           std::pair{'B', 4}, std::pair{'B', 5}, std::pair{'C', 3}, std::pair{'C', 4},
                                           std::pair{'C', 5}, std::pair{'D', 4}, std::pair{'D', 5}, std::pair{'G', 2},
                                           std::pair{'F', 4}),
                         [](const auto& info) { return std::string(1, info.param.first) + std::to_string(info.param.second); });

class ClosedWeyl : public ::testing::TestWithParam<std::pair<char, int>> {};

TEST_P(ClosedWeyl, ClosedUnderProductAndInverse) {
    const auto [t, r] = GetParam();
    const RootSystem rs = build_root_system(t, r);
    const auto W = enumerate_weyl(rs);
    std::unordered_set<RationalMatrix> set;
    for (const auto& w : W) set.insert(w.matrix);
    for (const auto& a : W) {
        EXPECT_TRUE(set.count(inverse(a).matrix));
        for (const auto& b : W) ASSERT_TRUE(set.count(a.matrix * b.matrix));
    }
}

INSTANTIATE_TEST_SUITE_P(Weyl, ClosedWeyl,
                         ::testing::Values(std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'D', 4},
                                           std::pair{'G', 2}, std::pair{'F', 4}),
                         [](const auto& info) { return std::string(1, info.param.first) + std::to_string(info.param.second); });

TEST(WeylCache, RoundTripIsExact) {
    const RootSystem rs = build_root_system('F', 4);
    const auto W = enumerate_weyl(rs);
    const std::string text = serialize_weyl(rs, W);
    const auto back = deserialize_weyl(rs, text);
    ASSERT_EQ(back.size(), W.size());
    for (std::size_t i = 0; i < W.size(); ++i) {
        EXPECT_EQ(back[i].word, W[i].word);
        EXPECT_EQ(back[i].matrix, W[i].matrix);
    }
    EXPECT_EQ(serialize_weyl(rs, back), text);
}

TEST(WeylCache, SecondLoadHitsCacheAndFileIsStable) {
    const RootSystem rs = build_root_system('B', 3);
    const auto dir = fresh_dir("cache");
    const auto first = load_or_enumerate_weyl(rs, dir);
    EXPECT_FALSE(first.from_cache);
    std::ifstream in1(weyl_cache_path(dir, rs));
    const std::string text1((std::istreambuf_iterator<char>(in1)), {});
    const auto second = load_or_enumerate_weyl(rs, dir);
    EXPECT_TRUE(second.from_cache);
    ASSERT_EQ(second.elements.size(), first.elements.size());
    for (std::size_t i = 0; i < first.elements.size(); ++i) EXPECT_EQ(second.elements[i].matrix, first.elements[i].matrix);
    std::filesystem::remove_all(dir);
    load_or_enumerate_weyl(rs, dir);
    std::ifstream in2(weyl_cache_path(dir, rs));
    const std::string text2((std::istreambuf_iterator<char>(in2)), {});
    EXPECT_EQ(text1, text2);
    std::filesystem::remove_all(dir);
}

TEST(WeylCache, RejectsMismatchedOrCorruptFiles) {
    const RootSystem b3 = build_root_system('B', 3);
    const RootSystem c3 = build_root_system('C', 3);
    const std::string text = serialize_weyl(b3, enumerate_weyl(b3));
    EXPECT_THROW(deserialize_weyl(c3, text), std::runtime_error);
    EXPECT_THROW(deserialize_weyl(b3, text.substr(0, text.size() / 2)), std::runtime_error);
    EXPECT_THROW(deserialize_weyl(b3, "bks-weyl-cache 999\n"), std::runtime_error);
}
