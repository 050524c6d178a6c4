#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bks/density.hpp"
#include "bks/errors.hpp"

using namespace bks;
using namespace bks::density;

namespace {

constexpr double kTol = 1e-9;

Matrix diag(std::initializer_list<double> d) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double x : d) v(i++) = x;
    return v.asDiagonal();
}

ExactSequence block_sequence(int du, int dw) {
    const SpaceRef u{static_cast<std::size_t>(du), "U"}, w{static_cast<std::size_t>(dw), "W"};
    const SpaceRef v{static_cast<std::size_t>(du + dw), "V"};
    Matrix i = Matrix::Zero(du + dw, du);
    i.topRows(du) = Matrix::Identity(du, du);
    Matrix j = Matrix::Zero(dw, du + dw);
    j.rightCols(dw) = Matrix::Identity(dw, dw);
    return {{u, v, i}, {v, w, j}};
}

Matrix standard_omega(int n) {
    Matrix o = Matrix::Zero(2 * n, 2 * n);
    o.topRightCorner(n, n) = Matrix::Identity(n, n);
    o.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return o;
}

}  // namespace

TEST(Density, EvalExamples) {
    const SpaceRef s3{3, "S"};
    EXPECT_NEAR(std::abs(eval_density({s3, 1.0, 1.0}, Matrix::Identity(3, 3))), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(eval_density({s3, 0.5, 1.0}, diag({4, 1, 1}))), 2.0, 1e-15);
    const Complex c(0.3, -1.2);
    EXPECT_NEAR(std::abs(eval_density({s3, 1.0, c}, diag({-3, 1, 1})) - 3.0 * c), 0.0, 1e-14);
    EXPECT_THROW(eval_density({s3, 0.5, 1.0}, Matrix::Identity(2, 2)), ValidationError);
}

TEST(Density, ProductExamples) {
    const SpaceRef s{2, "S"};
    EXPECT_EQ(product_density({s, 0.5, 1.0}, {s, 0.5, 1.0}).value, Complex(1.0));
    const auto p = product_density({s, 0.5, 2.0}, {s, 0.5, 3.0});
    EXPECT_EQ(p.value, Complex(6.0));
    EXPECT_DOUBLE_EQ(p.order, 1.0);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const Matrix tuple = random_matrix(rng, 2, 2);
        const DensityValue a{s, 0.5, {1.5, 0.5}}, b{s, 0.5, {-0.7, 2.0}};
        EXPECT_NEAR(std::abs(eval_density(product_density(a, b), tuple) - eval_density(a, tuple) * eval_density(b, tuple)),
                    0.0, 1e-12);
    }
    EXPECT_THROW(product_density({s, 0.5, 1.0}, {SpaceRef{2, "T"}, 0.5, 1.0}), ValidationError);
}

TEST(Density, PullbackExamples) {
    const SpaceRef s{3, "S"};
    const DensityValue d{s, 1.0, 1.25};
    EXPECT_EQ(pullback({s, s, Matrix::Identity(3, 3)}, d).value, d.value);
    EXPECT_NEAR(std::abs(pullback({s, s, 2.0 * Matrix::Identity(3, 3)}, d).value - 8.0 * d.value), 0.0, 1e-14);
    EXPECT_THROW(pullback({s, s, Matrix::Zero(3, 3)}, d), ValidationError);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const Matrix phi = random_matrix(rng, 3, 3, 1.5), psi = random_matrix(rng, 3, 3, 1.5);
        const DensityValue h{s, 0.5, {0.4, 0.9}};
        const auto twice = pullback({s, s, phi}, pullback({s, s, psi}, h));
        const auto once = pullback({s, s, psi * phi}, h);
        EXPECT_NEAR(std::abs(twice.value - once.value), 0.0, 1e-12);
    }
}

TEST(Density, TransformationLaw) {
    std::mt19937_64 rng(11);
    const SpaceRef s{4, "S"};
    for (int t = 0; t < 50; ++t) {
        const DensityValue d{s, 0.5, {0.8, -0.3}};
        const Matrix a = random_matrix(rng, 4, 4, 1.0), tuple = random_matrix(rng, 4, 4, 1.0);
        const Complex lhs = eval_density(d, a * tuple);
        const Complex rhs = std::sqrt(std::abs(a.determinant())) * eval_density(d, tuple);
        EXPECT_NEAR(std::abs(lhs - rhs) / std::abs(rhs), 0.0, 1e-12);
    }
}

TEST(SeqIso, TrivialCases) {
    // U = V, W = 0.
    const SpaceRef u{3, "U"}, w{0, "W"};
    const ExactSequence id{{u, u, Matrix::Identity(3, 3)}, {u, w, Matrix(0, 3)}};
    EXPECT_NEAR(std::abs(seq_iso(id, {u, 0.5, 2.5}, {w, 0.5, 1.0}).value - 2.5), 0.0, 1e-15);

    const auto block = block_sequence(2, 3);
    EXPECT_NEAR(std::abs(seq_iso(block, {block.u(), 0.5, 2.0}, {block.w(), 0.5, 3.0}).value - 6.0), 0.0, 1e-15);
}

TEST(SeqIso, ChoiceIndependenceFiveDim) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto seq = random_exact_sequence(rng, 2, 3, "");
        const DensityValue du{seq.u(), 0.5, {1.1, 0.2}}, dw{seq.w(), 0.5, {-0.4, 0.9}};
        const Complex ref = seq_iso(seq, du, dw).value;
        for (int c = 0; c < 3; ++c) {
            SeqIsoChoice choice{random_matrix(rng, 5, 3), random_matrix(rng, 2, 2, 1.5), random_matrix(rng, 3, 3, 1.5)};
            EXPECT_NEAR(std::abs(seq_iso(seq, du, dw, choice).value - ref) / std::abs(ref), 0.0, kTol);
        }
    }
}

TEST(SeqIso, SolveInvertsIso) {
    std::mt19937_64 rng(19);
    const auto seq = random_exact_sequence(rng, 2, 2, "");
    const DensityValue du{seq.u(), 0.5, 1.7}, dw{seq.w(), 0.5, {0.3, 0.4}};
    const auto dv = seq_iso(seq, du, dw);
    EXPECT_NEAR(std::abs(seq_iso_solve_w(seq, dv, du).value - dw.value), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(seq_iso_solve_u(seq, dv, dw).value - du.value), 0.0, 1e-12);
}

TEST(SeqIso, RejectsNonExact) {
    const SpaceRef u{1, "U"}, v{2, "V"}, w{1, "W"};
    Matrix i(2, 1), j(1, 2);
    i << 1, 0;
    j << 1, 0;  // j i != 0
    EXPECT_THROW((ExactSequence{{u, v, i}, {v, w, j}}.validate()), ValidationError);
    j << 0, 0;  // not surjective
    EXPECT_THROW((ExactSequence{{u, v, i}, {v, w, j}}.validate()), ValidationError);
    const SpaceRef v3{3, "V"};
    EXPECT_THROW((ExactSequence{{u, v3, Matrix::Zero(3, 1)}, {v3, w, Matrix::Zero(1, 3)}}.validate()), ValidationError);
}

TEST(SeqIso, ExactSquaredPathMatchesBlockExample) {
    RationalMatrix i(3, 1), j(2, 3);
    i(0, 0) = 1;
    j(0, 1) = 1;
    j(1, 2) = 1;
    EXPECT_EQ(seq_iso_squared({i, j}, Rational(4), Rational(9)), Rational(36));

    SeqIsoChoiceQ choice;
    choice.complement = RationalMatrix(3, 2);
    choice.complement(0, 0) = 5;
    choice.complement(1, 0) = 1;
    choice.complement(0, 1) = -2;
    choice.complement(2, 1) = 3;
    choice.u_basis = RationalMatrix(1, 1);
    choice.u_basis(0, 0) = Rational(7, 2);
    EXPECT_EQ(seq_iso_squared({i, j}, Rational(4), Rational(9), choice), Rational(36));
}

TEST(Scaling, Examples) {
    const auto seq = block_sequence(1, 2);
    const auto r1 = scaling_check(seq, seq, Matrix::Identity(3, 3));
    EXPECT_NEAR(r1.ratio, 1.0, 1e-15);

    // k = diag(2, 1, 1): i' = k i = 2 i, j' = j k^{-1} = j.
    ExactSequence prime = seq;
    prime.i.matrix = 2.0 * seq.i.matrix;
    const auto r2 = scaling_check(seq, prime, diag({2, 1, 1}));
    EXPECT_NEAR(r2.ratio, std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(r2.expected, std::sqrt(2.0), 1e-14);

    EXPECT_THROW(scaling_check(seq, seq, diag({2, 1, 1})), ValidationError);
}

TEST(DirectSum, Examples) {
    std::mt19937_64 rng(23);
    const SpaceRef u{2, "U"}, w{0, "W"};
    const ExactSequence triv{{u, u, Matrix::Identity(2, 2)}, {u, w, Matrix(0, 2)}};
    ExactSequence triv2 = triv;
    triv2.i.source.id = triv2.i.target.id = triv2.j.source.id = "U2";
    EXPECT_TRUE(direct_sum_check(triv, triv2, rng).pass);

    const auto a = random_exact_sequence(rng, 2, 1, "a");
    const auto b = random_exact_sequence(rng, 1, 1, "b");
    const auto r = direct_sum_check(a, b, rng);
    EXPECT_TRUE(r.pass) << r.max_deviation;
}

TEST(Pfaffian, SmallCases) {
    Matrix a(2, 2);
    a << 0, 3, -3, 0;
    EXPECT_DOUBLE_EQ(pfaffian(a), 3.0);
    Matrix b(4, 4);
    b << 0, 1, 2, 3, -1, 0, 4, 5, -2, -4, 0, 6, -3, -5, -6, 0;
    EXPECT_NEAR(pfaffian(b), 1.0 * 6 - 2 * 5 + 3 * 4, 1e-12);
    EXPECT_DOUBLE_EQ(pfaffian(Matrix(0, 0)), 1.0);
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        const Matrix r = random_matrix(rng, 8, 8);
        const Matrix s = r - r.transpose();
        const double pf = pfaffian(s);
        EXPECT_NEAR(pf * pf, s.determinant(), 1e-9 * std::max(1.0, std::abs(s.determinant())));
    }
}

TEST(Phi, EqualLagrangiansGiveProduct) {
    const Matrix omega = standard_omega(2);
    Matrix l(4, 2);
    l << 1, 0, 0, 1, 0, 0, 0, 0;
    const Complex a(1.5, 0.5), b(0.25, -2.0);
    const auto r = bks_density_phi(omega, l, a, l, b);
    EXPECT_EQ(r.intersection_basis.cols(), 2);
    EXPECT_NEAR(std::abs(reevaluate(r, l) - a * b), 0.0, 1e-12);
    const auto s = bks_density_phi_split(omega, l, a, l, b, Matrix(4, 0), Matrix(4, 0));
    EXPECT_NEAR(std::abs(reevaluate(s, l) - a * b), 0.0, 1e-12);
}

TEST(Phi, TransverseHandComputation) {
    // omega(e, f) = 1, L1 = span(2e), L2 = span(3f): the quotient pairs (2e, -3f) to 6 in absolute value.
    const Matrix omega = standard_omega(1);
    Matrix l1(2, 1), l2(2, 1);
    l1 << 2, 0;
    l2 << 0, 3;
    const Complex a(2.0, 0.0), b(0.0, 1.5);
    const auto r = bks_density_phi(omega, l1, a, l2, b);
    EXPECT_EQ(r.intersection_basis.cols(), 0);
    EXPECT_NEAR(std::abs(r.value - a * b / std::sqrt(6.0)), 0.0, 1e-14);
    const auto s = bks_density_phi_split(omega, l1, a, l2, b, l1, l2);
    EXPECT_NEAR(std::abs(s.value - a * b / std::sqrt(6.0)), 0.0, 1e-14);
}

TEST(Phi, RejectsNonLagrangian) {
    const Matrix omega = standard_omega(2);
    Matrix l1(4, 2), l2(4, 2);
    l1 << 1, 0, 0, 0, 0, 1, 0, 0;  // span(e1, f1) is symplectic
    l2 << 1, 0, 0, 1, 0, 0, 0, 0;
    EXPECT_THROW(bks_density_phi(omega, l1, 1.0, l2, 1.0), ValidationError);
    EXPECT_THROW(bks_density_phi(omega, l2.leftCols(1), 1.0, l2, 1.0), ValidationError);
}

TEST(Phi, RandomCleanPairsAgreeAcrossRoutes) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        const auto pair = random_clean_pair(rng, n, d);
        const auto phi = bks_density_phi(pair.omega, pair.l1, 1.0, pair.l2, 1.0);
        ASSERT_EQ(phi.intersection_basis.cols(), d);
        const auto split = bks_density_phi_split(pair.omega, pair.l1, 1.0, pair.l2, 1.0, pair.v1, pair.v2);
        const Complex x = reevaluate(phi, pair.planted_intersection);
        const Complex y = reevaluate(split, pair.planted_intersection);
        EXPECT_NEAR(std::abs(x - y) / std::abs(x), 0.0, kTol) << "N=" << n << " d=" << d;
    }
}

TEST(Phi, SplitRouteIgnoresComplementChoice) {
    std::mt19937_64 rng(37);
    const auto pair = random_clean_pair(rng, 4, 2);
    const Complex ref = reevaluate(bks_density_phi_split(pair.omega, pair.l1, 1.0, pair.l2, 1.0, pair.v1, pair.v2),
                                   pair.planted_intersection);
    for (int t = 0; t < 10; ++t) {
        const Matrix v1 = pair.v1 * random_matrix(rng, 2, 2, 1.5) + pair.planted_intersection * random_matrix(rng, 2, 2);
        const Matrix v2 = pair.v2 * random_matrix(rng, 2, 2, 1.5) + pair.planted_intersection * random_matrix(rng, 2, 2);
        const auto r = bks_density_phi_split(pair.omega, pair.l1, 1.0, pair.l2, 1.0, v1, v2);
        EXPECT_NEAR(std::abs(reevaluate(r, pair.planted_intersection) - ref) / std::abs(ref), 0.0, kTol);
    }
}

TEST(Phi, HalfDensityLawInEachFactor) {
    std::mt19937_64 rng(41);
    const auto pair = random_clean_pair(rng, 3, 1);
    const Matrix g = random_matrix(rng, 3, 3, 1.5);
    const auto base = bks_density_phi(pair.omega, pair.l1, 1.0, pair.l2, 1.0);
    // Rebasing L1 by g multiplies the half-density value on the new basis by |det g|^{1/2}.
    const auto moved = bks_density_phi(pair.omega, pair.l1 * g, std::sqrt(std::abs(g.determinant())), pair.l2, 1.0);
    EXPECT_NEAR(std::abs(reevaluate(moved, pair.planted_intersection) - reevaluate(base, pair.planted_intersection)),
                0.0, 1e-9 * std::abs(reevaluate(base, pair.planted_intersection)));
}
