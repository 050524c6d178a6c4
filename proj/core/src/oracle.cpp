#include "bks/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "bks/alcove.hpp"
#include "bks/density.hpp"
#include "bks/errors.hpp"
#include "bks/pairing.hpp"

namespace bks::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double expansion(const Eigen::MatrixXd& m, std::vector<int>& idx) {
    if (idx.empty()) return 1.0;
    const int first = idx.front();
    double sum = 0.0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const double a = m(first, idx[j]);
        if (a == 0.0) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != j) rest.push_back(idx[t]);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += sign * a * expansion(m, rest);
    }
    return sum;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Diagonal entries of xi in the realization alpha_i = e_i - e_{i+1}.
std::vector<double> diagonal_entries(const Coords& xi) {
    const std::size_t r = xi.size();
    std::vector<double> d(r + 1);
    d[0] = xi[0].to_double();
    for (std::size_t j = 1; j < r; ++j) d[j] = (xi[j] - xi[j - 1]).to_double();
    d[r] = -xi[r - 1].to_double();
    return d;
}

Eigen::VectorXcd exp_diag(const std::vector<double>& d) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = std::polar(1.0, kTwoPi * d[i]);
    return v;
}

// Max distance under a greedy nearest matching; the multisets in use have
// well separated points, so greedy agrees with the optimal matching.
double multiset_distance(const Eigen::VectorXcd& got, const Eigen::VectorXcd& want) {
    std::vector<bool> used(static_cast<std::size_t>(got.size()), false);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < want.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        for (Eigen::Index j = 0; j < got.size(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const double d = std::abs(got(j) - want(i));
            if (d < best) {
                best = d;
                best_j = static_cast<std::size_t>(j);
            }
        }
        used[best_j] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

Eigen::MatrixXcd random_unitary(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) z(i, j) = {g(rng), g(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace

Eigen::MatrixXd omega_matrix(const RootSystem& rs, const Coords& xi) {
    const Eigen::Index m = rs.m();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (Eigen::Index a = 0; a < m; ++a) {
        const double v = kTwoPi * inner_product(rs, rs.positive_roots[static_cast<std::size_t>(a)], xi).to_double();
        out(2 * a, 2 * a + 1) = -v;
        out(2 * a + 1, 2 * a) = v;
    }
    return out;
}

double pfaffian_block(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) throw ValidationError("Pfaffian needs an even square matrix");
    double pf = 1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i / 2 != j / 2 && m(i, j) != 0.0) throw ValidationError("matrix is not 2x2 block diagonal");
    for (Eigen::Index b = 0; b < m.rows(); b += 2) pf *= m(b, b + 1);
    return pf;
}

double pfaffian_expansion(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw ValidationError("Pfaffian needs a square matrix");
    if (m.rows() > 12) throw ValidationError("expansion is limited to dimension 12");
    if (m.rows() % 2 != 0) return 0.0;
    std::vector<int> idx(static_cast<std::size_t>(m.rows()));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    return expansion(m, idx);
}

PfaffianCheck pfaffian_check(const RootSystem& rs, const Coords& xi, double tolerance) {
    const Eigen::MatrixXd om = omega_matrix(rs, xi);
    PfaffianCheck out;
    const double p = big_to_double(omega_top_coeff(rs, xi).product);
    out.expected = std::pow(-kTwoPi, rs.m()) * p;
    out.block = pfaffian_block(om);
    out.elimination = density::pfaffian(om);
    if (om.rows() <= 12) out.expansion = pfaffian_expansion(om);

    const double scale = std::max(std::abs(out.expected), std::numeric_limits<double>::min());
    auto dev = [&](double v) { return std::abs(v - out.expected) / scale; };
    out.max_relative_deviation = std::max(dev(out.block), dev(out.elimination));
    if (out.expansion) out.max_relative_deviation = std::max(out.max_relative_deviation, dev(*out.expansion));
    out.pass = out.max_relative_deviation <= tolerance;
    return out;
}

std::uint64_t classical_weyl_order(const RootSystem& rs) {
    const int r = rs.rank;
    switch (rs.type_letter) {
        case 'A': return factorial(r + 1);
        case 'B':
        case 'C': return (std::uint64_t{1} << r) * factorial(r);
        case 'D': return (std::uint64_t{1} << (r - 1)) * factorial(r);
        case 'E':
            if (r == 6) return 51840;
            if (r == 7) return 2903040;
            if (r == 8) return 696729600;
            break;
        case 'F':
            if (r == 4) return 1152;
            break;
        case 'G':
            if (r == 2) return 12;
            break;
        default: break;
    }
    throw ValidationError("no classical order for " + rs.name());
}

std::size_t admissible_count_scan(const RootSystem& rs, int k) {
    if (k < 1) throw ValidationError("level k must be >= 1");
    if (rs.rank > 4) throw ValidationError("admissible scan is limited to rank <= 4, got " + rs.name());
    const auto r = static_cast<std::size_t>(rs.rank);
    const std::int64_t top = std::max(1, k - 1);
    std::vector<std::int64_t> c(r, 1);
    std::size_t count = 0;
    while (true) {
        Coords lambda(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) lambda[j] += Rational(c[i]) * rs.weight_to_root(j, i);
        if (inner_product(rs, rs.highest_root, lambda) < Rational(k)) ++count;

        std::size_t pos = 0;
        while (pos < r && c[pos] == top) c[pos++] = 1;
        if (pos == r) break;
        ++c[pos];
    }
    return count;
}

TypeACheck typeA_matrix_check(const RootSystem& rs, int k, const Coords& beta, const Coords& beta_prime,
                              const WeylElement& w, std::uint64_t seed, double tolerance) {
    if (rs.type_letter != 'A') throw ValidationError("type-A matrix check needs type A, got " + rs.name());
    for (const Coords* b : {&beta, &beta_prime}) {
        const AlcovePoint p = classify(rs, *b, k);
        if (!is_admissible(p)) throw ValidationError(to_string(*b) + " is not regular and 1/k-integral");
    }
    const Eigen::Index n = rs.rank + 1;
    const Eigen::VectorXcd g_diag = exp_diag(diagonal_entries(act(w, beta) - beta_prime));
    const Eigen::VectorXcd h_diag = exp_diag(diagonal_entries(beta_prime));
    const Eigen::MatrixXcd u = random_unitary(n, seed);
    const Eigen::MatrixXcd g = u * g_diag.asDiagonal() * u.adjoint();
    const Eigen::MatrixXcd h = u * h_diag.asDiagonal() * u.adjoint();

    TypeACheck out;
    out.commutator = (g * h - h * g).norm();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eh(h, false);
    out.h_class = multiset_distance(eh.eigenvalues(), exp_diag(diagonal_entries(beta_prime)));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ehg(h * g, false);
    out.hg_class = multiset_distance(ehg.eigenvalues(), exp_diag(diagonal_entries(beta)));
    out.pass = out.commutator <= tolerance && out.h_class <= tolerance && out.hg_class <= tolerance;
    return out;
}

}  // namespace bks::oracle
