#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "bks/rootsys.hpp"
#include "bks/weyl.hpp"

/// Brute-force counterparts of the main computations. Nothing here calls into
/// the code path it checks.
namespace bks::oracle {

/// Skew matrix of the orbit form at xi in the basis x_{a1}, y_{a1}, x_{a2}, ...:
/// one block [[0, -2 pi a(xi)], [2 pi a(xi), 0]] per positive root.
Eigen::MatrixXd omega_matrix(const RootSystem& rs, const Coords& xi);

/// Pfaffian of a block-diagonal skew matrix with 2x2 blocks. Throws
/// ValidationError if an entry outside the blocks is nonzero.
double pfaffian_block(const Eigen::MatrixXd& m);

/// Pfaffian by expansion along the first row. Dimension at most 12.
double pfaffian_expansion(const Eigen::MatrixXd& m);

struct PfaffianCheck {
    double expected = 0.0;  // (-2 pi)^m P(xi)
    double block = 0.0;
    std::optional<double> expansion;  // when 2m <= 12
    double elimination = 0.0;
    double max_relative_deviation = 0.0;
    bool pass = false;
};

/// Compares the Pfaffian of omega_matrix, computed along every available path,
/// with (-2 pi)^m P(xi), signs included. P(xi) comes from the exact top coefficient.
PfaffianCheck pfaffian_check(const RootSystem& rs, const Coords& xi, double tolerance = 1e-9);

/// |W| from the product of the degrees, hard-coded per type.
std::uint64_t classical_weyl_order(const RootSystem& rs);

/// Number of weights with fundamental-weight coordinates c_i >= 1 and
/// <alpha_0, lambda> < k, by scanning the box 1 <= c_i <= k - 1. Rank at most 4.
std::size_t admissible_count_scan(const RootSystem& rs, int k);

struct TypeACheck {
    double commutator = 0.0;     // ||gh - hg||
    double h_class = 0.0;        // eigenvalues of h vs exp(2 pi i beta')
    double hg_class = 0.0;       // eigenvalues of hg vs exp(2 pi i beta)
    bool pass = false;
};

/// SU(r+1) realization: t is the traceless diagonal matrices with
/// alpha_i = e_i - e_{i+1}. Forms g = exp(2 pi i diag(w beta - beta')) and
/// h = exp(2 pi i diag(beta')), conjugates both by a random unitary drawn from
/// seed, and checks gh = hg together with the eigenvalue multisets of h and hg.
/// Throws ValidationError unless rs is of type A and beta, beta' are admissible.
TypeACheck typeA_matrix_check(const RootSystem& rs, int k, const Coords& beta, const Coords& beta_prime,
                              const WeylElement& w, std::uint64_t seed = 0, double tolerance = 1e-10);

}  // namespace bks::oracle
