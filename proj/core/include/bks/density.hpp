#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "bks/rational.hpp"

namespace bks::density {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;

/// Tolerance for rank decisions and the commutativity checks of the calculus.
inline constexpr double kTolerance = 1e-9;

/// A finite-dimensional real vector space with a fixed reference basis.
/// Spaces of equal dimension are distinguished by id.
struct SpaceRef {
    std::size_t dim = 0;
    std::string id;

    friend bool operator==(const SpaceRef&, const SpaceRef&) = default;
};

/// A density of the given order on `space`, stored as its value on the
/// reference basis. On the tuple whose coordinate matrix is A it evaluates to
/// value * |det A|^order.
struct DensityValue {
    SpaceRef space;
    double order = 0.5;
    Complex value{1.0, 0.0};
};

/// Linear map between reference bases: matrix is target.dim x source.dim.
struct LinearMap {
    SpaceRef source;
    SpaceRef target;
    Matrix matrix;
};

/// 0 -> U --i--> V --j--> W -> 0.
struct ExactSequence {
    LinearMap i;
    LinearMap j;

    const SpaceRef& u() const { return i.source; }
    const SpaceRef& v() const { return i.target; }
    const SpaceRef& w() const { return j.target; }

    /// Throws ValidationError unless shapes agree, j i = 0, i is injective and
    /// j is surjective.
    void validate() const;
};

/// Choices entering the constructive half-density isomorphism: a complement
/// of ker j in V (columns, dim V x dim W) and bases of U and W (columns in
/// reference coordinates). Empty matrices select the defaults: the orthogonal
/// complement and the reference bases.
struct SeqIsoChoice {
    Matrix complement;
    Matrix u_basis;
    Matrix w_basis;
};

Complex eval_density(const DensityValue& d, const Matrix& tuple);

/// Pointwise product of two half-densities on the same space.
DensityValue product_density(const DensityValue& d1, const DensityValue& d2);

/// phi^* d for an isomorphism phi: source -> d.space.
DensityValue pullback(const LinearMap& phi, const DensityValue& d);

/// |U|^{1/2} (x) |W|^{1/2} -> |V|^{1/2} induced by the sequence. The result is
/// independent of `choice`.
DensityValue seq_iso(const ExactSequence& seq, const DensityValue& du, const DensityValue& dw,
                     const SeqIsoChoice& choice = {});

/// Solves seq_iso(seq, du, dw) = dv for dw.
DensityValue seq_iso_solve_w(const ExactSequence& seq, const DensityValue& dv, const DensityValue& du,
                             const SeqIsoChoice& choice = {});

/// Solves seq_iso(seq, du, dw) = dv for du.
DensityValue seq_iso_solve_u(const ExactSequence& seq, const DensityValue& dv, const DensityValue& dw,
                             const SeqIsoChoice& choice = {});

/// Exact counterpart of seq_iso for rational data and positive real half-densities,
/// carried as their squares.
struct ExactSequenceQ {
    RationalMatrix i;  // dim V x dim U
    RationalMatrix j;  // dim W x dim V
};

/// Empty members select the defaults: standard basis vectors completing im i,
/// and the reference bases.
struct SeqIsoChoiceQ {
    RationalMatrix complement;
    RationalMatrix u_basis;
    RationalMatrix w_basis;
};

/// (rho_V on the reference basis)^2 given rho_U^2 and rho_W^2.
Rational seq_iso_squared(const ExactSequenceQ& seq, const Rational& du_sq, const Rational& dw_sq,
                         const SeqIsoChoiceQ& choice = {});

struct ScalingResult {
    Complex theta;        // image of the probe under the first sequence
    Complex theta_prime;  // image under the second
    double ratio = 0.0;   // |theta / theta_prime|
    double expected = 0.0;  // |det k|^{1/2}
};

/// Two sequences with the same ends and an automorphism k of V with
/// k i = i' and j' k = j. Throws ValidationError if the squares do not commute.
ScalingResult scaling_check(const ExactSequence& seq, const ExactSequence& seq_prime, const Matrix& k);

struct DirectSumResult {
    bool pass = false;
    double max_deviation = 0.0;
};

/// Checks zeta o (theta (x) theta') = theta'' o tau on random half-density
/// inputs, with theta'' built from a random (non block-diagonal) complement.
DirectSumResult direct_sum_check(const ExactSequence& seq, const ExactSequence& seq_prime, std::mt19937_64& rng,
                                 int probes = 4);

/// Stacks two sequences into 0 -> U+U' -> V+V' -> W+W' -> 0.
ExactSequence direct_sum(const ExactSequence& a, const ExactSequence& b);

/// Pfaffian of a real skew-symmetric matrix by skew Gaussian elimination.
double pfaffian(Matrix a);

/// Output of the two BKS density constructions: the density on L1 n L2,
/// evaluated on `intersection_basis` (ambient columns).
struct DensityMapResult {
    Matrix intersection_basis;
    Complex value;
    double quotient_pfaffian = 0.0;  // |Pf| of the induced form on the chosen quotient basis
};

/// Orthonormal basis of L1 n L2, deterministic for given inputs.
Matrix intersection_basis(const Matrix& l1, const Matrix& l2);

/// Phi: |L1|^{1/2} (x) |L2|^{1/2} -> |L1 n L2| through the chain
/// L1+L2 direct sum -> first exact sequence -> second exact sequence -> the
/// symplectic trivialization of the quotient. a and b are the half-density values
/// on the given bases of L1 and L2.
DensityMapResult bks_density_phi(const Matrix& omega, const Matrix& l1, Complex a, const Matrix& l2, Complex b);

/// The same map through complements V1, V2 of L1 n L2 in L1, L2 and the
/// isomorphism V1 + V2 -> (L1+L2)/(L1 n L2).
DensityMapResult bks_density_phi_split(const Matrix& omega, const Matrix& l1, Complex a, const Matrix& l2, Complex b,
                                       const Matrix& v1, const Matrix& v2);

/// Value of a density result on another basis of the same intersection.
Complex reevaluate(const DensityMapResult& r, const Matrix& basis);

/// Randomized clean pair of Lagrangians in a 2N-dimensional symplectic space,
/// with complements of their intersection.
struct CleanLagrangianPair {
    Matrix omega;
    Matrix l1, l2;
    Matrix v1, v2;
    Matrix planted_intersection;
};

/// Starts from a standard basis e_1..e_N, f_1..f_N with omega(e_i, f_j) = delta_ij,
/// takes L1 n L2 = span(e_1..e_d), L1 = span(e_1..e_N), L2 = span(e_1..e_d, f_{d+1}..f_N)
/// plus symmetric graph perturbations, then applies a random ambient change of
/// basis and random in-subspace bases.
CleanLagrangianPair random_clean_pair(std::mt19937_64& rng, int half_dim, int intersection_dim);

/// Random matrix with entries uniform in [-1, 1] plus `shift` on the diagonal.
Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double shift = 0.0);

/// Random exact sequence with the given dimensions (U injects, V surjects).
ExactSequence random_exact_sequence(std::mt19937_64& rng, int dim_u, int dim_w, const std::string& tag);

}  // namespace bks::density
