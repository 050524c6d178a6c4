#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bks/rootsys.hpp"
#include "bks/weyl.hpp"

namespace bks {

enum class HaarConvention {
    probability,   // Haar measure of total mass 1 on T
    unit_lattice,  // Riemannian volume of the normalized metric, kappa = 1
};

struct Conventions {
    HaarConvention haar = HaarConvention::probability;
    /// Use k ||w beta - beta'||^2 as the phase exponent instead of ||w beta - beta'||^2.
    bool phase_k = false;
};

std::string to_string(HaarConvention h);
/// Accepts "probability" and "unit-lattice".
HaarConvention parse_haar(const std::string& s);

/// P(xi) = prod over positive roots of alpha(xi), and m = |Phi_+|. The top
/// coefficient of the orbit form is (-2 pi)^m P(xi); 2 pi stays with the caller.
struct OmegaTop {
    BigRational product;
    int m = 0;
};
OmegaTop omega_top_coeff(const RootSystem& rs, const Coords& xi);

/// True iff no positive root vanishes on xi.
bool is_regular(const RootSystem& rs, const Coords& xi);

struct SignCheck {
    bool pass = true;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;
};

/// P(w xi) = (-1)^{l(w)} P(xi) for every w in W, exactly.
/// Throws ValidationError for non-regular xi.
SignCheck sign_identity_check(const RootSystem& rs, const std::vector<WeylElement>& W, const Coords& xi);

/// kappa(G)^2 = 1 / det(<alpha_i^v, alpha_j^v>) for probability Haar, 1 for unit-lattice.
Rational kappa_squared(const RootSystem& rs, HaarConvention haar = HaarConvention::probability);
double kappa(const RootSystem& rs, HaarConvention haar = HaarConvention::probability);

/// coefficient * (2 pi)^two_pi_power.
struct SymbolicReal {
    BigRational coefficient;
    int two_pi_power = 0;
    double value() const;
};

/// Volume of G/T for the metric volume form: 1 / prod <alpha, rho> times (2 pi)^{-m}.
SymbolicReal vol_GT_metric(const RootSystem& rs);

struct VolumePair {
    BigRational square;  // value^2, exact
    double value = 0.0;
    /// value = (2 pi)^m sqrt(P(xi) P(xi')) vol_GT_metric, compared on rational squares
    /// with the 2 pi powers cancelling.
    bool identity_holds = false;
};

/// sqrt(P(xi) P(xi')) / prod <alpha, rho>. Throws ValidationError unless both
/// arguments are dominant and regular.
VolumePair vol_GT_pair(const RootSystem& rs, const Coords& xi, const Coords& xi_prime);

/// Phase exponent reduced to [0, 1).
Rational phase_exponent(const RootSystem& rs, int k, const WeylElement& w, const Coords& beta,
                        const Coords& beta_prime, bool include_k_exponent);

/// exp(2 pi i E) with E from phase_exponent. beta and beta_prime must be
/// regular and 1/k-integral alcove points.
std::complex<double> phase_at(const RootSystem& rs, int k, const WeylElement& w, const Coords& beta,
                              const Coords& beta_prime, bool include_k_exponent);

/// The point z_w of the intersection, labelled by w.
struct IntersectionPoint {
    WeylElement w;
    Coords beta;
    Coords beta_prime;
    Coords diff;       // w beta - beta'
    Rational norm_sq;  // <diff, diff>
};

/// One point per element of W, in the order of W. Throws ValidationError for
/// non-regular inputs and std::logic_error if two diffs coincide.
std::vector<IntersectionPoint> intersection_points(const RootSystem& rs, const std::vector<WeylElement>& W,
                                                   const Coords& beta, const Coords& beta_prime);

struct WeylTerm {
    std::string word;
    int length = 0;
    Rational norm_sq;
    Rational exponent;  // reduced mod 1
    std::complex<double> phase;
};

struct PairingResult {
    int k = 0;
    Conventions conventions;
    Coords beta;
    Coords beta_prime;
    int n = 0, r = 0, m = 0;
    Rational kappa_sq;
    BigRational rho_product;  // prod <alpha, rho>
    BigRational product_sq;  // P(beta) P(beta')
    double c_gt = 0.0;       // kappa / prod <alpha, rho>
    double prefactor = 0.0;  // k^{n-r} c_gt
    double product_term = 0.0;
    std::vector<WeylTerm> weyl_terms;
    std::complex<double> weyl_sum;
    std::complex<double> total;
};

/// k^{n-r} (kappa / prod <alpha, rho>) sqrt(P(beta) P(beta')) sum_w exp(2 pi i E_w).
/// W must be the full group in (length, word) order. Throws ValidationError
/// unless beta and beta' are regular and 1/k-integral.
PairingResult bks_pairing(const RootSystem& rs, const std::vector<WeylElement>& W, int k, const Coords& beta,
                          const Coords& beta_prime, const Conventions& conventions = {});

/// kappa^{1/2} |Omega_{k beta}(eta_1, ..., eta_{n-r})|^{1/2}. The columns of eta are
/// the tuple in the basis x_{a1}, y_{a1}, x_{a2}, y_{a2}, ... (positive roots in
/// rs order). Throws ValidationError on a wrong shape.
double half_density_value(const RootSystem& rs, int k, const Coords& beta, const Eigen::MatrixXd& eta,
                          HaarConvention haar = HaarConvention::probability);

/// Checks P(k beta) = k^m P(beta) exactly.
bool level_scaling_identity(const RootSystem& rs, int k, const Coords& beta);

struct DensityConsistency {
    double density_product = 0.0;  // k^{n-r} kappa |Omega_beta|^{1/2} |Omega_beta'|^{1/2} on the standard basis
    double pairing_constant = 0.0;  // prefactor * product_term of bks_pairing
    double relative_deviation = 0.0;
    bool two_pi_cancels = false;
};

/// Compares the density value against the constant used by bks_pairing once the
/// metric volume of G/T is factored in.
DensityConsistency density_consistency(const RootSystem& rs, int k, const Coords& beta, const Coords& beta_prime,
                                       HaarConvention haar = HaarConvention::probability);

}  // namespace bks
