#include "bks/pairing.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "bks/alcove.hpp"
#include "bks/errors.hpp"

namespace bks {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

BigRational rho_product(const RootSystem& rs) {
    BigRational p(1);
    for (const auto& a : rs.positive_roots) p *= to_big(inner_product(rs, a, rs.rho));
    return p;
}

void require_regular(const RootSystem& rs, const Coords& xi, const char* name) {
    if (xi.size() != static_cast<std::size_t>(rs.rank))
        throw ValidationError(std::string(name) + " has wrong dimension for " + rs.name());
    if (!is_regular(rs, xi)) throw ValidationError(std::string(name) + " = " + to_string(xi) + " is not regular");
}

void require_admissible(const RootSystem& rs, const Coords& beta, int k, const char* name) {
    const AlcovePoint p = classify(rs, beta, k);
    if (!p.is_regular) throw ValidationError(std::string(name) + " = " + to_string(beta) + " is not regular");
    if (!p.is_k_integral)
        throw ValidationError(std::string(name) + " = " + to_string(beta) + " is not 1/" + std::to_string(k) +
                              "-integral");
}

std::complex<double> unit_phase(const Rational& e) {
    const double angle = kTwoPi * e.to_double();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::string to_string(HaarConvention h) {
    return h == HaarConvention::probability ? "probability" : "unit-lattice";
}

HaarConvention parse_haar(const std::string& s) {
    if (s == "probability") return HaarConvention::probability;
    if (s == "unit-lattice") return HaarConvention::unit_lattice;
    throw ValidationError("haar must be 'probability' or 'unit-lattice', got '" + s + "'");
}

OmegaTop omega_top_coeff(const RootSystem& rs, const Coords& xi) {
    if (xi.size() != static_cast<std::size_t>(rs.rank))
        throw ValidationError("xi has wrong dimension for " + rs.name());
    OmegaTop out{BigRational(1), rs.m()};
    for (const auto& a : rs.positive_roots) {
        out.product *= to_big(inner_product(rs, a, xi));
        if (out.product.is_zero()) break;
    }
    return out;
}

bool is_regular(const RootSystem& rs, const Coords& xi) {
    for (const auto& a : rs.positive_roots)
        if (inner_product(rs, a, xi).is_zero()) return false;
    return true;
}

SignCheck sign_identity_check(const RootSystem& rs, const std::vector<WeylElement>& W, const Coords& xi) {
    require_regular(rs, xi, "xi");
    const BigRational base = omega_top_coeff(rs, xi).product;
    SignCheck out;
    for (const auto& w : W) {
        const BigRational lhs = omega_top_coeff(rs, act(w, xi)).product;
        const BigRational rhs = w.length() % 2 == 0 ? base : BigRational(-base);
        ++out.checked;
        if (lhs != rhs) {
            out.pass = false;
            out.counterexample = "w = " + w.word_string() + ": P(w xi) = " + big_str(lhs) + ", expected " + big_str(rhs);
            break;
        }
    }
    return out;
}

Rational kappa_squared(const RootSystem& rs, HaarConvention haar) {
    if (haar == HaarConvention::unit_lattice) return Rational(1);
    const auto r = static_cast<std::size_t>(rs.rank);
    RationalMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            g(i, j) = Rational(4) * rs.gram(i, j) / (rs.gram(i, i) * rs.gram(j, j));
    return g.determinant().inverse();
}

double kappa(const RootSystem& rs, HaarConvention haar) { return std::sqrt(kappa_squared(rs, haar).to_double()); }

double SymbolicReal::value() const { return big_to_double(coefficient) * std::pow(kTwoPi, two_pi_power); }

SymbolicReal vol_GT_metric(const RootSystem& rs) { return {BigRational(1) / rho_product(rs), -rs.m()}; }

VolumePair vol_GT_pair(const RootSystem& rs, const Coords& xi, const Coords& xi_prime) {
    for (const Coords* x : {&xi, &xi_prime}) {
        require_regular(rs, *x, "xi");
        for (int i = 0; i < rs.rank; ++i)
            if (inner_product(rs, rs.simple_root(i), *x) < Rational(0))
                throw ValidationError(to_string(*x) + " is not dominant");
    }
    const BigRational pp = omega_top_coeff(rs, xi).product * omega_top_coeff(rs, xi_prime).product;
    const BigRational rp = rho_product(rs);
    VolumePair out;
    out.square = pp / (rp * rp);
    out.value = std::sqrt(big_to_double(out.square));

    // ((2 pi)^m sqrt(PP') Q (2 pi)^{-m})^2 with the powers tracked separately.
    const SymbolicReal metric = vol_GT_metric(rs);
    const int power = 2 * rs.m() + 2 * metric.two_pi_power;
    const BigRational& q = metric.coefficient;
    out.identity_holds = power == 0 && pp * q * q == out.square;
    return out;
}

Rational phase_exponent(const RootSystem& rs, int k, const WeylElement& w, const Coords& beta,
                        const Coords& beta_prime, bool include_k_exponent) {
    const Coords diff = act(w, beta) - beta_prime;
    Rational e = inner_product(rs, diff, diff);
    if (include_k_exponent) e *= Rational(k);
    return e.frac();
}

std::complex<double> phase_at(const RootSystem& rs, int k, const WeylElement& w, const Coords& beta,
                              const Coords& beta_prime, bool include_k_exponent) {
    require_admissible(rs, beta, k, "beta");
    require_admissible(rs, beta_prime, k, "beta'");
    return unit_phase(phase_exponent(rs, k, w, beta, beta_prime, include_k_exponent));
}

std::vector<IntersectionPoint> intersection_points(const RootSystem& rs, const std::vector<WeylElement>& W,
                                                   const Coords& beta, const Coords& beta_prime) {
    require_regular(rs, beta, "beta");
    require_regular(rs, beta_prime, "beta'");
    std::vector<IntersectionPoint> out;
    out.reserve(W.size());
    std::set<std::string> seen;
    for (const auto& w : W) {
        IntersectionPoint p{w, beta, beta_prime, act(w, beta) - beta_prime, {}};
        p.norm_sq = inner_product(rs, p.diff, p.diff);
        if (!seen.insert(to_string(p.diff)).second)
            throw std::logic_error("two Weyl elements give the same intersection point " + to_string(p.diff));
        out.push_back(std::move(p));
    }
    return out;
}

PairingResult bks_pairing(const RootSystem& rs, const std::vector<WeylElement>& W, int k, const Coords& beta,
                          const Coords& beta_prime, const Conventions& conventions) {
    require_admissible(rs, beta, k, "beta");
    require_admissible(rs, beta_prime, k, "beta'");

    PairingResult out;
    out.k = k;
    out.conventions = conventions;
    out.beta = beta;
    out.beta_prime = beta_prime;
    out.n = rs.n();
    out.r = rs.rank;
    out.m = rs.m();
    out.kappa_sq = kappa_squared(rs, conventions.haar);
    out.rho_product = rho_product(rs);
    out.product_sq = omega_top_coeff(rs, beta).product * omega_top_coeff(rs, beta_prime).product;
    out.c_gt = std::sqrt(out.kappa_sq.to_double()) / big_to_double(out.rho_product);
    out.prefactor = std::pow(static_cast<double>(k), out.n - out.r) * out.c_gt;
    out.product_term = std::sqrt(big_to_double(out.product_sq));

    CompensatedSum re, im;
    out.weyl_terms.reserve(W.size());
    for (const auto& w : W) {
        const Coords diff = act(w, beta) - beta_prime;
        WeylTerm t;
        t.word = w.word_string();
        t.length = w.length();
        t.norm_sq = inner_product(rs, diff, diff);
        t.exponent = (conventions.phase_k ? Rational(k) * t.norm_sq : t.norm_sq).frac();
        t.phase = unit_phase(t.exponent);
        re.add(t.phase.real());
        im.add(t.phase.imag());
        out.weyl_terms.push_back(std::move(t));
    }
    out.weyl_sum = {re.value(), im.value()};
    out.total = out.prefactor * out.product_term * out.weyl_sum;
    return out;
}

double half_density_value(const RootSystem& rs, int k, const Coords& beta, const Eigen::MatrixXd& eta,
                          HaarConvention haar) {
    const Eigen::Index dim = 2 * rs.m();
    if (eta.rows() != dim || eta.cols() != dim)
        throw ValidationError("eta tuple must have " + std::to_string(dim) + " vectors of length " +
                              std::to_string(dim));
    const double p = big_to_double(omega_top_coeff(rs, Rational(k) * beta).product);
    const double det = dim == 0 ? 1.0 : std::abs(eta.partialPivLu().determinant());
    return std::sqrt(kappa(rs, haar)) * std::sqrt(std::pow(kTwoPi, rs.m()) * std::abs(p) * det);
}

bool level_scaling_identity(const RootSystem& rs, int k, const Coords& beta) {
    BigRational scaled = omega_top_coeff(rs, beta).product;
    for (int i = 0; i < rs.m(); ++i) scaled *= k;
    return omega_top_coeff(rs, Rational(k) * beta).product == scaled;
}

DensityConsistency density_consistency(const RootSystem& rs, int k, const Coords& beta, const Coords& beta_prime,
                                       HaarConvention haar) {
    const double pb = std::abs(big_to_double(omega_top_coeff(rs, beta).product));
    const double pbp = std::abs(big_to_double(omega_top_coeff(rs, beta_prime).product));
    const SymbolicReal metric = vol_GT_metric(rs);
    const int m = rs.m();

    DensityConsistency out;
    out.density_product = std::pow(static_cast<double>(k), rs.n() - rs.rank) * kappa(rs, haar) *
                          std::sqrt(std::pow(kTwoPi, m) * pb) * std::sqrt(std::pow(kTwoPi, m) * pbp);
    const double c_gt = kappa(rs, haar) / big_to_double(rho_product(rs));
    out.pairing_constant = std::pow(static_cast<double>(k), rs.n() - rs.rank) * c_gt * std::sqrt(pb * pbp);
    const double via_volume = out.density_product * metric.value();
    out.relative_deviation = std::abs(via_volume - out.pairing_constant) / std::abs(out.pairing_constant);
    out.two_pi_cancels = m + metric.two_pi_power == 0;
    return out;
}

}  // namespace bks
