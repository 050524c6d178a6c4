#include "bks/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "bks/alcove.hpp"
#include "bks/density.hpp"
#include "bks/errors.hpp"
#include "bks/oracle.hpp"
#include "bks/pairing.hpp"
#include "bks/weyl_cache.hpp"

namespace bks::verify {

namespace {

using density::Complex;
using density::Matrix;

constexpr double kDensityTolerance = 1e-9;

double relative(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Complex random_value(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mod(0.5, 2.0);
    std::uniform_real_distribution<double> arg(-std::numbers::pi, std::numbers::pi);
    return std::polar(mod(rng), arg(rng));
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string replay(const std::string& check, std::uint64_t seed, std::uint64_t trial) {
    return check + " seed=" + std::to_string(seed) + " trial=" + std::to_string(trial);
}

std::vector<WeylElement> weyl_of(const RootSystem& rs, const Options& o) {
    return load_or_enumerate_weyl(rs, o.cache_dir).elements;
}

CheckRecord make(const std::string& suite, const std::string& name, double tolerance) {
    CheckRecord c;
    c.suite = suite;
    c.name = name;
    c.tolerance = tolerance;
    return c;
}

RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(uniform_int(rng, -bound, bound));
    return m;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int bound) {
    while (true) {
        RationalMatrix m = random_integer_matrix(rng, n, n, bound);
        if (n == 0 || !m.determinant().is_zero()) return m;
    }
}

Matrix to_eigen(const RationalMatrix& m) {
    Matrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
    return out;
}

}  // namespace

void CheckRecord::record(double deviation, const std::string& replay_line) {
    ++instances;
    max_deviation = std::max(max_deviation, deviation);
    if (!(deviation <= tolerance)) {
        pass = false;
        std::ostringstream os;
        os.precision(17);
        os << replay_line << " deviation=" << deviation;
        failures.push_back(os.str());
    }
}

void CheckRecord::record_exact(bool ok, const std::string& replay_line) {
    ++instances;
    if (!ok) {
        pass = false;
        failures.push_back(replay_line);
    }
}

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::mt19937_64 trial_rng(std::uint64_t seed, const std::string& check, std::uint64_t trial) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : check) h = (h ^ ch) * 1099511628211ull;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Coords random_regular(const RootSystem& rs, std::mt19937_64& rng) {
    while (true) {
        Coords xi(static_cast<std::size_t>(rs.rank));
        for (auto& x : xi) x = Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 7));
        if (is_regular(rs, xi)) return xi;
    }
}

std::vector<std::pair<char, int>> small_types() {
    return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4},
            {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};
}

CheckRecord check_seq_iso_independence(const Options& o) {
    const std::string name = "seq_iso_choice_independence";
    CheckRecord c = make("densities", name, kDensityTolerance);
    for (int t = 0; t < o.trials; ++t) {
        auto rng = trial_rng(o.seed, name, static_cast<std::uint64_t>(t));
        const int du = uniform_int(rng, 0, 3);
        const int dw = uniform_int(rng, du == 0 ? 1 : 0, 3);
        const auto seq = density::random_exact_sequence(rng, du, dw, "");
        const density::DensityValue rho{seq.u(), 0.5, random_value(rng)};
        const density::DensityValue nu{seq.w(), 0.5, random_value(rng)};
        density::SeqIsoChoice choice;
        choice.u_basis = density::random_matrix(rng, du, du, 1.5);
        choice.w_basis = density::random_matrix(rng, dw, dw, 1.5);
        if (dw > 0) choice.complement = density::random_matrix(rng, du + dw, dw);
        const Complex a = density::seq_iso(seq, rho, nu).value;
        const Complex b = density::seq_iso(seq, rho, nu, choice).value;
        c.record(relative(b, a), replay(name, o.seed, static_cast<std::uint64_t>(t)));
    }
    return c;
}

CheckRecord check_scaling(const Options& o) {
    const std::string name = "scaling_lemma";
    CheckRecord c = make("densities", name, kDensityTolerance);
    for (int t = 0; t < o.trials; ++t) {
        auto rng = trial_rng(o.seed, name, static_cast<std::uint64_t>(t));
        const int du = uniform_int(rng, 0, 3);
        const int dw = uniform_int(rng, du == 0 ? 1 : 0, 3);
        const auto seq = density::random_exact_sequence(rng, du, dw, "");
        const Matrix k = density::random_matrix(rng, du + dw, du + dw, 1.5);
        density::ExactSequence prime = seq;
        prime.i.matrix = k * seq.i.matrix;
        prime.j.matrix = seq.j.matrix * k.inverse();
        const auto r = density::scaling_check(seq, prime, k);
        c.record(std::abs(r.ratio - r.expected) / r.expected, replay(name, o.seed, static_cast<std::uint64_t>(t)));
    }
    return c;
}

CheckRecord check_direct_sum(const Options& o) {
    const std::string name = "direct_sum_compatibility";
    CheckRecord c = make("densities", name, kDensityTolerance);
    for (int t = 0; t < o.trials; ++t) {
        auto rng = trial_rng(o.seed, name, static_cast<std::uint64_t>(t));
        const int du = uniform_int(rng, 0, 2), dw = uniform_int(rng, du == 0 ? 1 : 0, 2);
        const int du2 = uniform_int(rng, 0, 2), dw2 = uniform_int(rng, du2 == 0 ? 1 : 0, 2);
        const auto a = density::random_exact_sequence(rng, du, dw, "a");
        const auto b = density::random_exact_sequence(rng, du2, dw2, "b");
        const auto r = density::direct_sum_check(a, b, rng);
        c.record(r.max_deviation, replay(name, o.seed, static_cast<std::uint64_t>(t)));
    }
    return c;
}

CheckRecord check_phi_routes(const Options& o) {
    const std::string name = "phi_equals_split_route";
    CheckRecord c = make("densities", name, kDensityTolerance);
    for (int t = 0; t < o.trials; ++t) {
        auto rng = trial_rng(o.seed, name, static_cast<std::uint64_t>(t));
        const int n = uniform_int(rng, 1, 4);
        const int d = uniform_int(rng, 0, n);
        const auto pair = density::random_clean_pair(rng, n, d);
        const Complex a = random_value(rng), b = random_value(rng);
        const auto phi = density::bks_density_phi(pair.omega, pair.l1, a, pair.l2, b);
        const auto split = density::bks_density_phi_split(pair.omega, pair.l1, a, pair.l2, b, pair.v1, pair.v2);
        const std::string where = replay(name, o.seed, static_cast<std::uint64_t>(t)) + " N=" + std::to_string(n) +
                                  " d=" + std::to_string(d);
        if (phi.intersection_basis.cols() != d) {
            c.record_exact(false, where + " intersection dimension " + std::to_string(phi.intersection_basis.cols()));
            continue;
        }
        // Compare on the planted basis so the basis choice inside each route drops out.
        c.record(relative(density::reevaluate(split, pair.planted_intersection),
                          density::reevaluate(phi, pair.planted_intersection)),
                 where);
    }
    return c;
}

CheckRecord check_seq_iso_exact(const Options& o) {
    const std::string name = "seq_iso_exact_choice_independence";
    CheckRecord c = make("densities", name, kDensityTolerance);
    for (int t = 0; t < o.trials; ++t) {
        auto rng = trial_rng(o.seed, name, static_cast<std::uint64_t>(t));
        const auto du = static_cast<std::size_t>(uniform_int(rng, 0, 3));
        const auto dw = static_cast<std::size_t>(uniform_int(rng, du == 0 ? 1 : 0, 3));
        const std::size_t dv = du + dw;
        const RationalMatrix a = random_invertible(rng, dv, 3);
        const RationalMatrix a_inv = a.inverse();
        density::ExactSequenceQ seq{a.col_block(0, du), RationalMatrix(dw, dv)};
        for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t col = 0; col < dv; ++col) seq.j(r, col) = a_inv(du + r, col);

        auto random_choice = [&] {
            density::SeqIsoChoiceQ ch;
            ch.u_basis = random_invertible(rng, du, 3);
            ch.w_basis = random_invertible(rng, dw, 3);
            while (true) {
                ch.complement = random_integer_matrix(rng, dv, dw, 3);
                if (dw == 0 || (seq.j * ch.complement).rank() == dw) break;
            }
            return ch;
        };
        const Rational du_sq(uniform_int(rng, 1, 9), uniform_int(rng, 1, 9));
        const Rational dw_sq(uniform_int(rng, 1, 9), uniform_int(rng, 1, 9));
        const Rational x = density::seq_iso_squared(seq, du_sq, dw_sq, random_choice());
        const Rational y = density::seq_iso_squared(seq, du_sq, dw_sq, random_choice());
        const std::string where = replay(name, o.seed, static_cast<std::uint64_t>(t));
        c.record_exact(x == y, where + " " + x.str() + " != " + y.str());

        // The floating-point isomorphism on the same data.
        const density::SpaceRef su{du, "U"}, sv{dv, "V"}, sw{dw, "W"};
        const density::ExactSequence fseq{{su, sv, to_eigen(seq.i)}, {sv, sw, to_eigen(seq.j)}};
        const double f = std::norm(density::seq_iso(fseq, {su, 0.5, std::sqrt(du_sq.to_double())},
                                                    {sw, 0.5, std::sqrt(dw_sq.to_double())})
                                       .value);
        c.record(std::abs(f - x.to_double()) / std::max(1.0, x.to_double()), where + " float vs exact");
    }
    return c;
}

CheckRecord check_signs(const Options& o, int per_type) {
    const std::string name = "sign_identity";
    CheckRecord c = make("signs", name, 0.0);
    for (const auto& [letter, rank] : small_types()) {
        const RootSystem rs = build_root_system(letter, rank);
        const auto W = weyl_of(rs, o);
        for (int t = 0; t < per_type; ++t) {
            auto rng = trial_rng(o.seed, name + rs.name(), static_cast<std::uint64_t>(t));
            const Coords xi = random_regular(rs, rng);
            const SignCheck s = sign_identity_check(rs, W, xi);
            c.record_exact(s.pass && s.checked == W.size(),
                           replay(name, o.seed, static_cast<std::uint64_t>(t)) + " type=" + rs.name() +
                               " xi=" + to_string(xi) + " " + s.counterexample.value_or(""));
        }
    }
    return c;
}

CheckRecord check_weyl_orders(const Options& o, const std::vector<std::pair<char, int>>& types) {
    CheckRecord c = make("oracles", "weyl_order", 0.0);
    for (const auto& [letter, rank] : types) {
        const RootSystem rs = build_root_system(letter, rank);
        const auto W = weyl_of(rs, o);
        const std::uint64_t expected = oracle::classical_weyl_order(rs);
        c.record_exact(W.size() == expected, rs.name() + ": enumerated " + std::to_string(W.size()) +
                                                 ", classical " + std::to_string(expected));
    }
    return c;
}

CheckRecord check_pfaffians(const Options& o, int per_type, double tolerance) {
    const std::string name = "pfaffian";
    CheckRecord c = make("oracles", name, tolerance);
    const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                                  {'B', 3}, {'C', 3}, {'G', 2}};
    for (const auto& [letter, rank] : types) {
        const RootSystem rs = build_root_system(letter, rank);
        for (int t = 0; t < per_type; ++t) {
            auto rng = trial_rng(o.seed, name + rs.name(), static_cast<std::uint64_t>(t));
            const Coords xi = random_regular(rs, rng);
            const auto r = oracle::pfaffian_check(rs, xi, tolerance);
            c.record(r.max_relative_deviation, replay(name, o.seed, static_cast<std::uint64_t>(t)) +
                                                   " type=" + rs.name() + " xi=" + to_string(xi));
        }
    }
    return c;
}

CheckRecord check_admissible_counts(const Options&) {
    CheckRecord c = make("oracles", "admissible_count", 0.0);
    const std::vector<std::tuple<char, int, int>> cases{{'A', 1, 20}, {'A', 2, 10}, {'B', 2, 8}, {'G', 2, 8}};
    for (const auto& [letter, rank, kmax] : cases) {
        const RootSystem rs = build_root_system(letter, rank);
        for (int k = 1; k <= kmax; ++k) {
            const std::size_t got = enumerate_admissible(rs, k).size();
            const std::size_t want = oracle::admissible_count_scan(rs, k);
            c.record_exact(got == want, rs.name() + " k=" + std::to_string(k) + ": enumerated " +
                                            std::to_string(got) + ", scanned " + std::to_string(want));
        }
    }
    return c;
}

CheckRecord check_typeA(const Options& o, double tolerance) {
    const std::string name = "typeA_matrix";
    CheckRecord c = make("oracles", name, tolerance);
    const std::vector<std::pair<int, int>> cases{{1, 2}, {1, 3}, {2, 4}};
    std::uint64_t instance = 0;
    for (const auto& [rank, k] : cases) {
        const RootSystem rs = build_root_system('A', rank);
        const auto W = weyl_of(rs, o);
        const auto points = enumerate_admissible(rs, k);
        for (const auto& p : points)
            for (const auto& q : points)
                for (const auto& w : W) {
                    auto rng = trial_rng(o.seed, name, instance++);
                    const auto r = oracle::typeA_matrix_check(rs, k, p.beta, q.beta, w, rng(), tolerance);
                    c.record(std::max({r.commutator, r.h_class, r.hg_class}),
                             replay(name, o.seed, instance - 1) + " SU(" + std::to_string(rank + 1) +
                                 ") k=" + std::to_string(k) + " beta=" + to_string(p.beta) +
                                 " beta'=" + to_string(q.beta) + " w=" + w.word_string());
                }
    }
    return c;
}

CheckRecord check_a1_closed_form(const Options& o, double tolerance) {
    CheckRecord c = make("oracles", "a1_closed_form", tolerance);
    const RootSystem rs = build_root_system('A', 1);
    const auto W = weyl_of(rs, o);
    for (int k = 2; k <= 6; ++k)
        for (int j = 1; j < k; ++j)
            for (int jp = 1; jp < k; ++jp) {
                const auto res = bks_pairing(rs, W, k, beta_from_weight(rs, {j}, k), beta_from_weight(rs, {jp}, k));
                const double kk = k, dj = j, djp = jp;
                const auto phase = [&](double s) {
                    return std::polar(1.0, 2.0 * std::numbers::pi * s * s / (2.0 * kk * kk));
                };
                const Complex closed =
                    kk * kk / std::sqrt(2.0) * std::sqrt(dj * djp) / kk * (phase(dj - djp) + phase(dj + djp));
                c.record(relative(res.total, closed), "A1 k=" + std::to_string(k) + " j=" + std::to_string(j) +
                                                          " j'=" + std::to_string(jp));
            }
    return c;
}

CheckRecord check_weyl_sum_invariance(const Options& o, char type, int rank, int k, double tolerance) {
    const RootSystem rs = build_root_system(type, rank);
    CheckRecord c = make("oracles", "weyl_sum_invariance_" + rs.name() + "_k" + std::to_string(k), tolerance);
    const auto W = weyl_of(rs, o);
    const auto points = enumerate_admissible(rs, k);
    auto exponents = [&](const Coords& b, const Coords& bp) {
        std::vector<Rational> e;
        e.reserve(W.size());
        for (const auto& w : W) e.push_back(phase_exponent(rs, k, w, b, bp, false));
        std::sort(e.begin(), e.end());
        return e;
    };
    auto weyl_sum = [](const std::vector<Rational>& e) {
        Complex s;
        for (const auto& x : e) s += std::polar(1.0, 2.0 * std::numbers::pi * x.to_double());
        return s;
    };
    for (const auto& p : points)
        for (const auto& q : points) {
            const auto base = exponents(p.beta, q.beta);
            const Complex base_sum = weyl_sum(base);
            const BigRational base_product = abs(omega_top_coeff(rs, p.beta).product);
            for (const auto& u : W) {
                const Coords moved = act(u, p.beta);
                const auto e = exponents(moved, q.beta);
                const std::string where = rs.name() + " beta=" + to_string(p.beta) + " beta'=" + to_string(q.beta) +
                                          " u=" + u.word_string();
                c.record_exact(e == base, where + " exponent multiset differs");
                c.record_exact(abs(omega_top_coeff(rs, moved).product) == base_product, where + " |P| differs");
                c.record(std::abs(weyl_sum(e) - base_sum), where + " sum");
            }
        }
    return c;
}

CheckRecord check_pairing_consistency(const Options& o, double tolerance) {
    CheckRecord c = make("oracles", "pairing_consistency", tolerance);
    const std::vector<std::tuple<char, int, int>> cases{{'A', 1, 3}, {'A', 2, 5}, {'B', 2, 6}, {'G', 2, 7}};
    for (const auto& [letter, rank, k] : cases) {
        const RootSystem rs = build_root_system(letter, rank);
        const auto W = weyl_of(rs, o);
        const auto points = enumerate_admissible(rs, k);
        for (const auto& p : points)
            for (const auto& q : points) {
                const std::string where = rs.name() + " k=" + std::to_string(k) + " beta=" + to_string(p.beta) +
                                          " beta'=" + to_string(q.beta);
                const auto res = bks_pairing(rs, W, k, p.beta, q.beta);
                c.record_exact(res.weyl_terms.size() == W.size(), where + " term count");
                c.record(relative(res.total, res.prefactor * res.product_term * res.weyl_sum), where + " total");
                c.record(density_consistency(rs, k, p.beta, q.beta).relative_deviation, where + " density");
                c.record_exact(level_scaling_identity(rs, k, p.beta), where + " P(k beta) = k^m P(beta)");
                c.record_exact(vol_GT_pair(rs, p.beta, q.beta).identity_holds, where + " volume identity");
                c.record_exact(intersection_points(rs, W, p.beta, q.beta).size() == W.size(), where + " points");
            }
    }
    return c;
}

SuiteReport run_suite(const std::string& suite, const Options& o) {
    if (o.trials < 1) throw ValidationError("trials must be >= 1, got " + std::to_string(o.trials));
    if (suite != "densities" && suite != "signs" && suite != "oracles" && suite != "all")
        throw ValidationError("suite must be densities, signs, oracles or all; got '" + suite + "'");
    SuiteReport r;
    const bool all = suite == "all";
    if (all || suite == "densities") {
        r.checks.push_back(check_seq_iso_independence(o));
        r.checks.push_back(check_seq_iso_exact(o));
        r.checks.push_back(check_scaling(o));
        r.checks.push_back(check_direct_sum(o));
        r.checks.push_back(check_phi_routes(o));
    }
    if (all || suite == "signs") r.checks.push_back(check_signs(o));
    if (all || suite == "oracles") {
        r.checks.push_back(check_weyl_orders(o, {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                                 {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}));
        r.checks.push_back(check_pfaffians(o));
        r.checks.push_back(check_admissible_counts(o));
        r.checks.push_back(check_typeA(o));
        r.checks.push_back(check_a1_closed_form(o));
        r.checks.push_back(check_weyl_sum_invariance(o, 'G', 2, 7));
        r.checks.push_back(check_pairing_consistency(o));
    }
    return r;
}

}  // namespace bks::verify
