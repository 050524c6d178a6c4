#include "bks/alcove.hpp"

#include <string>

#include "bks/errors.hpp"

namespace bks {

AlcovePoint classify(const RootSystem& rs, const Coords& beta, int k) {
    if (k < 1) throw ValidationError("level k must be >= 1, got " + std::to_string(k));
    if (beta.size() != static_cast<std::size_t>(rs.rank))
        throw ValidationError("beta has wrong dimension for " + rs.name());

    AlcovePoint p{beta, k, true, true};
    for (int i = 0; i < rs.rank; ++i) {
        const Rational v = inner_product(rs, rs.simple_root(i), beta);
        if (v < Rational(0)) {
            throw ValidationError(to_string(beta) + " is outside the alcove: <alpha_" + std::to_string(i + 1) +
                                  ", beta> = " + v.str() + " < 0");
        }
        if (v.is_zero()) p.is_regular = false;
    }
    // alpha_0 is long with <alpha_0, alpha_0> = 2, so it is its own coroot.
    const Rational top = inner_product(rs, rs.highest_root, beta);
    if (top > Rational(1)) {
        throw ValidationError(to_string(beta) + " is outside the alcove: <alpha_0, beta> = " + top.str() + " > 1");
    }
    if (top == Rational(1)) p.is_regular = false;

    const Coords scaled = Rational(k) * beta;
    for (int i = 0; i < rs.rank; ++i) {
        if (!pairing_with_coroot(rs, scaled, rs.simple_root(i)).is_integer()) {
            p.is_k_integral = false;
            break;
        }
    }
    return p;
}

Coords beta_from_weight(const RootSystem& rs, const std::vector<std::int64_t>& weight, int k) {
    if (k < 1) throw ValidationError("level k must be >= 1");
    std::vector<Rational> c(weight.begin(), weight.end());
    return Rational(1, k) * weight_to_coords(rs, c);
}

std::vector<Rational> level_weight(const RootSystem& rs, const Coords& beta, int k) {
    return coords_to_weight(rs, Rational(k) * beta);
}

std::vector<AlcovePoint> enumerate_admissible(const RootSystem& rs, int k, std::size_t max_count) {
    if (k < 1) throw ValidationError("level k must be >= 1, got " + std::to_string(k));
    const auto r = static_cast<std::size_t>(rs.rank);
    std::vector<AlcovePoint> out;
    std::vector<std::int64_t> c(r, 1);

    // Depth-first over coordinates with the running level <alpha_0, lambda>.
    auto recurse = [&](auto&& self, std::size_t pos, Rational level) -> void {
        if (pos == r) {
            if (level < Rational(k)) {
                if (out.size() >= max_count) {
                    throw ResourceLimitError("admissible set of " + rs.name() + " at level " + std::to_string(k) +
                                                 " exceeds max_count=" + std::to_string(max_count),
                                             out.size());
                }
                const Coords beta = beta_from_weight(rs, c, k);
                out.push_back(classify(rs, beta, k));
            }
            return;
        }
        // Remaining coordinates are >= 1 and contribute at least their comarks.
        Rational rest;
        for (std::size_t j = pos + 1; j < r; ++j) rest += rs.highest_root_comarks[j];
        for (std::int64_t v = 1;; ++v) {
            const Rational lvl = level + Rational(v) * rs.highest_root_comarks[pos];
            if (!(lvl + rest < Rational(k))) break;
            c[pos] = v;
            self(self, pos + 1, lvl);
        }
        c[pos] = 1;
    };
    recurse(recurse, 0, Rational(0));
    return out;
}

}  // namespace bks
