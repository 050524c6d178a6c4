#include "bks/rootsys.hpp"

#include <algorithm>
#include <deque>

#include "bks/errors.hpp"

namespace bks {

bool RootSystem::is_root(const Coords& v) const { return root_index.contains(to_string(v)); }

bool RootSystem::is_positive_root(const Coords& v) const {
    auto it = root_index.find(to_string(v));
    return it != root_index.end() && it->second >= 0;
}

Coords RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank) throw ValidationError("simple root index out of range");
    Coords e(rank);
    e[i] = 1;
    return e;
}

bool is_valid_type(char t, int r) {
    switch (t) {
        case 'A': return r >= 1;
        case 'B': return r >= 2;
        case 'C': return r >= 3;
        case 'D': return r >= 4;
        case 'E': return r >= 6 && r <= 8;
        case 'F': return r == 4;
        case 'G': return r == 2;
        default: return false;
    }
}

std::string valid_type_ranges() {
    return "valid types: A (rank >= 1), B (rank >= 2), C (rank >= 3), D (rank >= 4), "
           "E (rank 6, 7, 8), F (rank 4), G (rank 2)";
}

RationalMatrix cartan_matrix(char t, int r) {
    if (!is_valid_type(t, r)) {
        throw ValidationError("invalid simple type " + std::string(1, t) + std::to_string(r) + "; " +
                              valid_type_ranges());
    }
    const auto n = static_cast<std::size_t>(r);
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
    auto bond = [&](int i, int j) {  // 1-based simple bond
        a(i - 1, j - 1) = -1;
        a(j - 1, i - 1) = -1;
    };
    switch (t) {
        case 'A':
            for (int i = 1; i < r; ++i) bond(i, i + 1);
            break;
        case 'B':
            for (int i = 1; i < r; ++i) bond(i, i + 1);
            a(r - 1, r - 2) = -2;  // alpha_r short
            break;
        case 'C':
            for (int i = 1; i < r; ++i) bond(i, i + 1);
            a(r - 2, r - 1) = -2;  // alpha_r long
            break;
        case 'D':
            for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
            bond(r - 2, r);
            break;
        case 'E':
            bond(1, 3);
            bond(2, 4);
            for (int i = 3; i < r; ++i) bond(i, i + 1);
            break;
        case 'F':
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
            a(2, 1) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            break;
        case 'G':
            bond(1, 2);
            a(0, 1) = -3;  // alpha_1 short
            break;
    }
    return a;
}

namespace {

// Relative squared lengths from a connected Cartan matrix:
// a_ij / a_ji = <a_j,a_j> / <a_i,a_i>.
std::vector<Rational> relative_lengths(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> len(n);
    std::vector<bool> seen(n, false);
    len[0] = 1;
    seen[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[j] || a(i, j).is_zero()) continue;
            len[j] = len[i] * a(i, j) / a(j, i);
            seen[j] = true;
            queue.push_back(j);
        }
    }
    return len;
}

int height(const Coords& v) {
    Rational h;
    for (const auto& c : v) h += c;
    return static_cast<int>(h.num());
}

}  // namespace

RootSystem build_root_system(char t, int r) {
    RootSystem rs;
    rs.type_letter = t;
    rs.rank = r;
    rs.cartan = cartan_matrix(t, r);
    const auto n = static_cast<std::size_t>(r);

    // Gram matrix up to scale: <a_i, a_j> = a_ij <a_i,a_i> / 2.
    const auto len = relative_lengths(rs.cartan);
    RationalMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = rs.cartan(i, j) * len[i] / 2;

    auto coroot_pairing = [&](const Coords& v, std::size_t i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j) s += v[j] * gram(j, i);
        return 2 * s / gram(i, i);
    };

    // Root string closure: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0,
    // where p is the length of the alpha_i-string below beta.
    std::vector<Coords> roots;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        Coords e(n);
        e[i] = 1;
        index.emplace(to_string(e), roots.size());
        roots.push_back(e);
    }
    const std::size_t cap = 10 * n * n;
    for (std::size_t pos = 0; pos < roots.size(); ++pos) {
        if (pos >= cap) throw std::logic_error("root closure exceeded 10 r^2 iterations");
        const Coords beta = roots[pos];
        for (std::size_t i = 0; i < n; ++i) {
            int p = 0;
            Coords down = beta;
            while (true) {
                down[i] -= 1;
                if (!index.contains(to_string(down))) break;
                ++p;
            }
            const Rational q = Rational(p) - coroot_pairing(beta, i);
            if (q > Rational(0)) {
                Coords up = beta;
                up[i] += 1;
                if (!index.contains(to_string(up))) {
                    index.emplace(to_string(up), roots.size());
                    roots.push_back(up);
                }
            }
        }
    }

    std::stable_sort(roots.begin(), roots.end(), [](const Coords& x, const Coords& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    const Coords top = roots.back();

    // Exact normalization <alpha_0, alpha_0> = 2.
    Rational top_norm;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) top_norm += top[i] * gram(i, j) * top[j];
    const Rational scale = Rational(2) / top_norm;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) *= scale;

    rs.gram = std::move(gram);
    rs.positive_roots = std::move(roots);
    rs.highest_root = top;

    Coords twice_rho(n);
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        const auto& a = rs.positive_roots[k];
        twice_rho = twice_rho + a;
        rs.root_index.emplace(to_string(a), static_cast<int>(k));
        rs.root_index.emplace(to_string(Rational(-1) * a), -static_cast<int>(k) - 1);
    }
    rs.rho = Rational(1, 2) * twice_rho;

    // omega = gram^{-1} D c with D = diag(<a_j,a_j>/2).
    RationalMatrix d(n, n);
    for (std::size_t j = 0; j < n; ++j) d(j, j) = rs.gram(j, j) / 2;
    rs.weight_to_root = rs.gram.inverse() * d;

    rs.highest_root_comarks.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Coords omega(n);
        for (std::size_t j = 0; j < n; ++j) omega[j] = rs.weight_to_root(j, i);
        rs.highest_root_comarks[i] = inner_product(rs, top, omega);
    }
    return rs;
}

Rational inner_product(const RootSystem& rs, const Coords& v, const Coords& w) {
    const auto n = static_cast<std::size_t>(rs.rank);
    if (v.size() != n || w.size() != n) {
        throw ValidationError("coordinate vector has wrong dimension for " + rs.name());
    }
    Rational acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        Rational row;
        for (std::size_t j = 0; j < n; ++j)
            if (!w[j].is_zero()) row += rs.gram(i, j) * w[j];
        acc += v[i] * row;
    }
    return acc;
}

Rational pairing_with_coroot(const RootSystem& rs, const Coords& lam, const Coords& alpha) {
    if (!rs.is_root(alpha)) throw ValidationError(to_string(alpha) + " is not a root of " + rs.name());
    return 2 * inner_product(rs, lam, alpha) / inner_product(rs, alpha, alpha);
}

Coords weight_to_coords(const RootSystem& rs, const std::vector<Rational>& weight_coords) {
    if (weight_coords.size() != static_cast<std::size_t>(rs.rank))
        throw ValidationError("weight has wrong dimension for " + rs.name());
    return rs.weight_to_root * weight_coords;
}

std::vector<Rational> coords_to_weight(const RootSystem& rs, const Coords& v) {
    std::vector<Rational> c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c[i] = pairing_with_coroot(rs, v, rs.simple_root(i));
    return c;
}

}  // namespace bks
