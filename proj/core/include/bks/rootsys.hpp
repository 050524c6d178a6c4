#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bks/rational.hpp"

namespace bks {

/// Coordinates of a vector of t* (equivalently of t, through the normalized
/// inner product) in the basis of simple roots.
using Coords = RationalVector;

/// Finite root system of a compact simple simply-connected group, normalized
/// so that long roots have squared length 2. Immutable after construction.
struct RootSystem {
    char type_letter = 'A';
    int rank = 0;

    /// gram(i, j) = <alpha_i, alpha_j>.
    RationalMatrix gram;
    /// cartan(i, j) = 2 <alpha_i, alpha_j> / <alpha_i, alpha_i>.
    RationalMatrix cartan;
    /// Positive roots ordered by height, then lexicographically.
    std::vector<Coords> positive_roots;
    Coords highest_root;
    Coords rho;
    /// Columns are the fundamental weights in simple-root coordinates.
    RationalMatrix weight_to_root;
    /// Row i is <alpha_0, omega_i>; a nonnegative integer for every i.
    std::vector<Rational> highest_root_comarks;

    /// |Phi_+|.
    int m() const { return static_cast<int>(positive_roots.size()); }
    /// dim G = r + 2m.
    int n() const { return rank + 2 * m(); }

    std::string name() const { return type_letter + std::to_string(rank); }

    /// Whether v is in Phi_+ or -Phi_+.
    bool is_root(const Coords& v) const;
    /// Whether v is in Phi_+.
    bool is_positive_root(const Coords& v) const;

    /// Simple root alpha_i as a coordinate vector (0-based index).
    Coords simple_root(int i) const;

    std::unordered_map<std::string, int> root_index;  // key: to_string(coords)
};

/// Valid (letter, rank) pairs: A>=1, B>=2, C>=3, D>=4, E6-8, F4, G2.
bool is_valid_type(char type_letter, int rank);

/// Human-readable list of valid ranges, used in diagnostics.
std::string valid_type_ranges();

/// Standard Cartan matrix (Bourbaki numbering), entries 2<a_i,a_j>/<a_i,a_i>.
RationalMatrix cartan_matrix(char type_letter, int rank);

/// Builds the root system by Cartan matrix -> unscaled Gram matrix -> root
/// string closure -> exact rescale to <alpha_0, alpha_0> = 2.
/// Throws ValidationError on an invalid type/rank.
RootSystem build_root_system(char type_letter, int rank);

/// v^T gram w, exact.
Rational inner_product(const RootSystem& rs, const Coords& v, const Coords& w);

/// 2 <lam, alpha> / <alpha, alpha>. Throws ValidationError if alpha is not a root.
Rational pairing_with_coroot(const RootSystem& rs, const Coords& lam, const Coords& alpha);

/// Fundamental-weight coordinates -> simple-root coordinates.
Coords weight_to_coords(const RootSystem& rs, const std::vector<Rational>& weight_coords);

/// Simple-root coordinates -> fundamental-weight coordinates (coroot pairings).
std::vector<Rational> coords_to_weight(const RootSystem& rs, const Coords& v);

}  // namespace bks
