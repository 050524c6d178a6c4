#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bks/rootsys.hpp"

namespace bks {

/// A point beta of the fundamental alcove
///   { xi : <alpha_i, xi> >= 0 for simple alpha_i, <alpha_0, xi> <= 1 },
/// which labels the conjugacy class of exp(beta).
struct AlcovePoint {
    Coords beta;
    int k = 1;
    bool is_regular = false;
    bool is_k_integral = false;
};

/// Flags beta exactly. Throws ValidationError naming the violated inequality
/// when beta lies outside the alcove, or when k < 1.
AlcovePoint classify(const RootSystem& rs, const Coords& beta, int k);

/// Regular and 1/k-integral, i.e. usable as a class in the pairing.
inline bool is_admissible(const AlcovePoint& p) { return p.is_regular && p.is_k_integral; }

/// All interior 1/k-integral alcove points beta = lambda / k, where lambda has
/// fundamental-weight coordinates c_i >= 1 and <alpha_0, lambda> < k. Ordered
/// lexicographically in c. Throws ResourceLimitError past max_count.
std::vector<AlcovePoint> enumerate_admissible(const RootSystem& rs, int k, std::size_t max_count = 1'000'000);

/// beta = lambda / k for a weight given in fundamental-weight coordinates.
Coords beta_from_weight(const RootSystem& rs, const std::vector<std::int64_t>& weight, int k);

/// Fundamental-weight coordinates of k beta (exact; may be non-integral).
std::vector<Rational> level_weight(const RootSystem& rs, const Coords& beta, int k);

}  // namespace bks
