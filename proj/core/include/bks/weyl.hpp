#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bks/rational.hpp"
#include "bks/rootsys.hpp"

namespace bks {

/// Element of the Weyl group acting on simple-root coordinates.
///
/// `word` lists 1-based simple reflection indices; the element is
/// s_{word[0]} s_{word[1]} ... s_{word[l-1]}, and the word is reduced.
struct WeylElement {
    RationalMatrix matrix;
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    std::string word_string() const;  // "e" for the identity, else "1,2,1"
};

inline constexpr std::size_t kDefaultMaxWeyl = 1'000'000;

/// s_i, 1 <= i <= rank. Throws ValidationError on a bad index.
WeylElement simple_reflection(const RootSystem& rs, int i);

WeylElement identity_element(const RootSystem& rs);

/// Breadth-first closure over the simple reflections. Every element carries its
/// lexicographically smallest reduced word; the result is sorted by (length, word).
/// Throws ResourceLimitError (with the partial count) once more than max_size
/// elements are found.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t max_size = kDefaultMaxWeyl);

/// w v, exact.
Coords act(const WeylElement& w, const Coords& v);

/// |{alpha in Phi_+ : w alpha in Phi_-}| = |Phi_+ n w^{-1} Phi_-|.
int inversion_count(const RootSystem& rs, const RationalMatrix& w);

/// Product as group elements; the word is the concatenation (not reduced).
WeylElement compose(const WeylElement& a, const WeylElement& b);

/// Matrix inverse; word reversed.
WeylElement inverse(const WeylElement& w);

}  // namespace bks

template <>
struct std::hash<bks::RationalMatrix> {
    std::size_t operator()(const bks::RationalMatrix& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& x : m.data()) h = (h ^ std::hash<bks::Rational>{}(x)) * 1099511628211ull;
        return h;
    }
};
