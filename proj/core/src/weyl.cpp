#include "bks/weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "bks/errors.hpp"

namespace bks {

std::string WeylElement::word_string() const {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(word[k]);
    }
    return s;
}

WeylElement identity_element(const RootSystem& rs) {
    return WeylElement{RationalMatrix::identity(static_cast<std::size_t>(rs.rank)), {}};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank) {
        throw ValidationError("simple reflection index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(rs.rank));
    }
    // s_i(alpha_c) = alpha_c - <alpha_c, alpha_i^vee> alpha_i, and the pairing is cartan(i, c).
    WeylElement s = identity_element(rs);
    const auto row = static_cast<std::size_t>(i - 1);
    for (std::size_t c = 0; c < static_cast<std::size_t>(rs.rank); ++c) s.matrix(row, c) -= rs.cartan(row, c);
    s.word = {i};
    return s;
}

namespace {

// m * s_i: column c becomes col_c - cartan(i, c) col_i.
RationalMatrix right_multiply_reflection(const RootSystem& rs, const RationalMatrix& m, std::size_t i) {
    RationalMatrix out = m;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        const Rational& a = rs.cartan(i, c);
        if (a.is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r) out(r, c) -= a * m(r, i);
    }
    return out;
}

bool word_less(const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t max_size) {
    if (max_size < 1) throw ValidationError("max_size must be >= 1");
    const auto n = static_cast<std::size_t>(rs.rank);

    std::vector<WeylElement> all;
    std::unordered_set<RationalMatrix> seen;
    all.push_back(identity_element(rs));
    seen.insert(all.back().matrix);

    // Each level is extended in lexicographic word order, appending generators in
    // increasing order, so the first word found for an element is its smallest.
    std::size_t level_begin = 0;
    while (level_begin < all.size()) {
        const std::size_t level_end = all.size();
        for (std::size_t idx = level_begin; idx < level_end; ++idx) {
            for (std::size_t i = 0; i < n; ++i) {
                RationalMatrix next = right_multiply_reflection(rs, all[idx].matrix, i);
                if (seen.contains(next)) continue;
                if (all.size() >= max_size) {
                    throw ResourceLimitError("Weyl group of " + rs.name() + " exceeds max_size=" +
                                                 std::to_string(max_size) + " (found " +
                                                 std::to_string(all.size()) + " so far); raise the cap",
                                             all.size());
                }
                seen.insert(next);
                std::vector<int> word = all[idx].word;
                word.push_back(static_cast<int>(i) + 1);
                all.push_back(WeylElement{std::move(next), std::move(word)});
            }
        }
        level_begin = level_end;
    }
    std::stable_sort(all.begin(), all.end(), word_less);
    return all;
}

Coords act(const WeylElement& w, const Coords& v) {
    if (v.size() != w.matrix.cols()) throw ValidationError("Weyl action dimension mismatch");
    return w.matrix * v;
}

int inversion_count(const RootSystem& rs, const RationalMatrix& w) {
    int count = 0;
    for (const auto& alpha : rs.positive_roots) {
        if (!rs.is_positive_root(w * alpha)) ++count;
    }
    return count;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement out{a.matrix * b.matrix, a.word};
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    return out;
}

WeylElement inverse(const WeylElement& w) {
    return WeylElement{w.matrix.inverse(), std::vector<int>(w.word.rbegin(), w.word.rend())};
}

}  // namespace bks
