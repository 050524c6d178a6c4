#include "bks/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace bks {

namespace {

using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_gcd(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(wide n, wide d) {
    if (d == 0) throw std::domain_error("rational division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > kMax || n < kMin || d > kMax) throw OverflowError("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string big_str(const BigRational& r) {
    const auto n = boost::multiprecision::numerator(r);
    const auto d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    return from_wide(den_, num_);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError("rational overflow");
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s;
        if (__builtin_add_overflow(num_, o.num_, &s)) throw OverflowError("rational overflow");
        num_ = s;
        return *this;
    }
    *this = from_wide(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t p;
        if (__builtin_mul_overflow(num_, o.num_, &p)) throw OverflowError("rational overflow");
        num_ = p;
        return *this;
    }
    *this = from_wide(wide(num_) * o.num_, wide(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    *this = from_wide(wide(num_) * o.den_, wide(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(Rational base, unsigned exponent) {
    Rational result(1);
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent != 0) base *= base;
    }
    return result;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

namespace {

// Row-reduces m in place; returns the rank and the determinant factor
// accumulated from pivots (meaningful only for square input).
std::size_t eliminate(RationalMatrix& m, Rational& det) {
    det = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
            det = -det;
        }
        const Rational p = m(rank, col);
        det *= p;
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational f = m(r, col) / p;
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    RationalMatrix m = *this;
    Rational det;
    std::size_t rank = eliminate(m, det);
    return rank == rows_ ? det : Rational(0);
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    Rational det;
    return eliminate(m, det);
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(pivot, c), aug(col, c));
        const Rational p = aug(col, col);
        for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug(r, col).is_zero()) continue;
            const Rational f = aug(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
        }
    }
    return aug.col_block(n, n);
}

RationalMatrix RationalMatrix::col_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("column block out of range");
    RationalMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ && a.cols_ != 0 && b.cols_ != 0)
        throw std::invalid_argument("hcat row mismatch");
    const std::size_t rows = a.cols_ != 0 ? a.rows_ : b.rows_;
    RationalMatrix out(rows, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
    }
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

std::string to_string(const RationalVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace bks
