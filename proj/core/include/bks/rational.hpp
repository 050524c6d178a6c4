#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bks {

/// Raised when an exact computation leaves the int64 range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact rational number p/q with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with q > 0. Intermediate products are formed
/// in 128 bits; a result that does not fit in int64 throws OverflowError rather
/// than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    /// Parses "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q", or "p" when q == 1.
    std::string str() const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inverse() const;

    /// Largest integer <= value.
    std::int64_t floor() const;
    /// value - floor(value), in [0, 1).
    Rational frac() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Arbitrary precision rational for long products (e.g. over all positive roots
/// of E8), where the int64 range is not enough.
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational to_big(const Rational& r) { return BigRational(r.num(), r.den()); }
/// "p/q", or "p" when q == 1, matching Rational::str.
std::string big_str(const BigRational& r);
inline double big_to_double(const BigRational& r) { return r.convert_to<double>(); }

Rational pow(Rational base, unsigned exponent);

using RationalVector = std::vector<Rational>;

/// Dense row-major exact matrix. Small sizes only (rank <= 8, density tests <= 12).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& data() const { return data_; }

    RationalMatrix transpose() const;
    RationalVector operator*(const RationalVector& v) const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    /// Determinant by fraction-exact Gaussian elimination.
    Rational determinant() const;
    /// Throws std::domain_error when singular.
    RationalMatrix inverse() const;
    std::size_t rank() const;

    /// Columns [first, first + count).
    RationalMatrix col_block(std::size_t first, std::size_t count) const;
    /// Horizontal concatenation.
    static RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact dot product a . b.
Rational dot(const RationalVector& a, const RationalVector& b);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);

std::string to_string(const RationalVector& v);

}  // namespace bks

template <>
struct std::hash<bks::Rational> {
    std::size_t operator()(const bks::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
