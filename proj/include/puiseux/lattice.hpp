#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Exponent of a monomial x^a, a point of (1/d)Z^n. The common denominator d
/// lives on the containing series, so coordinates are plain rationals here.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : coords_(n) {}
    explicit ExponentVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    ExponentVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    static ExponentVector zero(std::size_t n) { return ExponentVector(n); }
    static ExponentVector unit(std::size_t n, std::size_t i);
    static ExponentVector from_ints(std::initializer_list<long> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    /// Sum of the coordinates.
    Rational degree() const;
    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_integral() const;
    /// Least common multiple of the coordinate denominators.
    Integer denominator() const;

    ExponentVector& operator+=(const ExponentVector& other);
    ExponentVector& operator-=(const ExponentVector& other);
    ExponentVector& operator*=(const Rational& s);

    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
    friend ExponentVector operator*(ExponentVector a, const Rational& s) { return a *= s; }
    friend ExponentVector operator-(ExponentVector a) { return a *= Rational(-1); }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.coords_ == b.coords_;
    }
    /// Lexicographic order; the key order of every term map in the library.
    friend bool operator<(const ExponentVector& a, const ExponentVector& b);

    /// Drop the first coordinate.
    ExponentVector tail() const;
    /// Prepend a first coordinate.
    ExponentVector with_head(const Rational& head) const;

    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

enum class Ordering { less, equal, greater };
enum class PartialOrdering { less_equal, equal, greater_equal, incomparable };

using LatticeSet = std::vector<ExponentVector>;

/// Lexicographic comparison; the first differing coordinate decides.
Ordering lex_compare(const ExponentVector& a, const ExponentVector& b);

/// Product order: a << b iff a_i <= b_i for every i.
PartialOrdering product_compare(const ExponentVector& a, const ExponentVector& b);

/// True iff a << b in the product order.
bool product_leq(const ExponentVector& a, const ExponentVector& b);

/// Sign of the first nonzero coordinate, 0 for the zero vector.
int first_nonzero_sign(const ExponentVector& a);

inline bool is_lex_positive(const ExponentVector& a) { return first_nonzero_sign(a) > 0; }

void require_same_dimension(const ExponentVector& a, const ExponentVector& b);

} // namespace puiseux
