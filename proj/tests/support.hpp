#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "puiseux/blowup.hpp"
#include "puiseux/lattice.hpp"
#include "puiseux/series.hpp"

namespace puiseux::check {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline MonomialMap rows(Matrix m) {
    return MonomialMap(std::move(m));
}

/// Schoolbook integer product, independent of MonomialMap's own arithmetic.
inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ExponentVector random_integer_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    ExponentVector a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = uniform(rng, lo, hi);
    }
    return a;
}

/// Product of `len` random elementary maps E_ij(sign) with i < j.
inline MonomialMap random_word(std::mt19937_64& rng, std::size_t n, int len, int sign) {
    MonomialMap m = MonomialMap::identity(n);
    for (int k = 0; k < len; ++k) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
        const auto j = static_cast<std::size_t>(uniform(rng, static_cast<int>(i) + 1, static_cast<int>(n) - 1));
        m = compose(m, MonomialMap::elementary(n, i, j, sign));
    }
    return m;
}

/// Unit upper-triangular matrix with small arbitrary-sign entries.
inline MonomialMap random_unipotent(std::mt19937_64& rng, std::size_t n, int bound) {
    Matrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = uniform(rng, -bound, bound);
        }
    }
    return MonomialMap(std::move(m));
}

/// Finite exact series with exponents k/d, k in [lo, hi], small coefficients.
inline Series random_series(std::mt19937_64& rng, std::size_t n, int d, int terms, int lo, int hi) {
    static const int nums[] = {1, -1, 2, -2, 1, -3};
    static const int dens[] = {1, 1, 1, 3, 2, 2};
    TermMap t;
    for (int k = 0; k < terms; ++k) {
        ExponentVector a(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = Rational(uniform(rng, lo, hi), d);
            a[i].canonicalize();
        }
        const int c = uniform(rng, 0, 5);
        t[a] += make_rational(nums[c], dens[c]);
    }
    return Series(n, std::move(t));
}

} // namespace puiseux::check

namespace puiseux {

// gtest value printers.
inline void PrintTo(const Series& f, std::ostream* os) {
    *os << f.to_string() << " [d=" << f.denominator().get_str() << "]";
}

inline void PrintTo(const MonomialMap& m, std::ostream* os) {
    *os << m.to_string();
}

inline void PrintTo(const ExponentVector& a, std::ostream* os) {
    *os << a.to_string();
}

} // namespace puiseux
