#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "puiseux/blowup.hpp"
#include "puiseux/newton.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

/// Element of the cone ring: a series whose support lies in the simplicial
/// cone of a blowing-down certificate.
class ConeRingElement {
public:
    /// Throws Error unless every support point lies in the cone.
    ConeRingElement(Series series, MonomialMap cone);

    const Series& series() const noexcept { return series_; }
    const MonomialMap& cone() const noexcept { return cone_; }
    const Integer& denominator() const noexcept { return series_.denominator(); }

private:
    Series series_;
    MonomialMap cone_;
};

/// Certificate for a series with lexicographically positive (or zero) support:
/// its support points are brought to the first quadrant and the inverse map is
/// the cone. Throws Error on a lex-negative support point.
ConeRingElement enclose(const Series& f, std::int64_t cap = default_iteration_cap);

/// Exponent twist c in (Z/d)^n: x^a -> zeta^<a d, c> x^a.
struct ConjugateCharacter {
    std::vector<std::int64_t> c;
};

/// Series over Q(zeta_d) kept symbolically: each exponent maps to a
/// polynomial in zeta, stored as power -> coefficient with powers in 0..d-1.
struct ConjugateSeries {
    std::size_t n = 0;
    Integer d = 1;
    std::map<ExponentVector, std::map<std::int64_t, FieldElement>> terms;

    /// The series over Q when every zeta power folds to a rational: power 0,
    /// or zeta = -1 for d = 2.
    std::optional<Series> folded() const;
};

ConjugateSeries conjugate(const Series& f, const ConjugateCharacter& chi);

/// Size of the conjugate orbit of f: d^n over the number of characters fixing f.
std::int64_t orbit_size(const Series& f);

/// Product of (z - sigma(f)) over the distinct conjugates, computed from the
/// power sums p_k = N * (integral-exponent part of f^k) and Newton's
/// identities. f must be exact with finite support.
ZPolynomial minimal_polynomial(const Series& f);

struct IntegralityReport {
    bool integral = true;
    /// First offending exponent (coefficients by increasing z-degree, terms in
    /// lex order) and the z-degree of its coefficient.
    std::optional<ExponentVector> witness;
    int degree = -1;
};

/// Coefficients all lie in k[[x]]: integral, nonnegative exponents.
/// Requires a monic polynomial.
IntegralityReport is_integral_over_formal(const ZPolynomial& minpoly);

struct ConeSolveResult {
    SolveResult result;
    /// Blowing-down enclosing every coefficient cone.
    MonomialMap merged;
    /// The pulled-back equation with nonnegative support that was solved.
    ZPolynomial pulled_back;
};

/// Merge the coefficient cones by common_enclosing, pull P back to the first
/// quadrant, solve, and push certificates forward. Root certificates refer to
/// the original coordinates. The polynomial must be monic.
ConeSolveResult solve_over_cone_ring(const std::vector<ConeRingElement>& coefficients, const SolveConfig& cfg = {});

/// Monic equation with a nonzero z^0 coefficient: solved directly when the
/// support is nonnegative (merged is then the identity), otherwise every
/// coefficient is enclosed and solve_over_cone_ring takes over.
ConeSolveResult solve_equation(const ZPolynomial& p, const SolveConfig& cfg = {});

} // namespace puiseux
