#pragma once

#include <functional>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Element of the coefficient field. The shipped field is Q; elements are
/// always canonical (lowest terms, positive denominator).
using FieldElement = Rational;

FieldElement invert(const FieldElement& a);

/// Dense univariate polynomial, constant term first, no trailing zeros.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<FieldElement> coeffs);

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
    const FieldElement& leading() const { return coeffs_.back(); }

    FieldElement operator()(const FieldElement& x) const;

    /// Quotient by (x - r); requires r to be a root.
    UnivariatePoly deflate(const FieldElement& r) const;

    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    std::string to_string(const std::string& var = "a") const;

private:
    std::vector<FieldElement> coeffs_;
};

struct RootWithMultiplicity {
    FieldElement root;
    int multiplicity = 0;

    friend bool operator==(const RootWithMultiplicity&, const RootWithMultiplicity&) = default;
};

/// The polynomial does not split into linear factors over the implemented field.
class Unsplittable : public Error {
public:
    Unsplittable(UnivariatePoly factor, std::vector<RootWithMultiplicity> found);

    const UnivariatePoly& factor() const noexcept { return factor_; }
    const std::vector<RootWithMultiplicity>& found() const noexcept { return found_; }

private:
    UnivariatePoly factor_;
    std::vector<RootWithMultiplicity> found_;
};

struct RationalRootSplit {
    std::vector<RootWithMultiplicity> roots; // ascending
    UnivariatePoly remainder;                // no rational roots; degree 0 when split
};

/// Rational roots by candidate enumeration over the primitive integer
/// polynomial, with repeated deflation.
RationalRootSplit rational_roots(const UnivariatePoly& p);

/// All roots with multiplicities; throws Unsplittable when a factor of degree
/// >= 1 without rational roots remains.
std::vector<RootWithMultiplicity> univariate_roots(const UnivariatePoly& p);

/// Pluggable root oracle used by the Newton solver at the bottom of the
/// recursion on the number of variables.
using RootOracle = std::function<std::vector<RootWithMultiplicity>(const UnivariatePoly&)>;

} // namespace puiseux
