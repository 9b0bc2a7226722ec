#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/blowup.hpp"
#include "puiseux/field.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

/// A characteristic root was found repeated where the input polynomial itself
/// has a multiple root: two branches agree exactly.
class MultipleRoot : public Error {
public:
    using Error::Error;
};

/// The residual of an emitted root stayed below the requested precision even
/// after every working-precision escalation.
class PrecisionFailure : public Error {
public:
    using Error::Error;
};

/// Projection of the monomials of P to (x1-exponent, z-degree).
struct Diagram1 {
    std::set<std::pair<Rational, int>> points;
    int degree = 0;

    /// Least x1-exponent at z-degree b, if any monomial has that z-degree.
    std::optional<Rational> order_at(int b) const;
};

Diagram1 e1_diagram(const ZPolynomial& p);

/// An edge of the lower hull, minimizing L = u + gamma * v, or the vertical
/// axis segment (gamma = 0) used on the first step.
struct AdmissibleSegment {
    bool vertical = false;
    Rational gamma;
    Rational beta;
    /// On-segment z-degrees, ascending.
    std::vector<int> degrees;

    int low() const { return degrees.front(); }
    int high() const { return degrees.back(); }
};

/// All gamma > 0 edges of the lower hull over z-degrees up to the least degree
/// whose x1-order is 0, in decreasing gamma; then the vertical segment when
/// `first_step` and a vertical-axis point other than the leading one exists.
std::vector<AdmissibleSegment> admissible_segments(const Diagram1& dg, bool first_step);

struct Preparation {
    MonomialMap map;
    /// Principalization of the on-segment x1-slices in x2..xn (0-based, lifted).
    std::vector<BlowupStep> principalization;
    /// Exponent of the final phi_12^e ... phi_1n^e.
    std::int64_t e = 0;
    ZPolynomial prepared;
};

/// Order-preserving blowing-ups making every on-segment x1-slice a monomial
/// times a unit, with the slice monomials product-ordered so the highest
/// z-degree one divides the rest. Requires gamma > 0.
Preparation prepare_segment(const ZPolynomial& p, const AdmissibleSegment& s,
                            std::int64_t cap = default_iteration_cap);

struct CharacteristicEquation {
    /// sum over on-segment t of slice_t * alpha^(t - low), in n - 1 variables.
    ZPolynomial raw;
    /// raw divided by the leading slice monomial and its leading constant:
    /// the leading coefficient is a unit with constant term 1.
    ZPolynomial normalized;
};

/// Requires a prepared polynomial for gamma > 0 segments; throws Error when
/// the leading slice monomial does not divide the others.
CharacteristicEquation characteristic_equation(const ZPolynomial& p, const AdmissibleSegment& s);

struct SolveConfig {
    Rational precision = 8;
    int max_steps = 64;
    bool first_vertical = true;
    RootOracle oracle = univariate_roots;
    std::int64_t cap = default_iteration_cap;
    /// Working precision is precision + margin; margins are tried in order
    /// until every residual verifies.
    std::vector<int> margins = {2, 4, 8, 16};
};

enum class StepKind { vertical, segment, exact_root, truncated };

struct StepRecord {
    StepKind kind = StepKind::segment;
    int depth = 0;
    Rational gamma;
    Rational beta;
    std::vector<int> degrees;
    std::vector<BlowupStep> principalization;
    std::int64_t e = 0;
    /// Characteristic root, embedded in n variables (x1-exponent 0).
    Series alpha;
    int multiplicity = 1;
    MonomialMap accumulated;
};

/// A characteristic root in n - 1 variables together with the blowing-ups of
/// x2..xn (0-based over those variables) under which it has nonnegative support.
struct CharacteristicRoot {
    Series alpha;
    MonomialMap map;
    int multiplicity = 1;
};

/// Nonzero roots of C. C's leading coefficient must be a unit. Zero variables
/// delegate to the oracle; otherwise this is the recursion on the variable count.
std::vector<CharacteristicRoot> solve_characteristic(const ZPolynomial& c, const Rational& precision,
                                                     const SolveConfig& cfg);

/// P(x, x1^gamma (alpha + z)) / x1^beta with beta = min over the monomials of
/// u + gamma * v. alpha is a series in x2..xn (n - 1 variables).
ZPolynomial step_substitute(const ZPolynomial& p, const Rational& gamma, const Series& alpha);

struct RegularShape {
    bool regular = false;
    /// The x1-free part of the z coefficient (n - 1 variables) when regular.
    Series beta;
};

/// Literal hypothesis: every z-coefficient except that of z^1 vanishes at
/// x1 = 0, and the z^1 coefficient does not.
RegularShape detect_regular(const ZPolynomial& p);

struct PuiseuxRoot {
    /// Root in prepared coordinates: nonnegative support.
    Series series;
    /// Blowing-down mapping prepared exponents to the original coordinates.
    MonomialMap certificate;
    /// Minimal total degree of the residual; nullopt when it is exactly zero.
    std::optional<Rational> residual_floor;
    std::vector<StepRecord> log;

    /// The accumulated blowing-up composition (inverse of the certificate).
    MonomialMap accumulated() const { return inverse(certificate); }
    /// The root in the original coordinates.
    Series external() const { return apply_map(series, certificate); }
};

/// The unique positive x1-order root of a polynomial of regular shape.
PuiseuxRoot regular_iterate(const ZPolynomial& p, const SolveConfig& cfg);

struct SolveResult {
    std::vector<PuiseuxRoot> roots;
    /// Roots of x1-order 0 left out because the vertical first step was disabled.
    int omitted = 0;
};

/// All roots of a monic P whose coefficients have nonnegative support and
/// nonzero z^0 coefficient.
SolveResult solve(const ZPolynomial& p, const SolveConfig& cfg = {});

/// Minimal total degree of accumulated(P) at the prepared root, nullopt when
/// the residual vanishes exactly.
std::optional<Rational> residual_floor(const ZPolynomial& p, const PuiseuxRoot& root);

/// residual_floor, throwing PrecisionFailure when it is below `precision`.
std::optional<Rational> verify(const ZPolynomial& p, const PuiseuxRoot& root, const Rational& precision);

std::string to_string(StepKind k);

} // namespace puiseux
