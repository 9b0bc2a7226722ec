#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/blowup.hpp"
#include "puiseux/field.hpp"
#include "puiseux/lattice.hpp"

namespace puiseux {

/// Total-degree bound T below which a truncated series is exact: every term
/// of degree < T is stored and correct, unknown terms all have degree >= T.
/// `exact` means nothing is unknown; `none` means no total-degree guarantee
/// (e.g. after a blowing-down that makes degrees unbounded below).
class Precision {
public:
    static Precision exact() { return Precision(Kind::exact, 0); }
    static Precision none() { return Precision(Kind::none, 0); }
    static Precision at(Rational t) { return Precision(Kind::bounded, std::move(t)); }

    bool is_exact() const noexcept { return kind_ == Kind::exact; }
    bool is_none() const noexcept { return kind_ == Kind::none; }
    bool is_bounded() const noexcept { return kind_ == Kind::bounded; }
    /// Only meaningful when bounded.
    const Rational& value() const { return value_; }

    /// True iff a term of total degree `deg` is covered (deg < T).
    bool covers(const Rational& deg) const;

    friend Precision min(const Precision& a, const Precision& b);
    /// Shift a bound by a total degree; exact and none are absorbing.
    friend Precision operator+(const Precision& a, const Rational& shift);
    friend Precision operator-(const Precision& a, const Rational& shift) { return a + Rational(-shift); }
    friend bool operator==(const Precision&, const Precision&) = default;

    std::string to_string() const;

private:
    enum class Kind { none, bounded, exact };
    Precision(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
};

using TermMap = std::map<ExponentVector, FieldElement>;

/// Truncated multivariate Puiseux series: a finite sparse map from exponent
/// vectors to nonzero field elements, a common denominator d of all
/// exponents, and a total-degree precision. Terms are kept in lex order.
class Series {
public:
    Series() = default;
    /// Zero series in n variables (exact).
    explicit Series(std::size_t n) : n_(n) {}
    /// Drops zero coefficients and terms not covered by `prec`.
    Series(std::size_t n, TermMap terms, Precision prec = Precision::exact(), Integer d = 1);

    static Series constant(std::size_t n, const FieldElement& c);
    static Series monomial(const ExponentVector& a, const FieldElement& c = 1);
    /// The variable x_i (0-based) in n variables.
    static Series variable(std::size_t n, std::size_t i);

    std::size_t dimension() const noexcept { return n_; }
    const Integer& denominator() const noexcept { return d_; }
    const Precision& precision() const noexcept { return prec_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// No stored terms (possibly with unknown terms beyond the precision).
    bool empty() const noexcept { return terms_.empty(); }
    /// Known to be exactly zero.
    bool is_exact_zero() const noexcept { return terms_.empty() && prec_.is_exact(); }
    bool is_exact() const noexcept { return prec_.is_exact(); }

    FieldElement coefficient(const ExponentVector& a) const;
    FieldElement constant_term() const;
    /// Minimal total degree of the stored terms.
    std::optional<Rational> min_degree() const;
    /// Minimal first-coordinate exponent of the stored terms (the x1-order).
    std::optional<Rational> first_order() const;
    /// All stored exponents are coordinatewise >= 0.
    bool has_nonnegative_support() const;
    /// Nonzero constant term with nonnegative support.
    bool is_unit() const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const FieldElement& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) { return a *= FieldElement(-1); }
    friend Series operator*(Series a, const FieldElement& c) { return a *= c; }
    friend Series operator*(const Series& a, const Series& b);

    Series pow(unsigned k) const;
    /// Multiply by x^a; the precision moves with the degree of a.
    Series shift(const ExponentVector& a) const;

    /// Keep terms of degree < t; precision becomes min(precision, t).
    Series truncated(const Rational& t) const;
    Series with_precision(const Precision& p) const;

    /// Terms whose first exponent equals `u`, with that coordinate removed
    /// (n - 1 variables). For u = 0 this is the restriction x1 = 0.
    Series first_slice(const Rational& u) const;
    /// Inverse of first_slice(0): embed an (n-1)-variable series with x1-exponent 0.
    Series embed_first() const;

    /// Exact equality of terms, dimension, denominator and precision.
    friend bool operator==(const Series&, const Series&) = default;

    /// Terms agree below t (both must cover degree < t).
    bool agrees_below(const Series& other, const Rational& t) const;

    std::string to_string() const;

private:
    void normalize();

    std::size_t n_ = 0;
    Integer d_ = 1;
    TermMap terms_;
    Precision prec_ = Precision::exact();
};

void require_same_dimension(const Series& a, const Series& b);

/// g with f * g = 1 up to the requested precision. f must be a unit of
/// k[[x^(1/d)]]: nonnegative support and nonzero constant term.
Series invert_unit(const Series& f, const Rational& precision);

/// Exponent a -> a * M for every term. For blowing-ups the precision is kept;
/// otherwise it becomes the least image degree of the cut-off frontier
/// {a >= 0, |a| = T}, or none when some row sum of M is <= 0.
Series apply_map(const Series& f, const MonomialMap& m);

/// The support E(f).
std::vector<ExponentVector> newton_diagram(const Series& f);

/// Polynomial in the distinguished unknown z with series coefficients;
/// coefficients()[i] multiplies z^i.
class ZPolynomial {
public:
    ZPolynomial() = default;
    explicit ZPolynomial(std::vector<Series> coeffs);

    std::size_t dimension() const noexcept { return n_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Series>& coefficients() const noexcept { return coeffs_; }
    const Series& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const Series& leading() const { return coeffs_.back(); }
    bool is_monic() const;
    /// All coefficients have nonnegative support.
    bool has_nonnegative_support() const;
    Integer denominator() const;

    friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

    std::string to_string(const std::string& var = "z") const;

private:
    std::size_t n_ = 0;
    std::vector<Series> coeffs_;
};

ZPolynomial apply_map(const ZPolynomial& p, const MonomialMap& m);

/// sum_i coeff_i * f^i; the residual oracle for root candidates.
Series substitute_root(const ZPolynomial& p, const Series& f);

/// Every support point of f lies in the simplicial cone of the blowing-down
/// certificate (exact membership).
bool support_in_cone(const Series& f, const MonomialMap& cert);

} // namespace puiseux
