#include "puiseux/closure.hpp"

#include <algorithm>

#include "puiseux/cone.hpp"

namespace puiseux {

namespace {

std::int64_t pos_mod(const Integer& v, std::int64_t d) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d));
    return r.get_si();
}

/// <a d, c> mod d for an exponent with a * d integral.
std::int64_t twist(const ExponentVector& a, const std::vector<std::int64_t>& c, std::int64_t d) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational ad = a[i] * Rational(d);
        if (ad.get_den() != 1) {
            throw Error("exponent " + a.to_string() + " is not in the lattice of denominator " + std::to_string(d));
        }
        s += ad.get_num() * c[i];
    }
    return pos_mod(s, d);
}

std::int64_t small_denominator(const Series& f) {
    const std::int64_t d = to_int64(f.denominator());
    if (d > 64) {
        throw Error("denominator " + std::to_string(d) + " too large for conjugate enumeration");
    }
    return d;
}

} // namespace

ConeRingElement::ConeRingElement(Series series, MonomialMap cone) : series_(std::move(series)), cone_(std::move(cone)) {
    if (cone_.dimension() != series_.dimension()) {
        throw DimensionMismatch("cone of dimension " + std::to_string(cone_.dimension()) + " for a series in " +
                                std::to_string(series_.dimension()) + " variables");
    }
    if (!support_in_cone(series_, cone_)) {
        throw Error("support of " + series_.to_string() + " leaves the cone " + cone_.to_string());
    }
}

ConeRingElement enclose(const Series& f, std::int64_t cap) {
    std::vector<ExponentVector> support;
    for (const auto& [a, c] : f.terms()) {
        if (first_nonzero_sign(a) < 0) {
            throw Error("support point " + a.to_string() + " is lexicographically negative");
        }
        support.push_back(a);
    }
    auto red = reduce_to_first_quadrant(support, f.dimension(), cap);
    return ConeRingElement(f, inverse(red.map));
}

std::optional<Series> ConjugateSeries::folded() const {
    TermMap out;
    for (const auto& [a, poly] : terms) {
        FieldElement v;
        for (const auto& [k, c] : poly) {
            if (k == 0) {
                v += c;
            } else if (d == 2 && k == 1) {
                v -= c;
            } else {
                return std::nullopt;
            }
        }
        out.emplace(a, v);
    }
    return Series(n, std::move(out), Precision::exact(), d);
}

ConjugateSeries conjugate(const Series& f, const ConjugateCharacter& chi) {
    if (chi.c.size() != f.dimension()) {
        throw DimensionMismatch("character of length " + std::to_string(chi.c.size()) + " for " +
                                std::to_string(f.dimension()) + " variables");
    }
    const std::int64_t d = to_int64(f.denominator());
    ConjugateSeries out{f.dimension(), f.denominator(), {}};
    for (const auto& [a, c] : f.terms()) {
        out.terms[a][twist(a, chi.c, d)] += c;
    }
    return out;
}

std::int64_t orbit_size(const Series& f) {
    const std::int64_t d = small_denominator(f);
    const std::size_t n = f.dimension();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= d;
        if (total > 1'000'000) {
            throw Error("conjugate group too large to enumerate");
        }
    }
    std::int64_t fixing = 0;
    std::vector<std::int64_t> c(n, 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t v = idx;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = v % d;
            v /= d;
        }
        bool fixes = std::all_of(f.terms().begin(), f.terms().end(),
                                 [&](const auto& t) { return twist(t.first, c, d) == 0; });
        fixing += fixes ? 1 : 0;
    }
    return total / fixing;
}

ZPolynomial minimal_polynomial(const Series& f) {
    if (!f.is_exact()) {
        throw Error("minimal_polynomial needs an exact finite series");
    }
    const std::size_t n = f.dimension();
    const std::int64_t big_n = orbit_size(f);
    const FieldElement orbit(static_cast<long>(big_n));

    // p_k = N * (integral-exponent part of f^k)
    std::vector<Series> p(static_cast<std::size_t>(big_n) + 1, Series(n));
    Series power = Series::constant(n, 1);
    for (std::int64_t k = 1; k <= big_n; ++k) {
        power = power * f;
        TermMap t;
        for (const auto& [a, c] : power.terms()) {
            if (a.is_integral()) {
                t.emplace(a, c * orbit);
            }
        }
        p[static_cast<std::size_t>(k)] = Series(n, std::move(t));
    }
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    std::vector<Series> e(static_cast<std::size_t>(big_n) + 1, Series(n));
    e[0] = Series::constant(n, 1);
    for (std::int64_t k = 1; k <= big_n; ++k) {
        Series acc(n);
        for (std::int64_t i = 1; i <= k; ++i) {
            Series term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = acc * invert(FieldElement(static_cast<long>(k)));
    }
    // prod (z - r) = sum_k (-1)^k e_k z^(N-k)
    std::vector<Series> coeffs(static_cast<std::size_t>(big_n) + 1, Series(n));
    for (std::int64_t k = 0; k <= big_n; ++k) {
        Series c = e[static_cast<std::size_t>(k)];
        for (const auto& [a, v] : c.terms()) {
            if (!a.is_integral()) {
                throw Error("minimal polynomial coefficient kept the fractional exponent " + a.to_string());
            }
        }
        coeffs[static_cast<std::size_t>(big_n - k)] = (k % 2 == 1) ? -c : c;
    }
    return ZPolynomial(std::move(coeffs));
}

IntegralityReport is_integral_over_formal(const ZPolynomial& minpoly) {
    if (!minpoly.is_monic()) {
        throw Error("integrality test needs a monic polynomial");
    }
    IntegralityReport out;
    for (int b = 0; b <= minpoly.degree(); ++b) {
        for (const auto& [a, c] : minpoly.coefficient(b).terms()) {
            if (!a.is_integral() || !a.is_nonnegative()) {
                out.integral = false;
                out.witness = a;
                out.degree = b;
                return out;
            }
        }
    }
    return out;
}

ConeSolveResult solve_over_cone_ring(const std::vector<ConeRingElement>& coefficients, const SolveConfig& cfg) {
    if (coefficients.size() < 2) {
        throw Error("polynomial must have degree >= 1 in z");
    }
    MonomialMap merged = coefficients.front().cone();
    for (const auto& c : coefficients) {
        if (c.cone() != merged && !std::all_of(c.series().terms().begin(), c.series().terms().end(),
                                                [&](const auto& t) { return contains(merged, t.first); })) {
            merged = common_enclosing(merged, c.cone(), cfg.cap);
        }
    }
    const MonomialMap pull = inverse(merged);
    std::vector<Series> pulled;
    for (const auto& c : coefficients) {
        pulled.push_back(apply_map(c.series(), pull));
    }
    ZPolynomial p(std::move(pulled));
    ConeSolveResult out{solve(p, cfg), merged, p};
    for (auto& r : out.result.roots) {
        r.certificate = compose(r.certificate, merged);
    }
    return out;
}

ConeSolveResult solve_equation(const ZPolynomial& p, const SolveConfig& cfg) {
    if (!p.is_monic()) {
        throw Error("equation is not monic in z");
    }
    if (p.coefficient(0).is_exact_zero()) {
        throw Error("the z^0 coefficient is zero");
    }
    if (p.has_nonnegative_support()) {
        return {solve(p, cfg), MonomialMap::identity(p.dimension()), p};
    }
    std::vector<ConeRingElement> coeffs;
    for (const auto& c : p.coefficients()) {
        coeffs.push_back(enclose(c, cfg.cap));
    }
    return solve_over_cone_ring(coeffs, cfg);
}

} // namespace puiseux
