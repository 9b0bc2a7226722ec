#include "puiseux/series.hpp"

#include <algorithm>

namespace puiseux {

bool Precision::covers(const Rational& deg) const {
    switch (kind_) {
    case Kind::exact:
    case Kind::none:
        return true;
    case Kind::bounded:
        return deg < value_;
    }
    return true;
}

Precision min(const Precision& a, const Precision& b) {
    if (a.is_none() || b.is_none()) {
        return Precision::none();
    }
    if (a.is_exact()) {
        return b;
    }
    if (b.is_exact()) {
        return a;
    }
    return a.value_ <= b.value_ ? a : b;
}

Precision operator+(const Precision& a, const Rational& shift) {
    if (!a.is_bounded()) {
        return a;
    }
    return Precision::at(a.value_ + shift);
}

std::string Precision::to_string() const {
    switch (kind_) {
    case Kind::exact:
        return "exact";
    case Kind::none:
        return "none";
    case Kind::bounded:
        return puiseux::to_string(value_);
    }
    return "";
}

namespace {

/// Extended-real sum where an exact (+inf) operand wins: it marks a product
/// term that is known to vanish.
Precision ext_add(const Precision& a, const Precision& b) {
    if (a.is_exact() || b.is_exact()) {
        return Precision::exact();
    }
    if (a.is_none() || b.is_none()) {
        return Precision::none();
    }
    return Precision::at(a.value() + b.value());
}

/// Lower bound on the total degree of the true value of f.
Precision order_bound(const Series& f) {
    auto lo = f.min_degree();
    if (!lo) {
        return f.precision();
    }
    return min(Precision::at(*lo), f.precision());
}

struct FlatTerm {
    const ExponentVector* exp;
    Rational deg;
    const FieldElement* coef;
};

std::vector<FlatTerm> by_degree(const Series& f) {
    std::vector<FlatTerm> out;
    out.reserve(f.size());
    for (const auto& [a, c] : f.terms()) {
        out.push_back({&a, a.degree(), &c});
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.deg < y.deg; });
    return out;
}

} // namespace

Series::Series(std::size_t n, TermMap terms, Precision prec, Integer d)
    : n_(n), d_(std::move(d)), terms_(std::move(terms)), prec_(std::move(prec)) {
    if (d_ <= 0) {
        throw Error("series denominator must be positive");
    }
    for (const auto& [a, c] : terms_) {
        if (a.size() != n_) {
            throw DimensionMismatch("term " + a.to_string() + " in a series of " + std::to_string(n_) +
                                    " variables");
        }
    }
    normalize();
}

void Series::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0 || !prec_.covers(it->first.degree())) {
            it = terms_.erase(it);
        } else {
            d_ = lcm(d_, it->first.denominator());
            ++it;
        }
    }
}

Series Series::constant(std::size_t n, const FieldElement& c) {
    TermMap t;
    t.emplace(ExponentVector::zero(n), c);
    return Series(n, std::move(t));
}

Series Series::monomial(const ExponentVector& a, const FieldElement& c) {
    TermMap t;
    t.emplace(a, c);
    return Series(a.size(), std::move(t));
}

Series Series::variable(std::size_t n, std::size_t i) {
    return monomial(ExponentVector::unit(n, i));
}

FieldElement Series::coefficient(const ExponentVector& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? FieldElement(0) : it->second;
}

FieldElement Series::constant_term() const {
    return coefficient(ExponentVector::zero(n_));
}

std::optional<Rational> Series::min_degree() const {
    std::optional<Rational> lo;
    for (const auto& [a, c] : terms_) {
        Rational d = a.degree();
        if (!lo || d < *lo) {
            lo = std::move(d);
        }
    }
    return lo;
}

std::optional<Rational> Series::first_order() const {
    if (terms_.empty() || n_ == 0) {
        return std::nullopt;
    }
    // Lex order sorts by the first coordinate first.
    return terms_.begin()->first[0];
}

bool Series::has_nonnegative_support() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_nonnegative(); });
}

bool Series::is_unit() const {
    return has_nonnegative_support() && sgn(constant_term()) != 0;
}

void require_same_dimension(const Series& a, const Series& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("series in " + std::to_string(a.dimension()) + " and " +
                                std::to_string(b.dimension()) + " variables");
    }
}

Series& Series::operator+=(const Series& other) {
    require_same_dimension(*this, other);
    prec_ = min(prec_, other.prec_);
    d_ = lcm(d_, other.d_);
    for (const auto& [a, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
        }
    }
    normalize();
    return *this;
}

Series& Series::operator-=(const Series& other) {
    return *this += -other;
}

Series& Series::operator*=(const FieldElement& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        // Scaling unknown terms by zero still yields zero.
        prec_ = Precision::exact();
        return *this;
    }
    for (auto& [a, v] : terms_) {
        v *= c;
    }
    return *this;
}

Series operator*(const Series& f, const Series& g) {
    require_same_dimension(f, g);
    const std::size_t n = f.dimension();
    Precision prec = min(ext_add(f.precision(), order_bound(g)), ext_add(g.precision(), order_bound(f)));

    auto fs = by_degree(f);
    auto gs = by_degree(g);
    TermMap out;
    for (const auto& x : fs) {
        for (const auto& y : gs) {
            Rational deg = x.deg + y.deg;
            if (!prec.covers(deg)) {
                break; // gs is sorted by degree
            }
            ExponentVector e = *x.exp + *y.exp;
            FieldElement c = *x.coef * *y.coef;
            auto [it, inserted] = out.try_emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
            }
        }
    }
    return Series(n, std::move(out), prec, lcm(f.denominator(), g.denominator()));
}

Series Series::pow(unsigned k) const {
    Series result = constant(n_, 1);
    Series base = *this;
    while (k) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k) {
            base = base * base;
        }
    }
    return result;
}

Series Series::shift(const ExponentVector& a) const {
    if (a.size() != n_) {
        throw DimensionMismatch("shift by " + a.to_string() + " in " + std::to_string(n_) + " variables");
    }
    TermMap out;
    for (const auto& [e, c] : terms_) {
        out.emplace(e + a, c);
    }
    return Series(n_, std::move(out), prec_ + a.degree(), lcm(d_, a.denominator()));
}

Series Series::truncated(const Rational& t) const {
    return with_precision(Precision::at(t));
}

Series Series::with_precision(const Precision& p) const {
    Series out = *this;
    out.prec_ = min(prec_, p);
    out.normalize();
    // Without a guarantee the terms are still cut at p.
    std::erase_if(out.terms_, [&](const auto& t) { return !p.covers(t.first.degree()); });
    return out;
}

Series Series::first_slice(const Rational& u) const {
    if (n_ == 0) {
        throw Error("first_slice of a series in zero variables");
    }
    TermMap out;
    for (const auto& [a, c] : terms_) {
        if (a[0] == u) {
            out.emplace(a.tail(), c);
        }
    }
    return Series(n_ - 1, std::move(out), prec_ - u, d_);
}

Series Series::embed_first() const {
    TermMap out;
    for (const auto& [a, c] : terms_) {
        out.emplace(a.with_head(0), c);
    }
    return Series(n_ + 1, std::move(out), prec_, d_);
}

bool Series::agrees_below(const Series& other, const Rational& t) const {
    require_same_dimension(*this, other);
    auto covered = [&](const Precision& p) { return p.is_exact() || (p.is_bounded() && p.value() >= t); };
    if (!covered(prec_) || !covered(other.prec_)) {
        throw Error("agrees_below: precision does not reach " + puiseux::to_string(t));
    }
    auto low = [&](const TermMap& m) {
        TermMap out;
        for (const auto& [a, c] : m) {
            if (a.degree() < t) {
                out.emplace(a, c);
            }
        }
        return out;
    };
    return low(terms_) == low(other.terms_);
}

namespace {

std::string monomial_text(const ExponentVector& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += "x" + std::to_string(i + 1);
        if (a[i] != 1) {
            const std::string e = puiseux::to_string(a[i]);
            s += (a[i].get_den() == 1 && sgn(a[i]) > 0) ? "^" + e : "^(" + e + ")";
        }
    }
    return s;
}

} // namespace

std::string Series::to_string() const {
    std::string s;
    for (const auto& [a, c] : terms_) {
        const std::string mono = monomial_text(a);
        if (!s.empty()) {
            s += sgn(c) < 0 ? " - " : " + ";
        } else if (sgn(c) < 0) {
            s += "-";
        }
        FieldElement ac = abs(c);
        if (mono.empty()) {
            s += puiseux::to_string(ac);
        } else if (ac == 1) {
            s += mono;
        } else {
            s += puiseux::to_string(ac) + "*" + mono;
        }
    }
    if (s.empty()) {
        s = "0";
    }
    if (prec_.is_bounded()) {
        s += " + O(" + prec_.to_string() + ")";
    }
    return s;
}

Series invert_unit(const Series& f, const Rational& precision) {
    if (!f.is_unit()) {
        throw Error("invert_unit: " + f.to_string() + " is not a unit of the power series ring");
    }
    const std::size_t n = f.dimension();
    const FieldElement c0 = f.constant_term();
    const FieldElement c0inv = invert(c0);
    // f = c0 (1 + h) with ord(h) > 0; g = c0^-1 sum (-h)^k.
    Series h = f * c0inv - Series::constant(n, 1);
    const Precision target = f.precision().is_none() ? Precision::at(precision)
                                                     : min(Precision::at(precision), f.precision());

    Series g = Series::constant(n, 1).with_precision(target);
    Series power = g;
    Series minus_h = (-h).with_precision(target);
    auto lo = minus_h.min_degree();
    if (lo) {
        // Each factor raises the degree by at least ord(h) >= 1/d.
        for (;;) {
            power = (power * minus_h).with_precision(target);
            if (power.empty()) {
                break;
            }
            g += power;
        }
    }
    return (g * c0inv).with_precision(min(target, f.precision()));
}

Series apply_map(const Series& f, const MonomialMap& m) {
    const std::size_t n = f.dimension();
    if (m.dimension() != n) {
        throw DimensionMismatch("map of dimension " + std::to_string(m.dimension()) + " on a series in " +
                                std::to_string(n) + " variables");
    }
    TermMap out;
    for (const auto& [a, c] : f.terms()) {
        out.emplace(m.apply(a), c);
    }
    Precision prec = f.precision();
    if (prec.is_bounded() && !m.is_blowup_composition()) {
        std::int64_t least = 1;
        for (const auto& row : m.rows()) {
            std::int64_t s = 0;
            for (auto e : row) {
                s += e;
            }
            least = std::min(least, s);
        }
        if (least <= 0) {
            prec = Precision::none();
        } else {
            const Rational& t = prec.value();
            prec = Precision::at(sgn(t) > 0 ? Rational(t * static_cast<long>(least)) : Rational(0));
        }
    }
    return Series(n, std::move(out), prec, f.denominator());
}

std::vector<ExponentVector> newton_diagram(const Series& f) {
    std::vector<ExponentVector> out;
    out.reserve(f.size());
    for (const auto& [a, c] : f.terms()) {
        out.push_back(a);
    }
    return out;
}

ZPolynomial::ZPolynomial(std::vector<Series> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error("polynomial in z needs at least one coefficient");
    }
    n_ = coeffs_.front().dimension();
    for (const auto& c : coeffs_) {
        require_same_dimension(coeffs_.front(), c);
    }
}

bool ZPolynomial::is_monic() const {
    const Series& lead = leading();
    return lead.is_exact() && lead.size() == 1 && lead.constant_term() == 1;
}

bool ZPolynomial::has_nonnegative_support() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Series& s) { return s.has_nonnegative_support(); });
}

Integer ZPolynomial::denominator() const {
    Integer d = 1;
    for (const auto& c : coeffs_) {
        d = lcm(d, c.denominator());
    }
    return d;
}

std::string ZPolynomial::to_string(const std::string& var) const {
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Series& c = coefficient(i);
        if (c.is_exact_zero()) {
            continue;
        }
        std::string zpart = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term;
        if (zpart.empty()) {
            term = c.to_string();
        } else if (c.is_exact() && c.size() == 1 && c.constant_term() == 1) {
            term = zpart;
        } else {
            term = "(" + c.to_string() + ")*" + zpart;
        }
        if (s.empty()) {
            s = term;
        } else if (term.front() == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s.empty() ? "0" : s;
}

ZPolynomial apply_map(const ZPolynomial& p, const MonomialMap& m) {
    std::vector<Series> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        out.push_back(apply_map(c, m));
    }
    return ZPolynomial(std::move(out));
}

Series substitute_root(const ZPolynomial& p, const Series& f) {
    if (f.dimension() != p.dimension()) {
        throw DimensionMismatch("root in " + std::to_string(f.dimension()) + " variables for a polynomial in " +
                                std::to_string(p.dimension()));
    }
    Series acc = p.leading();
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = acc * f + p.coefficient(i);
    }
    return acc;
}

bool support_in_cone(const Series& f, const MonomialMap& cert) {
    const MonomialMap back = inverse(cert);
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& t) { return back.apply(t.first).is_nonnegative(); });
}

} // namespace puiseux
