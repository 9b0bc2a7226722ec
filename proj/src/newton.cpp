#include "puiseux/newton.hpp"

#include <algorithm>

namespace puiseux {

namespace {

/// Known terms ran out before a structural decision could be made; the caller
/// retries with a larger working precision.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

struct HullPoint {
    int b;
    Rational nu;
};

/// Lower-hull edges from the leftmost point to (limit, 0), left to right
/// (decreasing gamma). `nu[b]` is the x1-order at z-degree b.
std::vector<AdmissibleSegment> hull_segments(const std::vector<std::optional<Rational>>& nu, int limit) {
    std::vector<HullPoint> pts;
    for (int b = 0; b <= limit; ++b) {
        if (nu[static_cast<std::size_t>(b)]) {
            pts.push_back({b, *nu[static_cast<std::size_t>(b)]});
        }
    }
    std::vector<HullPoint> chain;
    for (const auto& p : pts) {
        while (chain.size() >= 2) {
            const auto& o = chain[chain.size() - 2];
            const auto& a = chain.back();
            Rational cross = Rational(a.b - o.b) * (p.nu - o.nu) - (a.nu - o.nu) * Rational(p.b - o.b);
            if (sgn(cross) > 0) {
                break;
            }
            chain.pop_back();
        }
        chain.push_back(p);
    }
    std::vector<AdmissibleSegment> out;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const auto& l = chain[k];
        const auto& r = chain[k + 1];
        AdmissibleSegment s;
        s.gamma = (l.nu - r.nu) / Rational(r.b - l.b);
        s.beta = l.nu + Rational(l.b) * s.gamma;
        for (const auto& p : pts) {
            if (p.b >= l.b && p.b <= r.b && p.nu + Rational(p.b) * s.gamma == s.beta) {
                s.degrees.push_back(p.b);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

Series drop_first_free(const Series& f) {
    TermMap t;
    for (const auto& [a, c] : f.terms()) {
        if (sgn(a[0]) != 0) {
            t.emplace(a, c);
        }
    }
    return Series(f.dimension(), std::move(t), f.precision(), f.denominator());
}

Series exact_copy(const Series& f) {
    return Series(f.dimension(), f.terms(), Precision::exact(), f.denominator());
}

ExponentVector first_unit(std::size_t n, const Rational& g) {
    ExponentVector v(n);
    v[0] = g;
    return v;
}

std::vector<Series> map_all(const std::vector<Series>& q, const MonomialMap& m) {
    std::vector<Series> out;
    out.reserve(q.size());
    for (const auto& c : q) {
        out.push_back(apply_map(c, m));
    }
    return out;
}

/// Q(x1^gamma (alpha + z)) / x1^beta with alpha already in n variables.
std::vector<Series> substitute(const std::vector<Series>& q, const Rational& gamma, const Series& alpha,
                               const Rational& beta) {
    const std::size_t n = alpha.dimension();
    std::vector<Series> r;
    r.reserve(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        r.push_back(q[i].shift(first_unit(n, gamma * static_cast<long>(i))));
    }
    // Taylor shift y -> alpha + z by repeated synthetic division.
    const std::size_t m = r.size() - 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = m; j-- > i;) {
            r[j] += alpha * r[j + 1];
        }
    }
    const ExponentVector down = first_unit(n, -beta);
    for (auto& c : r) {
        c = c.shift(down);
        for (const auto& [a, v] : c.terms()) {
            if (sgn(a[0]) < 0) {
                throw Error("step substitution left the term " + a.to_string() + " with a negative x1-exponent");
            }
        }
    }
    return r;
}

std::vector<Series> slices(const std::vector<Series>& q, const AdmissibleSegment& s,
                           const std::vector<std::optional<Rational>>& nu) {
    std::vector<Series> out;
    for (int t : s.degrees) {
        const Rational u = s.vertical ? Rational(0) : *nu[static_cast<std::size_t>(t)];
        out.push_back(q[static_cast<std::size_t>(t)].first_slice(u));
    }
    return out;
}

std::vector<std::optional<Rational>> orders(const std::vector<Series>& q) {
    std::vector<std::optional<Rational>> nu;
    for (const auto& c : q) {
        nu.push_back(c.first_order());
    }
    return nu;
}

struct Prepared {
    MonomialMap map;
    std::vector<BlowupStep> principalization;
    std::int64_t e = 0;
};

Prepared prepare(const std::vector<Series>& q, const AdmissibleSegment& s,
                 const std::vector<std::optional<Rational>>& nu, std::size_t n, std::int64_t cap) {
    Prepared out{MonomialMap::identity(n), {}, 0};
    if (n < 2 || s.vertical) {
        return out;
    }
    auto w = slices(q, s, nu);
    std::vector<LatticeSet> sets;
    for (const auto& f : w) {
        sets.push_back(newton_diagram(f));
    }
    auto pr = principalize(sets, cap);
    out.map = pr.map.lift();
    for (const auto& st : pr.word) {
        out.principalization.push_back({st.i + 1, st.j + 1, st.count});
    }

    const std::size_t hi = s.degrees.size() - 1;
    const Rational& nu_hi = *nu[static_cast<std::size_t>(s.degrees[hi])];
    std::optional<Rational> max_gap;
    std::optional<Rational> min_drop;
    for (std::size_t t = 0; t < hi; ++t) {
        const ExponentVector diff = pr.apexes[hi] - pr.apexes[t];
        for (const auto& v : diff) {
            if (!max_gap || v > *max_gap) {
                max_gap = v;
            }
        }
        Rational drop = *nu[static_cast<std::size_t>(s.degrees[t])] - nu_hi;
        if (!min_drop || drop < *min_drop) {
            min_drop = drop;
        }
    }
    if (max_gap && sgn(*max_gap) > 0) {
        out.e = to_int64(puiseux::floor(*max_gap / *min_drop)) + 1;
        for (std::size_t j = 1; j < n; ++j) {
            out.map.append_elementary(0, j, out.e);
        }
    }
    return out;
}

CharacteristicEquation build_characteristic(const std::vector<Series>& q, const AdmissibleSegment& s,
                                            const std::vector<std::optional<Rational>>& nu, std::size_t n) {
    auto w = slices(q, s, nu);
    const int low = s.low();
    std::vector<Series> raw(static_cast<std::size_t>(s.high() - low + 1), Series(n - 1));
    for (std::size_t k = 0; k < s.degrees.size(); ++k) {
        raw[static_cast<std::size_t>(s.degrees[k] - low)] = w[k];
    }
    std::vector<Series> norm = raw;
    if (!s.vertical && n >= 2) {
        const ExponentVector apex = w.back().terms().begin()->first;
        for (auto& c : norm) {
            c = c.shift(-apex);
            if (!c.has_nonnegative_support()) {
                throw Error("segment is not prepared: the leading slice monomial does not divide " + c.to_string());
            }
        }
    }
    const FieldElement lead = norm.back().constant_term();
    if (sgn(lead) == 0) {
        throw Error("segment is not prepared: the leading slice is not a monomial times a unit");
    }
    const FieldElement scale = invert(lead);
    for (auto& c : norm) {
        c *= scale;
    }
    return {ZPolynomial(std::move(raw)), ZPolynomial(std::move(norm))};
}

struct RawRoot {
    Series series;
    MonomialMap map;
    int multiplicity = 1;
    bool exact = false;
    std::vector<StepRecord> log;
};

struct Branch {
    std::vector<Series> q;
    MonomialMap psi;
    Series s;
    ExponentVector c;
    int mult = 0;
    bool first = true;
    int depth = 0;
    std::vector<StepRecord> log;

    void apply(const MonomialMap& m) {
        if (m.is_identity()) {
            return;
        }
        q = map_all(q, m);
        s = apply_map(s, m);
        c = m.apply(c);
        psi = compose(psi, m);
    }
};

class Engine {
public:
    Engine(const SolveConfig& cfg, Rational working) : cfg_(cfg), w_(std::move(working)) {}

    /// Roots of the polynomial with coefficients q followed by `mult` roots of
    /// positive x1-order (all roots on the first step when `vertical`).
    std::vector<RawRoot> run(const std::vector<Series>& q, int mult, bool first, bool vertical, int* omitted) {
        const std::size_t n = q.front().dimension();
        Branch root{q, MonomialMap::identity(n), Series(n), ExponentVector(n), mult, first, 0, {}};
        std::vector<Branch> stack{std::move(root)};
        std::vector<RawRoot> out;
        while (!stack.empty()) {
            Branch b = std::move(stack.back());
            stack.pop_back();
            std::vector<Branch> children;
            step(b, vertical, omitted, out, children);
            for (auto it = children.rbegin(); it != children.rend(); ++it) {
                stack.push_back(std::move(*it));
            }
        }
        return out;
    }

private:
    void emit(const Branch& b, int mult, bool exact, const Precision& prec, StepKind kind,
              std::vector<RawRoot>& out) {
        RawRoot r;
        r.exact = exact && b.s.is_exact();
        r.series = r.exact ? b.s : b.s.with_precision(prec);
        r.map = b.psi;
        r.multiplicity = mult;
        r.log = b.log;
        StepRecord rec;
        rec.kind = kind;
        rec.depth = b.depth;
        rec.multiplicity = mult;
        rec.accumulated = b.psi;
        r.log.push_back(std::move(rec));
        out.push_back(std::move(r));
    }

    /// Degree below which the root is still determined once the known part of
    /// q_zmin has run out: the remaining roots z satisfy z^k ~ q_zmin / q_(zmin+k)
    /// with k the number of roots left.
    Rational exhausted_bound(const Branch& b, int zmin, const Rational& cdeg) const {
        const Precision& p0 = b.q[static_cast<std::size_t>(zmin)].precision();
        const int k = b.mult - zmin;
        const Series top = b.q[static_cast<std::size_t>(b.mult)].first_slice(0);
        auto top_deg = top.min_degree();
        if (!p0.is_bounded() || !top_deg) {
            return cdeg;
        }
        Rational bound = cdeg + (p0.value() - *top_deg) / Rational(k);
        return std::max(cdeg, bound);
    }

    void step(Branch& b, bool vertical, int* omitted, std::vector<RawRoot>& out, std::vector<Branch>& children) {
        if (b.depth > cfg_.max_steps) {
            throw CapExceeded("Newton procedure exceeded " + std::to_string(cfg_.max_steps) + " steps");
        }
        const std::size_t n = b.s.dimension();
        const int m = static_cast<int>(b.q.size()) - 1;
        if (!b.first) {
            for (int i = 0; i < b.mult; ++i) {
                b.q[static_cast<std::size_t>(i)] = drop_first_free(b.q[static_cast<std::size_t>(i)]);
            }
        }

        int zmin = 0;
        while (zmin < b.mult && b.q[static_cast<std::size_t>(zmin)].is_exact_zero()) {
            ++zmin;
        }
        if (zmin > 0) {
            emit(b, zmin, true, Precision::exact(), StepKind::exact_root, out);
            if (zmin == b.mult) {
                return;
            }
        }
        const Rational cdeg = b.c.degree();
        if (b.q[static_cast<std::size_t>(zmin)].empty()) {
            emit(b, b.mult - zmin, false, Precision::at(exhausted_bound(b, zmin, cdeg)), StepKind::truncated, out);
            return;
        }
        if (cdeg >= w_) {
            emit(b, b.mult - zmin, false, Precision::at(w_), StepKind::truncated, out);
            return;
        }

        auto nu = orders(b.q);
        int limit = b.mult;
        if (b.first) {
            limit = 0;
            while (limit <= m && !(nu[static_cast<std::size_t>(limit)] && sgn(*nu[static_cast<std::size_t>(limit)]) == 0)) {
                ++limit;
            }
            if (limit > m) {
                throw Error("leading coefficient is not a unit");
            }
        } else if (!nu[static_cast<std::size_t>(limit)] || sgn(*nu[static_cast<std::size_t>(limit)]) != 0) {
            throw PrecisionExhausted("x1-free part of the z^" + std::to_string(limit) + " coefficient is unknown");
        }

        std::vector<AdmissibleSegment> segments = hull_segments(nu, limit);
        if (b.first) {
            if (vertical && limit < m) {
                AdmissibleSegment v;
                v.vertical = true;
                for (int t = limit; t <= m; ++t) {
                    v.degrees.push_back(t);
                }
                segments.push_back(std::move(v));
            } else if (omitted) {
                *omitted += m - limit;
            }
        }

        for (const auto& seg : segments) {
            const int seg_mult = seg.high() - seg.low();
            if (cdeg + seg.gamma >= w_) {
                emit(b, seg_mult, false, Precision::at(w_), StepKind::truncated, out);
                continue;
            }
            Branch nb = b;
            auto prep = prepare(nb.q, seg, nu, n, cfg_.cap);
            nb.apply(prep.map);
            const Rational base = nb.c.degree() + seg.gamma;
            if (base >= w_) {
                emit(nb, seg_mult, false, Precision::at(w_), StepKind::truncated, out);
                continue;
            }
            auto ce = build_characteristic(nb.q, seg, nu, n);
            auto roots = solve_characteristic(ce.normalized, w_ - nb.c.degree(), cfg_);
            int found = 0;
            for (const auto& r : roots) {
                found += r.multiplicity;
            }
            if (found != seg_mult) {
                throw Error("characteristic equation of degree " + std::to_string(seg_mult) + " produced " +
                            std::to_string(found) + " roots");
            }
            for (const auto& r : roots) {
                Branch cb = nb;
                cb.apply(r.map.lift());
                const Series alpha = r.alpha.embed_first();
                const Rational beta = seg.vertical ? Rational(0) : seg.beta;
                cb.q = substitute(cb.q, seg.gamma, alpha, beta);
                const ExponentVector c_next = cb.c + first_unit(n, seg.gamma);
                cb.s += alpha.shift(c_next);
                cb.c = c_next;
                cb.mult = r.multiplicity;
                cb.first = false;
                ++cb.depth;
                StepRecord rec;
                rec.kind = seg.vertical ? StepKind::vertical : StepKind::segment;
                rec.depth = b.depth;
                rec.gamma = seg.gamma;
                rec.beta = beta;
                rec.degrees = seg.degrees;
                rec.principalization = prep.principalization;
                rec.e = prep.e;
                rec.alpha = alpha;
                rec.multiplicity = r.multiplicity;
                rec.accumulated = cb.psi;
                cb.log.push_back(std::move(rec));
                children.push_back(std::move(cb));
            }
        }
    }

    const SolveConfig& cfg_;
    Rational w_;
};

void require_monic_input(const ZPolynomial& p) {
    if (p.degree() < 1) {
        throw Error("polynomial must have degree >= 1 in z");
    }
    if (p.dimension() < 1) {
        throw Error("polynomial must involve at least one variable x1");
    }
    if (!p.is_monic()) {
        throw Error("polynomial must be monic in z");
    }
    for (const auto& c : p.coefficients()) {
        if (!c.is_exact()) {
            throw Error("solver input coefficients must be exact");
        }
    }
    if (!p.has_nonnegative_support()) {
        throw Error("coefficients must have nonnegative support; use the cone-ring entry point");
    }
    if (p.coefficient(0).is_exact_zero()) {
        throw Error("the z^0 coefficient must be nonzero");
    }
}

/// Runs the engine at increasing working precisions until every emitted root
/// verifies to `precision`.
template <class Run>
SolveResult escalate(const ZPolynomial& p, const SolveConfig& cfg, Run run) {
    if (sgn(cfg.precision) <= 0) {
        throw Error("precision must be positive");
    }
    std::string last = "no working precision configured";
    for (int margin : cfg.margins) {
        SolveResult result;
        std::vector<RawRoot> raw;
        try {
            Engine eng(cfg, cfg.precision + margin);
            raw = run(eng, &result.omitted);
        } catch (const PrecisionExhausted& e) {
            last = e.what();
            continue;
        } catch (const Unsplittable& e) {
            if (margin == cfg.margins.back()) {
                throw;
            }
            last = e.what();
            continue;
        }
        bool ok = true;
        for (const auto& r : raw) {
            if (r.exact && r.multiplicity > 1) {
                throw MultipleRoot("the polynomial has the root " + apply_map(r.series, inverse(r.map)).to_string() +
                                   " of multiplicity " + std::to_string(r.multiplicity));
            }
            PuiseuxRoot pr;
            pr.series = r.exact ? r.series : exact_copy(r.series.truncated(cfg.precision));
            pr.certificate = inverse(r.map);
            pr.log = r.log;
            pr.residual_floor = residual_floor(p, pr);
            if (r.exact ? pr.residual_floor.has_value() : (pr.residual_floor && *pr.residual_floor < cfg.precision)) {
                ok = false;
                last = "residual of order " + to_string(*pr.residual_floor) + " below precision " +
                       to_string(cfg.precision);
                break;
            }
            if (!r.exact) {
                const Precision& got = r.series.precision();
                if (got.is_none() || (got.is_bounded() && got.value() < cfg.precision)) {
                    ok = false;
                    last = "root known only below degree " + got.to_string();
                    break;
                }
                pr.series = pr.series.with_precision(Precision::at(cfg.precision));
            }
            for (int k = 0; k < r.multiplicity; ++k) {
                result.roots.push_back(pr);
            }
        }
        if (ok) {
            return result;
        }
    }
    throw PrecisionFailure("no working precision verified: " + last);
}

} // namespace

std::optional<Rational> Diagram1::order_at(int b) const {
    for (const auto& [u, v] : points) {
        if (v == b) {
            return u; // points are ordered by u first, so scan for the least
        }
    }
    return std::nullopt;
}

Diagram1 e1_diagram(const ZPolynomial& p) {
    Diagram1 dg;
    dg.degree = p.degree();
    for (int b = 0; b <= p.degree(); ++b) {
        for (const auto& [a, c] : p.coefficient(b).terms()) {
            dg.points.emplace(p.dimension() ? a[0] : Rational(0), b);
        }
    }
    return dg;
}

std::vector<AdmissibleSegment> admissible_segments(const Diagram1& dg, bool first_step) {
    std::vector<std::optional<Rational>> nu;
    for (int b = 0; b <= dg.degree; ++b) {
        nu.push_back(dg.order_at(b));
    }
    int limit = 0;
    while (limit <= dg.degree && !(nu[static_cast<std::size_t>(limit)] && sgn(*nu[static_cast<std::size_t>(limit)]) == 0)) {
        ++limit;
    }
    if (limit > dg.degree) {
        throw Error("diagram has no point on the vertical axis");
    }
    auto out = hull_segments(nu, limit);
    if (first_step && limit < dg.degree) {
        AdmissibleSegment v;
        v.vertical = true;
        for (int b = limit; b <= dg.degree; ++b) {
            if (nu[static_cast<std::size_t>(b)] && sgn(*nu[static_cast<std::size_t>(b)]) == 0) {
                v.degrees.push_back(b);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

Preparation prepare_segment(const ZPolynomial& p, const AdmissibleSegment& s, std::int64_t cap) {
    if (s.vertical) {
        throw Error("prepare_segment needs a segment with gamma > 0");
    }
    auto pr = prepare(p.coefficients(), s, orders(p.coefficients()), p.dimension(), cap);
    return {pr.map, pr.principalization, pr.e, apply_map(p, pr.map)};
}

CharacteristicEquation characteristic_equation(const ZPolynomial& p, const AdmissibleSegment& s) {
    if (p.dimension() < 1) {
        throw Error("characteristic equation needs at least one variable");
    }
    AdmissibleSegment full = s;
    if (s.vertical) {
        full.degrees.clear();
        for (int b = s.low(); b <= p.degree(); ++b) {
            full.degrees.push_back(b);
        }
    }
    return build_characteristic(p.coefficients(), full, orders(p.coefficients()), p.dimension());
}

std::vector<CharacteristicRoot> solve_characteristic(const ZPolynomial& c, const Rational& precision,
                                                     const SolveConfig& cfg) {
    const std::size_t n = c.dimension();
    if (c.degree() < 1) {
        throw Error("characteristic equation must have degree >= 1");
    }
    if (!c.leading().is_unit()) {
        throw Error("characteristic equation must have a unit leading coefficient");
    }
    std::vector<CharacteristicRoot> out;
    if (n == 0) {
        std::vector<FieldElement> coeffs;
        for (const auto& s : c.coefficients()) {
            coeffs.push_back(s.constant_term());
        }
        for (const auto& r : cfg.oracle(UnivariatePoly(std::move(coeffs)))) {
            if (sgn(r.root) != 0) {
                out.push_back({Series::constant(0, r.root), MonomialMap::identity(0), r.multiplicity});
            }
        }
        return out;
    }
    if (c.degree() == 1) {
        const Series& c1 = c.coefficient(1);
        Series alpha = c.coefficient(0);
        if (c1.is_exact() && c1.size() == 1) {
            alpha *= -invert(c1.constant_term());
        } else {
            const Series c0 = alpha;
            alpha = -(alpha * invert_unit(c1, precision));
            if (c0.is_exact() && c1.is_exact()) {
                // A finite quotient is already complete once it divides exactly.
                Series candidate = exact_copy(alpha);
                if ((c1 * candidate + c0).is_exact_zero()) {
                    alpha = std::move(candidate);
                }
            }
        }
        if (!alpha.is_exact_zero()) {
            out.push_back({std::move(alpha), MonomialMap::identity(n), 1});
        }
        return out;
    }
    Engine eng(cfg, precision);
    for (auto& r : eng.run(c.coefficients(), c.degree(), true, true, nullptr)) {
        out.push_back({std::move(r.series), std::move(r.map), r.multiplicity});
    }
    return out;
}

ZPolynomial step_substitute(const ZPolynomial& p, const Rational& gamma, const Series& alpha) {
    const std::size_t n = p.dimension();
    if (alpha.dimension() + 1 != n) {
        throw DimensionMismatch("alpha must be a series in x2..xn");
    }
    std::optional<Rational> beta;
    for (int b = 0; b <= p.degree(); ++b) {
        for (const auto& [a, v] : p.coefficient(b).terms()) {
            Rational l = a[0] + gamma * b;
            if (!beta || l < *beta) {
                beta = l;
            }
        }
    }
    return ZPolynomial(substitute(p.coefficients(), gamma, alpha.embed_first(), beta.value_or(Rational(0))));
}

RegularShape detect_regular(const ZPolynomial& p) {
    RegularShape out;
    if (p.dimension() < 1 || p.degree() < 1) {
        return out;
    }
    for (int b = 0; b <= p.degree(); ++b) {
        Series s = p.coefficient(b).first_slice(0);
        if (b == 1) {
            if (s.empty()) {
                return out;
            }
            out.beta = std::move(s);
        } else if (!s.empty()) {
            return out;
        }
    }
    out.regular = true;
    return out;
}

PuiseuxRoot regular_iterate(const ZPolynomial& p, const SolveConfig& cfg) {
    if (!detect_regular(p).regular) {
        throw Error("polynomial is not of regular shape");
    }
    if (!p.has_nonnegative_support()) {
        throw Error("coefficients must have nonnegative support");
    }
    auto result = escalate(p, cfg, [&](Engine& eng, int*) { return eng.run(p.coefficients(), 1, false, false, nullptr); });
    if (result.roots.size() != 1) {
        throw Error("regular shape produced " + std::to_string(result.roots.size()) + " roots");
    }
    return result.roots.front();
}

SolveResult solve(const ZPolynomial& p, const SolveConfig& cfg) {
    require_monic_input(p);
    if (cfg.max_steps <= 0) {
        throw Error("max_steps must be positive");
    }
    auto result = escalate(p, cfg, [&](Engine& eng, int* omitted) {
        return eng.run(p.coefficients(), p.degree(), true, cfg.first_vertical, omitted);
    });
    int total = static_cast<int>(result.roots.size()) + result.omitted;
    if (total != p.degree()) {
        throw Error("solver produced " + std::to_string(total) + " roots for degree " + std::to_string(p.degree()));
    }
    return result;
}

std::optional<Rational> residual_floor(const ZPolynomial& p, const PuiseuxRoot& root) {
    const ZPolynomial pushed = apply_map(p, root.accumulated());
    const Series r = substitute_root(pushed, exact_copy(root.series));
    return r.min_degree();
}

std::optional<Rational> verify(const ZPolynomial& p, const PuiseuxRoot& root, const Rational& precision) {
    auto floor = residual_floor(p, root);
    if (floor && *floor < precision) {
        throw PrecisionFailure("residual of order " + to_string(*floor) + " below precision " + to_string(precision));
    }
    return floor;
}

std::string to_string(StepKind k) {
    switch (k) {
    case StepKind::vertical:
        return "vertical";
    case StepKind::segment:
        return "segment";
    case StepKind::exact_root:
        return "exact_root";
    case StepKind::truncated:
        return "truncated";
    }
    return "";
}

} // namespace puiseux
