#include "puiseux/planted.hpp"

#include <algorithm>
#include <numeric>

namespace puiseux {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

FieldElement random_coefficient(std::mt19937_64& rng) {
    static const long nums[] = {1, 1, 1, 2};
    static const long dens[] = {1, 2, 3, 1};
    const int k = uniform(rng, 0, 3);
    FieldElement c = make_rational(nums[k], dens[k]);
    return uniform(rng, 0, 1) ? c : FieldElement(-c);
}

} // namespace

Series random_nonnegative_series(std::mt19937_64& rng, const PlantedConfig& cfg) {
    const int d = uniform(rng, 1, cfg.max_denominator);
    const int terms = uniform(rng, 1, cfg.max_terms);
    TermMap t;
    for (int k = 0; k < terms; ++k) {
        ExponentVector a(cfg.n);
        for (std::size_t i = 0; i < cfg.n; ++i) {
            // Zero with probability one half keeps supports sparse.
            a[i] = uniform(rng, 0, 1) ? Rational(0) : make_rational(uniform(rng, 1, cfg.max_exponent * d), d);
        }
        t[a] += random_coefficient(rng);
    }
    return Series(cfg.n, std::move(t));
}

MonomialMap random_blowdown(std::mt19937_64& rng, std::size_t n, int max_word) {
    MonomialMap m = MonomialMap::identity(n);
    if (n < 2) {
        return m;
    }
    const int len = uniform(rng, 0, max_word);
    for (int k = 0; k < len; ++k) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
        const auto j = static_cast<std::size_t>(uniform(rng, static_cast<int>(i) + 1, static_cast<int>(n) - 1));
        m.append_elementary(i, j, -1);
    }
    return m;
}

ZPolynomial product_of_linear(const std::vector<Series>& roots) {
    if (roots.empty()) {
        throw Error("product_of_linear needs at least one root");
    }
    const std::size_t n = roots.front().dimension();
    std::vector<Series> c{Series::constant(n, 1)};
    for (const auto& r : roots) {
        // (sum c_i z^i)(z - r)
        std::vector<Series> next(c.size() + 1, Series(n));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return ZPolynomial(std::move(c));
}

PlantedInstance make_planted(std::mt19937_64& rng, const PlantedConfig& cfg) {
    PlantedInstance out;
    while (static_cast<int>(out.prepared_roots.size()) < cfg.m) {
        Series g = random_nonnegative_series(rng, cfg);
        // The z^0 coefficient must not vanish and the roots must be distinct.
        if (g.empty() || std::find(out.prepared_roots.begin(), out.prepared_roots.end(), g) != out.prepared_roots.end()) {
            continue;
        }
        out.prepared_roots.push_back(std::move(g));
    }
    out.phi = random_blowdown(rng, cfg.n, cfg.max_word);
    for (const auto& g : out.prepared_roots) {
        out.external_roots.push_back(apply_map(g, out.phi));
    }
    out.prepared = product_of_linear(out.prepared_roots);
    const ZPolynomial pushed = apply_map(out.prepared, out.phi);
    for (const auto& c : pushed.coefficients()) {
        out.external.emplace_back(c, out.phi);
    }
    return out;
}

bool roots_match(const std::vector<Series>& external_roots, const std::vector<PuiseuxRoot>& found,
                 const Rational& precision) {
    if (external_roots.size() != found.size()) {
        return false;
    }
    std::vector<std::size_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    // Table of which planted root agrees with which emitted root.
    std::vector<std::vector<bool>> ok(found.size(), std::vector<bool>(found.size()));
    for (std::size_t r = 0; r < found.size(); ++r) {
        const MonomialMap acc = found[r].accumulated();
        const Series mine = found[r].series.truncated(precision);
        for (std::size_t g = 0; g < external_roots.size(); ++g) {
            Series pushed = apply_map(external_roots[g], acc);
            ok[r][g] = pushed.has_nonnegative_support() &&
                       Series(pushed.dimension(), pushed.truncated(precision).terms(), Precision::at(precision)) ==
                           Series(mine.dimension(), mine.terms(), Precision::at(precision));
        }
    }
    do {
        bool all = true;
        for (std::size_t r = 0; r < found.size() && all; ++r) {
            all = ok[r][perm[r]];
        }
        if (all) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace puiseux
