#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "puiseux/series.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::check;

namespace {

ExponentVector v(std::initializer_list<long> c) {
    return ExponentVector::from_ints(c);
}

Series x(std::size_t n, std::size_t i) {
    return Series::variable(n, i);
}

/// Term-by-term double loop without any truncation logic.
Series naive_product(const Series& f, const Series& g) {
    TermMap out;
    for (const auto& [a, c] : f.terms()) {
        for (const auto& [b, e] : g.terms()) {
            out[a + b] += c * e;
        }
    }
    return Series(f.dimension(), std::move(out));
}

} // namespace

TEST(Precision, Arithmetic) {
    EXPECT_TRUE(Precision::at(3).covers(make_rational(5, 2)));
    EXPECT_FALSE(Precision::at(3).covers(3));
    EXPECT_TRUE(Precision::exact().covers(1000));
    EXPECT_EQ(min(Precision::exact(), Precision::at(2)), Precision::at(2));
    EXPECT_EQ(min(Precision::at(4), Precision::at(2)), Precision::at(2));
    EXPECT_EQ(min(Precision::none(), Precision::at(2)), Precision::none());
    EXPECT_EQ(Precision::at(2) + make_rational(1, 2), Precision::at(make_rational(5, 2)));
    EXPECT_EQ(Precision::exact() + 3, Precision::exact());
    EXPECT_EQ(Precision::at(make_rational(7, 2)).to_string(), "7/2");
}

TEST(Series, NormalizesAndPrints) {
    TermMap t;
    t[ExponentVector{make_rational(1, 2), Rational(1)}] = make_rational(3, 2);
    t[v({0, 0})] = 0;
    t[v({5, 0})] = 1;
    const Series f(2, t, Precision::at(4));
    EXPECT_EQ(f.size(), 1u);
    EXPECT_EQ(f.denominator(), Integer(2));
    EXPECT_EQ(f.to_string(), "3/2*x1^(1/2)*x2 + O(4)");
    EXPECT_EQ(Series(2).to_string(), "0");
    EXPECT_TRUE(Series(2).is_exact_zero());
    EXPECT_THROW(Series(2, {{v({1}), 1}}), DimensionMismatch);
}

TEST(Series, RingArithmetic) {
    const Series one = Series::constant(2, 1);
    const Series f = one + x(2, 0);
    const Series g = one - x(2, 0);
    EXPECT_EQ(f * g, one - x(2, 0).pow(2));
    EXPECT_EQ((f - f), Series(2));
    EXPECT_EQ(f.pow(3).coefficient(v({2, 0})), Rational(3));
    EXPECT_EQ((f * make_rational(1, 2)).coefficient(v({1, 0})), make_rational(1, 2));
    EXPECT_THROW(f + Series::constant(3, 1), DimensionMismatch);
}

TEST(Series, ProductMatchesNaiveConvolution) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        const int d = uniform(rng, 1, 3);
        const Series f = random_series(rng, n, d, uniform(rng, 1, 5), -3, 6);
        const Series g = random_series(rng, n, d, uniform(rng, 1, 5), -3, 6);
        // The lattice denominator of a product is that of its factors; compare content.
        EXPECT_EQ((f * g).terms(), naive_product(f, g).terms());
        EXPECT_TRUE((f * g).is_exact());
        EXPECT_EQ(f * g, g * f);
    }
}

TEST(Series, ProductPrecision) {
    // (x1 + O(3)) * x2: unknown terms of the first factor shift by deg(x2).
    const Series f = x(2, 0).with_precision(Precision::at(3));
    const Series p = f * x(2, 1);
    EXPECT_EQ(p.precision(), Precision::at(4));
    EXPECT_EQ(p.coefficient(v({1, 1})), Rational(1));
    // (1 + O(3)) * (x1 + O(2)): min(3 + 1, 2 + 0).
    const Series a = Series::constant(2, 1).with_precision(Precision::at(3));
    const Series b = x(2, 0).with_precision(Precision::at(2));
    EXPECT_EQ((a * b).precision(), Precision::at(2));
    // Multiplying by an exact zero is exact.
    EXPECT_TRUE((a * Series(2)).is_exact_zero());
}

TEST(Series, TruncationSliceShift) {
    const Series f = Series::constant(2, 1) + x(2, 0) + x(2, 0) * x(2, 1) + x(2, 1).pow(3);
    const Series t = f.truncated(2);
    EXPECT_EQ(t.size(), 2u);
    EXPECT_EQ(t.precision(), Precision::at(2));
    EXPECT_EQ(f.first_slice(0), Series::constant(1, 1) + x(1, 0).pow(3));
    EXPECT_EQ(f.first_slice(1), Series::constant(1, 1) + x(1, 0));
    EXPECT_EQ(f.first_slice(0).embed_first(), Series::constant(2, 1) + x(2, 1).pow(3));
    const Series s = t.shift(ExponentVector{make_rational(1, 2), Rational(0)});
    EXPECT_EQ(s.precision(), Precision::at(make_rational(5, 2)));
    EXPECT_EQ(s.denominator(), Integer(2));
    EXPECT_EQ(f.first_order(), Rational(0));
    EXPECT_EQ(f.min_degree(), Rational(0));
    EXPECT_TRUE(f.is_unit());
    EXPECT_FALSE(x(2, 0).is_unit());
}

TEST(Series, AgreesBelow) {
    const Series f = Series::constant(1, 1) + x(1, 0).pow(3);
    EXPECT_TRUE(f.agrees_below(Series::constant(1, 1), 3));
    EXPECT_FALSE(f.agrees_below(Series::constant(1, 1), 4));
    EXPECT_THROW(f.truncated(2).agrees_below(f, 3), Error);
}

TEST(Series, InvertUnitProperty) {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 150; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        const int d = uniform(rng, 1, 3);
        Series h = random_series(rng, n, d, uniform(rng, 1, 4), 0, 4);
        h = h - Series::constant(n, h.constant_term()) + Series::constant(n, make_rational(uniform(rng, 1, 3), 2));
        const Rational target = uniform(rng, 2, 6);
        const Series g = invert_unit(h, target);
        const Series r = h * g - Series::constant(n, 1);
        for (const auto& [a, c] : r.terms()) {
            EXPECT_GE(a.degree(), target) << h.to_string();
        }
        EXPECT_EQ(g.precision(), Precision::at(target));
    }
    EXPECT_THROW(invert_unit(x(2, 0), 3), Error);
}

TEST(Series, ApplyMapIsARingHomomorphism) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 3));
        const MonomialMap m = random_unipotent(rng, n, 3);
        const Series f = random_series(rng, n, 2, 4, -2, 5);
        const Series g = random_series(rng, n, 2, 4, -2, 5);
        EXPECT_EQ(apply_map(f * g, m), apply_map(f, m) * apply_map(g, m));
        EXPECT_EQ(apply_map(f + g, m), apply_map(f, m) + apply_map(g, m));
        EXPECT_EQ(apply_map(apply_map(f, m), inverse(m)), f);
    }
}

TEST(Series, ApplyMapPrecision) {
    const Series f = (Series::constant(2, 1) + x(2, 1)).with_precision(Precision::at(3));
    const auto up = MonomialMap::elementary(2, 0, 1, 1);
    EXPECT_EQ(apply_map(f, up).precision(), Precision::at(3));
    // Row sums of the blowing-down are 0 and 1: no total-degree guarantee.
    EXPECT_EQ(apply_map(f, inverse(up)).precision(), Precision::none());
    const auto shear = rows({{1, 1, -1}, {0, 1, 0}, {0, 0, 1}});
    const Series g = Series::constant(3, 1).with_precision(Precision::at(2));
    EXPECT_EQ(apply_map(g, shear).precision(), Precision::at(2));
}

TEST(Series, NewtonDiagramOfProduct) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        const Series f = random_series(rng, n, 1, uniform(rng, 1, 4), 0, 4);
        const Series g = random_series(rng, n, 1, uniform(rng, 1, 4), 0, 4);
        if (f.empty() || g.empty()) {
            continue;
        }
        const auto ef = newton_diagram(f);
        const auto eg = newton_diagram(g);
        std::vector<ExponentVector> sums;
        for (const auto& a : ef) {
            for (const auto& b : eg) {
                sums.push_back(a + b);
            }
        }
        auto minimal = [](const std::vector<ExponentVector>& s) {
            std::vector<ExponentVector> out;
            for (const auto& a : s) {
                const bool dominated = std::any_of(s.begin(), s.end(),
                                                   [&](const auto& b) { return b != a && product_leq(b, a); });
                if (!dominated) {
                    out.push_back(a);
                }
            }
            return out;
        };
        const auto efg = newton_diagram(f * g);
        for (const auto& c : efg) {
            EXPECT_NE(std::find(sums.begin(), sums.end(), c), sums.end());
        }
        // Minimal points of E(fg) are sums of minimal points.
        const auto mf = minimal(ef);
        const auto mg = minimal(eg);
        for (const auto& c : minimal(efg)) {
            bool found = false;
            for (const auto& a : mf) {
                for (const auto& b : mg) {
                    found = found || a + b == c;
                }
            }
            EXPECT_TRUE(found) << f.to_string() << " * " << g.to_string();
        }
        // Principal factors give a principal product with the summed apex.
        if (mf.size() == 1 && mg.size() == 1) {
            ASSERT_EQ(minimal(efg).size(), 1u);
            EXPECT_EQ(minimal(efg)[0], mf[0] + mg[0]);
        }
    }
}

TEST(ZPolynomial, BasicsAndSubstitution) {
    const ZPolynomial p({-(x(2, 0) * x(2, 1)), Series(2), Series::constant(2, 1)});
    EXPECT_TRUE(p.is_monic());
    EXPECT_TRUE(p.has_nonnegative_support());
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.to_string(), "z^2 - x1*x2");
    TermMap root;
    root[ExponentVector{make_rational(1, 2), make_rational(1, 2)}] = 1;
    EXPECT_TRUE(substitute_root(p, Series(2, root)).is_exact_zero());
    EXPECT_EQ(substitute_root(p, x(2, 0)), x(2, 0).pow(2) - x(2, 0) * x(2, 1));
    EXPECT_THROW(ZPolynomial(std::vector<Series>{}), Error);
}

TEST(ZPolynomial, SupportInCone) {
    const Series f = x(2, 0) * Series::monomial(v({0, -1}));
    EXPECT_FALSE(support_in_cone(f, MonomialMap::identity(2)));
    EXPECT_TRUE(support_in_cone(f, inverse(MonomialMap::elementary(2, 0, 1, 1))));
}
