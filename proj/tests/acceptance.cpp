// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances are exact equality throughout; time limits are listed per line.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "puiseux/closure.hpp"
#include "puiseux/cone.hpp"
#include "puiseux/newton.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/planted.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::check;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

Outcome matrix_identity() {
    Outcome o;
    const auto m1 = rows({{1, -6, -8}, {0, 1, -5}, {0, 0, 1}});
    const auto m2 = rows({{1, -3, -6}, {0, 1, -7}, {0, 0, 1}});
    const auto t0 = Clock::now();
    const auto got = compose(m1, m2);
    const double us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
    o.require(got == rows({{1, -9, 28}, {0, 1, -12}, {0, 0, 1}}), "product is " + got.to_string());
    o.require(us < 1000.0, "took " + std::to_string(us) + " us");
    o.detail = o.ok ? "product " + got.to_string() : o.detail;
    return o;
}

Outcome nota_matrices() {
    Outcome o;
    const auto a = rows({{1, -4, -1}, {0, 1, -8}, {0, 0, 1}});
    const auto b = rows({{1, 0, -4}, {0, 1, -6}, {0, 0, 1}});
    const auto q = rows({{1, -4, 19}, {0, 1, -14}, {0, 0, 1}});
    o.require(compose(a, b) == q, "A*B = " + compose(a, b).to_string());
    const auto aq = compose(a, inverse(q));
    const auto qa = compose(q, inverse(a));
    o.require(aq == rows({{1, 0, -20}, {0, 1, 6}, {0, 0, 1}}), "A*Q^-1 = " + aq.to_string());
    o.require(qa == rows({{1, 0, 20}, {0, 1, -6}, {0, 0, 1}}), "Q*A^-1 = " + qa.to_string());
    o.require(!aq.is_blowup_composition() && !qa.is_blowup_composition(), "flagged as a blowup composition");
    if (o.ok) {
        o.detail = "A*Q^-1 = " + aq.to_string() + ", Q*A^-1 = " + qa.to_string() + ", neither a composition";
    }
    return o;
}

Outcome integrality_example() {
    Outcome o;
    const auto rep = is_integral_over_formal(parse_equation("z^2 - x1*(1 - x1/x2)"));
    o.require(!rep.integral, "reported integral");
    o.require(rep.witness && *rep.witness == ExponentVector::from_ints({2, -1}),
              "witness " + (rep.witness ? rep.witness->to_string() : std::string("none")));
    if (o.ok) {
        o.detail = "not integral, witness " + rep.witness->to_string();
    }
    return o;
}

Outcome golden_a() {
    Outcome o;
    const ZPolynomial p = parse_equation("z^2 - x1*x2");
    const auto r = solve(p);
    o.require(r.roots.size() == 2, "root count " + std::to_string(r.roots.size()));
    int plus = 0;
    int minus = 0;
    const ExponentVector half{make_rational(1, 2), make_rational(1, 2)};
    for (const auto& root : r.roots) {
        const Series f = root.external();
        o.require(f.size() == 1, "root " + f.to_string());
        plus += f == Series::monomial(half, 1);
        minus += f == Series::monomial(half, -1);
        o.require(!root.residual_floor.has_value(), "nonzero residual");
        o.require(root.series.denominator() == 2, "denominator " + to_string(root.series.denominator()));
        o.require(root.certificate.is_identity(), "certificate " + root.certificate.to_string());
    }
    o.require(plus == 1 && minus == 1, "roots are not +-x1^(1/2)*x2^(1/2)");
    if (o.ok) {
        o.detail = "+-x1^(1/2)*x2^(1/2), d = 2, identity certificate, residual exact";
    }
    return o;
}

Outcome golden_b() {
    Outcome o;
    SolveConfig cfg;
    cfg.precision = 6;
    const auto t0 = Clock::now();
    const auto r = solve(parse_equation("z^2 - x1 - x2"), cfg);
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(r.roots.size() == 2, "root count " + std::to_string(r.roots.size()));
    for (const auto& root : r.roots) {
        const int sign = sgn(root.series.coefficient(ExponentVector{Rational(0), make_rational(1, 2)}));
        // Oracle: +-x2^(1/2) sum binom(1/2, k) (x1/x2)^k, which in prepared
        // coordinates (x1 -> x1 x2) is +-sum binom(1/2, k) x1^k x2^(1/2).
        TermMap want;
        Rational binom = 1;
        for (int k = 0; Rational(k) + make_rational(1, 2) < cfg.precision; ++k) {
            want[ExponentVector{Rational(k), make_rational(1, 2)}] = sign * binom;
            binom *= (make_rational(1, 2) - k) / Rational(k + 1);
        }
        o.require(sign != 0 && root.series.terms() == want, "prepared root " + root.series.to_string());
        o.require(root.log.size() >= 2 && root.log[0].kind == StepKind::vertical, "first step is not vertical");
        bool phi12 = false;
        for (const auto& step : root.log) {
            phi12 = phi12 || (step.kind == StepKind::segment && step.e == 1);
        }
        o.require(phi12, "no phi_12 preparation with e = 1");
        o.require(root.residual_floor && *root.residual_floor >= cfg.precision, "residual below 6");
    }
    o.require(s < 1.0, "took " + std::to_string(s) + " s");
    if (o.ok) {
        std::ostringstream d;
        d << "binomial series through degree 6, vertical then phi_12 e=1, " << s * 1000 << " ms";
        o.detail = d.str();
    }
    return o;
}

Outcome planted() {
    Outcome o;
    SolveConfig cfg;
    cfg.precision = 6;
    std::mt19937_64 rng(20260101);
    const auto t0 = Clock::now();
    int failures = 0;
    std::string first;
    for (int k = 0; k < 200; ++k) {
        PlantedConfig pc;
        pc.n = 2 + static_cast<std::size_t>(k % 2);
        pc.m = 2 + (k / 2) % 2;
        const auto inst = make_planted(rng, pc);
        bool ok = false;
        try {
            const auto r = solve_over_cone_ring(inst.external, cfg);
            ok = roots_match(inst.external_roots, r.result.roots, cfg.precision);
            for (const auto& root : r.result.roots) {
                ok = ok && (!root.residual_floor || *root.residual_floor >= cfg.precision);
            }
        } catch (const std::exception& e) {
            first = first.empty() ? std::string(e.what()) : first;
        }
        if (!ok) {
            ++failures;
            first = first.empty() ? "instance " + std::to_string(k) : first;
        }
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(failures == 0, std::to_string(failures) + " failures, first: " + first);
    o.require(s < 60.0, "took " + std::to_string(s) + " s");
    if (o.ok) {
        std::ostringstream d;
        d << "200/200 recovered at T = 6, " << s << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome principalization() {
    Outcome o;
    std::mt19937_64 rng(777);
    int caps = 0;
    for (int k = 0; k < 1000 && o.ok; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        LatticeSet set;
        const int size = uniform(rng, 1, 6);
        for (int t = 0; t < size; ++t) {
            set.push_back(random_integer_vector(rng, n, 0, 8));
        }
        try {
            const auto r = principalize({set}, 10000);
            o.require(r.map.is_blowup_composition(), "map is not order-preserving");
            bool apex_in = false;
            for (const auto& a : set) {
                const auto img = r.map.apply(a);
                const auto c = product_compare(r.apexes[0], img);
                o.require(c == PartialOrdering::less_equal || c == PartialOrdering::equal,
                          "image " + img.to_string() + " not above apex " + r.apexes[0].to_string());
                apex_in = apex_in || img == r.apexes[0];
            }
            o.require(apex_in, "apex not in the image");
        } catch (const CapExceeded&) {
            ++caps;
        }
    }
    o.require(caps == 0, std::to_string(caps) + " cap-exceeded events");
    if (o.ok) {
        o.detail = "1000 sets, postcondition holds, 0 cap events at 10000";
    }
    return o;
}

Outcome s_cones() {
    Outcome o;
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 500 && o.ok; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
        const auto m = random_word(rng, n, uniform(rng, 0, 12), -1);
        for (std::size_t r = 0; r < n; ++r) {
            o.require(is_lex_positive(m.row(r)), "row " + m.row(r).to_string() + " of " + m.to_string());
        }
        const auto inv = inverse(m);
        for (const auto& row : inv.rows()) {
            for (auto e : row) {
                o.require(e >= 0, "inverse has a negative entry: " + inv.to_string());
            }
        }
    }
    for (int k = 0; k < 500 && o.ok; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
        std::vector<ExponentVector> gens;
        const int count = uniform(rng, 0, 4);
        for (int t = 0; t < count; ++t) {
            ExponentVector g = random_integer_vector(rng, n, -5, 5);
            if (first_nonzero_sign(g) < 0) {
                g = -g;
            }
            if (!g.is_zero()) {
                gens.push_back(g);
            }
        }
        ExponentVector bad = random_integer_vector(rng, n, -5, 5);
        const std::size_t lead = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
        for (std::size_t i = 0; i < lead; ++i) {
            bad[i] = 0;
        }
        bad[lead] = -uniform(rng, 1, 5);
        gens.insert(gens.begin() + uniform(rng, 0, static_cast<int>(gens.size())), bad);
        o.require(!is_s_cone(Cone(gens, n)), "accepted a cone containing " + bad.to_string());
    }
    if (o.ok) {
        o.detail = "500 blow-down cones lex-positive with nonnegative inverse, 500 negatives rejected";
    }
    return o;
}

Outcome automorphisms() {
    Outcome o;
    std::mt19937_64 rng(99);
    for (int k = 0; k < 300 && o.ok; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        const auto m = random_unipotent(rng, n, 4);
        const Series f = random_series(rng, n, uniform(rng, 1, 3), uniform(rng, 1, 5), -3, 5);
        o.require(apply_map(apply_map(f, m), inverse(m)) == f, "round trip of " + f.to_string());
    }
    for (int k = 0; k < 300 && o.ok; ++k) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        const auto m = random_unipotent(rng, n, 4);
        const Series f = random_series(rng, n, 2, uniform(rng, 1, 4), -3, 5);
        const Series g = random_series(rng, n, 2, uniform(rng, 1, 4), -3, 5);
        o.require(apply_map(f * g, m) == apply_map(f, m) * apply_map(g, m),
                  "not multiplicative on " + f.to_string() + ", " + g.to_string());
    }
    if (o.ok) {
        o.detail = "300 round trips and 300 products exact";
    }
    return o;
}

Outcome closure() {
    Outcome o;
    std::mt19937_64 rng(5150);
    const Rational t = 6;
    int done = 0;
    while (done < 50 && o.ok) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        const Series f = random_series(rng, n, 2, uniform(rng, 1, 3), 0, 6);
        if (f.empty() || f.denominator() != 2) {
            continue;
        }
        ++done;
        const ZPolynomial mp = minimal_polynomial(f);
        o.require(mp.is_monic(), "not monic for " + f.to_string());
        o.require(mp.denominator() == 1, "coefficient lattice " + to_string(mp.denominator()));
        const Series res = substitute_root(mp, f);
        const auto floor = res.min_degree();
        o.require(!floor || *floor >= t, "residual floor " + (floor ? to_string(*floor) : "") + " for " + f.to_string());
    }
    if (o.ok) {
        o.detail = "50 series with d = 2, monic integral-lattice minpolys, residual exact";
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"blow-down matrix product", matrix_identity},
        {"non-composition quotients", nota_matrices},
        {"integrality witness", integrality_example},
        {"golden monomial root", golden_a},
        {"golden binomial series", golden_b},
        {"planted roots (200)", planted},
        {"principalization (1000)", principalization},
        {"S-cones (500 + 500)", s_cones},
        {"automorphisms (300 + 300)", automorphisms},
        {"closure round trip (50)", closure},
    };
    int failed = 0;
    int id = 1;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.ok ? 0 : 1;
        std::cout << "criterion " << id++ << ": " << (o.ok ? "PASS" : "FAIL") << "  " << name << ": " << o.detail
                  << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
