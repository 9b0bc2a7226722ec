#include "puiseux/field.hpp"

#include <algorithm>

namespace puiseux {

FieldElement invert(const FieldElement& a) {
    if (sgn(a) == 0) {
        throw DivisionByZero("inverse of zero");
    }
    FieldElement r = 1 / a;
    r.canonicalize();
    return r;
}

UnivariatePoly::UnivariatePoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

FieldElement UnivariatePoly::operator()(const FieldElement& x) const {
    FieldElement acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UnivariatePoly UnivariatePoly::deflate(const FieldElement& r) const {
    if (degree() < 1) {
        throw Error("cannot deflate a constant polynomial");
    }
    // Synthetic division from the top.
    std::vector<FieldElement> q(coeffs_.size() - 1);
    FieldElement carry;
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        carry = coeffs_[k + 1] + carry * r;
        q[k] = carry;
    }
    if (sgn(coeffs_[0] + carry * r) != 0) {
        throw Error("deflate: " + r.get_str() + " is not a root");
    }
    return UnivariatePoly(std::move(q));
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (sgn(coeffs_[k]) == 0) {
            continue;
        }
        if (!s.empty()) {
            s += sgn(coeffs_[k]) < 0 ? " - " : " + ";
        } else if (sgn(coeffs_[k]) < 0) {
            s += "-";
        }
        FieldElement a = abs(coeffs_[k]);
        if (k == 0 || a != 1) {
            s += a.get_str();
            if (k) {
                s += "*";
            }
        }
        if (k) {
            s += var;
            if (k > 1) {
                s += "^" + std::to_string(k);
            }
        }
    }
    return s;
}

Unsplittable::Unsplittable(UnivariatePoly factor, std::vector<RootWithMultiplicity> found)
    : Error("polynomial does not split over the rationals; remaining factor " + factor.to_string()),
      factor_(std::move(factor)),
      found_(std::move(found)) {}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Integer multiple of p with coprime integer coefficients.
std::vector<Integer> primitive_integer_form(const UnivariatePoly& p) {
    Integer den = 1;
    for (const auto& c : p.coefficients()) {
        den = lcm(den, c.get_den());
    }
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coefficients()) {
        Integer v = c.get_num() * (den / c.get_den());
        out.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 0) {
        for (auto& v : out) {
            v /= g;
        }
    }
    return out;
}

} // namespace

RationalRootSplit rational_roots(const UnivariatePoly& p) {
    if (p.degree() < 1) {
        throw Error("rational_roots needs degree >= 1");
    }
    RationalRootSplit out;
    UnivariatePoly rest = p;

    int zero_mult = 0;
    while (rest.degree() >= 1 && sgn(rest.coefficients()[0]) == 0) {
        rest = rest.deflate(FieldElement(0));
        ++zero_mult;
    }
    if (zero_mult) {
        out.roots.push_back({FieldElement(0), zero_mult});
    }

    if (rest.degree() >= 1) {
        auto ints = primitive_integer_form(rest);
        auto nums = positive_divisors(ints.front());
        auto dens = positive_divisors(ints.back());
        std::vector<FieldElement> candidates;
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                FieldElement c(a, b);
                c.canonicalize();
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            int mult = 0;
            while (rest.degree() >= 1 && sgn(rest(c)) == 0) {
                rest = rest.deflate(c);
                ++mult;
            }
            if (mult) {
                out.roots.push_back({c, mult});
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.root < b.root; });
    out.remainder = std::move(rest);
    return out;
}

std::vector<RootWithMultiplicity> univariate_roots(const UnivariatePoly& p) {
    auto split = rational_roots(p);
    if (split.remainder.degree() >= 1) {
        throw Unsplittable(split.remainder, split.roots);
    }
    return split.roots;
}

} // namespace puiseux
