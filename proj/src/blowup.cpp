#include "puiseux/blowup.hpp"

#include <algorithm>

namespace puiseux {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error("monomial map entry overflow");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error("monomial map entry overflow");
    }
    return r;
}

void require_same_dimension(const MonomialMap& a, const MonomialMap& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("monomial maps of dimension " + std::to_string(a.dimension()) + " and " +
                                std::to_string(b.dimension()));
    }
}

} // namespace

MonomialMap::MonomialMap(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (rows_[r].size() != n) {
            throw Error("monomial map must be square");
        }
        for (std::size_t c = 0; c <= r; ++c) {
            const std::int64_t expected = (c == r) ? 1 : 0;
            if (rows_[r][c] != expected) {
                throw Error("monomial map must be unit upper-triangular");
            }
        }
    }
}

MonomialMap MonomialMap::identity(std::size_t n) {
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        rows[i][i] = 1;
    }
    MonomialMap m;
    m.rows_ = std::move(rows);
    return m;
}

MonomialMap MonomialMap::elementary(std::size_t n, std::size_t i, std::size_t j, int sign) {
    if (i >= n || j >= n) {
        throw Error("elementary map index out of range");
    }
    if (i == j) {
        throw Error("elementary map needs i != j");
    }
    if (sign != 1 && sign != -1) {
        throw Error("elementary map sign must be +1 or -1");
    }
    auto rows = identity(n).rows_;
    rows[i][j] = sign;
    // i > j yields a lower-triangular entry: a valid monomial automorphism, but
    // outside the unipotent upper-triangular family this class models.
    if (i > j) {
        throw Error("elementary map phi_ij with i > j does not preserve the lexicographic order");
    }
    MonomialMap m;
    m.rows_ = std::move(rows);
    return m;
}

ExponentVector MonomialMap::row(std::size_t r) const {
    ExponentVector v(dimension());
    for (std::size_t c = 0; c < dimension(); ++c) {
        v[c] = rows_[r][c];
    }
    return v;
}

ExponentVector MonomialMap::apply(const ExponentVector& a) const {
    const std::size_t n = dimension();
    if (a.size() != n) {
        throw DimensionMismatch("exponent of length " + std::to_string(a.size()) + " under a map of dimension " +
                                std::to_string(n));
    }
    ExponentVector out(n);
    for (std::size_t c = 0; c < n; ++c) {
        Rational s = a[c];
        for (std::size_t r = 0; r < c; ++r) {
            if (rows_[r][c] != 0 && sgn(a[r]) != 0) {
                s += a[r] * Rational(static_cast<long>(rows_[r][c]));
            }
        }
        out[c] = std::move(s);
    }
    return out;
}

bool MonomialMap::is_identity() const {
    return *this == identity(dimension());
}

bool MonomialMap::is_blowup_composition() const {
    for (const auto& row : rows_) {
        for (auto e : row) {
            if (e < 0) {
                return false;
            }
        }
    }
    return true;
}

bool MonomialMap::is_blowdown_composition() const {
    return inverse(*this).is_blowup_composition();
}

MonomialMap MonomialMap::lift() const {
    const std::size_t n = dimension();
    auto out = identity(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out.rows_[r + 1][c + 1] = rows_[r][c];
        }
    }
    return out;
}

void MonomialMap::append_elementary(std::size_t i, std::size_t j, std::int64_t count) {
    const std::size_t n = dimension();
    if (i >= n || j >= n || i >= j) {
        throw Error("append_elementary needs 0 <= i < j < n");
    }
    // Column j += count * column i.
    for (std::size_t r = 0; r < n; ++r) {
        if (rows_[r][i] != 0) {
            rows_[r][j] = checked_add(rows_[r][j], checked_mul(count, rows_[r][i]));
        }
    }
}

std::string MonomialMap::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < dimension(); ++r) {
        s += r ? " / " : "";
        for (std::size_t c = 0; c < dimension(); ++c) {
            s += (c ? "," : "") + std::to_string(rows_[r][c]);
        }
    }
    return s + "]";
}

MonomialMap compose(const MonomialMap& m1, const MonomialMap& m2) {
    require_same_dimension(m1, m2);
    const std::size_t n = m1.dimension();
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            std::int64_t s = 0;
            for (std::size_t k = r; k <= c; ++k) {
                s = checked_add(s, checked_mul(m1(r, k), m2(k, c)));
            }
            rows[r][c] = s;
        }
    }
    return MonomialMap(std::move(rows));
}

MonomialMap inverse(const MonomialMap& m) {
    // Back substitution for X with M X = I; the diagonal is 1, so it stays integral.
    const std::size_t n = m.dimension();
    std::vector<std::vector<std::int64_t>> x(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        x[c][c] = 1;
        for (std::size_t r = c; r-- > 0;) {
            std::int64_t s = 0;
            for (std::size_t k = r + 1; k <= c; ++k) {
                s = checked_add(s, checked_mul(m(r, k), x[k][c]));
            }
            x[r][c] = -s;
        }
    }
    return MonomialMap(std::move(x));
}

bool is_blowup_composition(const MonomialMap& m) {
    return m.is_blowup_composition();
}

FirstQuadrantReduction reduce_to_first_quadrant(const std::vector<ExponentVector>& generators,
                                                std::size_t n,
                                                std::int64_t cap) {
    std::vector<ExponentVector> work;
    work.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.size() != n) {
            throw DimensionMismatch("generator " + g.to_string() + " in dimension " + std::to_string(n));
        }
        if (first_nonzero_sign(g) < 0) {
            throw Error("generator " + g.to_string() + " is lexicographically negative");
        }
        if (!g.is_zero()) {
            work.push_back(g);
        }
    }

    FirstQuadrantReduction out{MonomialMap::identity(n), {}, 0};
    for (;;) {
        const ExponentVector* pick = nullptr;
        std::size_t best_i0 = n;
        for (const auto& v : work) {
            if (v.is_nonnegative()) {
                continue;
            }
            std::size_t i0 = 0;
            while (sgn(v[i0]) == 0) {
                ++i0;
            }
            if (i0 < best_i0) {
                best_i0 = i0;
                pick = &v;
            }
        }
        if (pick == nullptr) {
            return out;
        }
        const ExponentVector& v = *pick;
        std::size_t j = best_i0 + 1;
        while (sgn(v[j]) >= 0) {
            ++j;
        }
        const Rational ratio = -v[j] / v[best_i0];
        const std::int64_t count = to_int64(puiseux::ceil(ratio));
        if (out.applications + count > cap) {
            throw CapExceeded("first-quadrant reduction exceeded " + std::to_string(cap) + " blowing-ups");
        }
        out.applications += count;
        out.map.append_elementary(best_i0, j, count);
        out.word.push_back({best_i0, j, count});
        const Rational k(static_cast<long>(count));
        for (auto& w : work) {
            if (sgn(w[best_i0]) != 0) {
                w[j] += k * w[best_i0];
            }
        }
    }
}

namespace {

void validate_sets(const std::vector<LatticeSet>& sets, std::size_t& n) {
    if (sets.empty()) {
        throw Error("principalize needs at least one set");
    }
    n = 0;
    for (const auto& s : sets) {
        if (s.empty()) {
            throw Error("principalize: empty input set");
        }
        for (const auto& a : s) {
            if (n == 0) {
                n = a.size();
            }
            if (a.size() != n || n == 0) {
                throw DimensionMismatch("principalize: inconsistent dimensions");
            }
            if (!a.is_nonnegative()) {
                throw Error("principalize: point " + a.to_string() + " outside the first quadrant");
            }
        }
    }
}

const ExponentVector& lex_min(const LatticeSet& s) {
    return *std::min_element(s.begin(), s.end());
}

} // namespace

PrincipalizationResult principalize(const std::vector<LatticeSet>& sets, std::int64_t cap) {
    std::size_t n = 0;
    validate_sets(sets, n);
    std::vector<ExponentVector> diffs;
    for (const auto& s : sets) {
        const auto& lo = lex_min(s);
        for (const auto& a : s) {
            auto d = a - lo;
            if (!d.is_zero() && !d.is_nonnegative()) {
                diffs.push_back(std::move(d));
            }
        }
    }
    auto red = reduce_to_first_quadrant(diffs, n, cap);
    PrincipalizationResult out{red.map, {}, std::move(red.word)};
    for (const auto& s : sets) {
        out.apexes.push_back(out.map.apply(lex_min(s)));
    }
    return out;
}

PrincipalizationResult principalize_sequential(const std::vector<LatticeSet>& sets, std::int64_t cap) {
    std::size_t n = 0;
    validate_sets(sets, n);
    PrincipalizationResult out{MonomialMap::identity(n), {}, {}};
    std::int64_t budget = cap;
    for (const auto& s : sets) {
        LatticeSet image;
        image.reserve(s.size());
        for (const auto& a : s) {
            image.push_back(out.map.apply(a));
        }
        auto step = principalize({image}, budget);
        for (const auto& w : step.word) {
            budget -= w.count;
        }
        out.map = compose(out.map, step.map);
        out.word.insert(out.word.end(), step.word.begin(), step.word.end());
    }
    for (const auto& s : sets) {
        out.apexes.push_back(out.map.apply(lex_min(s)));
    }
    return out;
}

bool is_principalized(const LatticeSet& image, const ExponentVector& apex) {
    bool found = false;
    for (const auto& a : image) {
        if (!product_leq(apex, a)) {
            return false;
        }
        found = found || a == apex;
    }
    return found;
}

} // namespace puiseux
