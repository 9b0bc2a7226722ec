#include "puiseux/lattice.hpp"

namespace puiseux {

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
    ExponentVector e(n);
    e[i] = 1;
    return e;
}

ExponentVector ExponentVector::from_ints(std::initializer_list<long> coords) {
    ExponentVector e(coords.size());
    std::size_t i = 0;
    for (long c : coords) {
        e[i++] = c;
    }
    return e;
}

Rational ExponentVector::degree() const {
    Rational s;
    for (const auto& c : coords_) {
        s += c;
    }
    return s;
}

bool ExponentVector::is_zero() const {
    for (const auto& c : coords_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool ExponentVector::is_nonnegative() const {
    for (const auto& c : coords_) {
        if (sgn(c) < 0) {
            return false;
        }
    }
    return true;
}

bool ExponentVector::is_integral() const {
    for (const auto& c : coords_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

Integer ExponentVector::denominator() const {
    Integer d = 1;
    for (const auto& c : coords_) {
        d = lcm(d, c.get_den());
    }
    return d;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
    require_same_dimension(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += other.coords_[i];
    }
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
    require_same_dimension(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= other.coords_[i];
    }
    return *this;
}

ExponentVector& ExponentVector::operator*=(const Rational& s) {
    for (auto& c : coords_) {
        c *= s;
    }
    return *this;
}

bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return lex_compare(a, b) == Ordering::less;
}

ExponentVector ExponentVector::tail() const {
    return ExponentVector(std::vector<Rational>(coords_.begin() + (coords_.empty() ? 0 : 1), coords_.end()));
}

ExponentVector ExponentVector::with_head(const Rational& head) const {
    std::vector<Rational> c;
    c.reserve(coords_.size() + 1);
    c.push_back(head);
    c.insert(c.end(), coords_.begin(), coords_.end());
    return ExponentVector(std::move(c));
}

std::string ExponentVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += puiseux::to_string(coords_[i]);
    }
    return s + ")";
}

void require_same_dimension(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("exponent vectors of length " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
}

Ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
    require_same_dimension(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c < 0) {
            return Ordering::less;
        }
        if (c > 0) {
            return Ordering::greater;
        }
    }
    return Ordering::equal;
}

PartialOrdering product_compare(const ExponentVector& a, const ExponentVector& b) {
    require_same_dimension(a, b);
    bool le = true;
    bool ge = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        le = le && c <= 0;
        ge = ge && c >= 0;
    }
    if (le && ge) {
        return PartialOrdering::equal;
    }
    if (le) {
        return PartialOrdering::less_equal;
    }
    if (ge) {
        return PartialOrdering::greater_equal;
    }
    return PartialOrdering::incomparable;
}

bool product_leq(const ExponentVector& a, const ExponentVector& b) {
    auto o = product_compare(a, b);
    return o == PartialOrdering::less_equal || o == PartialOrdering::equal;
}

int first_nonzero_sign(const ExponentVector& a) {
    for (const auto& c : a) {
        if (int s = sgn(c); s != 0) {
            return s;
        }
    }
    return 0;
}

} // namespace puiseux
