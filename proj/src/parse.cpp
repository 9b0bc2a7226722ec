#include "puiseux/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace puiseux {

namespace {

/// Sparse monomial: z-degree and nonzero x-exponents by 0-based index.
struct Key {
    Rational z = 0;
    std::map<std::size_t, Rational> x;

    friend bool operator<(const Key& a, const Key& b) {
        if (a.z != b.z) {
            return a.z < b.z;
        }
        return a.x < b.x;
    }
};

using Poly = std::map<Key, Rational>;

void add_into(Poly& p, const Key& k, const Rational& c) {
    auto [it, inserted] = p.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            p.erase(it);
        }
    } else if (sgn(c) == 0) {
        p.erase(it);
    }
}

Key combine(const Key& a, const Key& b, const Rational& sign) {
    Key out = a;
    out.z += sign * b.z;
    for (const auto& [i, e] : b.x) {
        Rational& slot = out.x[i];
        slot += sign * e;
        if (sgn(slot) == 0) {
            out.x.erase(i);
        }
    }
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            add_into(out, combine(ka, kb, 1), ca * cb);
        }
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, bool series_mode) : s_(text), series_(series_mode) {}

    Poly run() {
        Poly p = expr(true);
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return p;
    }

    std::size_t max_index() const { return max_index_; }
    const std::optional<Rational>& order() const { return order_; }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    Integer digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    /// ['+'|'-'] digits ['/' digits]
    Rational signed_rational() {
        Rational sign = 1;
        if (accept('-')) {
            sign = -1;
        } else {
            accept('+');
        }
        Rational r(digits());
        if (accept('/')) {
            const std::size_t at = pos_;
            Integer den = digits();
            if (den == 0) {
                throw ParseError("zero denominator", at);
            }
            r /= Rational(den);
        }
        r.canonicalize();
        return sign * r;
    }

    bool at_order_term() {
        skip();
        return series_ && pos_ + 1 < s_.size() && s_[pos_] == 'O' && s_[pos_ + 1] == '(';
    }

    Poly expr(bool top) {
        Poly acc;
        bool first = true;
        for (;;) {
            Rational sign = 1;
            if (accept('-')) {
                sign = -1;
            } else if (!accept('+') && !first) {
                break;
            }
            if (top && at_order_term()) {
                if (sign < 0 || order_) {
                    fail("a precision term must appear once, added");
                }
                pos_ += 2;
                order_ = signed_rational();
                expect(')');
                if (sgn(*order_) <= 0) {
                    fail("precision must be positive");
                }
            } else {
                for (const auto& [k, c] : term()) {
                    add_into(acc, k, sign * c);
                }
            }
            first = false;
            skip();
            if (pos_ == s_.size() || (!peek('+') && !peek('-'))) {
                break;
            }
            if (order_) {
                fail("the precision term must come last");
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = multiply(acc, factor());
            } else if (peek('/')) {
                const std::size_t at = ++pos_;
                Poly d = factor();
                if (d.size() != 1) {
                    throw ParseError("only a monomial or constant may divide", at);
                }
                const auto& [k, c] = *d.begin();
                if (sgn(k.z) != 0) {
                    throw ParseError("division by z", at);
                }
                Poly inv;
                inv.emplace(combine(Key{}, k, -1), 1 / c);
                acc = multiply(acc, inv);
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (!accept('^')) {
            return base;
        }
        const std::size_t at = pos_;
        Rational e;
        if (accept('(')) {
            e = signed_rational();
            expect(')');
        } else {
            e = signed_rational();
        }
        if (base.size() == 1) {
            const auto& [k, c] = *base.begin();
            if (e.get_den() != 1 && c != 1) {
                throw ParseError("rational power of a non-unit coefficient", at);
            }
            Key out;
            out.z = k.z * e;
            for (const auto& [i, x] : k.x) {
                out.x.emplace(i, x * e);
            }
            Rational coef = 1;
            if (e.get_den() == 1) {
                mpq_class base_c = c;
                long ex = e.get_num().get_si();
                mpz_class num, den;
                mpz_pow_ui(num.get_mpz_t(), base_c.get_num_mpz_t(), static_cast<unsigned long>(ex < 0 ? -ex : ex));
                mpz_pow_ui(den.get_mpz_t(), base_c.get_den_mpz_t(), static_cast<unsigned long>(ex < 0 ? -ex : ex));
                coef = ex < 0 ? Rational(den, num) : Rational(num, den);
                coef.canonicalize();
            }
            Poly out_p;
            out_p.emplace(out, coef);
            return out_p;
        }
        if (e.get_den() != 1 || e < 0) {
            throw ParseError("a sum can only be raised to a nonnegative integer power", at);
        }
        Poly acc;
        acc.emplace(Key{}, 1);
        for (long i = 0; i < e.get_num().get_si(); ++i) {
            acc = multiply(acc, base);
        }
        return acc;
    }

    Poly primary() {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        const char c = s_[pos_];
        Poly out;
        if (c == '(') {
            ++pos_;
            out = expr(false);
            expect(')');
            return out;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            out.emplace(Key{}, Rational(digits()));
            if (out.begin()->second == 0) {
                out.clear();
            }
            return out;
        }
        if (c == 'z') {
            if (series_) {
                fail("z in a series");
            }
            ++pos_;
            Key k;
            k.z = 1;
            out.emplace(k, 1);
            return out;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                fail("expected a variable index after 'x'");
            }
            const std::size_t at = pos_;
            Integer idx = digits();
            if (idx < 1 || idx > 64) {
                throw ParseError("variable index out of range", at);
            }
            const auto i = static_cast<std::size_t>(idx.get_ui());
            max_index_ = std::max(max_index_, i);
            Key k;
            k.x.emplace(i - 1, 1);
            out.emplace(k, 1);
            return out;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    bool series_;
    std::size_t pos_ = 0;
    std::size_t max_index_ = 0;
    std::optional<Rational> order_;
};

std::size_t resolve_dimension(std::size_t requested, std::size_t seen) {
    if (requested == 0) {
        return std::max<std::size_t>(seen, 1);
    }
    if (seen > requested) {
        throw ParseError("variable x" + std::to_string(seen) + " in " + std::to_string(requested) + " variables", 0);
    }
    return requested;
}

ExponentVector dense(const Key& k, std::size_t n) {
    ExponentVector a = ExponentVector::zero(n);
    for (const auto& [i, e] : k.x) {
        a[i] = e;
    }
    return a;
}

} // namespace

ZPolynomial parse_equation(std::string_view text, std::size_t n) {
    Parser parser(text, false);
    const Poly p = parser.run();
    n = resolve_dimension(n, parser.max_index());
    std::map<int, TermMap> by_z;
    for (const auto& [k, c] : p) {
        if (k.z.get_den() != 1 || k.z < 0) {
            throw ParseError("z must appear with a nonnegative integer exponent", 0);
        }
        by_z[static_cast<int>(k.z.get_num().get_si())].emplace(dense(k, n), c);
    }
    const int m = by_z.empty() ? 0 : by_z.rbegin()->first;
    std::vector<Series> coeffs(static_cast<std::size_t>(m) + 1, Series(n));
    for (auto& [deg, terms] : by_z) {
        coeffs[static_cast<std::size_t>(deg)] = Series(n, std::move(terms));
    }
    return ZPolynomial(std::move(coeffs));
}

Series parse_series(std::string_view text, std::size_t n) {
    Parser parser(text, true);
    const Poly p = parser.run();
    n = resolve_dimension(n, parser.max_index());
    TermMap terms;
    for (const auto& [k, c] : p) {
        terms.emplace(dense(k, n), c);
    }
    const Precision prec = parser.order() ? Precision::at(*parser.order()) : Precision::exact();
    return Series(n, std::move(terms), prec);
}

} // namespace puiseux
