#include "puiseux/rational.hpp"

#include <cctype>

namespace puiseux {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParseError("empty rational", 0);
    }
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) {
            return false;
        }
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
                return false;
            }
        }
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') {
            t.erase(0, 1);
        }
        return t;
    };
    std::string num = strip_plus(s.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : strip_plus(s.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den)) {
        throw ParseError("malformed rational '" + s + "'", 0);
    }
    Integer d(den);
    if (d == 0) {
        throw DivisionByZero("zero denominator in '" + s + "'");
    }
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::string to_string(const Integer& z) {
    return z.get_str();
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) {
        throw Error("integer " + z.get_str() + " does not fit in 64 bits");
    }
    return z.get_si();
}

std::int64_t to_int64(const Rational& r) {
    if (r.get_den() != 1) {
        throw Error("rational " + r.get_str() + " is not an integer");
    }
    return to_int64(Integer(r.get_num()));
}

} // namespace puiseux
