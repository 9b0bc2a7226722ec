#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace puiseux {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Raised when an iterative reduction (principalization, first-quadrant
/// reduction, Newton steps) exceeds its configured iteration cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

/// Checked conversion to a machine integer.
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& r);

} // namespace puiseux
