#include <gtest/gtest.h>

#include <random>

#include "puiseux/lattice.hpp"
#include "support.hpp"

using namespace puiseux;
using puiseux::check::random_integer_vector;

namespace {

ExponentVector v(std::initializer_list<long> c) {
    return ExponentVector::from_ints(c);
}

} // namespace

TEST(Rational, ParsesSignedFractions) {
    EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_EQ(parse_rational("+2/4"), make_rational(1, 2));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, FloorCeilAndPrinting) {
    EXPECT_EQ(floor(make_rational(-3, 2)), Integer(-2));
    EXPECT_EQ(ceil(make_rational(-3, 2)), Integer(-1));
    EXPECT_EQ(floor(Rational(4)), Integer(4));
    EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(lcm(Integer(4), Integer(6)), Integer(12));
}

TEST(ExponentVector, DegreeAndDenominator) {
    ExponentVector a{make_rational(1, 2), make_rational(-1, 3), Rational(2)};
    EXPECT_EQ(a.degree(), make_rational(13, 6));
    EXPECT_EQ(a.denominator(), Integer(6));
    EXPECT_FALSE(a.is_integral());
    EXPECT_FALSE(a.is_nonnegative());
    EXPECT_EQ(a.tail(), (ExponentVector{make_rational(-1, 3), Rational(2)}));
    EXPECT_EQ(a.tail().with_head(make_rational(1, 2)), a);
}

TEST(ExponentVector, LexAndProductOrders) {
    EXPECT_EQ(lex_compare(v({0, 1, -5}), v({0, 1, -4})), Ordering::less);
    EXPECT_EQ(lex_compare(v({1, -9}), v({0, 9})), Ordering::greater);
    EXPECT_EQ(product_compare(v({1, 2}), v({1, 3})), PartialOrdering::less_equal);
    EXPECT_EQ(product_compare(v({1, 2}), v({2, 1})), PartialOrdering::incomparable);
    EXPECT_EQ(product_compare(v({2, 2}), v({2, 2})), PartialOrdering::equal);
    EXPECT_TRUE(is_lex_positive(v({0, 0, 1})));
    EXPECT_FALSE(is_lex_positive(v({0, -1, 3})));
    EXPECT_EQ(first_nonzero_sign(v({0, 0})), 0);
    EXPECT_THROW(lex_compare(v({1}), v({1, 2})), DimensionMismatch);
}

TEST(ExponentVector, ProductOrderRefinesLexOrder) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
        const auto a = random_integer_vector(rng, 3, -3, 3);
        const auto b = random_integer_vector(rng, 3, -3, 3);
        if (product_leq(a, b)) {
            EXPECT_NE(lex_compare(a, b), Ordering::greater) << a.to_string() << " " << b.to_string();
        }
        // Lex order is total and antisymmetric.
        const auto ab = lex_compare(a, b);
        const auto ba = lex_compare(b, a);
        EXPECT_EQ(ab == Ordering::equal, ba == Ordering::equal);
        EXPECT_EQ(ab == Ordering::less, ba == Ordering::greater);
    }
}
