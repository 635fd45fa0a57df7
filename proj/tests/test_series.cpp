#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace index3d;
using namespace index3d::testing;

TEST(HalfInt, ParsesIntegersAndHalves) {
    EXPECT_EQ(HalfInt::parse("7").twice, 14);
    EXPECT_EQ(HalfInt::parse("-3").twice, -6);
    EXPECT_EQ(HalfInt::parse("21/2").twice, 21);
    EXPECT_EQ(HalfInt::parse("-1/2").twice, -1);
    EXPECT_EQ(HalfInt::parse("4/2").twice, 4);
    EXPECT_EQ(HalfInt{21}.str(), "21/2");
    EXPECT_EQ(HalfInt{-4}.str(), "-2");
}

TEST(HalfInt, RejectsThirdsAndGarbage) {
    EXPECT_THROW(HalfInt::parse("1/3"), ParseError);
    EXPECT_THROW(HalfInt::parse("abc"), ParseError);
    EXPECT_THROW(HalfInt::parse(""), ParseError);
}

TEST(Series, TextFormat) {
    auto s = integer_series({1, -2, -3}, 11);
    EXPECT_EQ(s.to_text(), "1 - 2*q^1 - 3*q^2 + O(q^11)");
    EXPECT_EQ(TruncatedSeries::zero(hi(9)).to_text(), "0 + O(q^9)");
    auto h = doubled_series({{1, -1}, {5, 1}}, 21);
    EXPECT_EQ(h.to_text(), "-1*q^(1/2) + 1*q^(5/2) + O(q^(21/2))");
    auto neg = doubled_series({{-2, 3}}, 2);
    EXPECT_EQ(neg.to_text(), "3*q^(-1) + O(q^1)");
}

TEST(Series, TextRoundTrip) {
    for (const auto& s : {integer_series({1, -2, -3, 2, 8}, 11), doubled_series({{-3, 2}, {1, -1}, {7, 4}}, 21),
                          TruncatedSeries::zero(HalfInt{5})})
        EXPECT_EQ(TruncatedSeries::parse_text(s.to_text()), s);
}

TEST(Series, MachineRoundTrip) {
    auto s = doubled_series({{-1, 5}, {0, 1}, {3, -7}}, 13);
    EXPECT_EQ(s.to_machine(), "{\"twice_order\":13,\"terms\":[[-1,5],[0,1],[3,-7]]}");
    EXPECT_EQ(TruncatedSeries::parse_machine(s.to_machine()), s);
}

TEST(Series, ParseErrors) {
    EXPECT_THROW(TruncatedSeries::parse_text("1 + q^2"), ParseError);
    EXPECT_THROW(TruncatedSeries::parse_text("1 + x^2 + O(q^3)"), ParseError);
    EXPECT_THROW(TruncatedSeries::parse_machine("{\"terms\":[]}"), ParseError);
}

TEST(Series, SetIgnoresTermsAtOrAboveOrder) {
    TruncatedSeries s(hi(2));
    s.set(hi(2), 5);
    s.set(hi(3), 5);
    EXPECT_TRUE(s.is_zero());
}

TEST(Series, ProductTruncatesAtMinimalValidOrder) {
    auto a = doubled_series({{2, 1}}, 10);
    auto b = doubled_series({{0, 1}, {4, 1}}, 8);
    auto p = a * b;
    EXPECT_EQ(p.order().twice, 10);
    EXPECT_EQ(p, doubled_series({{2, 1}, {6, 1}}, 10));
}

TEST(Series, ZeroFactorKeepsItsOrderAsLowestExponent) {
    auto z = TruncatedSeries::zero(hi(3));
    auto a = doubled_series({{2, 1}}, 20);
    auto p = z * a;
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.order().twice, 6 + 2);
}

TEST(Series, PochhammerInverseIsPartitionCount) {
    auto p = pochhammer_inverse(100, hi(10));
    std::vector<long long> partitions{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    EXPECT_EQ(p, integer_series(partitions, 10));
    EXPECT_EQ(pochhammer_inverse(1, hi(4)), integer_series({1, 1, 1, 1}, 4));
    EXPECT_EQ(pochhammer_inverse(0, hi(4)), TruncatedSeries::one(hi(4)));
}

TEST(Series, PochhammerTimesFiniteProductIsOne) {
    TruncatedSeries prod = TruncatedSeries::one(hi(12));
    for (long long i = 1; i <= 4; ++i) {
        TruncatedSeries f = TruncatedSeries::one(hi(12));
        f.set(hi(i), -1);
        prod = prod * f;
    }
    EXPECT_EQ(prod * pochhammer_inverse(4, hi(12)), TruncatedSeries::one(hi(12)));
}

TEST(Series, MulSignPowerShiftsOrderAndSign) {
    auto s = integer_series({1, 2}, 5);
    auto t = s.mul_sign_power(3);
    EXPECT_EQ(t, doubled_series({{3, -1}, {5, -2}}, 13));
    EXPECT_EQ(t.mul_sign_power(-3), s);
}

TEST(Series, AdditionAndAgreement) {
    auto a = integer_series({1, 2, 3}, 5);
    auto b = integer_series({1, 2, 3}, 4);
    EXPECT_TRUE(a.agrees_with(b));
    EXPECT_FALSE(a.agrees_with(integer_series({1, 2, 3, 4}, 4)));
    auto c = a + b;
    EXPECT_EQ(c.order(), hi(4));
    EXPECT_EQ(c, integer_series({2, 4, 6}, 4));
    EXPECT_TRUE((a - a).is_zero());
}
