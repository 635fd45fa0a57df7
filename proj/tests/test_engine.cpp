#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace index3d;
using namespace index3d::testing;

namespace {

TruncatedSeries fig8_at(long long x, long long twice_y, long long order) {
    return index_peripheral(fixture("fig8"), {hi(x), HalfInt{twice_y}}, hi(order)).series;
}

/// (-1)^x q^{|x|(|y + x/2| + 1/2)} / (1 - q^{|x|}) below q^order.
TruncatedSeries toroidal_closed_form(long long x, long long y, long long order) {
    const long long ax = std::llabs(x);
    const long long twice_lead = ax * (std::llabs(2 * y + x) + 1);
    TruncatedSeries s(hi(order));
    for (long long e = twice_lead; e < 2 * order; e += 2 * ax) s.set(HalfInt{e}, x % 2 == 0 ? 1 : -1);
    return s;
}

}  // namespace

TEST(Index, FigureEightAtZero) {
    auto r = index(IndexRequest{fixture("fig8"), {}, hi(11), {}});
    EXPECT_EQ(r.verdict, Verdict::Converged);
    EXPECT_EQ(r.series, integer_series({1, -2, -3, 2, 8, 18, 18, 14, -12, -52, -106}, 11));
}

TEST(Index, FigureEightPeripheralGrid) {
    EXPECT_EQ(fig8_at(2, 0, 11), integer_series({0, -1, -1, 3, 6, 12, 9, 3, -19, -50, -88}, 11));
    EXPECT_EQ(fig8_at(0, 2, 11), integer_series({0, 0, 0, 1, 2, 5, 2, -3, -16, -32, -52}, 11));
    EXPECT_EQ(fig8_at(4, 2, 11), integer_series({0, 1, 0, 0, -1, -2, -5, -8, -10, -11, -6}, 11));
    EXPECT_EQ(fig8_at(0, 1, 10), doubled_series({{3, -2}, {7, 4}, {9, 10}, {11, 14}, {13, 10}, {15, -2}, {17, -32},
                                                 {19, -68}},
                                                20));
    EXPECT_EQ(fig8_at(1, 1, 11), integer_series({0, -1, -1, 2, 7, 11, 11, 3, -17, -49, -88}, 11));
    EXPECT_EQ(fig8_at(2, 1, 10), doubled_series({{1, -1}, {5, 1}, {7, 4}, {9, 7}, {11, 7}, {13, 3}, {15, -12},
                                                 {17, -31}, {19, -62}},
                                                20));
}

TEST(Index, FigureEightMeridianMatchesOracle) {
    // The direct sum over k of I(k - 1, k) I(k, k - 1), from tests/oracles/tetindex_oracle.py.
    EXPECT_EQ(fig8_at(1, 0, 11), integer_series({0, -2, -2, 2, 8, 16, 16, 10, -14, -52, -102}, 11));
}

TEST(Index, FigureEightSignSymmetry) {
    for (long long x : {0, 1, 2, 3})
        for (long long ty : {0, 1, 2}) {
            auto base = fig8_at(x, ty, 6);
            EXPECT_EQ(fig8_at(-x, ty, 6), base) << x << "," << ty;
            EXPECT_EQ(fig8_at(x, -ty, 6), base) << x << "," << ty;
            EXPECT_EQ(fig8_at(-x, -ty, 6), base) << x << "," << ty;
        }
}

TEST(Index, VanishingOnSolidTorusAndThickenedTorus) {
    EXPECT_TRUE(index(IndexRequest{fixture("solidtorus"), {}, hi(20), {}}).series.is_zero());
    EXPECT_TRUE(index(IndexRequest{fixture("t2xi"), {}, hi(20), {}}).series.is_zero());
    EXPECT_TRUE(index_peripheral(fixture("solidtorus"), {hi(1), hi(1)}, hi(10)).series.is_zero());
}

TEST(Index, TrefoilIsKroneckerDelta) {
    GluingData g = fixture("trefoil");
    for (long long x = -6; x <= 6; ++x)
        for (long long ty : {-2, -1, 0, 1, 2}) {
            auto s = index_peripheral(g, {hi(x), HalfInt{ty}}, hi(8)).series;
            auto want = x + 3 * ty == 0 ? TruncatedSeries::one(hi(8))
                                                                       : TruncatedSeries::zero(hi(8));
            EXPECT_EQ(s, want) << x << "," << ty << "/2";
        }
}

TEST(Index, ToroidalClosedForm) {
    GluingData g = fixture("cPcbbbdei");
    for (long long x = 1; x <= 3; ++x)
        for (long long y = -1; y <= 1; ++y) {
            auto r = index_peripheral(g, {hi(x), hi(y)}, hi(10));
            EXPECT_EQ(r.series, toroidal_closed_form(x, y, 10)) << x << "," << y;
        }
}

TEST(Index, M009Classes) {
    GluingData g = fixture("m009");
    EXPECT_EQ(index(IndexRequest{g, {}, hi(11), {}}).series,
              integer_series({1, -1, -1, 6, 9, 12, -5, -34, -79, -118, -118}, 11));
    EXPECT_EQ(index(IndexRequest{g, {0, 1, 0, 0, 0, 1, 0, 0, 1}, hi(10), {}}).series,
              doubled_series({{1, -1}, {3, -2}, {5, 2}, {7, 8}, {9, 11}, {11, 6}, {13, -17}, {15, -57}, {17, -100},
                              {19, -124}},
                             20));
    EXPECT_EQ(index(IndexRequest{g, {0, 0, 1, 0, 0, -1, -1, 0, 0}, hi(11), {}}).series,
              integer_series({0, -1, 0, 4, 7, 6, -7, -32, -65, -89, -81}, 11));
}

TEST(Index, ToroidalDivergenceIsSuspectedAndProbed) {
    GluingData g = fixture("cPcbbbdei");
    IndexLimits lim;
    lim.max_radius = 8;
    auto r = index(IndexRequest{g, {}, hi(4), lim});
    EXPECT_EQ(r.verdict, Verdict::DivergenceSuspected);
    EXPECT_FALSE(r.witness_direction.empty());
    auto probe = divergence_probe(g, {});
    EXPECT_FALSE(probe.converges);
    ASSERT_EQ(probe.degrees.size(), 8u);
    EXPECT_LE(probe.degrees.back(), probe.degrees.front());
    EXPECT_TRUE(divergence_probe(fixture("fig8"), {}).converges);
}

TEST(Index, PointBudgetGivesRadiusExhausted) {
    IndexLimits lim;
    lim.max_points = 10;
    auto r = index(IndexRequest{fixture("m009"), {}, hi(11), lim});
    EXPECT_EQ(r.verdict, Verdict::RadiusExhausted);
}

TEST(Index, IndexZeroFromTriangulation) {
    auto r = index_zero(decode_isosig("cPcbbbiht"), hi(6));
    EXPECT_EQ(r.series, integer_series({1, -2, -3, 2, 8, 18}, 6));
}

TEST(Index, InputErrors) {
    GluingData g = fixture("fig8");
    EXPECT_THROW(index(IndexRequest{g, {1, 0, 0}, hi(4), {}}), ShapeError);
    EXPECT_THROW(index(IndexRequest{g, {1, 0, 0, 0, 0, 0}, hi(4), {}}), ShapeError);
    EXPECT_THROW(index_peripheral(g, {hi(1)}, hi(4)), ShapeError);
    GluingData bare = gluing_from_triangulation(decode_isosig("cPcbbbiht"));
    EXPECT_THROW(index(IndexRequest{bare, {0, 0, 2, 0, 1, 0}, hi(4), {}}), MissingCuspRows);
    EXPECT_THROW(index_peripheral(bare, {hi(1), hi(0)}, hi(4)), MissingCuspRows);
}

TEST(Index, PeripheralBaseClassIsIntegralAndHasRequestedBoundary) {
    GluingData g = fixture("fig8");
    for (long long tx = -4; tx <= 4; ++tx)
        for (long long ty = -3; ty <= 3; ++ty) {
            if (tx % 2 != 0) continue;
            QuadVector S = peripheral_base_class(g, {HalfInt{tx}, HalfInt{ty}});
            EXPECT_TRUE(is_qnormal(g, S));
            EXPECT_EQ(boundary(g, S), (std::vector<long long>{tx, ty}));
        }
}

TEST(Index, NonIntegralBaseClassIsRejected) {
    GluingData g = load_gluing_matrix("1 1\n0 0 0\n1 1 0\n0 0 0\n");
    EXPECT_THROW(peripheral_base_class(g, {HalfInt{1}, hi(0)}), NonIntegerBaseClass);
}

TEST(Index, GeneralisedSurfaceDegree) {
    EXPECT_EQ(gen_surface_degree({2}, {3}, -1), HalfInt{1 + 6 - 2 - 3 + 1});
    EXPECT_EQ(gen_surface_degree({0, 4}, {0, 2}, 0), HalfInt{0 + 8 - 4 - 2 + 2});
    EXPECT_THROW(gen_surface_degree({1}, {}, 0), ShapeError);
    EXPECT_THROW(gen_surface_degree({-1}, {1}, 0), ShapeError);
}
