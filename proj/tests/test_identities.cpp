#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace index3d;
using namespace index3d::testing;

TEST(Identities, Quadratic) {
    auto r = check_quadratic_identity();
    EXPECT_EQ(r.checked, 49u);
    EXPECT_EQ(r.failed, 0u) << r.first_failure;
}

TEST(Identities, Pentagon) {
    auto r = check_pentagon_identity();
    EXPECT_EQ(r.checked, 243u);
    EXPECT_EQ(r.failed, 0u) << r.first_failure;
}

TEST(Identities, GeneratingSumVanishes) {
    auto r = check_generating_sum();
    EXPECT_EQ(r.failed, 0u) << r.first_failure;
    EXPECT_TRUE(generating_sum(hi(12)).is_zero());
}

TEST(Identities, QuadraticDetectsWrongRightHandSide) {
    EXPECT_EQ(quadratic_identity_lhs(1, 0, hi(6)), TruncatedSeries::one(hi(6)));
    EXPECT_FALSE(quadratic_identity_lhs(1, 0, hi(6)).is_zero());
}

TEST(Identities, MinimalDegreeBoundsTheSeries) {
    for (long long m = -3; m <= 3; ++m)
        for (long long e = -3; e <= 3; ++e) {
            auto s = tet_index_I(m, e, HalfInt{tet_index_min_degree(m, e) + 6});
            ASSERT_FALSE(s.is_zero());
            EXPECT_EQ(s.min_exponent().twice, tet_index_min_degree(m, e));
        }
}
