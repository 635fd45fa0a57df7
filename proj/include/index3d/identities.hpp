#pragma once

#include "series.hpp"
#include "tetindex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace index3d {

/// Lowest q^{1/2}-degree of I_Delta(m, e), using I_Delta(m, e) = J_Delta(e, 0, -m).
inline long long tet_index_min_degree(long long m, long long e) { return j_min_degree(e, 0, -m).degree.twice; }

/// q^{shift/2} times a product of I_Delta factors, valid below `order`.
inline TruncatedSeries tet_index_monomial_product(const std::vector<std::pair<long long, long long>>& factors,
                                                   long long shift_twice, HalfInt order) {
    std::vector<long long> lead;
    long long total = shift_twice;
    for (const auto& [m, e] : factors) {
        lead.push_back(tet_index_min_degree(m, e));
        total += lead.back();
    }
    if (total >= order.twice) return TruncatedSeries(order);
    TruncatedSeries r = TruncatedSeries::monomial(1, HalfInt{shift_twice}, order);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        HalfInt factor_order{order.twice - total + lead[k]};
        r = r * tet_index_I(factors[k].first, factors[k].second, factor_order);
    }
    return r.truncated(order);
}

/**
 * @brief Sum over e in Z of q^{e + shift/2} prod_k I_Delta(m_k, x_k + e).
 *
 * The lowest degree of each summand is a convex piecewise quadratic in e, so
 * the scan in each direction stops once that bound is at or above the order
 * and no longer decreasing.
 */
inline TruncatedSeries sum_over_e(const std::vector<std::pair<long long, long long>>& mx, long long shift_twice,
                                  HalfInt order) {
    auto factors_at = [&mx](long long e) {
        std::vector<std::pair<long long, long long>> f;
        for (const auto& [m, x] : mx) f.emplace_back(m, x + e);
        return f;
    };
    auto bound = [&](long long e) {
        long long b = 2 * e + shift_twice;
        for (const auto& [m, x] : mx) b += tet_index_min_degree(m, x + e);
        return b;
    };
    TruncatedSeries total(order);
    total += tet_index_monomial_product(factors_at(0), shift_twice, order);
    for (int dir : {1, -1})
        for (long long e = dir;; e += dir) {
            long long b = bound(e);
            if (b >= order.twice && bound(e + dir) >= b) break;
            if (b < order.twice) total += tet_index_monomial_product(factors_at(e), 2 * e + shift_twice, order);
        }
    return total;
}

/// Left side of the quadratic identity: sum_e I_Delta(m, e) I_Delta(m, e + c) q^e.
inline TruncatedSeries quadratic_identity_lhs(long long m, long long c, HalfInt order) {
    return sum_over_e({{m, 0}, {m, c}}, 0, order);
}

/// Left side of the pentagon identity.
inline TruncatedSeries pentagon_lhs(long long m1, long long m2, long long x1, long long x2, long long x3, HalfInt order) {
    return sum_over_e({{m1, x1}, {m2, x2}, {m1 + m2, x3}}, 0, order);
}

/// Right side of the pentagon identity: q^{-x3} I_Delta(m1 - x2 + x3, x1 - x3) I_Delta(m2 - x1 + x3, x2 - x3).
inline TruncatedSeries pentagon_rhs(long long m1, long long m2, long long x1, long long x2, long long x3, HalfInt order) {
    return tet_index_monomial_product({{m1 - x2 + x3, x1 - x3}, {m2 - x1 + x3, x2 - x3}}, -2 * x3, order);
}

/// sum_e I_Delta(0, e) q^e, which vanishes identically.
inline TruncatedSeries generating_sum(HalfInt order) { return sum_over_e({{0, 0}}, 0, order); }

/// Outcome of one identity family.
struct IdentityReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

inline IdentityReport check_quadratic_identity(long long range = 3, HalfInt order = HalfInt::from_int(8)) {
    IdentityReport r{"quadratic", 0, 0, {}};
    for (long long m = -range; m <= range; ++m)
        for (long long c = -range; c <= range; ++c) {
            ++r.checked;
            TruncatedSeries want = c == 0 ? TruncatedSeries::one(order) : TruncatedSeries::zero(order);
            if (!(quadratic_identity_lhs(m, c, order) == want) && r.failed++ == 0)
                r.first_failure = "m=" + std::to_string(m) + " c=" + std::to_string(c);
        }
    return r;
}

inline IdentityReport check_pentagon_identity(HalfInt order = HalfInt::from_int(6)) {
    IdentityReport r{"pentagon", 0, 0, {}};
    for (long long m1 = -1; m1 <= 1; ++m1)
        for (long long m2 = -1; m2 <= 1; ++m2)
            for (long long x1 = -1; x1 <= 1; ++x1)
                for (long long x2 = -1; x2 <= 1; ++x2)
                    for (long long x3 = -1; x3 <= 1; ++x3) {
                        ++r.checked;
                        if (!(pentagon_lhs(m1, m2, x1, x2, x3, order) == pentagon_rhs(m1, m2, x1, x2, x3, order)) &&
                            r.failed++ == 0)
                            r.first_failure = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                                              " x1=" + std::to_string(x1) + " x2=" + std::to_string(x2) +
                                              " x3=" + std::to_string(x3);
                    }
    return r;
}

inline IdentityReport check_generating_sum(HalfInt order = HalfInt::from_int(12)) {
    IdentityReport r{"generating", 1, 0, {}};
    if (!generating_sum(order).is_zero()) {
        r.failed = 1;
        r.first_failure = generating_sum(order).to_text();
    }
    return r;
}

}  // namespace index3d
