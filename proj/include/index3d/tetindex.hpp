#pragma once

#include "series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <utility>

namespace index3d {

/// Memoisation key of the tetrahedral index.
struct TetIndexKey {
    long long m = 0;
    long long e = 0;
    HalfInt order{0};
    auto operator<=>(const TetIndexKey&) const = default;
};

namespace detail {

/// Coefficients of 1/((q)_n (q)_k) at doubled exponents 0..len-1.
inline std::vector<BigInt> double_pochhammer_inverse(long long n, long long k, long long len) {
    std::vector<BigInt> c(static_cast<std::size_t>(std::max<long long>(len, 0)));
    if (c.empty()) return c;
    c[0] = 1;
    auto divide = [&c](long long upto) {
        for (long long i = 1; i <= upto; ++i) {
            std::size_t step = static_cast<std::size_t>(2 * i);
            for (std::size_t j = step; j < c.size(); ++j) c[j] += c[j - step];
        }
    };
    divide(n);
    divide(k);
    return c;
}

inline TruncatedSeries compute_tet_index(long long m, long long e, HalfInt order) {
    TruncatedSeries result(order);
    const long long N = order.twice;
    for (long long n = std::max<long long>(0, -e);; ++n) {
        long long lead = n * (n + 1) - (2 * n + e) * m;
        if (lead < N) {
            std::vector<BigInt> c = double_pochhammer_inverse(n, n + e, N - lead);
            TruncatedSeries term(order);
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0) term.set(HalfInt{lead + static_cast<long long>(k)}, (n % 2 == 0) ? c[k] : BigInt(-c[k]));
            result += term;
        } else if (n >= m) {
            break;
        }
    }
    return result;
}

/// Thread-safe cache keeping, per (m, e), the series at the largest order requested so far.
class TetIndexMemo {
public:
    TruncatedSeries get(long long m, long long e, HalfInt order) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find({m, e});
            if (it != table_.end() && it->second.order() >= order) return it->second.truncated(order);
        }
        TruncatedSeries s = compute_tet_index(m, e, order);
        std::unique_lock lock(mutex_);
        auto& slot = table_[{m, e}];
        if (slot.order() < order || slot.is_zero()) slot = s;
        return s;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<long long, long long>, TruncatedSeries> table_;
};

inline TetIndexMemo& tet_index_memo() {
    static TetIndexMemo memo;
    return memo;
}

}  // namespace detail

/// I_Delta(m, e) = sum_n (-1)^n q^{n(n+1)/2 - (n+e/2)m} / ((q)_n (q)_{n+e}) below `order`.
inline TruncatedSeries tet_index_I(long long m, long long e, HalfInt order) {
    return detail::tet_index_memo().get(m, e, order);
}

/// J_Delta(a, b, c) = (-q^{1/2})^{-b} I_Delta(b - c, a - b) below `order`.
inline TruncatedSeries tet_index_J(long long a, long long b, long long c, HalfInt order) {
    return tet_index_I(b - c, a - b, HalfInt{order.twice + b}).mul_sign_power(-b);
}

/// Lowest exponent of J_Delta(a, b, c) and the sign of its coefficient.
struct LeadingTerm {
    HalfInt degree;
    int sign;
    bool operator==(const LeadingTerm&) const = default;
};

inline LeadingTerm j_min_degree(long long a, long long b, long long c) {
    long long m = std::min({a, b, c});
    long long x = a - m, y = b - m, z = c - m;
    return LeadingTerm{HalfInt{x * y + y * z + z * x - m}, (m % 2 == 0) ? 1 : -1};
}

/// Product of J_Delta over the tetrahedra of S, valid below `order`.
inline TruncatedSeries j_product(const QuadVector& S, HalfInt order) {
    if (S.size() % 3 != 0) throw ShapeError("quad vector length is not a multiple of 3");
    std::size_t n = S.size() / 3;
    std::vector<long long> lead(n);
    long long total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        lead[j] = j_min_degree(S[3 * j], S[3 * j + 1], S[3 * j + 2]).degree.twice;
        total += lead[j];
    }
    if (total >= order.twice) return TruncatedSeries(order);
    TruncatedSeries result = TruncatedSeries::one(HalfInt{order.twice - total});
    for (std::size_t j = 0; j < n; ++j) {
        HalfInt factor_order{order.twice - total + lead[j]};
        result = result * tet_index_J(S[3 * j], S[3 * j + 1], S[3 * j + 2], factor_order);
    }
    return result.truncated(order);
}

}  // namespace index3d
