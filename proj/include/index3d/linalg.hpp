#pragma once

#include "errors.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace index3d {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    template <typename U>
    static Matrix from_rows(const std::vector<std::vector<U>>& rows, std::size_t cols = 0) {
        std::size_t c = rows.empty() ? cols : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = T(rows[i][j]);
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
    }

    /// col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    template <typename V>
    std::vector<T> apply(const std::vector<V>& x) const {
        if (x.size() != cols_) throw ShapeError("matrix-vector dimension mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * T(x[j]);
        return r;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
            os << "\n";
        }
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

namespace detail {

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b) {
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Replaces rows (p, i) by a unimodular combination making entry (i, c) zero.
inline void gcd_combine_rows(IntMatrix& H, IntMatrix& U, std::size_t p, std::size_t i, std::size_t c) {
    BigInt a = H(p, c), b = H(i, c);
    auto [g, s, t] = extended_gcd(a, b);
    BigInt ag = a / g, bg = b / g;
    for (IntMatrix* M : {&H, &U}) {
        for (std::size_t j = 0; j < M->cols(); ++j) {
            BigInt x = (*M)(p, j), y = (*M)(i, j);
            (*M)(p, j) = s * x + t * y;
            (*M)(i, j) = -bg * x + ag * y;
        }
    }
}

}  // namespace detail

/// Result of a Hermite normal form computation: U * M = H.
struct HermiteForm {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/**
 * @brief Row Hermite normal form.
 *
 * H is in row echelon form: pivot entries positive, zero rows last, and the
 * entries above each pivot reduced into [0, pivot).
 */
inline HermiteForm hermite_normal_form(const IntMatrix& M) {
    HermiteForm f{M, IntMatrix::identity(M.rows()), 0, {}};
    IntMatrix& H = f.H;
    IntMatrix& U = f.U;
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
        for (std::size_t i = r + 1; i < H.rows(); ++i)
            if (H(i, c) != 0) detail::gcd_combine_rows(H, U, r, i, c);
        if (H(r, c) == 0) {
            std::size_t k = r + 1;
            while (k < H.rows() && H(k, c) == 0) ++k;
            if (k == H.rows()) continue;
            H.swap_rows(r, k);
            U.swap_rows(r, k);
        }
        if (H(r, c) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q = floor_div(H(i, c), H(r, c));
            if (q != 0) {
                H.add_row(i, r, -q);
                U.add_row(i, r, -q);
            }
        }
        f.pivots.push_back(c);
        ++r;
    }
    f.rank = r;
    return f;
}

/// Smith normal form U * M * V = diag(invariants), invariants in divisibility order.
struct SmithForm {
    std::vector<BigInt> invariants;
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;
};

inline SmithForm smith_normal_form(const IntMatrix& M) {
    IntMatrix D = M;
    IntMatrix U = IntMatrix::identity(M.rows());
    IntMatrix V = IntMatrix::identity(M.cols());
    std::size_t k = std::min(M.rows(), M.cols());
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < D.rows(); ++i)
                for (std::size_t j = t; j < D.cols(); ++j)
                    if (D(i, j) != 0 && (!found || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) break;
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                BigInt q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                BigInt q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < D.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row(t, i, 1);
                        U.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    SmithForm s{{}, U, V, D};
    for (std::size_t t = 0; t < k; ++t) s.invariants.push_back(D(t, t));
    return s;
}

/// Z-basis of the integer kernel {x : M x = 0}.
inline std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& M) {
    HermiteForm f = hermite_normal_form(M.transpose());
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t i = f.rank; i < f.U.rows(); ++i) basis.push_back(f.U.row(i));
    return basis;
}

/// Coefficients x with sum_i x_i generators[i] = v, when v lies in the integer span.
inline std::optional<std::vector<BigInt>> integer_membership(const std::vector<BigInt>& v,
                                                             const std::vector<std::vector<BigInt>>& generators) {
    if (generators.empty()) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return std::vector<BigInt>{};
    }
    IntMatrix G = IntMatrix::from_rows(generators);
    if (G.cols() != v.size()) throw ShapeError("membership vector length differs from generator length");
    HermiteForm f = hermite_normal_form(G);
    std::vector<BigInt> rest = v;
    std::vector<BigInt> y(f.rank);
    for (std::size_t i = 0; i < f.rank; ++i) {
        std::size_t c = f.pivots[i];
        if (rest[c] % f.H(i, c) != 0) return std::nullopt;
        y[i] = rest[c] / f.H(i, c);
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= y[i] * f.H(i, j);
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    std::vector<BigInt> coeffs(generators.size(), BigInt(0));
    for (std::size_t i = 0; i < f.rank; ++i)
        for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += y[i] * f.U(i, k);
    return coeffs;
}

/// Rank over the rationals.
inline std::size_t rational_rank(RatMatrix A) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c) == 0) ++p;
        if (p == A.rows()) continue;
        A.swap_rows(r, p);
        for (std::size_t i = r + 1; i < A.rows(); ++i)
            if (A(i, c) != 0) A.add_row(i, r, -A(i, c) / A(r, c));
        ++r;
    }
    return r;
}

inline std::size_t rational_rank(const IntMatrix& A) { return rational_rank(to_rational(A)); }

/// Certificate z with z^T M = 0 and z^T b != 0.
struct NoSolution {
    RatVector certificate;
};

/// Any exact solution of M x = b, or a certificate of inconsistency.
inline std::variant<RatVector, NoSolution> rational_solve(const IntMatrix& M, const RatVector& b) {
    if (b.size() != M.rows()) throw ShapeError("right-hand side length differs from row count");
    const std::size_t m = M.rows(), n = M.cols();
    RatMatrix A(m, n + 1 + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(M(i, j));
        A(i, n) = b[i];
        A(i, n + 1 + i) = 1;
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && A(p, c) == 0) ++p;
        if (p == m) continue;
        A.swap_rows(r, p);
        Rational inv = 1 / A(r, c);
        for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && A(i, c) != 0) A.add_row(i, r, -A(i, c));
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (A(i, n) != 0) {
            RatVector z(m);
            for (std::size_t k = 0; k < m; ++k) z[k] = A(i, n + 1 + k);
            return NoSolution{z};
        }
    RatVector x(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = A(i, n);
    return x;
}

/// Outcome of a linear program max c.x subject to A x = b, x >= 0.
struct LPResult {
    enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
    RatVector x;
    /// Optimal: dual y with A^T y >= c and b.y = c.x. Infeasible: z with A^T z >= 0 and b.z < 0.
    RatVector dual;
    Rational value = 0;
};

/// Two-phase dense simplex over the rationals with Bland's rule.
inline LPResult simplex_maximise(const RatMatrix& A, const RatVector& b, const RatVector& c) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m || c.size() != n) throw ShapeError("linear program dimension mismatch");
    std::vector<int> flip(m, 1);
    RatMatrix T(m, n + m);
    RatVector beta(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) flip[i] = -1;
        for (std::size_t j = 0; j < n; ++j) T(i, j) = A(i, j) * flip[i];
        T(i, n + i) = 1;
        beta[i] = b[i] * flip[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](std::size_t row, std::size_t col) {
        Rational inv = 1 / T(row, col);
        for (std::size_t j = 0; j < T.cols(); ++j) T(row, j) *= inv;
        beta[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || T(i, col) == 0) continue;
            Rational k = T(i, col);
            for (std::size_t j = 0; j < T.cols(); ++j) T(i, j) -= k * T(row, j);
            beta[i] -= k * beta[row];
        }
        basis[row] = col;
    };

    auto run = [&](const RatVector& cost, std::size_t allowed) -> bool {
        for (;;) {
            std::size_t enter = T.cols();
            for (std::size_t j = 0; j < allowed; ++j) {
                Rational rc = cost[j];
                for (std::size_t k = 0; k < m; ++k) rc -= cost[basis[k]] * T(k, j);
                if (rc > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == T.cols()) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (T(i, enter) <= 0) continue;
                Rational ratio = beta[i] / T(i, enter);
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    };

    auto duals = [&](const RatVector& cost) {
        RatVector y(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) y[i] += cost[basis[k]] * T(k, n + i);
            y[i] *= flip[i];
        }
        return y;
    };

    RatVector phase1(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    run(phase1, n + m);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) infeas += beta[i];
    LPResult res;
    if (infeas > 0) {
        res.status = LPResult::Status::Infeasible;
        res.dual = duals(phase1);
        return res;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (T(i, j) != 0) {
                pivot(i, j);
                break;
            }
    }
    RatVector phase2(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!run(phase2, n)) {
        res.status = LPResult::Status::Unbounded;
        return res;
    }
    res.status = LPResult::Status::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = beta[i];
    res.dual = duals(phase2);
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

/// A point with M x = b and every coordinate strictly positive.
struct StrictSolution {
    RatVector x;
};

/// Vector z with M^T z >= 0 and either (M^T z != 0, b.z <= 0) or b.z < 0.
struct FarkasCertificate {
    RatVector z;
};

inline bool verify_strict_solution(const IntMatrix& M, const RatVector& b, const RatVector& x) {
    if (x.size() != M.cols()) return false;
    for (const auto& v : x)
        if (v <= 0) return false;
    RatVector mx = to_rational(M).apply(x);
    return mx == b;
}

inline bool verify_farkas(const IntMatrix& M, const RatVector& b, const RatVector& z) {
    if (z.size() != M.rows()) return false;
    RatVector mtz = to_rational(M).transpose().apply(z);
    bool nonzero = false;
    for (const auto& v : mtz) {
        if (v < 0) return false;
        if (v != 0) nonzero = true;
    }
    Rational bz = 0;
    for (std::size_t i = 0; i < b.size(); ++i) bz += b[i] * z[i];
    return (nonzero && bz <= 0) || bz < 0;
}

/**
 * @brief Decides whether M x = b has a strictly positive solution.
 *
 * Solves max t subject to M y + t M 1 = b, t + s = 1, y, t, s >= 0; a positive
 * optimum yields x = y + t 1, otherwise the dual solution restricted to the
 * rows of M is a Farkas certificate.
 */
inline std::variant<StrictSolution, FarkasCertificate> lp_feasible_strict(const IntMatrix& M, const RatVector& b) {
    const std::size_t m = M.rows(), n = M.cols();
    if (b.size() != m) throw ShapeError("right-hand side length differs from row count");
    RatMatrix A(m + 1, n + 2);
    for (std::size_t i = 0; i < m; ++i) {
        Rational rowsum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            A(i, j) = Rational(M(i, j));
            rowsum += A(i, j);
        }
        A(i, n) = rowsum;
    }
    A(m, n) = 1;
    A(m, n + 1) = 1;
    RatVector rhs = b;
    rhs.push_back(1);
    RatVector cost(n + 2, Rational(0));
    cost[n] = 1;
    LPResult r = simplex_maximise(A, rhs, cost);
    if (r.status == LPResult::Status::Optimal && r.value > 0) {
        RatVector x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] + r.value;
        return StrictSolution{x};
    }
    if (r.status == LPResult::Status::Unbounded) throw InternalInconsistency("bounded program reported unbounded");
    RatVector z(r.dual.begin(), r.dual.begin() + static_cast<std::ptrdiff_t>(m));
    return FarkasCertificate{z};
}

/// Primitive integer multiple of a rational vector with the same direction.
inline std::vector<BigInt> primitive_integer(const RatVector& v) {
    BigInt l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(x)));
    std::vector<BigInt> out(v.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        out[i] = boost::multiprecision::numerator(s);
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline std::vector<BigInt> primitive_integer(std::vector<BigInt> v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Default ambient-dimension cap for vertex enumeration.
inline constexpr std::size_t kDefaultDDCap = 24;

/**
 * @brief Extreme rays of the cone {x >= 0, E x = 0} by double description.
 *
 * Equality rows are inserted in input order. Two rays are combined only when
 * adjacent, tested by the rank of the constraints tight at both.
 */
inline std::vector<std::vector<BigInt>> dd_vertex_enumeration(const IntMatrix& E, std::size_t cap = kDefaultDDCap) {
    const std::size_t d = E.cols();
    if (d > cap)
        throw DimensionTooLarge("cone dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
    std::vector<std::vector<BigInt>> rays;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<BigInt> e(d, BigInt(0));
        e[i] = 1;
        rays.push_back(e);
    }
    std::vector<std::vector<BigInt>> processed;
    for (std::size_t k = 0; k < E.rows(); ++k) {
        std::vector<BigInt> a = E.row(k);
        auto dot = [&](const std::vector<BigInt>& r) {
            BigInt s = 0;
            for (std::size_t j = 0; j < d; ++j) s += a[j] * r[j];
            return s;
        };
        std::vector<std::size_t> pos, neg;
        std::vector<std::vector<BigInt>> next;
        std::vector<BigInt> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(rays[i]);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
            else
                next.push_back(rays[i]);
        }
        auto adjacent = [&](const std::vector<BigInt>& r, const std::vector<BigInt>& s) {
            std::vector<std::size_t> free_cols;
            std::size_t zeros = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (r[j] == 0 && s[j] == 0)
                    ++zeros;
                else
                    free_cols.push_back(j);
            }
            if (zeros + 2 > d) return false;
            std::size_t rank = zeros;
            if (!processed.empty() && !free_cols.empty()) {
                RatMatrix sub(processed.size(), free_cols.size());
                for (std::size_t i = 0; i < processed.size(); ++i)
                    for (std::size_t j = 0; j < free_cols.size(); ++j) sub(i, j) = Rational(processed[i][free_cols[j]]);
                rank += rational_rank(sub);
            }
            return rank == d - 2;
        };
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                if (!adjacent(rays[p], rays[q])) continue;
                std::vector<BigInt> r(d);
                for (std::size_t j = 0; j < d; ++j) r[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
                next.push_back(primitive_integer(r));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        processed.push_back(a);
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

}  // namespace index3d
