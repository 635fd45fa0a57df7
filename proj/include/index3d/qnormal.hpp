#pragma once

#include "angles.hpp"
#include "errors.hpp"
#include "gluing.hpp"
#include "linalg.hpp"
#include "series.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace index3d {

/// True when B S = 0.
inline bool is_qnormal(const GluingData& g, const QuadVector& S) {
    for (const auto& e : g.edge_rows)
        if (symplectic(e, S) != 0) return false;
    return true;
}

/// Double-arc function sum_j (a_j b_j + b_j c_j + c_j a_j).
inline long long double_arc(const QuadVector& S) {
    long long d = 0;
    for (std::size_t j = 0; j + 2 < S.size(); j += 3)
        d += S[j] * S[j + 1] + S[j + 1] * S[j + 2] + S[j + 2] * S[j];
    return d;
}

/// Symmetric bilinear form with delta(S + S') = delta(S) + delta(S') + 2 delta(S, S').
inline Rational double_arc_bilinear(const QuadVector& S, const QuadVector& T) {
    if (S.size() != T.size()) throw ShapeError("quad vectors of different lengths");
    long long twice = 0;
    for (std::size_t j = 0; j < S.size(); j += 3) {
        long long a = S[j], b = S[j + 1], c = S[j + 2];
        long long x = T[j], y = T[j + 1], z = T[j + 2];
        twice += a * y + b * x + b * z + c * y + c * x + a * z;
    }
    return Rational(twice, 2);
}

/// Subtracts the per-tetrahedron minimum from each triple.
inline QuadVector minimal_rep(const QuadVector& S) {
    QuadVector r = S;
    for (std::size_t j = 0; j < S.size(); j += 3) {
        long long m = std::min({S[j], S[j + 1], S[j + 2]});
        r[j] -= m;
        r[j + 1] -= m;
        r[j + 2] -= m;
    }
    return r;
}

/// Sum over tetrahedra of the per-tetrahedron minima.
inline long long tet_shift(const QuadVector& S) {
    long long s = 0;
    for (std::size_t j = 0; j < S.size(); j += 3) s += std::min({S[j], S[j + 1], S[j + 2]});
    return s;
}

/**
 * @brief The linear functional chi, evaluated as -alpha . S.
 *
 * With cusp rows alpha has vanishing peripheral rotational holonomy and the
 * formula holds on every Q-normal class. Without cusp rows alpha is any
 * generalised angle structure and the formula holds on closed classes.
 */
struct EulerFunctional {
    AngleVector alpha;
    bool holonomy_free = false;

    explicit EulerFunctional(const GluingData& g)
        : alpha(g.has_cusp_rows() ? solve_vanishing_holonomy(g) : solve_generalised_angles(g)),
          holonomy_free(g.has_cusp_rows()) {}

    Rational operator()(const QuadVector& S) const { return -detail::dot(alpha, S); }
};

/// Formal Euler characteristic via an angle structure with vanishing peripheral rotational holonomy.
inline Rational chi(const GluingData& g, const QuadVector& S) {
    if (!g.has_cusp_rows() && !in_closed_span(g, S))
        throw MissingCuspRows("Euler characteristic of a class with boundary needs meridian and longitude rows");
    return EulerFunctional(g)(S);
}

/// Formal Euler characteristic from S = sum x_i E_i + sum y_j T_j + sum (p_k M_k + q_k L_k), when such a decomposition exists.
inline std::optional<Rational> chi_by_decomposition(const GluingData& g, const QuadVector& S) {
    std::vector<QuadVector> cols;
    for (const auto& e : g.edge_rows) cols.push_back(e);
    for (int j = 0; j < g.n; ++j) cols.push_back(g.tet_solution(j));
    for (const auto& c : g.cusp_rows) cols.push_back(c);
    IntMatrix M = IntMatrix::from_rows(cols).transpose();
    RatVector b(S.begin(), S.end());
    auto res = rational_solve(M, b);
    auto* x = std::get_if<RatVector>(&res);
    if (!x) return std::nullopt;
    Rational c = 0;
    for (std::size_t i = 0; i < g.edge_rows.size(); ++i) c -= 2 * (*x)[i];
    for (int j = 0; j < g.n; ++j) c -= (*x)[g.edge_rows.size() + static_cast<std::size_t>(j)];
    return c;
}

/// Lowest q^{1/2}-degree of the index term of S and the sign of its coefficient.
struct DegreeInfo {
    /// Stored so that `degree.twice` is the q^{1/2}-degree; `degree` itself is the q-exponent.
    HalfInt degree;
    int sign;
    long long chi_min;
};

inline DegreeInfo degree_with(const EulerFunctional& chi_fn, const QuadVector& S) {
    QuadVector star = minimal_rep(S);
    Rational c = chi_fn(S) + tet_shift(S);
    if (!is_integer(c)) throw InternalInconsistency("non-integral Euler characteristic " + to_string(c));
    long long ci = static_cast<long long>(boost::multiprecision::numerator(c));
    long long d = -ci + double_arc(star);
    return DegreeInfo{HalfInt{d}, (ci % 2 == 0) ? 1 : -1, ci};
}

inline DegreeInfo degree(const GluingData& g, const QuadVector& S) {
    if (!g.has_cusp_rows() && !in_closed_span(g, S))
        throw MissingCuspRows("degree of a class with boundary needs meridian and longitude rows");
    return degree_with(EulerFunctional(g), S);
}

/// Projection Z^{3n} -> Z^{2n}, (a, b, c) -> (a - c, b - c), whose kernel is spanned by the T_j.
inline std::vector<BigInt> project_mod_tets(const QuadVector& S) {
    std::vector<BigInt> out;
    for (std::size_t j = 0; j < S.size(); j += 3) {
        out.emplace_back(S[j] - S[j + 2]);
        out.emplace_back(S[j + 1] - S[j + 2]);
    }
    return out;
}

/// Section of the projection: (u, v) -> (u, v, 0).
inline QuadVector lift_from_projection(const std::vector<BigInt>& p) {
    QuadVector out;
    for (std::size_t j = 0; j < p.size(); j += 2) {
        out.push_back(static_cast<long long>(p[j]));
        out.push_back(static_cast<long long>(p[j + 1]));
        out.push_back(0);
    }
    return out;
}

/// Integer structure of Q(T;Z) and of its quotient by the edge and tetrahedral solutions.
struct LatticeStructure {
    std::vector<QuadVector> qnormal_basis;
    /// Basis of the image of the edge solutions in Z^{3n}/T, in projected coordinates.
    std::vector<std::vector<BigInt>> edge_image_basis;
    /// The same basis lifted to quad vectors with c_j = 0.
    std::vector<QuadVector> edge_image_lifts;
    /// Basis of Q(T;Z)/T in projected coordinates.
    std::vector<std::vector<BigInt>> quotient_basis;
    /// Nontrivial torsion invariants of Q(T;Z)/(E+T).
    std::vector<BigInt> torsion;
    std::size_t free_rank = 0;
    /// Column transform of the Smith form used for class coordinates.
    IntMatrix smith_V;
    std::vector<BigInt> smith_invariants;
};

inline std::vector<std::vector<BigInt>> hnf_basis(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
    if (rows.empty()) return {};
    HermiteForm f = hermite_normal_form(IntMatrix::from_rows(rows, cols));
    std::vector<std::vector<BigInt>> out;
    for (std::size_t i = 0; i < f.rank; ++i) out.push_back(f.H.row(i));
    return out;
}

inline LatticeStructure lattice_structure(const GluingData& g) {
    LatticeStructure L;
    const std::size_t dim = static_cast<std::size_t>(3 * g.n);
    for (const auto& v : integer_kernel(qmatching_matrix(g))) {
        QuadVector q(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) q[i] = static_cast<long long>(v[i]);
        L.qnormal_basis.push_back(q);
    }
    std::vector<std::vector<BigInt>> images;
    for (const auto& e : g.edge_rows) images.push_back(project_mod_tets(e));
    L.edge_image_basis = hnf_basis(images, static_cast<std::size_t>(2 * g.n));
    if (L.edge_image_basis.size() != static_cast<std::size_t>(g.n - g.r))
        throw RankMismatch("edge solutions span rank " + std::to_string(L.edge_image_basis.size()) +
                           " modulo tetrahedral solutions, expected " + std::to_string(g.n - g.r));
    for (const auto& b : L.edge_image_basis) L.edge_image_lifts.push_back(lift_from_projection(b));

    std::vector<std::vector<BigInt>> qproj;
    for (const auto& q : L.qnormal_basis) qproj.push_back(project_mod_tets(q));
    L.quotient_basis = hnf_basis(qproj, static_cast<std::size_t>(2 * g.n));
    (void)dim;

    std::vector<std::vector<BigInt>> coords;
    for (const auto& b : L.edge_image_basis) {
        auto c = integer_membership(b, L.quotient_basis);
        if (!c) throw InternalInconsistency("an edge solution is not a Q-normal class");
        coords.push_back(*c);
    }
    const std::size_t w = L.quotient_basis.size();
    if (coords.empty()) {
        L.smith_V = IntMatrix::identity(w);
        L.free_rank = w;
        return L;
    }
    SmithForm s = smith_normal_form(IntMatrix::from_rows(coords, w));
    L.smith_V = s.V;
    L.smith_invariants = s.invariants;
    std::size_t nonzero = 0;
    for (const auto& d : s.invariants) {
        if (d != 0) ++nonzero;
        if (d > 1) L.torsion.push_back(d);
    }
    L.free_rank = w - nonzero;
    return L;
}

/// Boundary coefficients and torsion residues of the coset S + E + T.
struct ClassDescriptor {
    std::vector<long long> boundary;
    std::vector<BigInt> torsion_coords;
    bool operator==(const ClassDescriptor&) const = default;
};

inline ClassDescriptor class_of(const GluingData& g, const LatticeStructure& L, const QuadVector& S) {
    ClassDescriptor c;
    c.boundary = boundary(g, S);
    auto coords = integer_membership(project_mod_tets(S), L.quotient_basis);
    if (!coords) throw InternalInconsistency("vector is not an integer Q-normal class");
    for (std::size_t i = 0; i < L.smith_invariants.size(); ++i) {
        const BigInt& d = L.smith_invariants[i];
        if (d <= 1) continue;
        BigInt t = 0;
        for (std::size_t k = 0; k < coords->size(); ++k) t += (*coords)[k] * L.smith_V(k, i);
        BigInt r = t % d;
        if (r < 0) r += d;
        c.torsion_coords.push_back(r);
    }
    return c;
}

inline ClassDescriptor class_of(const GluingData& g, const QuadVector& S) {
    return class_of(g, lattice_structure(g), S);
}

/// True when S - S' lies in the integer span of the edge and tetrahedral solutions.
inline bool same_class(const LatticeStructure& L, const QuadVector& S, const QuadVector& S2) {
    if (S.size() != S2.size()) throw ShapeError("quad vectors of different lengths");
    QuadVector diff(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) diff[i] = S[i] - S2[i];
    return integer_membership(project_mod_tets(diff), L.edge_image_basis).has_value();
}

inline bool same_class(const GluingData& g, const QuadVector& S, const QuadVector& S2) {
    return same_class(lattice_structure(g), S, S2);
}

inline std::string render_quad(const QuadVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

/// Parses a whitespace-separated integer list.
inline QuadVector parse_quad(const std::string& text) {
    QuadVector v;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            long long x = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
    }
    return v;
}

}  // namespace index3d
