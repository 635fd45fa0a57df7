#pragma once

#include "errors.hpp"
#include "gluing.hpp"
#include "linalg.hpp"

#include <string>
#include <variant>
#include <vector>

namespace index3d {

/// Angles in units of pi, three per tetrahedron in quad-slot order.
using AngleVector = RatVector;

namespace detail {

/// Rows T_j, E_i and, when requested, M_k, L_k with right-hand sides 1, 2, 0.
inline std::pair<IntMatrix, RatVector> angle_system(const GluingData& g, bool holonomy) {
    std::vector<QuadVector> rows;
    RatVector rhs;
    for (int j = 0; j < g.n; ++j) {
        rows.push_back(g.tet_solution(j));
        rhs.push_back(1);
    }
    for (const auto& e : g.edge_rows) {
        rows.push_back(e);
        rhs.push_back(2);
    }
    if (holonomy)
        for (const auto& c : g.cusp_rows) {
            rows.push_back(c);
            rhs.push_back(0);
        }
    return {IntMatrix::from_rows(rows, static_cast<std::size_t>(3 * g.n)), rhs};
}

inline Rational dot(const AngleVector& a, const QuadVector& s) {
    if (a.size() != s.size()) throw ShapeError("angle vector and quad vector lengths differ");
    Rational r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += a[i] * s[i];
    return r;
}

inline AngleVector solve_angles(const GluingData& g, bool holonomy) {
    auto [M, b] = angle_system(g, holonomy);
    auto res = rational_solve(M, b);
    if (auto* x = std::get_if<RatVector>(&res)) return *x;
    throw InternalInconsistency("angle structure equations are inconsistent; the gluing data is corrupted");
}

}  // namespace detail

/// A generalised angle structure: tetrahedron sums 1 and edge sums 2 (pi-units).
inline AngleVector solve_generalised_angles(const GluingData& g) { return detail::solve_angles(g, false); }

/// A generalised angle structure whose meridian and longitude rotational holonomies vanish.
inline AngleVector solve_vanishing_holonomy(const GluingData& g) {
    g.require_cusp_rows("a vanishing-holonomy angle structure");
    return detail::solve_angles(g, true);
}

/// True when alpha satisfies the tetrahedron and edge equations, and the cusp equations if requested.
inline bool is_angle_structure(const GluingData& g, const AngleVector& alpha, bool holonomy) {
    auto [M, b] = detail::angle_system(g, holonomy);
    return to_rational(M).apply(alpha) == b;
}

/// Rotational holonomy (pi-units) of the peripheral class sum_k gamma_{2k} mu_k + gamma_{2k+1} lambda_k.
inline Rational rotational_holonomy(const GluingData& g, const AngleVector& alpha, const RatVector& gamma) {
    g.require_cusp_rows("rotational holonomy");
    if (gamma.size() != static_cast<std::size_t>(2 * g.r)) throw ShapeError("peripheral coefficient count is not 2r");
    Rational rho = 0;
    for (int k = 0; k < g.r; ++k) {
        rho += gamma[static_cast<std::size_t>(2 * k)] * detail::dot(alpha, g.meridian(k));
        rho += gamma[static_cast<std::size_t>(2 * k + 1)] * detail::dot(alpha, g.longitude(k));
    }
    return rho;
}

/// True when S lies in the rational span of the edge and tetrahedral solutions, so that its boundary vanishes.
inline bool in_closed_span(const GluingData& g, const QuadVector& S) {
    std::vector<QuadVector> cols;
    for (const auto& e : g.edge_rows) cols.push_back(e);
    for (int j = 0; j < g.n; ++j) cols.push_back(g.tet_solution(j));
    IntMatrix M = IntMatrix::from_rows(cols).transpose();
    RatVector b(S.begin(), S.end());
    return std::holds_alternative<RatVector>(rational_solve(M, b));
}

/// Formal Euler characteristic -alpha.S + rho_alpha(boundary S)/2 for any generalised angle structure alpha.
inline Rational euler_via_angles(const GluingData& g, const AngleVector& alpha, const QuadVector& S) {
    Rational chi = -detail::dot(alpha, S);
    if (g.has_cusp_rows()) {
        std::vector<long long> d = boundary(g, S);
        RatVector gamma(d.begin(), d.end());
        chi += rotational_holonomy(g, alpha, gamma) / 2;
    } else if (!in_closed_span(g, S)) {
        throw MissingCuspRows("Euler characteristic of a class with boundary needs meridian and longitude rows");
    }
    return chi;
}

/// Strictly positive angle structure.
struct StrictAngles {
    AngleVector alpha;
};

/// Nonzero nonnegative Q-normal class with nonnegative Euler characteristic.
struct FarkasWitness {
    QuadVector surface;
    Rational chi;
};

namespace detail {

inline std::variant<StrictAngles, FarkasWitness> strict_angles(const GluingData& g, bool holonomy) {
    auto [M, b] = angle_system(g, holonomy);
    auto res = lp_feasible_strict(M, b);
    if (auto* s = std::get_if<StrictSolution>(&res)) return StrictAngles{s->x};
    const RatVector& z = std::get<FarkasCertificate>(res).z;
    RatVector q = to_rational(M).transpose().apply(z);
    Rational bz = 0;
    for (std::size_t i = 0; i < b.size(); ++i) bz += b[i] * z[i];
    std::vector<BigInt> prim = primitive_integer(q);
    Rational scale = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] != 0) {
            scale = Rational(prim[i]) / q[i];
            break;
        }
    if (scale == 0) throw InternalInconsistency("angle equations admit no solution at all");
    QuadVector surface(prim.size());
    for (std::size_t i = 0; i < prim.size(); ++i) surface[i] = static_cast<long long>(prim[i]);
    return FarkasWitness{surface, -bz * scale};
}

}  // namespace detail

/// Strict angle structure with vanishing peripheral rotational holonomy, or a witness surface with chi >= 0.
inline std::variant<StrictAngles, FarkasWitness> strict_exists_vanishing_holonomy(const GluingData& g) {
    g.require_cusp_rows("a vanishing-holonomy angle structure");
    return detail::strict_angles(g, true);
}

/// Strict angle structure (no holonomy condition), or a witness in the closed span with chi >= 0.
inline std::variant<StrictAngles, FarkasWitness> strict_angle_structure(const GluingData& g) {
    return detail::strict_angles(g, false);
}

inline std::string render_angles(const AngleVector& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? " " : "") + to_string(a[i]);
    return out;
}

}  // namespace index3d
