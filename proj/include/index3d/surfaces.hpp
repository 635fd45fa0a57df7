#pragma once

#include "angles.hpp"
#include "errors.hpp"
#include "gluing.hpp"
#include "linalg.hpp"
#include "qnormal.hpp"
#include "series.hpp"
#include "triangulation.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace index3d {

/// An extreme ray with its Euler characteristic, double-arc value and embeddability flag.
struct RayInfo {
    QuadVector ray;
    Rational chi;
    long long delta = 0;
    bool admissible = false;
};

enum class EfficiencyVerdict { Violator, Certified, CleanAtVertexResolution, Unavailable };

inline std::string to_string(EfficiencyVerdict v) {
    switch (v) {
        case EfficiencyVerdict::Violator:
            return "violator";
        case EfficiencyVerdict::Certified:
            return "certified";
        case EfficiencyVerdict::CleanAtVertexResolution:
            return "clean-at-vertex-resolution";
        case EfficiencyVerdict::Unavailable:
            return "unavailable";
    }
    return "unknown";
}

struct EfficiencyReport {
    std::vector<RayInfo> closed_rays;
    std::vector<RayInfo> spun_rays;
    EfficiencyVerdict verdict_closed = EfficiencyVerdict::Unavailable;
    std::optional<QuadVector> closed_violator;
    std::optional<AngleVector> closed_certificate;
    EfficiencyVerdict verdict_spun = EfficiencyVerdict::Unavailable;
    std::optional<QuadVector> spun_violator;
    std::optional<AngleVector> spun_certificate;

    /// True unless a closed violator was found.
    bool closed_clean() const { return verdict_closed != EfficiencyVerdict::Violator; }
};

/// At most one nonzero quad coordinate per tetrahedron.
inline bool is_admissible(const QuadVector& S) {
    for (std::size_t j = 0; j < S.size(); j += 3) {
        int nz = (S[j] != 0) + (S[j + 1] != 0) + (S[j + 2] != 0);
        if (nz > 1) return false;
    }
    return true;
}

namespace detail {

inline IntMatrix rows_to_matrix(const std::vector<QuadVector>& rows, std::size_t cols) {
    IntMatrix M(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
    return M;
}

inline std::vector<QuadVector> to_quads(const std::vector<std::vector<BigInt>>& rays) {
    std::vector<QuadVector> out;
    for (const auto& r : rays) {
        QuadVector q(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) q[i] = static_cast<long long>(r[i]);
        out.push_back(q);
    }
    return out;
}

/// Rows whose common kernel is the rational span of the edge and tetrahedral solutions.
inline std::vector<QuadVector> closed_span_constraints(const GluingData& g) {
    std::vector<QuadVector> gens = g.edge_rows;
    for (int j = 0; j < g.n; ++j) gens.push_back(g.tet_solution(j));
    IntMatrix G = rows_to_matrix(gens, static_cast<std::size_t>(3 * g.n));
    return to_quads(integer_kernel(G));
}

inline std::vector<RayInfo> describe(const std::vector<QuadVector>& rays, const std::optional<EulerFunctional>& chi_fn) {
    std::vector<RayInfo> out;
    for (const auto& r : rays) {
        RayInfo info;
        info.ray = r;
        info.chi = chi_fn ? (*chi_fn)(r) : Rational(0);
        info.delta = double_arc(r);
        info.admissible = is_admissible(r);
        out.push_back(info);
    }
    return out;
}

}  // namespace detail

/**
 * @brief Extreme rays of the closed cone {x >= 0, B x = 0, x has zero boundary}.
 *
 * With cusp rows the boundary condition is omega(M_k, x) = omega(L_k, x) = 0.
 * Without them the cone is cut out by the span of the edge and tetrahedral
 * solutions, which is the same set of classes.
 */
inline std::vector<QuadVector> closed_cone_rays(const GluingData& g, std::size_t cap = kDefaultDDCap) {
    std::vector<QuadVector> rows;
    if (g.has_cusp_rows()) {
        for (const auto& e : g.edge_rows) rows.push_back(apply_C(e));
        for (const auto& c : g.cusp_rows) rows.push_back(apply_C(c));
    } else {
        rows = detail::closed_span_constraints(g);
    }
    auto M = detail::rows_to_matrix(rows, static_cast<std::size_t>(3 * g.n));
    return detail::to_quads(dd_vertex_enumeration(M, cap));
}

/// Extreme rays of {x >= 0, B x = 0}.
inline std::vector<QuadVector> spun_cone_rays(const GluingData& g, std::size_t cap = kDefaultDDCap) {
    return detail::to_quads(dd_vertex_enumeration(qmatching_matrix(g), cap));
}

/**
 * @brief Vertex-resolution 1-efficiency and spun 1-efficiency report.
 *
 * A violator is a nonzero admissible extreme ray with chi >= 0. Without a
 * violator the verdict is upgraded to certified when a strict angle structure
 * exists (with vanishing peripheral holonomy for the spun verdict).
 */
inline EfficiencyReport efficiency_report(const GluingData& g, std::size_t cap = kDefaultDDCap) {
    EfficiencyReport rep;
    std::optional<EulerFunctional> chi_fn(std::in_place, g);
    rep.closed_rays = detail::describe(closed_cone_rays(g, cap), chi_fn);
    for (const auto& r : rep.closed_rays)
        if (r.admissible && r.chi >= 0) {
            rep.closed_violator = r.ray;
            break;
        }
    if (rep.closed_violator) {
        rep.verdict_closed = EfficiencyVerdict::Violator;
    } else {
        auto strict = strict_angle_structure(g);
        if (auto* s = std::get_if<StrictAngles>(&strict)) {
            rep.verdict_closed = EfficiencyVerdict::Certified;
            rep.closed_certificate = s->alpha;
        } else {
            rep.verdict_closed = EfficiencyVerdict::CleanAtVertexResolution;
        }
    }
    if (!g.has_cusp_rows()) return rep;
    rep.spun_rays = detail::describe(spun_cone_rays(g, cap), chi_fn);
    for (const auto& r : rep.spun_rays)
        if (r.admissible && r.chi >= 0) {
            rep.spun_violator = r.ray;
            break;
        }
    if (rep.spun_violator) {
        rep.verdict_spun = EfficiencyVerdict::Violator;
    } else {
        auto strict = strict_exists_vanishing_holonomy(g);
        if (auto* s = std::get_if<StrictAngles>(&strict)) {
            rep.verdict_spun = EfficiencyVerdict::Certified;
            rep.spun_certificate = s->alpha;
        } else {
            rep.verdict_spun = EfficiencyVerdict::CleanAtVertexResolution;
        }
    }
    return rep;
}

inline EfficiencyReport efficiency_report(const Triangulation& t, std::size_t cap = kDefaultDDCap) {
    return efficiency_report(gluing_from_triangulation(t), cap);
}

/// Degree -chi~ + sum_i (p_i q_i - p_i - q_i + gcd(p_i, q_i)) of a generalised normal surface, in q^{1/2}-units.
inline HalfInt gen_surface_degree(const std::vector<long long>& p, const std::vector<long long>& q, long long chi_tilde) {
    if (p.size() != q.size()) throw ShapeError("p and q have different lengths");
    long long d = -chi_tilde;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || q[i] < 0) throw ShapeError("p and q must be nonnegative");
        d += p[i] * q[i] - p[i] - q[i] + std::gcd(p[i], q[i]);
    }
    return HalfInt{d};
}

inline std::string render_report(const EfficiencyReport& rep) {
    std::ostringstream os;
    auto table = [&os](const std::string& title, const std::vector<RayInfo>& rays) {
        os << title << " (" << rays.size() << " rays)\n";
        for (const auto& r : rays)
            os << "  [" << render_quad(r.ray) << "]  chi=" << to_string(r.chi) << "  delta=" << r.delta
               << "  admissible=" << (r.admissible ? "yes" : "no") << "\n";
    };
    table("closed cone", rep.closed_rays);
    os << "closed verdict: " << to_string(rep.verdict_closed);
    if (rep.closed_violator) os << " [" << render_quad(*rep.closed_violator) << "]";
    os << "\n";
    if (rep.verdict_spun == EfficiencyVerdict::Unavailable) {
        os << "spun verdict: unavailable (no meridian and longitude rows)\n";
        return os.str();
    }
    table("spun cone", rep.spun_rays);
    os << "spun verdict: " << to_string(rep.verdict_spun);
    if (rep.spun_violator) os << " [" << render_quad(*rep.spun_violator) << "]";
    os << "\n";
    return os.str();
}

}  // namespace index3d
