#pragma once

#include "errors.hpp"
#include "gluing.hpp"
#include "linalg.hpp"
#include "qnormal.hpp"
#include "series.hpp"
#include "tetindex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace index3d {

/// Shell enumeration settings.
struct IndexLimits {
    int initial_radius = 4;
    int stabilization_shells = 2;
    int max_radius = 24;
    /// Upper bound on the number of lattice points visited before giving up.
    std::uint64_t max_points = 50'000'000;
};

struct IndexRequest {
    GluingData gluing;
    QuadVector base_class;
    HalfInt order = HalfInt::from_int(10);
    IndexLimits limits;
};

enum class Verdict { Converged, DivergenceSuspected, RadiusExhausted };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Converged:
            return "converged";
        case Verdict::DivergenceSuspected:
            return "divergence-suspected";
        case Verdict::RadiusExhausted:
            return "radius-exhausted";
    }
    return "unknown";
}

struct IndexResult {
    TruncatedSeries series;
    std::size_t terms_included = 0;
    int shells_explored = 0;
    std::uint64_t points_visited = 0;
    Verdict verdict = Verdict::Converged;
    /// Lattice coordinates of a contributing point on the last shell when divergence is suspected.
    std::vector<long long> witness;
    /// The same point as a quad vector offset from the base class.
    QuadVector witness_direction;
    IndexLimits limits;
};

namespace detail {

/// Precomputed data for evaluating degrees and terms of S0 + sum c_i b_i.
class LatticeWalker {
public:
    LatticeWalker(const GluingData& g, const QuadVector& base, const std::vector<QuadVector>& basis)
        : base_(base), basis_(basis) {
        EulerFunctional chi_fn(g);
        BigInt den = 1;
        auto absorb = [&den](const Rational& r) {
            BigInt d = boost::multiprecision::denominator(r);
            den = boost::multiprecision::lcm(den, d);
        };
        Rational c0 = chi_fn(base);
        absorb(c0);
        std::vector<Rational> cb;
        for (const auto& b : basis) {
            cb.push_back(chi_fn(b));
            absorb(cb.back());
        }
        den_ = static_cast<long long>(den);
        chi_base_ = static_cast<long long>(boost::multiprecision::numerator(Rational(c0 * den)));
        for (const auto& c : cb) chi_basis_.push_back(static_cast<long long>(boost::multiprecision::numerator(Rational(c * den))));
    }

    std::size_t rank() const { return basis_.size(); }

    QuadVector point(const std::vector<long long>& c) const {
        QuadVector s = base_;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0)
                for (std::size_t j = 0; j < s.size(); ++j) s[j] += c[i] * basis_[i][j];
        return s;
    }

    /// Euler characteristic of the minimal representative of the point S with coordinates c.
    long long chi_star(const std::vector<long long>& c, const QuadVector& s) const {
        long long num = chi_base_;
        for (std::size_t i = 0; i < c.size(); ++i) num += c[i] * chi_basis_[i];
        num += den_ * tet_shift(s);
        if (num % den_ != 0) throw InternalInconsistency("non-integral Euler characteristic on the summation lattice");
        return num / den_;
    }

    /// Lowest q^{1/2}-degree of the term of S.
    long long degree(const std::vector<long long>& c, const QuadVector& s) const {
        return -chi_star(c, s) + double_arc(minimal_rep(s));
    }

    TruncatedSeries term(const std::vector<long long>& c, const QuadVector& s, HalfInt order) const {
        long long x = chi_star(c, s);
        return j_product(minimal_rep(s), HalfInt{order.twice + x}).mul_sign_power(-x);
    }

private:
    QuadVector base_;
    std::vector<QuadVector> basis_;
    long long den_ = 1;
    long long chi_base_ = 0;
    std::vector<long long> chi_basis_;
};

/// Calls f on every integer point of [-R, R]^k whose sup-norm is exactly R, in lexicographic order.
template <typename F>
void for_each_on_shell(std::size_t k, long long R, F&& f) {
    std::vector<long long> c(k, -R);
    if (k == 0) {
        if (R == 0) f(c);
        return;
    }
    for (;;) {
        bool on_shell = false;
        for (long long v : c)
            if (v == R || v == -R) on_shell = true;
        if (on_shell) f(c);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] < R) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = -R;
                break;
            }
            if (i == 0) return;
        }
    }
}

inline void require_closed_or_cusps(const GluingData& g, const QuadVector& S0) {
    if (S0.size() != static_cast<std::size_t>(3 * g.n)) throw ShapeError("base class length is not 3n");
    if (!is_qnormal(g, S0)) throw ShapeError("base class does not satisfy the Q-matching equations");
    if (!g.has_cusp_rows() && !in_closed_span(g, S0))
        throw MissingCuspRows("a base class with boundary needs meridian and longitude rows");
}

}  // namespace detail

/// Sum of I(S0 + v) over the edge-image lattice, enumerated in sup-norm shells of lattice coordinates.
inline IndexResult index(const IndexRequest& req) {
    const GluingData& g = req.gluing;
    QuadVector S0 = req.base_class.empty() ? QuadVector(static_cast<std::size_t>(3 * g.n), 0) : req.base_class;
    detail::require_closed_or_cusps(g, S0);
    LatticeStructure L = lattice_structure(g);
    detail::LatticeWalker walk(g, S0, L.edge_image_lifts);
    const HalfInt order = req.order;
    const IndexLimits& lim = req.limits;

    IndexResult res;
    res.series = TruncatedSeries(order);
    res.limits = lim;
    const std::size_t k = walk.rank();

    std::vector<long long> last_contributor;
    auto visit = [&](const std::vector<long long>& c) -> bool {
        ++res.points_visited;
        QuadVector s = walk.point(c);
        if (walk.degree(c, s) >= order.twice) return false;
        res.series += walk.term(c, s, order);
        ++res.terms_included;
        last_contributor = c;
        return true;
    };

    int quiet = 0;
    for (long long R = 0;; ++R) {
        if (R > lim.max_radius) {
            res.verdict = Verdict::RadiusExhausted;
            break;
        }
        bool contributed = false;
        detail::for_each_on_shell(k, R, [&](const std::vector<long long>& c) { contributed |= visit(c); });
        res.shells_explored = static_cast<int>(R) + 1;
        if (k == 0) break;
        if (R < lim.initial_radius) continue;
        quiet = contributed ? 0 : quiet + 1;
        if (quiet >= lim.stabilization_shells) break;
        if (contributed && R == lim.max_radius) {
            res.verdict = Verdict::DivergenceSuspected;
            res.witness = last_contributor;
            res.witness_direction = walk.point(last_contributor);
            for (std::size_t j = 0; j < S0.size(); ++j) res.witness_direction[j] -= S0[j];
            break;
        }
        if (res.points_visited > lim.max_points) {
            res.verdict = Verdict::RadiusExhausted;
            break;
        }
    }
    return res;
}

/// Assembles sum_k (p_k M_k + q_k L_k), shifting by half edge and tetrahedral solutions when needed for integrality.
inline QuadVector peripheral_base_class(const GluingData& g, const std::vector<HalfInt>& pq) {
    g.require_cusp_rows("a peripheral base class");
    if (pq.size() != static_cast<std::size_t>(2 * g.r))
        throw ShapeError("expected " + std::to_string(2 * g.r) + " peripheral coefficients, got " +
                         std::to_string(pq.size()));
    const std::size_t len = static_cast<std::size_t>(3 * g.n);
    std::vector<long long> twice(len, 0);
    for (std::size_t k = 0; k < pq.size(); ++k)
        for (std::size_t j = 0; j < len; ++j) twice[j] += pq[k].twice * g.cusp_rows[k][j];
    const std::size_t ne = g.edge_rows.size();
    const std::size_t nt = static_cast<std::size_t>(g.n);
    if (ne + nt > 24) throw DimensionTooLarge("too many edge and tetrahedral solutions for the parity search");
    for (std::uint64_t tmask = 0; tmask < (std::uint64_t{1} << nt); ++tmask) {
        for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << ne); ++emask) {
            std::vector<long long> v = twice;
            for (std::size_t i = 0; i < ne; ++i)
                if (emask >> i & 1)
                    for (std::size_t j = 0; j < len; ++j) v[j] += g.edge_rows[i][j];
            for (std::size_t t = 0; t < nt; ++t)
                if (tmask >> t & 1)
                    for (std::size_t s = 0; s < 3; ++s) v[3 * t + s] += 1;
            bool even = true;
            for (long long x : v)
                if (x % 2 != 0) {
                    even = false;
                    break;
                }
            if (!even) continue;
            QuadVector S(len);
            for (std::size_t j = 0; j < len; ++j) S[j] = v[j] / 2;
            return S;
        }
    }
    std::string what;
    for (const auto& h : pq) what += (what.empty() ? "" : " ") + h.str();
    throw NonIntegerBaseClass("no integral representative for peripheral coefficients (" + what + ")");
}

inline IndexResult index_peripheral(const GluingData& g, const std::vector<HalfInt>& pq, HalfInt order,
                                    const IndexLimits& limits = {}) {
    return index(IndexRequest{g, peripheral_base_class(g, pq), order, limits});
}

/// I^0(0) of a triangulation from its derived edge equations.
inline IndexResult index_zero(const Triangulation& t, HalfInt order, const IndexLimits& limits = {}) {
    return index(IndexRequest{gluing_from_triangulation(t), {}, order, limits});
}

/// Outcome of scanning lattice rays for bounded degree.
struct ProbeResult {
    bool converges = true;
    std::vector<long long> lattice_direction;
    QuadVector direction;
    /// Degrees in q^{1/2}-units of S0 + k v for k = 1..K.
    std::vector<long long> degrees;
};

/// Searches lattice directions v with d(S0 + k v) non-increasing and linear in k.
inline ProbeResult divergence_probe(const GluingData& g, const QuadVector& base, int steps = 8, int coefficient_bound = 2) {
    QuadVector S0 = base.empty() ? QuadVector(static_cast<std::size_t>(3 * g.n), 0) : base;
    detail::require_closed_or_cusps(g, S0);
    LatticeStructure L = lattice_structure(g);
    detail::LatticeWalker walk(g, S0, L.edge_image_lifts);
    const std::size_t k = walk.rank();
    ProbeResult out;
    for (long long R = 1; R <= coefficient_bound && out.converges; ++R) {
        detail::for_each_on_shell(k, R, [&](const std::vector<long long>& v) {
            if (!out.converges) return;
            std::vector<long long> degs;
            for (int s = 1; s <= steps; ++s) {
                std::vector<long long> c(v);
                for (auto& x : c) x *= s;
                degs.push_back(walk.degree(c, walk.point(c)));
            }
            for (std::size_t i = 1; i < degs.size(); ++i)
                if (degs[i] > degs[i - 1]) return;
            for (std::size_t i = 2; i < degs.size(); ++i)
                if (degs[i] - 2 * degs[i - 1] + degs[i - 2] != 0) return;
            out.converges = false;
            out.lattice_direction = v;
            out.direction = walk.point(v);
            for (std::size_t j = 0; j < S0.size(); ++j) out.direction[j] -= S0[j];
            out.degrees = degs;
        });
    }
    return out;
}

}  // namespace index3d
