#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace index3d {

/// A permutation of {0,1,2,3}; p[i] is the image of i.
using Perm = std::array<int, 4>;

inline constexpr Perm kIdentityPerm{0, 1, 2, 3};

inline Perm inverse(const Perm& p) {
    Perm r{};
    for (int i = 0; i < 4; ++i) r[p[i]] = i;
    return r;
}

/// Composition (p o q)[i] = p[q[i]].
inline Perm compose(const Perm& p, const Perm& q) {
    return Perm{p[q[0]], p[q[1]], p[q[2]], p[q[3]]};
}

inline int perm_sign(const Perm& p) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// The 24 permutations of S4 in lexicographic order.
inline const std::array<Perm, 24>& s4_table() {
    static const std::array<Perm, 24> table = [] {
        std::array<Perm, 24> t{};
        Perm p = kIdentityPerm;
        std::size_t k = 0;
        do {
            t[k++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return t;
    }();
    return table;
}

inline int s4_index(const Perm& p) {
    const auto& t = s4_table();
    return static_cast<int>(std::find(t.begin(), t.end(), p) - t.begin());
}

/// Vertex pairs of the six edges of a tetrahedron.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int edge_number(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdgeVertices[e][0] == a && kEdgeVertices[e][1] == b) return e;
    return -1;
}

/// Quad slot (01/23, 02/13, 03/12) facing the given edge.
inline int quad_slot(int edge) {
    static constexpr std::array<int, 6> slot{0, 1, 2, 2, 1, 0};
    return slot[edge];
}

/// Destination of one tetrahedron face: the adjacent tetrahedron and the vertex map.
struct FaceGluing {
    int tet = -1;
    Perm perm = kIdentityPerm;
    bool operator==(const FaceGluing&) const = default;
};

/**
 * @brief An ideal triangulation given by face gluings.
 *
 * Face f of tetrahedron t is glued to face perm[f] of tetrahedron `tet`, with
 * vertex i of t identified with vertex perm[i] of `tet`.
 */
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::vector<std::array<FaceGluing, 4>> gluings) : g_(std::move(gluings)) {}

    int size() const { return static_cast<int>(g_.size()); }
    const FaceGluing& gluing(int t, int f) const { return g_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)]; }
    FaceGluing& gluing(int t, int f) { return g_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)]; }
    const std::vector<std::array<FaceGluing, 4>>& gluings() const { return g_; }

    bool operator==(const Triangulation&) const = default;

    /// Checks that every face is glued and that gluings are involutive.
    void check_closed_involution() const {
        for (int t = 0; t < size(); ++t)
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& a = gluing(t, f);
                if (a.tet < 0 || a.tet >= size())
                    throw InvalidTriangulation("face " + std::to_string(f) + " of tetrahedron " + std::to_string(t) +
                                               " is not glued");
                const FaceGluing& b = gluing(a.tet, a.perm[f]);
                if (b.tet != t || b.perm != inverse(a.perm))
                    throw InvalidTriangulation("gluing of tetrahedron " + std::to_string(t) + " face " +
                                               std::to_string(f) + " is not involutive");
                if (a.tet == t && a.perm[f] == f)
                    throw InvalidTriangulation("face glued to itself in tetrahedron " + std::to_string(t));
            }
    }

    /// Applies a relabelling: tetrahedron t becomes tet_map[t] with vertices permuted by vertex_maps[t].
    Triangulation relabelled(const std::vector<int>& tet_map, const std::vector<Perm>& vertex_maps) const {
        std::vector<std::array<FaceGluing, 4>> out(g_.size());
        for (int t = 0; t < size(); ++t)
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& a = gluing(t, f);
                const Perm& vt = vertex_maps[static_cast<std::size_t>(t)];
                const Perm& vd = vertex_maps[static_cast<std::size_t>(a.tet)];
                out[static_cast<std::size_t>(tet_map[static_cast<std::size_t>(t)])][static_cast<std::size_t>(vt[f])] =
                    FaceGluing{tet_map[static_cast<std::size_t>(a.tet)], compose(compose(vd, a.perm), inverse(vt))};
            }
        return Triangulation(std::move(out));
    }

private:
    std::vector<std::array<FaceGluing, 4>> g_;
};

namespace detail {

inline constexpr char kSigAlphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

inline int sig_value(char c) {
    for (int i = 0; i < 64; ++i)
        if (kSigAlphabet[i] == c) return i;
    return -1;
}

inline std::string signature_from(const Triangulation& t, int start, const Perm& start_map) {
    const int n = t.size();
    std::vector<int> image(static_cast<std::size_t>(n), -1), pre(static_cast<std::size_t>(n), -1);
    std::vector<Perm> vmap(static_cast<std::size_t>(n));
    image[static_cast<std::size_t>(start)] = 0;
    pre[0] = start;
    vmap[static_cast<std::size_t>(start)] = start_map;
    int next = 1;
    std::vector<int> actions, dests, perms;
    for (int si = 0; si < n; ++si) {
        int src = pre[static_cast<std::size_t>(si)];
        const Perm& vs = vmap[static_cast<std::size_t>(src)];
        Perm vs_inv = inverse(vs);
        for (int fi = 0; fi < 4; ++fi) {
            int fs = vs_inv[fi];
            const FaceGluing& g = t.gluing(src, fs);
            int d = g.tet;
            if (image[static_cast<std::size_t>(d)] >= 0) {
                if (image[static_cast<std::size_t>(d)] < si) continue;
                if (d == src && vs[g.perm[fs]] < fi) continue;
            }
            if (image[static_cast<std::size_t>(d)] < 0) {
                image[static_cast<std::size_t>(d)] = next;
                pre[static_cast<std::size_t>(next)] = d;
                ++next;
                vmap[static_cast<std::size_t>(d)] = compose(vs, inverse(g.perm));
                actions.push_back(1);
                continue;
            }
            actions.push_back(2);
            dests.push_back(image[static_cast<std::size_t>(d)]);
            perms.push_back(s4_index(compose(compose(vmap[static_cast<std::size_t>(d)], g.perm), vs_inv)));
        }
    }
    std::string out(1, kSigAlphabet[n]);
    while (actions.size() % 3 != 0) actions.push_back(0);
    for (std::size_t i = 0; i < actions.size(); i += 3)
        out += kSigAlphabet[actions[i] | (actions[i + 1] << 2) | (actions[i + 2] << 4)];
    for (int d : dests) out += kSigAlphabet[d];
    for (int p : perms) out += kSigAlphabet[p];
    return out;
}

}  // namespace detail

/// Decodes a connected, closed isomorphism signature.
inline Triangulation decode_isosig(const std::string& s) {
    if (s.empty()) throw MalformedSignature("empty signature");
    std::size_t pos = 0;
    auto next_value = [&]() {
        if (pos >= s.size()) throw MalformedSignature("signature '" + s + "' is truncated");
        int v = detail::sig_value(s[pos]);
        if (v < 0) throw MalformedSignature(std::string("bad character '") + s[pos] + "' in signature");
        ++pos;
        return v;
    };
    const int n = next_value();
    if (n == 0 || n >= 63) throw MalformedSignature("unsupported tetrahedron count in signature '" + s + "'");
    std::vector<int> actions;
    int covered = 0;
    while (covered < 4 * n) {
        int v = next_value();
        for (int k = 0; k < 3 && covered < 4 * n; ++k) {
            int a = (v >> (2 * k)) & 3;
            if (a == 3) throw MalformedSignature("invalid facet action in signature '" + s + "'");
            actions.push_back(a);
            covered += (a == 0) ? 1 : 2;
        }
    }
    if (covered != 4 * n) throw MalformedSignature("facet actions overrun in signature '" + s + "'");
    int joins = static_cast<int>(std::count(actions.begin(), actions.end(), 2));
    std::vector<int> dests, perms;
    for (int i = 0; i < joins; ++i) dests.push_back(next_value());
    for (int i = 0; i < joins; ++i) {
        int v = next_value();
        if (v >= 24) throw MalformedSignature("invalid gluing permutation in signature '" + s + "'");
        perms.push_back(v);
    }
    if (pos != s.size()) throw MalformedSignature("trailing characters in signature '" + s + "'");

    std::vector<std::array<FaceGluing, 4>> g(static_cast<std::size_t>(n));
    std::size_t ai = 0, ji = 0;
    int fresh = 1;
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (g[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)].tet >= 0) continue;
            int a = actions[ai++];
            if (a == 0) throw MalformedSignature("signature '" + s + "' has boundary faces");
            int d;
            Perm p;
            if (a == 1) {
                if (fresh >= n) throw MalformedSignature("signature '" + s + "' creates too many tetrahedra");
                d = fresh++;
                p = kIdentityPerm;
            } else {
                d = dests[ji];
                p = s4_table()[static_cast<std::size_t>(perms[ji])];
                ++ji;
                if (d >= n) throw MalformedSignature("gluing destination out of range in '" + s + "'");
            }
            auto& mine = g[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            auto& theirs = g[static_cast<std::size_t>(d)][static_cast<std::size_t>(p[f])];
            if (theirs.tet >= 0 || (d == t && p[f] == f))
                throw MalformedSignature("signature '" + s + "' has a non-involutive gluing");
            mine = FaceGluing{d, p};
            theirs = FaceGluing{t, inverse(p)};
        }
    Triangulation tri(std::move(g));
    try {
        tri.check_closed_involution();
    } catch (const InvalidTriangulation& e) {
        throw MalformedSignature(e.what());
    }
    return tri;
}

/// Canonical signature: the minimum over all starting tetrahedra and vertex labellings.
inline std::string encode_isosig(const Triangulation& t) {
    std::string best;
    for (int s = 0; s < t.size(); ++s)
        for (const Perm& p : s4_table()) {
            std::string sig = detail::signature_from(t, s, p);
            if (best.empty() || sig < best) best = sig;
        }
    return best;
}

/// One tetrahedron-edge incidence in an edge class.
struct EdgeIncidence {
    int tet;
    int slot;
    int edge;
    int orientation;
    bool operator==(const EdgeIncidence&) const = default;
};

struct EdgeClassTable {
    std::vector<std::vector<EdgeIncidence>> classes;
    /// index_of[t][e] = class containing edge e of tetrahedron t.
    std::vector<std::array<int, 6>> index_of;

    std::size_t degree(std::size_t i) const { return classes[i].size(); }
};

/// Orbits of tetrahedron edges under the face gluings, numbered in order of first appearance.
inline EdgeClassTable edge_classes(const Triangulation& t) {
    EdgeClassTable table;
    table.index_of.assign(static_cast<std::size_t>(t.size()), {-1, -1, -1, -1, -1, -1});
    std::vector<std::array<int, 6>> orient(static_cast<std::size_t>(t.size()), {0, 0, 0, 0, 0, 0});
    for (int tet = 0; tet < t.size(); ++tet)
        for (int e = 0; e < 6; ++e) {
            if (table.index_of[static_cast<std::size_t>(tet)][static_cast<std::size_t>(e)] >= 0) continue;
            int idx = static_cast<int>(table.classes.size());
            table.classes.emplace_back();
            std::vector<std::tuple<int, int, int>> stack{{tet, kEdgeVertices[e][0], kEdgeVertices[e][1]}};
            while (!stack.empty()) {
                auto [tt, a, b] = stack.back();
                stack.pop_back();
                int ee = edge_number(a, b);
                int o = a < b ? 1 : -1;
                int& seen = table.index_of[static_cast<std::size_t>(tt)][static_cast<std::size_t>(ee)];
                if (seen >= 0) {
                    if (orient[static_cast<std::size_t>(tt)][static_cast<std::size_t>(ee)] != o)
                        throw InvalidTriangulation("edge identified with itself in reverse");
                    continue;
                }
                seen = idx;
                orient[static_cast<std::size_t>(tt)][static_cast<std::size_t>(ee)] = o;
                table.classes.back().push_back(EdgeIncidence{tt, quad_slot(ee), ee, o});
                for (int f = 0; f < 4; ++f) {
                    if (f == a || f == b) continue;
                    const FaceGluing& g = t.gluing(tt, f);
                    stack.emplace_back(g.tet, g.perm[a], g.perm[b]);
                }
            }
        }
    return table;
}

/// Faces of the triangulation: each entry is one representative (tetrahedron, face).
inline std::vector<std::pair<int, int>> triangles(const Triangulation& t) {
    std::vector<std::pair<int, int>> out;
    std::set<std::pair<int, int>> seen;
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 3; f >= 0; --f) {
            if (seen.count({tet, f})) continue;
            const FaceGluing& g = t.gluing(tet, f);
            seen.insert({tet, f});
            seen.insert({g.tet, g.perm[f]});
            out.emplace_back(tet, f);
        }
    return out;
}

/// Index of the triangle containing face f of tetrahedron tet.
inline int triangle_index(const Triangulation& t, int tet, int f) {
    auto tri = triangles(t);
    const FaceGluing& g = t.gluing(tet, f);
    for (std::size_t i = 0; i < tri.size(); ++i)
        if (tri[i] == std::make_pair(tet, f) || tri[i] == std::make_pair(g.tet, g.perm[f])) return static_cast<int>(i);
    return -1;
}

/// Vertex classes: vertex_class[t][v] is the ideal vertex containing vertex v of tetrahedron t.
inline std::vector<std::array<int, 4>> vertex_classes(const Triangulation& t, int* count = nullptr) {
    std::vector<std::array<int, 4>> cls(static_cast<std::size_t>(t.size()), {-1, -1, -1, -1});
    int next = 0;
    for (int tet = 0; tet < t.size(); ++tet)
        for (int v = 0; v < 4; ++v) {
            if (cls[static_cast<std::size_t>(tet)][static_cast<std::size_t>(v)] >= 0) continue;
            std::vector<std::pair<int, int>> stack{{tet, v}};
            while (!stack.empty()) {
                auto [tt, vv] = stack.back();
                stack.pop_back();
                int& c = cls[static_cast<std::size_t>(tt)][static_cast<std::size_t>(vv)];
                if (c >= 0) continue;
                c = next;
                for (int f = 0; f < 4; ++f) {
                    if (f == vv) continue;
                    const FaceGluing& g = t.gluing(tt, f);
                    stack.emplace_back(g.tet, g.perm[vv]);
                }
            }
            ++next;
        }
    if (count) *count = next;
    return cls;
}

/// Euler characteristic of each vertex link, computed as V - E + F of its induced triangulation.
inline std::vector<long long> vertex_link_euler(const Triangulation& t) {
    int r = 0;
    auto cls = vertex_classes(t, &r);
    EdgeClassTable edges = edge_classes(t);
    std::vector<long long> faces(static_cast<std::size_t>(r), 0), verts(static_cast<std::size_t>(r), 0);
    for (int tet = 0; tet < t.size(); ++tet)
        for (int v = 0; v < 4; ++v) ++faces[static_cast<std::size_t>(cls[static_cast<std::size_t>(tet)][static_cast<std::size_t>(v)])];
    for (const auto& c : edges.classes) {
        const EdgeIncidence& inc = c.front();
        ++verts[static_cast<std::size_t>(cls[static_cast<std::size_t>(inc.tet)][static_cast<std::size_t>(kEdgeVertices[inc.edge][0])])];
        ++verts[static_cast<std::size_t>(cls[static_cast<std::size_t>(inc.tet)][static_cast<std::size_t>(kEdgeVertices[inc.edge][1])])];
    }
    std::vector<long long> chi(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) chi[static_cast<std::size_t>(k)] = verts[static_cast<std::size_t>(k)] - faces[static_cast<std::size_t>(k)] / 2;
    return chi;
}

/// Consistent tetrahedron orientations (+1/-1, tetrahedron 0 positive), or nullopt if non-orientable.
inline std::optional<std::vector<int>> orientation(const Triangulation& t) {
    std::vector<int> o(static_cast<std::size_t>(t.size()), 0);
    for (int start = 0; start < t.size(); ++start) {
        if (o[static_cast<std::size_t>(start)] != 0) continue;
        o[static_cast<std::size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int tt = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = t.gluing(tt, f);
                int want = -o[static_cast<std::size_t>(tt)] * perm_sign(g.perm);
                int& have = o[static_cast<std::size_t>(g.tet)];
                if (have == 0) {
                    have = want;
                    stack.push_back(g.tet);
                } else if (have != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return o;
}

/// Checks closure, involution, orientability and that every vertex link has Euler characteristic 0.
inline void validate(const Triangulation& t) {
    if (t.size() == 0) throw InvalidTriangulation("empty triangulation");
    t.check_closed_involution();
    if (!orientation(t)) throw InvalidTriangulation("triangulation is not orientable");
    edge_classes(t);
    for (long long c : vertex_link_euler(t))
        if (c != 0) throw InvalidTriangulation("a vertex link has Euler characteristic " + std::to_string(c));
}

/**
 * @brief Edge equation matrix: entry (i, 3j + slot) counts edges of class i in tetrahedron j facing the quad slot.
 *
 * Negatively oriented tetrahedra have their 02/13 and 03/12 slots exchanged so
 * that every tetrahedron is read with the same orientation.
 */
inline IntMatrix edge_equation_matrix(const Triangulation& t) {
    auto o = orientation(t);
    if (!o) throw InvalidTriangulation("triangulation is not orientable");
    EdgeClassTable table = edge_classes(t);
    IntMatrix A(table.classes.size(), static_cast<std::size_t>(3 * t.size()));
    for (std::size_t i = 0; i < table.classes.size(); ++i)
        for (const EdgeIncidence& inc : table.classes[i]) {
            int slot = inc.slot;
            if ((*o)[static_cast<std::size_t>(inc.tet)] < 0 && slot != 0) slot = 3 - slot;
            A(i, static_cast<std::size_t>(3 * inc.tet + slot)) += 1;
        }
    return A;
}

}  // namespace index3d
