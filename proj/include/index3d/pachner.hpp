#pragma once

#include "engine.hpp"
#include "errors.hpp"
#include "surfaces.hpp"
#include "triangulation.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace index3d {

/// A move and its target in the canonical labelling of the decoded triangulation.
struct MoveSpec {
    enum class Kind { TwoThree, ThreeTwo, ZeroTwo, TwoZero };
    Kind kind = Kind::TwoThree;
    /// Triangle index for 2-3, edge index otherwise.
    int target = 0;
    /// The two triangles of a 0-2 move.
    int face_a = -1;
    int face_b = -1;

    bool operator==(const MoveSpec&) const = default;

    /// Path-table convention: m >= 0 is a 2-3 move on triangle m, m < 0 a 3-2 move on edge -m-1.
    static MoveSpec from_table(int m) {
        if (m >= 0) return MoveSpec{Kind::TwoThree, m};
        return MoveSpec{Kind::ThreeTwo, -m - 1};
    }

    /// Parses a table integer, or `2-3:f`, `3-2:e`, `2-0:e`, `0-2:e,f,g`.
    static MoveSpec parse(const std::string& text) {
        auto bad = [&]() { return ParseError("malformed move '" + text + "'"); };
        auto to_int = [&](const std::string& s) {
            try {
                std::size_t used = 0;
                int v = std::stoi(s, &used);
                if (used != s.size()) throw bad();
                return v;
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw bad();
            }
        };
        auto colon = text.find(':');
        if (colon == std::string::npos) return from_table(to_int(text));
        std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
        if (kind == "2-3") return MoveSpec{Kind::TwoThree, to_int(rest)};
        if (kind == "3-2") return MoveSpec{Kind::ThreeTwo, to_int(rest)};
        if (kind == "2-0") return MoveSpec{Kind::TwoZero, to_int(rest)};
        if (kind == "0-2") {
            std::vector<int> parts;
            std::istringstream in(rest);
            std::string tok;
            while (std::getline(in, tok, ',')) parts.push_back(to_int(tok));
            if (parts.size() != 3) throw bad();
            return MoveSpec{Kind::ZeroTwo, parts[0], parts[1], parts[2]};
        }
        throw bad();
    }

    std::string str() const {
        switch (kind) {
            case Kind::TwoThree:
                return std::to_string(target);
            case Kind::ThreeTwo:
                return std::to_string(-target - 1);
            case Kind::TwoZero:
                return "2-0:" + std::to_string(target);
            case Kind::ZeroTwo:
                return "0-2:" + std::to_string(target) + "," + std::to_string(face_a) + "," + std::to_string(face_b);
        }
        return "";
    }
};

namespace detail {

/// A face gluing of a tetrahedron under construction; `fresh` marks a reference to another new tetrahedron.
struct PendingGluing {
    bool fresh = false;
    int tet = -1;
    Perm perm = kIdentityPerm;
};

using PendingTet = std::array<PendingGluing, 4>;

/// Removes tetrahedra, appends new ones and rewires the old faces they attach to.
inline Triangulation rebuild(const Triangulation& t, const std::vector<int>& removed, const std::vector<PendingTet>& fresh) {
    std::vector<int> idx(static_cast<std::size_t>(t.size()), -1);
    int base = 0;
    for (int i = 0; i < t.size(); ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) idx[static_cast<std::size_t>(i)] = base++;
    std::vector<std::array<FaceGluing, 4>> out(static_cast<std::size_t>(base) + fresh.size());
    for (auto& row : out)
        for (auto& g : row) g.tet = -1;
    for (int i = 0; i < t.size(); ++i) {
        int ni = idx[static_cast<std::size_t>(i)];
        if (ni < 0) continue;
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(i, f);
            int nd = idx[static_cast<std::size_t>(g.tet)];
            if (nd >= 0) out[static_cast<std::size_t>(ni)][static_cast<std::size_t>(f)] = FaceGluing{nd, g.perm};
        }
    }
    for (std::size_t i = 0; i < fresh.size(); ++i)
        for (int F = 0; F < 4; ++F) {
            const PendingGluing& p = fresh[i][static_cast<std::size_t>(F)];
            std::size_t me = static_cast<std::size_t>(base) + i;
            if (p.tet < 0) throw InternalInconsistency("new tetrahedron face left unglued");
            if (p.fresh) {
                out[me][static_cast<std::size_t>(F)] = FaceGluing{base + p.tet, p.perm};
            } else {
                int nd = idx[static_cast<std::size_t>(p.tet)];
                if (nd < 0) throw InternalInconsistency("new tetrahedron glued to a removed one");
                out[me][static_cast<std::size_t>(F)] = FaceGluing{nd, p.perm};
                out[static_cast<std::size_t>(nd)][static_cast<std::size_t>(p.perm[F])] =
                    FaceGluing{static_cast<int>(me), inverse(p.perm)};
            }
        }
    Triangulation r(std::move(out));
    r.check_closed_involution();
    return r;
}

/// A new tetrahedron face with the vertex map phi (new local vertex to old local vertex).
struct FaceImage {
    int fresh_tet;
    int face;
    Perm phi;
};

/// Glues the external faces of a retriangulated region.
inline void glue_boundary(const Triangulation& t, const std::map<std::pair<int, int>, FaceImage>& images,
                          std::vector<PendingTet>& fresh) {
    for (const auto& [key, img] : images) {
        const FaceGluing& g = t.gluing(key.first, key.second);
        int fy = g.perm[key.second];
        auto it = images.find({g.tet, fy});
        Perm perm{};
        PendingGluing& slot = fresh[static_cast<std::size_t>(img.fresh_tet)][static_cast<std::size_t>(img.face)];
        if (it != images.end()) {
            Perm inv2 = inverse(it->second.phi);
            for (int k = 0; k < 4; ++k) perm[static_cast<std::size_t>(k)] = inv2[static_cast<std::size_t>(g.perm[static_cast<std::size_t>(img.phi[static_cast<std::size_t>(k)])])];
            slot = PendingGluing{true, it->second.fresh_tet, perm};
        } else {
            for (int k = 0; k < 4; ++k) perm[static_cast<std::size_t>(k)] = g.perm[static_cast<std::size_t>(img.phi[static_cast<std::size_t>(k)])];
            slot = PendingGluing{false, g.tet, perm};
        }
    }
}

inline Triangulation finish(Triangulation r) {
    try {
        validate(r);
    } catch (const InvalidTriangulation& e) {
        throw IllegalMove(std::string("move produces an invalid triangulation: ") + e.what());
    }
    return r;
}

}  // namespace detail

/// Replaces the two tetrahedra meeting at a triangle by three around a new degree-3 edge.
inline Triangulation move_23(const Triangulation& t, int triangle) {
    auto tris = triangles(t);
    if (triangle < 0 || triangle >= static_cast<int>(tris.size()))
        throw IllegalMove("triangle " + std::to_string(triangle) + " out of range");
    auto [A, fa] = tris[static_cast<std::size_t>(triangle)];
    const FaceGluing& ga = t.gluing(A, fa);
    int B = ga.tet;
    if (B == A) throw IllegalMove("triangle " + std::to_string(triangle) + " joins a tetrahedron to itself");
    const Perm& g = ga.perm;
    int fb = g[static_cast<std::size_t>(fa)];
    std::vector<int> eq;
    for (int v = 0; v < 4; ++v)
        if (v != fa) eq.push_back(v);
    std::vector<detail::PendingTet> fresh(3);
    std::map<std::pair<int, int>, detail::FaceImage> images;
    const Perm swap23{0, 1, 3, 2};
    for (int i = 0; i < 3; ++i) {
        int e0 = eq[static_cast<std::size_t>(i)], e1 = eq[static_cast<std::size_t>((i + 1) % 3)],
            e2 = eq[static_cast<std::size_t>((i + 2) % 3)];
        auto G = [&g](int v) { return g[static_cast<std::size_t>(v)]; };
        images[{A, e0}] = detail::FaceImage{i, 1, Perm{fa, e0, e1, e2}};
        images[{B, G(e0)}] = detail::FaceImage{i, 0, Perm{G(e0), fb, G(e1), G(e2)}};
        fresh[static_cast<std::size_t>(i)][2] = detail::PendingGluing{true, (i + 1) % 3, swap23};
        fresh[static_cast<std::size_t>((i + 1) % 3)][3] = detail::PendingGluing{true, i, swap23};
    }
    detail::glue_boundary(t, images, fresh);
    return detail::finish(detail::rebuild(t, {A, B}, fresh));
}

/// Replaces the three distinct tetrahedra around a degree-3 edge by two.
inline Triangulation move_32(const Triangulation& t, int edge) {
    EdgeClassTable table = edge_classes(t);
    if (edge < 0 || edge >= static_cast<int>(table.classes.size()))
        throw IllegalMove("edge " + std::to_string(edge) + " out of range");
    const auto& cls = table.classes[static_cast<std::size_t>(edge)];
    if (cls.size() != 3) throw IllegalMove("edge " + std::to_string(edge) + " has degree " + std::to_string(cls.size()));
    if (cls[0].tet == cls[1].tet || cls[0].tet == cls[2].tet || cls[1].tet == cls[2].tet)
        throw IllegalMove("edge " + std::to_string(edge) + " meets a tetrahedron more than once");
    enum { U, V, Wa, Wb, Wc };
    using Emb = std::array<int, 5>;
    const int T0 = cls[0].tet;
    int u0 = kEdgeVertices[static_cast<std::size_t>(cls[0].edge)][0];
    int v0 = kEdgeVertices[static_cast<std::size_t>(cls[0].edge)][1];
    std::vector<int> rest;
    for (int v = 0; v < 4; ++v)
        if (v != u0 && v != v0) rest.push_back(v);
    int x0 = rest[0], y0 = rest[1];
    Emb e0{u0, v0, y0, x0, -1};
    const FaceGluing& g1 = t.gluing(T0, x0);
    const int T1 = g1.tet;
    auto at = [](const Perm& p, int v) { return p[static_cast<std::size_t>(v)]; };
    Emb e1{at(g1.perm, u0), at(g1.perm, v0), at(g1.perm, y0), -1, at(g1.perm, x0)};
    const FaceGluing& g2 = t.gluing(T1, e1[Wa]);
    const int T2 = g2.tet;
    Emb e2{at(g2.perm, e1[U]), at(g2.perm, e1[V]), -1, at(g2.perm, e1[Wa]), at(g2.perm, e1[Wc])};
    const FaceGluing& g3 = t.gluing(T2, e2[Wc]);
    if (T0 == T1 || T1 == T2 || T0 == T2 || g3.tet != T0 || at(g3.perm, e2[U]) != e0[U] ||
        at(g3.perm, e2[V]) != e0[V] || at(g3.perm, e2[Wb]) != e0[Wb] || at(g3.perm, e2[Wc]) != e0[Wa])
        throw IllegalMove("edge " + std::to_string(edge) + " is not surrounded by three tetrahedra in a cycle");
    std::vector<detail::PendingTet> fresh(2);
    fresh[0][0] = detail::PendingGluing{true, 1, kIdentityPerm};
    fresh[1][0] = detail::PendingGluing{true, 0, kIdentityPerm};
    std::map<std::pair<int, int>, detail::FaceImage> images;
    for (const auto& [T, m] : {std::pair{T0, e0}, std::pair{T1, e1}, std::pair{T2, e2}}) {
        int miss = m[Wa] < 0 ? Wa : (m[Wb] < 0 ? Wb : Wc);
        const std::array<std::pair<int, int>, 2> ends{{{U, V}, {V, U}}};
        for (int pi = 0; pi < 2; ++pi) {
            auto [apex, opp] = ends[static_cast<std::size_t>(pi)];
            Perm phi{};
            phi[0] = m[static_cast<std::size_t>(apex)];
            for (int w : {Wa, Wb, Wc})
                if (w != miss) phi[static_cast<std::size_t>(w - 1)] = m[static_cast<std::size_t>(w)];
            phi[static_cast<std::size_t>(miss - 1)] = m[static_cast<std::size_t>(opp)];
            images[{T, m[static_cast<std::size_t>(opp)]}] = detail::FaceImage{pi, miss - 1, phi};
        }
    }
    detail::glue_boundary(t, images, fresh);
    return detail::finish(detail::rebuild(t, {T0, T1, T2}, fresh));
}

/// Flattens the two-tetrahedron pillow around a degree-2 edge.
inline Triangulation move_20(const Triangulation& t, int edge) {
    EdgeClassTable table = edge_classes(t);
    if (edge < 0 || edge >= static_cast<int>(table.classes.size()))
        throw IllegalMove("edge " + std::to_string(edge) + " out of range");
    const auto& cls = table.classes[static_cast<std::size_t>(edge)];
    if (cls.size() != 2) throw IllegalMove("edge " + std::to_string(edge) + " has degree " + std::to_string(cls.size()));
    const int T0 = cls[0].tet;
    if (cls[1].tet == T0) throw IllegalMove("edge " + std::to_string(edge) + " meets one tetrahedron twice");
    int u = kEdgeVertices[static_cast<std::size_t>(cls[0].edge)][0];
    int v = kEdgeVertices[static_cast<std::size_t>(cls[0].edge)][1];
    std::vector<int> rest;
    for (int w = 0; w < 4; ++w)
        if (w != u && w != v) rest.push_back(w);
    int x = rest[0], y = rest[1];
    const FaceGluing& gx = t.gluing(T0, x);
    const FaceGluing& gy = t.gluing(T0, y);
    const int T1 = gx.tet;
    if (gy.tet != T1 || gx.perm != gy.perm)
        throw IllegalMove("the tetrahedra around edge " + std::to_string(edge) + " do not form a pillow");
    const Perm& g = gx.perm;
    auto at = [](const Perm& p, int k) { return p[static_cast<std::size_t>(k)]; };
    int exy = edge_number(x, y), gxy = edge_number(at(g, x), at(g, y));
    if (table.index_of[static_cast<std::size_t>(T0)][static_cast<std::size_t>(exy)] ==
        table.index_of[static_cast<std::size_t>(T1)][static_cast<std::size_t>(gxy)])
        throw IllegalMove("flattening the pillow at edge " + std::to_string(edge) + " would fold an edge onto itself");
    const Perm ginv = inverse(g);
    auto in_pillow = [&](int tet) { return tet == T0 || tet == T1; };
    auto out = t.gluings();
    bool outside_found = false;
    for (int P : {T0, T1})
        for (int f = 0; f < 4; ++f) {
            bool outer = (P == T0) ? (f == u || f == v) : (f == at(g, u) || f == at(g, v));
            if (!outer) continue;
            const FaceGluing& start = t.gluing(P, f);
            if (in_pillow(start.tet)) continue;
            outside_found = true;
            int X = start.tet;
            int fx = at(start.perm, f);
            Perm sigma = inverse(start.perm);
            int cur = P, face = f;
            for (int hops = 0;; ++hops) {
                if (hops > 4) throw IllegalMove("the pillow at edge " + std::to_string(edge) + " closes up on itself");
                const Perm& mu = (cur == T0) ? g : ginv;
                int Q = (cur == T0) ? T1 : T0;
                const FaceGluing& next = t.gluing(Q, at(mu, face));
                sigma = compose(next.perm, compose(mu, sigma));
                if (!in_pillow(next.tet)) {
                    out[static_cast<std::size_t>(X)][static_cast<std::size_t>(fx)] = FaceGluing{next.tet, sigma};
                    break;
                }
                face = at(next.perm, at(mu, face));
                cur = next.tet;
            }
        }
    if (!outside_found) throw IllegalMove("the pillow at edge " + std::to_string(edge) + " is the whole triangulation");
    return detail::finish(detail::rebuild(Triangulation(std::move(out)), {T0, T1}, {}));
}

/**
 * @brief Inserts a two-tetrahedron pillow between two distinct triangles sharing an edge.
 *
 * The pillow tetrahedra are appended last; the new degree-2 edge is edge 01 of
 * the second-to-last tetrahedron.
 */
inline Triangulation move_02(const Triangulation& t, int edge, int tri_a, int tri_b) {
    auto tris = triangles(t);
    EdgeClassTable table = edge_classes(t);
    auto in_range = [&](int f) { return f >= 0 && f < static_cast<int>(tris.size()); };
    if (!in_range(tri_a) || !in_range(tri_b)) throw IllegalMove("triangle out of range");
    if (edge < 0 || edge >= static_cast<int>(table.classes.size())) throw IllegalMove("edge out of range");
    if (tri_a == tri_b) throw IllegalMove("0-2 needs two distinct triangles");
    auto at = [](const Perm& p, int k) { return p[static_cast<std::size_t>(k)]; };
    auto [A, fa] = tris[static_cast<std::size_t>(tri_a)];
    int a1 = -1, a2 = -1;
    for (int e = 0; e < 6 && a1 < 0; ++e) {
        int p = kEdgeVertices[static_cast<std::size_t>(e)][0], q = kEdgeVertices[static_cast<std::size_t>(e)][1];
        if (p != fa && q != fa && table.index_of[static_cast<std::size_t>(A)][static_cast<std::size_t>(e)] == edge) {
            a1 = p;
            a2 = q;
        }
    }
    if (a1 < 0) throw IllegalMove("edge " + std::to_string(edge) + " is not an edge of triangle " + std::to_string(tri_a));
    int pA = 6 - fa - a1 - a2;

    int T = A, p = a1, q = a2, enter = fa;
    int B = -1, fb = -1, b1 = -1, b2 = -1;
    const std::size_t limit = 4 * static_cast<std::size_t>(t.size()) + 4;
    for (std::size_t step = 0; step < limit; ++step) {
        int r = -1;
        for (int w = 0; w < 4; ++w)
            if (w != p && w != q && w != enter) r = w;
        int exit = r;
        if (triangle_index(t, T, exit) == tri_b) {
            B = T;
            fb = exit;
            b1 = p;
            b2 = q;
            break;
        }
        const FaceGluing& g = t.gluing(T, exit);
        if (g.tet == A && at(g.perm, exit) == fa) break;
        T = g.tet;
        p = at(g.perm, p);
        q = at(g.perm, q);
        enter = at(g.perm, exit);
    }
    if (B < 0) throw IllegalMove("triangle " + std::to_string(tri_b) + " is not incident to edge " + std::to_string(edge));
    int pB = 6 - fb - b1 - b2;

    Perm phi0{fa, pA, a1, a2};
    Perm phi1{pB, fb, b1, b2};
    const FaceGluing partner_a = t.gluing(A, fa);
    const FaceGluing partner_b = t.gluing(B, fb);
    auto out = t.gluings();
    const int n = t.size();
    out.resize(static_cast<std::size_t>(n + 2));
    auto set = [&out](int tet, int face, int to, const Perm& perm) {
        out[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)] = FaceGluing{to, perm};
    };
    const int P0 = n, P1 = n + 1;
    set(P0, 0, A, phi0);
    set(A, fa, P0, inverse(phi0));
    set(P0, 1, B, phi1);
    set(B, fb, P0, inverse(phi1));
    set(P0, 2, P1, kIdentityPerm);
    set(P1, 2, P0, kIdentityPerm);
    set(P0, 3, P1, kIdentityPerm);
    set(P1, 3, P0, kIdentityPerm);
    Perm qa = compose(partner_a.perm, phi0);
    Perm qb = compose(partner_b.perm, phi1);
    set(P1, 0, partner_a.tet, qa);
    set(partner_a.tet, at(qa, 0), P1, inverse(qa));
    set(P1, 1, partner_b.tet, qb);
    set(partner_b.tet, at(qb, 1), P1, inverse(qb));
    Triangulation r(std::move(out));
    try {
        r.check_closed_involution();
    } catch (const InvalidTriangulation& e) {
        throw IllegalMove(std::string("0-2 move is not well defined here: ") + e.what());
    }
    return detail::finish(r);
}

/// Edge index of the degree-2 edge created by move_02.
inline int created_pillow_edge(const Triangulation& after) {
    return edge_classes(after).index_of[static_cast<std::size_t>(after.size() - 2)][0];
}

inline Triangulation apply_move(const Triangulation& t, const MoveSpec& m) {
    switch (m.kind) {
        case MoveSpec::Kind::TwoThree:
            return move_23(t, m.target);
        case MoveSpec::Kind::ThreeTwo:
            return move_32(t, m.target);
        case MoveSpec::Kind::TwoZero:
            return move_20(t, m.target);
        case MoveSpec::Kind::ZeroTwo:
            return move_02(t, m.target, m.face_a, m.face_b);
    }
    throw IllegalMove("unknown move kind");
}

/// One row of a path table; the last row has no move.
struct PathStep {
    std::string signature;
    std::optional<MoveSpec> move;
};

using Path = std::vector<PathStep>;

/// Parses `isoSig move` lines, each path closed by an `isoSig end` line; `#` starts a comment.
inline std::vector<Path> parse_paths(const std::string& text) {
    std::vector<Path> paths;
    Path cur;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string sig, mv, extra;
        if (!(ls >> sig)) continue;
        if (!(ls >> mv) || (ls >> extra)) throw ParseError("expected `isoSig move` or `isoSig end`", lineno, 1);
        if (mv == "end") {
            cur.push_back(PathStep{sig, std::nullopt});
            paths.push_back(std::move(cur));
            cur.clear();
        } else {
            try {
                cur.push_back(PathStep{sig, MoveSpec::parse(mv)});
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno, static_cast<int>(line.find(mv)) + 1);
            }
        }
    }
    if (!cur.empty()) throw ParseError("path is not terminated by an `end` line", lineno, 1);
    return paths;
}

inline std::vector<Path> load_path_file(const std::string& file) {
    std::ifstream f(file);
    if (!f) throw std::ios_base::failure("cannot open '" + file + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_paths(ss.str());
}

struct PathReport {
    std::size_t steps = 0;
    /// Closed 1-efficiency verdict of every triangulation on the path, in order.
    std::vector<EfficiencyVerdict> verdicts;

    bool all_clean() const {
        for (auto v : verdicts)
            if (v == EfficiencyVerdict::Violator) return false;
        return true;
    }
};

/// Replays a path; throws StepMismatch at the first step whose result differs from the next signature.
inline PathReport verify_path(const Path& path, bool with_verdicts = true) {
    PathReport rep;
    for (std::size_t i = 0; i < path.size(); ++i) {
        Triangulation t = decode_isosig(path[i].signature);
        if (with_verdicts) rep.verdicts.push_back(efficiency_report(t).verdict_closed);
        if (!path[i].move) {
            if (i + 1 != path.size()) throw ParseError("path step " + std::to_string(i) + " has no move");
            break;
        }
        if (i + 1 >= path.size()) throw ParseError("path ends with a move and no target signature");
        std::string got = encode_isosig(apply_move(t, *path[i].move));
        if (got != path[i + 1].signature) throw StepMismatch(static_cast<int>(i), got, path[i + 1].signature);
        ++rep.steps;
    }
    return rep;
}

struct InvarianceResult {
    enum class Status { Equal, Differ, PreconditionFailed };
    Status status = Status::PreconditionFailed;
    std::string reason;
    std::optional<IndexResult> before;
    std::optional<IndexResult> after;
};

/// Compares I^0(0) before and after a move when both triangulations are free of closed violators.
inline InvarianceResult invariance_check(const Triangulation& t, const MoveSpec& m, HalfInt order,
                                         const IndexLimits& limits = {}) {
    InvarianceResult res;
    Triangulation u = apply_move(t, m);
    if (efficiency_report(t).verdict_closed == EfficiencyVerdict::Violator) {
        res.reason = "triangulation before the move is not 1-efficient";
        return res;
    }
    if (efficiency_report(u).verdict_closed == EfficiencyVerdict::Violator) {
        res.reason = "triangulation after the move is not 1-efficient";
        return res;
    }
    res.before = index_zero(t, order, limits);
    res.after = index_zero(u, order, limits);
    if (res.before->verdict != Verdict::Converged || res.after->verdict != Verdict::Converged) {
        res.reason = "index enumeration did not converge";
        return res;
    }
    res.status = res.before->series == res.after->series ? InvarianceResult::Status::Equal
                                                          : InvarianceResult::Status::Differ;
    return res;
}

}  // namespace index3d
