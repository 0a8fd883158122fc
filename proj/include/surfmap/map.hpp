#pragma once

// Graphs embedded on closed surfaces, encoded as signed rotation systems.
//
// Darts are directed edges: undirected edge e contributes darts 2e (the
// direction in which e was first seen) and 2e+1 (its twin).  Edges are
// numbered in order of first appearance scanning vertices 0..V-1 and each
// vertex's rotation list left to right, so identical input text always
// yields identical dart and face numbering.
//
// Face tracing works on (dart, side) states.  From state (u->v, s):
//   s' = s flipped iff sign(uv) = -1,
//   next dart = the dart after v->u in v's rotation if s' = +,
//               the dart before v->u if s' = -,
//   next state = (next dart, s').
// Each orbit pairs with a mirror orbit (same boundary circle walked the
// other way); a face is such a pair.  The mirror of (d, s) is
// (twin(d), s flipped iff sign = +1).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "surfmap/base.hpp"

namespace surfmap {

struct FacialWalk {
    int face_id = -1;
    std::vector<int> walk;  // dart sequence of the canonical orbit
    bool is_simple = false; // no repeated vertex along the walk
    int length = 0;
    int least_state = -1;   // first (dart, side) state of the canonical orbit
};

enum class VertexTag : uint8_t { None = 0, Black = 1, White = 2 };

struct SurfaceMap {
    int vertex_count = 0;
    std::vector<std::vector<int>> rotation;  // per-vertex dart lists, cyclic
    std::vector<int> dart_tail, dart_head;   // per dart
    std::vector<int> sigma_next, sigma_prev; // rotation permutation on darts
    std::vector<int8_t> edge_sign;           // per edge, +1 or -1

    std::vector<int> face_of_state;          // per (dart, side), size 4E
    std::vector<FacialWalk> faces;
    std::vector<uint8_t> face_is_hole;
    std::vector<VertexTag> tags;             // empty when untagged

    int num_edges() const { return (int)edge_sign.size(); }
    int num_darts() const { return (int)dart_head.size(); }
    int num_faces() const { return (int)faces.size(); }
    int num_holes() const {
        int n = 0;
        for (uint8_t h : face_is_hole) n += h;
        return n;
    }

    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }
    int tail(int d) const { return dart_tail[d]; }
    int head(int d) const { return dart_head[d]; }
    int degree(int v) const { return (int)rotation[v].size(); }
    int8_t sign_of_dart(int d) const { return edge_sign[d >> 1]; }

    // state encoding: 2*d + side, side 0 = '+', 1 = '-'
    static int state_of(int d, int side) { return 2 * d + side; }
    int next_state(int s) const {
        int d = s >> 1;
        int side = (s & 1) ^ (edge_sign[d >> 1] < 0 ? 1 : 0);
        int t = twin(d);
        int nd = side == 0 ? sigma_next[t] : sigma_prev[t];
        return 2 * nd + side;
    }
    int mirror_state(int s) const {
        int d = s >> 1;
        int side = (s & 1) ^ (edge_sign[d >> 1] > 0 ? 1 : 0);
        return 2 * twin(d) + side;
    }

    int face_of(int d, int side) const { return face_of_state[2 * d + side]; }
    // Face owning the corner between consecutive rotation darts (a, sigma_next[a]).
    int face_at_corner(int a) const {
        return face_of_state[2 * twin(a) + (edge_sign[a >> 1] > 0 ? 0 : 1)];
    }
    // The two face-sides flanking edge e (equal when both sides lie on one face).
    std::pair<int, int> faces_of_edge(int e) const {
        return {face_of_state[4 * e], face_of_state[4 * e + 1]};
    }

    int dart_between(int u, int v) const {
        for (int d : rotation[u])
            if (dart_head[d] == v) return d;
        return -1;
    }
    int edge_between(int u, int v) const {
        int d = dart_between(u, v);
        return d < 0 ? -1 : (d >> 1);
    }

    std::vector<int> hole_faces() const {
        std::vector<int> out;
        for (int f = 0; f < num_faces(); ++f)
            if (face_is_hole[f]) out.push_back(f);
        return out;
    }

    std::vector<int> walk_vertices(int f) const {
        std::vector<int> vs;
        vs.reserve(faces[f].walk.size());
        for (int d : faces[f].walk) vs.push_back(dart_tail[d]);
        return vs;
    }
};

namespace detail {

inline void trace_all_faces(SurfaceMap& m) {
    int nstates = 2 * m.num_darts();
    m.face_of_state.assign(nstates, -1);
    m.faces.clear();
    std::vector<int> orbit;
    for (int s0 = 0; s0 < nstates; ++s0) {
        if (m.face_of_state[s0] >= 0) continue;
        int f = (int)m.faces.size();
        orbit.clear();
        int s = s0;
        do {
            orbit.push_back(s);
            m.face_of_state[s] = f;
            m.face_of_state[m.mirror_state(s)] = f;
            s = m.next_state(s);
        } while (s != s0);
        FacialWalk w;
        w.face_id = f;
        w.least_state = s0;
        w.length = (int)orbit.size();
        w.walk.reserve(orbit.size());
        for (int st : orbit) w.walk.push_back(st >> 1);
        std::vector<int> seen;
        w.is_simple = true;
        for (int d : w.walk) seen.push_back(m.dart_tail[d]);
        std::sort(seen.begin(), seen.end());
        for (size_t i = 1; i < seen.size(); ++i)
            if (seen[i] == seen[i - 1]) { w.is_simple = false; break; }
        m.faces.push_back(std::move(w));
    }
    m.face_is_hole.assign(m.faces.size(), 0);
}

}  // namespace detail

// Anchor naming a face: the face whose walk contains dart u->v on side '+'.
struct HoleAnchor {
    int u = -1, v = -1;
};

// neighbors[v] is the cyclic list of v's neighbors in rotation order.
inline SurfaceMap build_map(int vertex_count,
                            const std::vector<std::vector<int>>& neighbors,
                            const std::vector<std::pair<int, int>>& negative_edges = {},
                            const std::vector<HoleAnchor>& holes = {},
                            const std::vector<VertexTag>& tags = {}) {
    if (vertex_count < 0 || (int)neighbors.size() != vertex_count)
        fail(ErrorCode::InvalidArgument, "neighbor lists do not match vertex count");

    SurfaceMap m;
    m.vertex_count = vertex_count;
    m.rotation.assign(vertex_count, {});

    // First pass: number edges in order of first appearance.
    std::vector<std::vector<std::pair<int, int>>> edge_at(vertex_count);  // (neighbor, edge id)
    auto find_edge = [&](int u, int v) -> int {
        for (auto& [w, e] : edge_at[u])
            if (w == v) return e;
        return -1;
    };
    int n_edges = 0;
    for (int v = 0; v < vertex_count; ++v) {
        std::vector<int> seen;
        for (int u : neighbors[v]) {
            if (u < 0 || u >= vertex_count)
                fail(ErrorCode::NonMutualAdjacency,
                     "vertex " + std::to_string(v) + " lists unknown neighbor " + std::to_string(u));
            if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
            seen.push_back(u);
            if (find_edge(v, u) < 0) {
                int e = n_edges++;
                edge_at[v].push_back({u, e});
                edge_at[u].push_back({v, e});
            }
        }
        std::sort(seen.begin(), seen.end());
        for (size_t i = 1; i < seen.size(); ++i)
            if (seen[i] == seen[i - 1])
                fail(ErrorCode::DuplicateNeighbor,
                     "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(seen[i]) + " twice");
    }

    // Second pass: assign darts.  Dart 2e points in the direction e was first seen.
    m.dart_tail.assign(2 * n_edges, -1);
    m.dart_head.assign(2 * n_edges, -1);
    m.edge_sign.assign(n_edges, 1);
    std::vector<int> next_dart_of_edge(n_edges, -1);
    {
        int assigned = 0;
        for (int v = 0; v < vertex_count && assigned < n_edges; ++v) {
            for (int u : neighbors[v]) {
                int e = find_edge(v, u);
                if (next_dart_of_edge[e] < 0) {
                    next_dart_of_edge[e] = 1;
                    m.dart_tail[2 * e] = v;
                    m.dart_head[2 * e] = u;
                    m.dart_tail[2 * e + 1] = u;
                    m.dart_head[2 * e + 1] = v;
                    ++assigned;
                }
            }
        }
    }
    for (int v = 0; v < vertex_count; ++v) {
        for (int u : neighbors[v]) {
            int e = find_edge(v, u);
            int d = m.dart_tail[2 * e] == v ? 2 * e : 2 * e + 1;
            m.rotation[v].push_back(d);
        }
    }
    // Mutuality: every edge must appear in both endpoint lists.
    for (int e = 0; e < n_edges; ++e) {
        int u = m.dart_tail[2 * e], v = m.dart_head[2 * e];
        bool found = false;
        for (int d : m.rotation[v])
            if (d == 2 * e + 1) found = true;
        if (!found)
            fail(ErrorCode::NonMutualAdjacency,
                 "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not listed at " + std::to_string(v));
    }

    m.sigma_next.assign(2 * n_edges, -1);
    m.sigma_prev.assign(2 * n_edges, -1);
    for (int v = 0; v < vertex_count; ++v) {
        auto& rot = m.rotation[v];
        int k = (int)rot.size();
        for (int i = 0; i < k; ++i) {
            m.sigma_next[rot[i]] = rot[(i + 1) % k];
            m.sigma_prev[rot[i]] = rot[(i - 1 + k) % k];
        }
    }

    for (auto [u, v] : negative_edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            fail(ErrorCode::UnknownEdge, "sign on unknown vertex pair");
        int e = -1;
        for (auto& [w, ee] : edge_at[u])
            if (w == v) e = ee;
        if (e < 0)
            fail(ErrorCode::UnknownEdge,
                 "sign on missing edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        m.edge_sign[e] = -1;
    }

    detail::trace_all_faces(m);

    for (const auto& h : holes) {
        if (h.u < 0 || h.u >= vertex_count || h.v < 0 || h.v >= vertex_count)
            fail(ErrorCode::BadHoleAnchor, "hole anchor names unknown vertex");
        int d = m.dart_between(h.u, h.v);
        if (d < 0)
            fail(ErrorCode::BadHoleAnchor,
                 "hole anchor dart " + std::to_string(h.u) + "->" + std::to_string(h.v) + " does not exist");
        m.face_is_hole[m.face_of(d, 0)] = 1;
    }

    if (!tags.empty()) {
        if ((int)tags.size() != vertex_count)
            fail(ErrorCode::InvalidArgument, "tag list length mismatch");
        m.tags = tags;
    }
    return m;
}

inline const std::vector<FacialWalk>& trace_faces(const SurfaceMap& m) { return m.faces; }

inline std::vector<std::vector<int>> neighbor_lists(const SurfaceMap& m) {
    std::vector<std::vector<int>> out(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v)
        for (int d : m.rotation[v]) out[v].push_back(m.dart_head[d]);
    return out;
}

inline bool is_connected_graph(const SurfaceMap& m) {
    if (m.vertex_count == 0) return false;
    std::vector<uint8_t> vis(m.vertex_count, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int n = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : m.rotation[v]) {
            int u = m.dart_head[d];
            if (!vis[u]) {
                vis[u] = 1;
                ++n;
                stack.push_back(u);
            }
        }
    }
    return n == m.vertex_count;
}

struct GenusResult {
    int genus = 0;      // Euler genus of the closed surface, 2 - V + E - F
    bool orientable = true;
};

// Holes are ignored: the genus of the closed surface carrying the map.
inline GenusResult euler_genus(const SurfaceMap& m) {
    if (m.num_edges() == 0) fail(ErrorCode::InvalidArgument, "map has no edges");
    if (!is_connected_graph(m)) fail(ErrorCode::DisconnectedMap, "underlying graph is disconnected");
    GenusResult r;
    r.genus = 2 - m.vertex_count + m.num_edges() - m.num_faces();
    // Orientable iff signs normalize to all-positive by resigning at vertices:
    // propagate a flag along a spanning tree, then check non-tree edges.
    std::vector<int8_t> flag(m.vertex_count, 0);
    flag[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : m.rotation[v]) {
            int u = m.dart_head[d];
            if (flag[u] == 0) {
                flag[u] = (int8_t)(flag[v] * m.sign_of_dart(d));
                stack.push_back(u);
            }
        }
    }
    r.orientable = true;
    for (int e = 0; e < m.num_edges(); ++e) {
        int u = m.dart_tail[2 * e], v = m.dart_head[2 * e];
        if ((int)m.edge_sign[e] * flag[u] * flag[v] != 1) {
            r.orientable = false;
            break;
        }
    }
    return r;
}

struct TriangulationReport {
    bool ok = false;
    std::vector<int> offending_faces;
    int hole_count = 0;
};

// Accepts iff every non-hole face is a simple 3-cycle and every hole
// boundary is a simple cycle.
inline TriangulationReport validate_triangulation(const SurfaceMap& m) {
    TriangulationReport rep;
    for (int f = 0; f < m.num_faces(); ++f) {
        const auto& w = m.faces[f];
        if (m.face_is_hole[f]) {
            ++rep.hole_count;
            if (!w.is_simple) rep.offending_faces.push_back(f);
        } else if (w.length != 3 || !w.is_simple) {
            rep.offending_faces.push_back(f);
        }
    }
    rep.ok = rep.offending_faces.empty();
    return rep;
}

inline bool is_closed_triangulation(const SurfaceMap& m) {
    return m.num_holes() == 0 && validate_triangulation(m).ok;
}

struct RestrictedMap {
    SurfaceMap map;
    std::vector<int> host_edge;  // per new edge, the host edge id
    std::vector<int> isolated_vertices;
};

// Sub-embedding: rotation at each vertex restricted to kept darts, same
// vertex set, faces re-traced.  keep[e] selects host edges.
inline RestrictedMap restrict_subgraph(const SurfaceMap& m, const std::vector<uint8_t>& keep) {
    if ((int)keep.size() != m.num_edges())
        fail(ErrorCode::InvalidArgument, "edge mask length mismatch");
    std::vector<std::vector<int>> nbrs(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v)
        for (int d : m.rotation[v])
            if (keep[d >> 1]) nbrs[v].push_back(m.dart_head[d]);
    RestrictedMap out{build_map(m.vertex_count, nbrs), {}, {}};
    out.host_edge.assign(out.map.num_edges(), -1);
    for (int e = 0; e < out.map.num_edges(); ++e)
        out.host_edge[e] = m.edge_between(out.map.dart_tail[2 * e], out.map.dart_head[2 * e]);
    for (int v = 0; v < m.vertex_count; ++v)
        if (out.map.rotation[v].empty()) out.isolated_vertices.push_back(v);
    return out;
}

// Flip all edge signs at v and reverse v's rotation; the embedded surface
// is unchanged.
inline SurfaceMap resign_vertex(const SurfaceMap& m, int v) {
    if (v < 0 || v >= m.vertex_count) fail(ErrorCode::InvalidArgument, "bad vertex");
    auto nbrs = neighbor_lists(m);
    std::reverse(nbrs[v].begin(), nbrs[v].end());
    std::vector<std::pair<int, int>> neg;
    for (int e = 0; e < m.num_edges(); ++e) {
        bool at_v = m.dart_tail[2 * e] == v || m.dart_head[2 * e] == v;
        int8_t s = at_v ? (int8_t)-m.edge_sign[e] : m.edge_sign[e];
        if (s < 0) neg.push_back({m.dart_tail[2 * e], m.dart_head[2 * e]});
    }
    if (m.num_holes() > 0)
        fail(ErrorCode::InvalidArgument, "resign_vertex does not carry hole marks");
    return build_map(m.vertex_count, nbrs, neg, {}, m.tags);
}

inline SurfaceMap relabel_vertices(const SurfaceMap& m, const std::vector<int>& perm) {
    if ((int)perm.size() != m.vertex_count) fail(ErrorCode::InvalidArgument, "bad permutation");
    std::vector<std::vector<int>> nbrs(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v)
        for (int d : m.rotation[v]) nbrs[perm[v]].push_back(perm[m.dart_head[d]]);
    std::vector<std::pair<int, int>> neg;
    for (int e = 0; e < m.num_edges(); ++e)
        if (m.edge_sign[e] < 0) neg.push_back({perm[m.dart_tail[2 * e]], perm[m.dart_head[2 * e]]});
    std::vector<VertexTag> tags;
    if (!m.tags.empty()) {
        tags.assign(m.vertex_count, VertexTag::None);
        for (int v = 0; v < m.vertex_count; ++v) tags[perm[v]] = m.tags[v];
    }
    return build_map(m.vertex_count, nbrs, neg, {}, tags);
}

// Clears hole marks; a hole whose boundary is longer than 3 simply remains
// a non-triangular face of the closed map.
inline SurfaceMap fill_holes(const SurfaceMap& m) {
    for (int f : m.hole_faces())
        if (!m.faces[f].is_simple)
            fail(ErrorCode::NonSimpleHoleBoundary, "hole face " + std::to_string(f) + " has a non-simple boundary");
    SurfaceMap out = m;
    out.face_is_hole.assign(out.num_faces(), 0);
    return out;
}

}  // namespace surfmap
