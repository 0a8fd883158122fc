#pragma once

// Generators and built-in fixtures: torus grids, connected sums, face
// subdivisions, seeded random refinements, and the counting certificate
// for face subdivisions.

#include <optional>
#include <random>

#include "surfmap/map.hpp"

namespace surfmap {

// 6-regular triangulated torus grid on Z_m x Z_n; vertex (i,j) has id j*m+i.
// m,n >= 3 keeps the graph simple.
inline SurfaceMap torus_grid(int m, int n) {
    if (m < 3 || n < 3) fail(ErrorCode::GridTooSmall, "torus grid needs m,n >= 3");
    auto id = [&](int i, int j) { return ((j % n + n) % n) * m + ((i % m + m) % m); };
    std::vector<std::vector<int>> nbrs(m * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            nbrs[id(i, j)] = {id(i + 1, j), id(i + 1, j + 1), id(i, j + 1),
                             id(i - 1, j), id(i - 1, j - 1), id(i, j - 1)};
    return build_map(m * n, nbrs);
}

inline SurfaceMap fixture_sphere_triangle() {
    return build_map(3, {{1, 2}, {2, 0}, {0, 1}});
}

// Classical toroidal K7: rotation row i is (i+1, i+3, i+2, i+6, i+4, i+5) mod 7.
inline SurfaceMap fixture_k7_torus() {
    std::vector<std::vector<int>> nbrs(7);
    for (int i = 0; i < 7; ++i)
        nbrs[i] = {(i + 1) % 7, (i + 3) % 7, (i + 2) % 7, (i + 6) % 7, (i + 4) % 7, (i + 5) % 7};
    return build_map(7, nbrs);
}

// K6 in the projective plane (the antipodal icosahedron quotient), as an
// explicit signed rotation system.
inline SurfaceMap fixture_k6_projective() {
    std::vector<std::vector<int>> nbrs = {
        {1, 2, 3, 4, 5},
        {2, 0, 5, 3, 4},
        {0, 1, 4, 5, 3},
        {0, 2, 5, 1, 4},
        {0, 3, 1, 2, 5},
        {0, 4, 2, 3, 1},
    };
    std::vector<std::pair<int, int>> neg = {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}};
    return build_map(6, nbrs, neg);
}

namespace detail {

// Per corner of face f: (corner key dart, aligned).  A corner is aligned
// when the canonical orbit passes it in the sigma-forward sense; new edges
// planted in anti corners need a negative sign.
struct FaceCorner {
    int key = -1;
    bool aligned = true;
};

inline std::vector<FaceCorner> face_corners(const SurfaceMap& m, int f) {
    std::vector<FaceCorner> out;
    int s0 = m.faces[f].least_state;
    int s = s0;
    do {
        int d = s >> 1;
        int side = (s & 1) ^ (m.sign_of_dart(d) < 0 ? 1 : 0);
        int t = SurfaceMap::twin(d);
        FaceCorner c;
        c.key = side == 0 ? t : m.sigma_prev[t];
        c.aligned = side == 0;
        out.push_back(c);
        s = m.next_state(s);
    } while (s != s0);
    (void)walk;
    return out;
}

}  // namespace detail

// One new white vertex inside each selected face, joined to the face's
// three corners.  Black/white tags are set when subdividing all faces.
inline SurfaceMap subdivide_faces(const SurfaceMap& m, const std::vector<int>& face_list,
                                  bool tag_result) {
    if (!validate_triangulation(m).ok || m.num_holes() > 0)
        fail(ErrorCode::NotATriangulation, "face subdivision needs a closed triangulation");
    int V = m.vertex_count;
    std::vector<int> white_of(m.num_faces(), -1);
    int next_id = V;
    for (int f : face_list) {
        if (f < 0 || f >= m.num_faces() || white_of[f] >= 0)
            fail(ErrorCode::InvalidArgument, "bad face list for subdivision");
        white_of[f] = next_id++;
    }

    // corner key -> (face, aligned) for selected faces
    std::vector<int> corner_white(m.num_darts(), -1);
    std::vector<uint8_t> corner_aligned(m.num_darts(), 1);
    std::vector<std::vector<int>> white_rot(next_id - V);
    for (int f : face_list) {
        auto corners = detail::face_corners(m, f);
        std::vector<int> visit;
        for (const auto& c : corners) {
            corner_white[c.key] = white_of[f];
            corner_aligned[c.key] = c.aligned ? 1 : 0;
            visit.push_back(m.dart_tail[c.key]);
        }
        std::reverse(visit.begin(), visit.end());
        white_rot[white_of[f] - V] = visit;
    }

    std::vector<std::vector<int>> nbrs(next_id);
    std::vector<std::pair<int, int>> neg;
    for (int e = 0; e < m.num_edges(); ++e)
        if (m.edge_sign[e] < 0) neg.push_back({m.dart_tail[2 * e], m.dart_head[2 * e]});
    for (int v = 0; v < V; ++v) {
        for (int d : m.rotation[v]) {
            nbrs[v].push_back(m.dart_head[d]);
            if (corner_white[d] >= 0) {
                nbrs[v].push_back(corner_white[d]);
                if (!corner_aligned[d]) neg.push_back({v, corner_white[d]});
            }
        }
    }
    for (int w = V; w < next_id; ++w) nbrs[w] = white_rot[w - V];

    std::vector<VertexTag> tags;
    if (tag_result) {
        tags.assign(next_id, VertexTag::Black);
        for (int w = V; w < next_id; ++w) tags[w] = VertexTag::White;
    } else if (!m.tags.empty()) {
        tags = m.tags;
        tags.resize(next_id, VertexTag::None);
    }
    return build_map(next_id, nbrs, neg, {}, tags);
}

// The face subdivision: a new vertex in every face.  Original vertices are
// tagged black, the new ones white.
inline SurfaceMap face_subdivision(const SurfaceMap& m) {
    std::vector<int> all(m.num_faces());
    for (int f = 0; f < m.num_faces(); ++f) all[f] = f;
    return subdivide_faces(m, all, true);
}

// `steps` random single-face subdivisions, reproducible under `seed`.
inline SurfaceMap random_refinement(const SurfaceMap& m, int steps, uint64_t seed) {
    if (!validate_triangulation(m).ok || m.num_holes() > 0)
        fail(ErrorCode::NotATriangulation, "refinement needs a closed triangulation");
    SurfaceMap cur = m;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < steps; ++s) {
        int f = (int)(rng() % (uint64_t)cur.num_faces());
        cur = subdivide_faces(cur, {f}, false);
    }
    return cur;
}

struct ConnectedSum {
    SurfaceMap map;
    std::vector<int> a_vertex;  // per vertex of a, its id in the sum
    std::vector<int> b_vertex;  // per vertex of b
};

namespace detail {

// Resign vertices until every edge sign is +1.  Requires orientability.
inline SurfaceMap normalize_positive(const SurfaceMap& m) {
    auto g = euler_genus(m);
    if (!g.orientable) fail(ErrorCode::NonOrientableInput, "map is nonorientable");
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
    auto nbrs = neighbor_lists(m);
    for (int v = 0; v < m.vertex_count; ++v)
        if (flag[v] < 0) std::reverse(nbrs[v].begin(), nbrs[v].end());
    return build_map(m.vertex_count, nbrs, {}, {}, m.tags);
}

}  // namespace detail

// Glue two orientable closed triangulations along a pair of triangular
// faces with reversed orientation.  Euler genus adds.
inline ConnectedSum connected_sum(const SurfaceMap& a, const SurfaceMap& b, int face_a, int face_b) {
    if (!is_closed_triangulation(a) || !is_closed_triangulation(b))
        fail(ErrorCode::NotATriangulation, "connected_sum needs closed triangulations");
    SurfaceMap na = detail::normalize_positive(a);
    SurfaceMap nb = detail::normalize_positive(b);
    auto check_anchor = [](const SurfaceMap& m, int f) {
        if (f < 0 || f >= m.num_faces() || m.faces[f].length != 3 || !m.faces[f].is_simple)
            fail(ErrorCode::AnchorNotTriangle, "anchor face " + std::to_string(f) + " is not a simple triangle");
    };
    check_anchor(na, face_a);
    check_anchor(nb, face_b);

    // Walk vertices x1,x2,x3 and y1,y2,y3; identify x1=y1, x2=y3, x3=y2.
    auto xw = na.walk_vertices(face_a);
    auto yw = nb.walk_vertices(face_b);
    int x[3] = {xw[0], xw[1], xw[2]};
    int y[3] = {yw[0], yw[2], yw[1]};  // y[k] is identified with x[k]

    ConnectedSum out;
    out.a_vertex.resize(na.vertex_count);
    out.b_vertex.assign(nb.vertex_count, -1);
    for (int v = 0; v < na.vertex_count; ++v) out.a_vertex[v] = v;
    int next_id = na.vertex_count;
    for (int k = 0; k < 3; ++k) out.b_vertex[y[k]] = x[k];
    for (int v = 0; v < nb.vertex_count; ++v)
        if (out.b_vertex[v] < 0) out.b_vertex[v] = next_id++;

    // Sigma-forward arc at v from dart a1 to dart a2, endpoints excluded.
    auto arc_between = [](const SurfaceMap& m, int d_from, int d_to) {
        std::vector<int> heads;
        for (int d = m.sigma_next[d_from]; d != d_to; d = m.sigma_next[d])
            heads.push_back(m.dart_head[d]);
        return heads;
    };

    std::vector<std::vector<int>> nbrs(next_id);
    std::vector<uint8_t> is_anchor_a(na.vertex_count, 0);
    for (int k = 0; k < 3; ++k) is_anchor_a[x[k]] = 1;
    for (int v = 0; v < na.vertex_count; ++v)
        if (!is_anchor_a[v])
            for (int d : na.rotation[v]) nbrs[v].push_back(na.dart_head[d]);
    std::vector<uint8_t> is_anchor_b(nb.vertex_count, 0);
    for (int k = 0; k < 3; ++k) is_anchor_b[y[k]] = 1;
    for (int v = 0; v < nb.vertex_count; ++v)
        if (!is_anchor_b[v])
            for (int d : nb.rotation[v]) nbrs[out.b_vertex[v]].push_back(out.b_vertex[nb.dart_head[d]]);

    // Merged anchors: a's rotation from x_k->x_{k+1} round to x_k->x_{k-1},
    // then b's interior darts from y_j->y_{j+1} round to y_j->y_{j-1}.
    for (int k = 0; k < 3; ++k) {
        int xk = x[k], xn = x[(k + 1) % 3], xp = x[(k + 2) % 3];
        int yk = y[k], yn = y[(k + 1) % 3], yp = y[(k + 2) % 3];
        int a_start = na.dart_between(xk, xn), a_end = na.dart_between(xk, xp);
        // The reversed identification maps x_k->x_{k+1} onto the b-side dart
        // y_k->y_{k-1}, so the interior of b's disk is swept from y_k->y_{k-1}
        // forward to y_k->y_{k+1}.
        int b_start = nb.dart_between(yk, yp), b_end = nb.dart_between(yk, yn);
        std::vector<int>& lst = nbrs[xk];
        lst.push_back(xn);
        for (int h : arc_between(na, a_start, a_end)) lst.push_back(h);
        lst.push_back(xp);
        for (int h : arc_between(nb, b_start, b_end)) lst.push_back(out.b_vertex[h]);
    }

    out.map = build_map(next_id, nbrs);
    return out;
}

// Two faces of maximum dual-graph (face adjacency) distance, ties broken by id.
inline std::pair<int, int> most_distant_faces(const SurfaceMap& m) {
    int F = m.num_faces();
    std::vector<std::vector<int>> adj(F);
    for (int e = 0; e < m.num_edges(); ++e) {
        auto [f1, f2] = m.faces_of_edge(e);
        if (f1 != f2) {
            adj[f1].push_back(f2);
            adj[f2].push_back(f1);
        }
    }
    std::pair<int, int> best{0, 0};
    int best_d = -1;
    for (int s = 0; s < F; ++s) {
        std::vector<int> dist(F, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t q = 0; q < queue.size(); ++q) {
            int f = queue[q];
            for (int g : adj[f])
                if (dist[g] < 0) {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
        }
        for (int f = 0; f < F; ++f)
            if (dist[f] > best_d) {
                best_d = dist[f];
                best = {s, f};
            }
    }
    return best;
}

struct CountingCertificate {
    long black = 0;             // B
    long white = 0;             // W
    int host_genus = 0;         // g
    int target_holes = 0;       // g'
    long white_upper_bound = 0; // 2B + 2g' - 4, what the proof forces W below
    bool identity_holds = false; // W == 2B + 2g - 4
    bool impossible = false;     // verdict; false means inconclusive
};

// Certifies that no spanning subgraph of a face subdivision triangulates a
// sphere with g' holes, for g' <= g-1.  Pure arithmetic on the tag counts;
// verdict is inconclusive when g' >= g.
inline CountingCertificate no_spanning_certificate(const SurfaceMap& m, int gprime) {
    if (m.tags.empty()) fail(ErrorCode::NotAFaceSubdivision, "map carries no black/white tags");
    if (gprime < 0) fail(ErrorCode::InvalidArgument, "negative hole count");
    // Structural checks: whites independent of degree 3, blacks induce a
    // triangulation of the same surface.
    std::vector<uint8_t> keep(m.num_edges(), 0);
    for (int e = 0; e < m.num_edges(); ++e) {
        int u = m.dart_tail[2 * e], v = m.dart_head[2 * e];
        bool wu = m.tags[u] == VertexTag::White, wv = m.tags[v] == VertexTag::White;
        if (wu && wv) fail(ErrorCode::NotAFaceSubdivision, "white vertices are adjacent");
        if (!wu && !wv) keep[e] = 1;
    }
    long B = 0, W = 0;
    for (int v = 0; v < m.vertex_count; ++v) {
        if (m.tags[v] == VertexTag::White) {
            ++W;
            if (m.degree(v) != 3) fail(ErrorCode::NotAFaceSubdivision, "white vertex of degree != 3");
        } else {
            ++B;
        }
    }
    auto host = euler_genus(m);
    if (host.genus < 1) fail(ErrorCode::InvalidArgument, "certificate needs Euler genus >= 1");
    auto black_map = restrict_subgraph(m, keep);
    bool black_ok = false;
    if (black_map.isolated_vertices.size() == (size_t)W) {
        // The black sub-map still lists white vertices as isolated; check the rest.
        SurfaceMap compact;
        {
            std::vector<int> rank(m.vertex_count, -1);
            int nb = 0;
            for (int v = 0; v < m.vertex_count; ++v)
                if (m.tags[v] != VertexTag::White) rank[v] = nb++;
            std::vector<std::vector<int>> nbrs(nb);
            for (int v = 0; v < m.vertex_count; ++v)
                if (rank[v] >= 0)
                    for (int d : black_map.map.rotation[v]) nbrs[rank[v]].push_back(rank[black_map.map.dart_head[d]]);
            std::vector<std::pair<int, int>> neg;
            for (int e = 0; e < black_map.map.num_edges(); ++e)
                if (black_map.map.edge_sign[e] < 0)
                    neg.push_back({rank[black_map.map.dart_tail[2 * e]], rank[black_map.map.dart_head[2 * e]]});
            compact = build_map(nb, nbrs, neg);
        }
        if (is_closed_triangulation(compact)) {
            auto bg = euler_genus(compact);
            black_ok = bg.genus == host.genus && bg.orientable == host.orientable;
        }
    }
    if (!black_ok) fail(ErrorCode::NotAFaceSubdivision, "black subgraph is not a triangulation of the host surface");

    CountingCertificate cert;
    cert.black = B;
    cert.white = W;
    cert.host_genus = host.genus;
    cert.target_holes = gprime;
    cert.white_upper_bound = 2 * B + 2 * gprime - 4;
    cert.identity_holds = (W == 2 * B + 2 * host.genus - 4);
    if (!cert.identity_holds)
        fail(ErrorCode::NotAFaceSubdivision, "white count violates the subdivision identity");
    cert.impossible = gprime <= host.genus - 1;
    return cert;
}

}  // namespace surfmap
