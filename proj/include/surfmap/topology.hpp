#pragma once

// Cycle topology on embedded graphs: cutting surgery along simple cycles,
// separation / contractibility / homotopy classification, and region
// analysis between cycles.
//
// Cutting along a cycle first resigns vertices so that every cycle edge is
// positive except possibly the closing one (its sign is the invariant cycle
// sign; negative means the cycle is one-sided).  Each cycle vertex splits
// into two copies, its rotation divided at the two cycle darts; a two-sided
// cycle creates two boundary faces, a one-sided cycle one merged boundary
// of doubled length.

#include <algorithm>
#include <vector>

#include "surfmap/map.hpp"

namespace surfmap {

struct CycleRef {
    std::vector<int> darts;     // dart i runs vertices[i] -> vertices[i+1 mod k]
    std::vector<int> vertices;  // tails of the darts
    int length() const { return (int)darts.size(); }
};

inline CycleRef cycle_from_darts(const SurfaceMap& m, const std::vector<int>& darts) {
    if (darts.size() < 3) fail(ErrorCode::NotACycle, "cycle needs length >= 3");
    CycleRef c;
    c.darts = darts;
    int k = (int)darts.size();
    for (int i = 0; i < k; ++i) {
        int d = darts[i];
        if (d < 0 || d >= m.num_darts()) fail(ErrorCode::NotACycle, "dart out of range");
        if (m.head(d) != m.tail(darts[(i + 1) % k]))
            fail(ErrorCode::NotACycle, "darts do not chain head to tail");
        c.vertices.push_back(m.tail(d));
    }
    auto sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            fail(ErrorCode::CycleTouchesItself, "cycle repeats vertex " + std::to_string(sorted[i]));
    return c;
}

inline CycleRef cycle_from_vertices(const SurfaceMap& m, const std::vector<int>& vs) {
    if (vs.size() < 3) fail(ErrorCode::NotACycle, "cycle needs length >= 3");
    std::vector<int> darts;
    for (size_t i = 0; i < vs.size(); ++i) {
        int d = m.dart_between(vs[i], vs[(i + 1) % vs.size()]);
        if (d < 0)
            fail(ErrorCode::NotACycle, "no edge " + std::to_string(vs[i]) + "-" +
                                           std::to_string(vs[(i + 1) % vs.size()]));
        darts.push_back(d);
    }
    return cycle_from_darts(m, darts);
}

// Lexicographically least dart sequence over all rotations of the cycle and
// of its reversal; used for deduplication and deterministic tie-breaks.
inline std::vector<int> canonical_cycle_key(const CycleRef& c) {
    int k = c.length();
    std::vector<int> rev(k);
    for (int i = 0; i < k; ++i) rev[i] = SurfaceMap::twin(c.darts[k - 1 - i]);
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& seq, int start) {
        std::vector<int> rot(k);
        for (int i = 0; i < k; ++i) rot[i] = seq[(start + i) % k];
        if (best.empty() || rot < best) best = rot;
    };
    for (int s = 0; s < k; ++s) {
        consider(c.darts, s);
        consider(rev, s);
    }
    return best;
}

struct CutComponent {
    SurfaceMap map;                  // boundary faces marked as holes
    std::vector<int> to_host_vertex; // local vertex -> host vertex
    std::vector<int> host_face;      // local face -> host face, -1 for created boundaries
    std::vector<int> boundary_cycle; // local face -> cutting cycle index, -1 otherwise
    std::vector<uint8_t> boundary_merged;  // per local face: 1 if a one-sided merged boundary

    int created_boundaries() const {
        int n = 0;
        for (int f = 0; f < map.num_faces(); ++f) n += boundary_cycle[f] >= 0;
        return n;
    }
    // V - E + F of the closed component (boundary faces count as faces).
    int capped_chi() const { return map.vertex_count - map.num_edges() + map.num_faces(); }
};

struct CutResult {
    std::vector<CutComponent> components;
    std::vector<uint8_t> cycle_one_sided;  // per input cycle
};

namespace detail {

struct CutScratch {
    // Working copy of rotation structure with stable dart ids.
    std::vector<std::vector<int>> rotation;
    std::vector<int> sigma_next, sigma_prev;
    std::vector<int8_t> edge_sign;
    std::vector<uint8_t> resigned;

    explicit CutScratch(const SurfaceMap& m)
        : rotation(m.rotation),
          sigma_next(m.sigma_next),
          sigma_prev(m.sigma_prev),
          edge_sign(m.edge_sign),
          resigned(m.vertex_count, 0) {}

    void resign(const SurfaceMap& m, int v) {
        resigned[v] ^= 1;
        for (int d : rotation[v]) edge_sign[d >> 1] = (int8_t)-edge_sign[d >> 1];
        std::reverse(rotation[v].begin(), rotation[v].end());
        int k = (int)rotation[v].size();
        for (int i = 0; i < k; ++i) {
            sigma_next[rotation[v][i]] = rotation[v][(i + 1) % k];
            sigma_prev[rotation[v][i]] = rotation[v][(i - 1 + k) % k];
        }
        (void)m;
    }
};

}  // namespace detail

// Cuts along pairwise vertex-disjoint simple cycles.
inline CutResult cut_along_many(const SurfaceMap& m, const std::vector<CycleRef>& cycles) {
    int V = m.vertex_count;
    std::vector<int> on_cycle(V, -1), cycle_pos(V, -1);
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        for (int i = 0; i < c.length(); ++i) {
            int v = c.vertices[i];
            if (on_cycle[v] >= 0)
                fail(ErrorCode::CyclesShareVertex, "vertex " + std::to_string(v) + " lies on two cycles");
            on_cycle[v] = (int)ci;
            cycle_pos[v] = i;
        }
    }

    // Normalize signs: make every cycle edge positive except the closing one.
    detail::CutScratch work(m);
    std::vector<uint8_t> one_sided(cycles.size(), 0);
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        for (int i = 1; i < c.length(); ++i)
            if (work.edge_sign[c.darts[i - 1] >> 1] < 0) work.resign(m, c.vertices[i]);
        one_sided[ci] = work.edge_sign[c.darts[c.length() - 1] >> 1] < 0;
    }

    // Arc membership at cut vertices: rotation splits at the two cycle darts.
    // arc_left[d] = 1 when dart d stays with the original vertex copy.
    std::vector<uint8_t> arc_left(m.num_darts(), 0);
    std::vector<int> q_of(V, -1);   // second copy ids
    std::vector<int> q_host;        // host vertex per second copy
    int next_id = V;
    for (const auto& c : cycles)
        for (int i = 0; i < c.length(); ++i) {
            q_of[c.vertices[i]] = next_id++;
            q_host.push_back(c.vertices[i]);
        }
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        int k = c.length();
        for (int i = 0; i < k; ++i) {
            int v = c.vertices[i];
            int out_d = c.darts[i];
            int in_d = SurfaceMap::twin(c.darts[(i - 1 + k) % k]);
            arc_left[out_d] = 1;
            for (int d = work.sigma_next[out_d]; d != in_d; d = work.sigma_next[d]) arc_left[d] = 1;
            arc_left[in_d] = 1;
        }
    }

    // Head resolution for non-cycle darts (head copy chosen by the twin's arc).
    auto resolve_head = [&](int d) {
        int h = m.head(d);
        if (on_cycle[h] < 0) return h;
        return arc_left[SurfaceMap::twin(d)] ? h : q_of[h];
    };

    // Neighbor lists of the cut graph.
    std::vector<std::vector<int>> nbrs(next_id);
    std::vector<std::pair<int, int>> negatives;
    auto note_sign = [&](int u, int v, int8_t s) {
        if (s < 0) negatives.push_back({u, v});
    };
    for (int v = 0; v < V; ++v)
        if (on_cycle[v] < 0)
            for (int d : work.rotation[v]) nbrs[v].push_back(resolve_head(d));
    // Signs of surviving non-cycle edges (cycle edge copies handled below).
    for (int e = 0; e < m.num_edges(); ++e) {
        int u = m.dart_tail[2 * e], v = m.dart_head[2 * e];
        if (on_cycle[u] >= 0 && on_cycle[u] == on_cycle[v]) {
            int k = cycles[on_cycle[u]].length();
            int pu = cycle_pos[u], pv = cycle_pos[v];
            if ((pu + 1) % k == pv || (pv + 1) % k == pu) continue;
        }
        int d = 2 * e;
        int tu = on_cycle[u] < 0 ? u : (arc_left[d] ? u : q_of[u]);
        note_sign(tu, resolve_head(d), work.edge_sign[e]);
    }

    // Rotation lists at cut vertices, and the cycle edge copies.
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        int k = c.length();
        auto sign_of = [&](int i) { return work.edge_sign[c.darts[(i % k + k) % k] >> 1]; };
        for (int i = 0; i < k; ++i) {
            int v = c.vertices[i];
            int out_d = c.darts[i];
            int in_d = SurfaceMap::twin(c.darts[(i - 1 + k) % k]);
            int p_next = sign_of(i) > 0 ? c.vertices[(i + 1) % k] : q_of[c.vertices[(i + 1) % k]];
            int p_prev = sign_of(i - 1) > 0 ? c.vertices[(i - 1 + k) % k] : q_of[c.vertices[(i - 1 + k) % k]];
            int q_next = sign_of(i) > 0 ? q_of[c.vertices[(i + 1) % k]] : c.vertices[(i + 1) % k];
            int q_prev = sign_of(i - 1) > 0 ? q_of[c.vertices[(i - 1 + k) % k]] : c.vertices[(i - 1 + k) % k];

            auto& pl = nbrs[v];
            pl.push_back(p_next);
            for (int d = work.sigma_next[out_d]; d != in_d; d = work.sigma_next[d])
                pl.push_back(resolve_head(d));
            pl.push_back(p_prev);

            auto& ql = nbrs[q_of[v]];
            ql.push_back(q_prev);
            for (int d = work.sigma_next[in_d]; d != out_d; d = work.sigma_next[d])
                ql.push_back(resolve_head(d));
            ql.push_back(q_next);

            if (sign_of(i) < 0) {
                note_sign(v, p_next, -1);
                note_sign(q_of[v], q_next, -1);
            }
        }
    }

    SurfaceMap cut = build_map(next_id, nbrs, negatives);

    // Mark the created boundary faces via their gap corners.
    std::vector<int> boundary_face_cycle(cut.num_faces(), -1);
    std::vector<uint8_t> boundary_face_merged(cut.num_faces(), 0);
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        int k = c.length();
        int v0 = c.vertices[0];
        int p_prev0 = work.edge_sign[c.darts[k - 1] >> 1] > 0 ? c.vertices[k - 1] : q_of[c.vertices[k - 1]];
        int q_next0 = work.edge_sign[c.darts[0] >> 1] > 0 ? q_of[c.vertices[1]] : c.vertices[1];
        int left_key = cut.dart_between(v0, p_prev0);
        int right_key = cut.dart_between(q_of[v0], q_next0);
        int f_left = cut.face_at_corner(left_key);
        int f_right = cut.face_at_corner(right_key);
        boundary_face_cycle[f_left] = (int)ci;
        boundary_face_cycle[f_right] = (int)ci;
        if (one_sided[ci]) {
            if (f_left != f_right) fail(ErrorCode::InvalidArgument, "internal: one-sided boundary split");
            boundary_face_merged[f_left] = 1;
        } else if (f_left == f_right) {
            fail(ErrorCode::InvalidArgument, "internal: two-sided boundary merged");
        }
    }

    // Host face -> cut face via a surviving corner witness.
    std::vector<int> host_face_of_cut(cut.num_faces(), -1);
    {
        std::vector<int> witness(m.num_faces(), -1);
        for (int a = 0; a < m.num_darts(); ++a) {
            int f = m.face_at_corner(a);
            if (witness[f] < 0) witness[f] = a;
        }
        for (int f = 0; f < m.num_faces(); ++f) {
            int a = witness[f];
            // Corner key in the resigned working copy.
            int aw = work.resigned[m.tail(a)] ? m.sigma_next[a] : a;
            int v = m.tail(aw);
            int new_tail, new_head;
            if (on_cycle[v] < 0) {
                new_tail = v;
                new_head = resolve_head(aw);
            } else {
                const auto& c = cycles[on_cycle[v]];
                int i = cycle_pos[v];
                int k = c.length();
                int out_d = c.darts[i];
                int in_d = SurfaceMap::twin(c.darts[(i - 1 + k) % k]);
                auto sgn = [&](int j) { return work.edge_sign[c.darts[(j % k + k) % k] >> 1]; };
                if (aw == out_d) {
                    new_tail = v;
                    new_head = sgn(i) > 0 ? c.vertices[(i + 1) % k] : q_of[c.vertices[(i + 1) % k]];
                } else if (aw == in_d) {
                    new_tail = q_of[v];
                    new_head = sgn(i - 1) > 0 ? q_of[c.vertices[(i - 1 + k) % k]] : c.vertices[(i - 1 + k) % k];
                } else {
                    new_tail = arc_left[aw] ? v : q_of[v];
                    new_head = resolve_head(aw);
                }
            }
            int ad = cut.dart_between(new_tail, new_head);
            if (ad < 0) fail(ErrorCode::InvalidArgument, "internal: lost corner witness in cut");
            int cf = cut.face_at_corner(ad);
            if (boundary_face_cycle[cf] >= 0 || host_face_of_cut[cf] >= 0)
                fail(ErrorCode::InvalidArgument, "internal: cut face matched twice");
            host_face_of_cut[cf] = f;
        }
    }
    for (int f = 0; f < cut.num_faces(); ++f)
        if (host_face_of_cut[f] < 0 && boundary_face_cycle[f] < 0)
            fail(ErrorCode::InvalidArgument, "internal: unmatched cut face");

    // Split into connected components.
    std::vector<int> comp(next_id, -1);
    int n_comp = 0;
    for (int v = 0; v < next_id; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = n_comp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : nbrs[u])
                if (comp[w] < 0) {
                    comp[w] = n_comp;
                    stack.push_back(w);
                }
        }
        ++n_comp;
    }

    CutResult out;
    out.cycle_one_sided = one_sided;
    out.components.resize(n_comp);
    std::vector<std::vector<int>> comp_vertices(n_comp);
    std::vector<int> local_id(next_id, -1);
    for (int v = 0; v < next_id; ++v) comp_vertices[comp[v]].push_back(v);
    for (int cidx = 0; cidx < n_comp; ++cidx)
        for (size_t i = 0; i < comp_vertices[cidx].size(); ++i) local_id[comp_vertices[cidx][i]] = (int)i;

    for (int cidx = 0; cidx < n_comp; ++cidx) {
        auto& cc = out.components[cidx];
        const auto& verts = comp_vertices[cidx];
        std::vector<std::vector<int>> local_nbrs(verts.size());
        for (size_t i = 0; i < verts.size(); ++i)
            for (int d : cut.rotation[verts[i]]) local_nbrs[i].push_back(local_id[cut.dart_head[d]]);
        std::vector<std::pair<int, int>> local_neg;
        for (int e = 0; e < cut.num_edges(); ++e)
            if (cut.edge_sign[e] < 0 && comp[cut.dart_tail[2 * e]] == cidx)
                local_neg.push_back({local_id[cut.dart_tail[2 * e]], local_id[cut.dart_head[2 * e]]});
        cc.map = build_map((int)verts.size(), local_nbrs, local_neg);
        cc.to_host_vertex.resize(verts.size());
        for (size_t i = 0; i < verts.size(); ++i)
            cc.to_host_vertex[i] = verts[i] < V ? verts[i] : q_host[verts[i] - V];
        // Local faces -> global cut faces -> host faces / boundaries.
        cc.host_face.assign(cc.map.num_faces(), -1);
        cc.boundary_cycle.assign(cc.map.num_faces(), -1);
        cc.boundary_merged.assign(cc.map.num_faces(), 0);
        for (int f = 0; f < cc.map.num_faces(); ++f) {
            int s0 = cc.map.faces[f].least_state;
            int d_loc = s0 >> 1, side = s0 & 1;
            int gu = verts[cc.map.dart_tail[d_loc]], gv = verts[cc.map.dart_head[d_loc]];
            int d_glob = cut.dart_between(gu, gv);
            int gf = cut.face_of(d_glob, side);
            cc.host_face[f] = host_face_of_cut[gf];
            cc.boundary_cycle[f] = boundary_face_cycle[gf];
            cc.boundary_merged[f] = boundary_face_merged[gf];
            if (cc.boundary_cycle[f] >= 0) cc.map.face_is_hole[f] = 1;
            if (cc.host_face[f] >= 0 && m.face_is_hole[cc.host_face[f]]) cc.map.face_is_hole[f] = 1;
        }
    }
    return out;
}

inline CutResult cut_along(const SurfaceMap& m, const CycleRef& c) { return cut_along_many(m, {c}); }

// True iff cutting along c disconnects the surface.
inline bool is_separating(const SurfaceMap& m, const CycleRef& c) {
    return cut_along(m, c).components.size() >= 2;
}

// True iff some cut component is a disk bounded by the copy of c.
inline bool is_contractible(const SurfaceMap& m, const CycleRef& c) {
    auto cut = cut_along(m, c);
    for (const auto& cc : cut.components) {
        if (cc.capped_chi() != 2) continue;
        int boundaries = 0, blen = -1;
        for (int f = 0; f < cc.map.num_faces(); ++f)
            if (cc.boundary_cycle[f] >= 0) {
                ++boundaries;
                blen = cc.map.faces[f].length;
            }
        if (boundaries == 1 && blen == c.length()) return true;
    }
    return false;
}

// Disjoint noncontractible cycles are homotopic iff some component between
// them is a cylinder with one boundary from each.
inline bool are_homotopic_disjoint(const SurfaceMap& m, const CycleRef& c, const CycleRef& d) {
    for (int v : c.vertices)
        for (int w : d.vertices)
            if (v == w) fail(ErrorCode::CyclesShareVertex, "cycles share vertex " + std::to_string(v));
    if (is_contractible(m, c) || is_contractible(m, d))
        fail(ErrorCode::CycleContractible, "homotopy test needs noncontractible cycles");
    auto cut = cut_along_many(m, {c, d});
    for (const auto& cc : cut.components) {
        if (cc.capped_chi() != 2) continue;
        bool from_c = false, from_d = false;
        int boundaries = 0;
        for (int f = 0; f < cc.map.num_faces(); ++f)
            if (cc.boundary_cycle[f] >= 0) {
                ++boundaries;
                if (cc.boundary_cycle[f] == 0) from_c = true;
                if (cc.boundary_cycle[f] == 1) from_d = true;
            }
        if (boundaries == 2 && from_c && from_d) return true;
    }
    return false;
}

// A connected set of faces of the host map together with its topology.
struct Region {
    std::vector<int> faces;                   // host face ids, sorted
    int euler_char = 0;                       // V_R - E_R + |faces|
    std::vector<std::vector<int>> boundary_walks;  // host vertex walks
    bool orientable = true;
    bool contains_vertex_interior = false;
};

inline int region_euler_char(const SurfaceMap& m, const std::vector<int>& faces) {
    std::vector<uint8_t> vin(m.vertex_count, 0), ein(m.num_edges(), 0), fin(m.num_faces(), 0);
    for (int f : faces) fin[f] = 1;
    for (int f : faces)
        for (int d : m.faces[f].walk) {
            vin[m.tail(d)] = 1;
            vin[m.head(d)] = 1;
            ein[d >> 1] = 1;
        }
    int V = 0, E = 0;
    for (auto b : vin) V += b;
    for (auto b : ein) E += b;
    return V - E + (int)faces.size();
}

// The component of the cut surface containing the face on the '+' side of
// side_anchor (a dart of c), reported in host face ids.
inline Region region_between(const SurfaceMap& m, const CycleRef& c, const CycleRef& d, int side_anchor) {
    bool on_c = false;
    for (int dd : c.darts) on_c |= dd == side_anchor || SurfaceMap::twin(dd) == side_anchor;
    if (!on_c) fail(ErrorCode::InvalidArgument, "side anchor is not a dart of the first cycle");
    int f_anchor = m.face_of(side_anchor, 0);
    auto cut = cut_along_many(m, {c, d});
    for (const auto& cc : cut.components) {
        bool has = false;
        for (int f = 0; f < cc.map.num_faces(); ++f) has |= cc.host_face[f] == f_anchor;
        if (!has) continue;
        Region r;
        for (int f = 0; f < cc.map.num_faces(); ++f)
            if (cc.host_face[f] >= 0) r.faces.push_back(cc.host_face[f]);
        std::sort(r.faces.begin(), r.faces.end());
        r.euler_char = region_euler_char(m, r.faces);
        for (int f = 0; f < cc.map.num_faces(); ++f)
            if (cc.boundary_cycle[f] >= 0) {
                std::vector<int> w;
                for (int dd : cc.map.faces[f].walk) w.push_back(cc.to_host_vertex[cc.map.tail(dd)]);
                r.boundary_walks.push_back(w);
            }
        r.orientable = euler_genus(cc.map).orientable;
        std::vector<uint8_t> on_cut(m.vertex_count, 0);
        for (int v : c.vertices) on_cut[v] = 1;
        for (int v : d.vertices) on_cut[v] = 1;
        std::vector<uint8_t> seen(m.vertex_count, 0);
        for (int f : r.faces)
            for (int dd : m.faces[f].walk) seen[m.tail(dd)] = 1;
        for (int v = 0; v < m.vertex_count; ++v)
            if (seen[v] && !on_cut[v]) r.contains_vertex_interior = true;
        return r;
    }
    fail(ErrorCode::InvalidArgument, "internal: anchor face not found in any component");
}

}  // namespace surfmap
