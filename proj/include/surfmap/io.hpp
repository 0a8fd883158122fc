#pragma once

// Line-oriented text format for maps, patches and result records.
//
//   surfacemap 1
//   vertices N
//   rot v: u1 u2 ... uk        (cyclic order of outgoing neighbors)
//   sign u v -                 (edge {u,v} negative; default +)
//   hole u v                   (hole = face containing dart u->v on side +)
//   tag v black|white
//
// A document may continue with a `patch` block (kept edges, hole count and
// hole walks) and a `result` block (key: value lines).  '#' starts a
// comment.  parse(serialize(parse(text))) reproduces the parsed structure.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surfmap/map.hpp"

namespace surfmap {

struct PatchText {
    std::vector<std::pair<int, int>> kept_edges;
    std::vector<std::vector<int>> hole_walks;
};

struct Document {
    SurfaceMap map;
    std::optional<PatchText> patch;
    std::vector<std::pair<std::string, std::string>> result;  // preserved order
};

namespace detail {

inline std::string strip_line(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

inline long parse_int(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) parse_fail(line_no, "bad integer '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line_no, "bad integer '" + tok + "'");
    }
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
    using namespace detail;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    int vertex_count = -1;
    std::vector<std::vector<int>> nbrs;
    std::vector<uint8_t> have_rot;
    std::vector<std::pair<int, int>> negatives;
    std::vector<HoleAnchor> holes;
    std::vector<VertexTag> tags;
    bool any_tag = false;
    bool saw_header = false;

    enum class Section { Map, Patch, PatchHoles, Result };
    Section section = Section::Map;
    Document doc;
    PatchText patch;
    int pending_hole_walks = -1;

    auto check_vertex = [&](long v) {
        if (vertex_count < 0) parse_fail(line_no, "vertex used before 'vertices' line");
        if (v < 0 || v >= vertex_count) parse_fail(line_no, "vertex " + std::to_string(v) + " out of range");
        return (int)v;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_line(raw);
        if (line.empty()) continue;
        auto toks = split_ws(line);

        if (section == Section::Result) {
            auto colon = line.find(':');
            if (colon == std::string::npos) parse_fail(line_no, "expected 'key: value' in result block");
            std::string key = strip_line(line.substr(0, colon));
            std::string val = strip_line(line.substr(colon + 1));
            doc.result.push_back({key, val});
            continue;
        }
        if (section == Section::PatchHoles) {
            if (pending_hole_walks > 0) {
                std::vector<int> walk;
                for (auto& t : toks) walk.push_back(check_vertex(parse_int(t, line_no)));
                if (walk.size() < 3) parse_fail(line_no, "hole walk needs at least 3 vertices");
                patch.hole_walks.push_back(walk);
                if (--pending_hole_walks == 0) section = Section::Patch;
                continue;
            }
            section = Section::Patch;
        }
        if (section == Section::Patch) {
            if (toks[0] == "holes") {
                if (toks.size() != 2) parse_fail(line_no, "expected 'holes B'");
                pending_hole_walks = (int)parse_int(toks[1], line_no);
                if (pending_hole_walks < 0) parse_fail(line_no, "negative hole count");
                if (pending_hole_walks > 0) section = Section::PatchHoles;
                continue;
            }
            if (toks[0] == "result") {
                section = Section::Result;
                continue;
            }
            if (toks.size() != 2) parse_fail(line_no, "expected 'u v' kept edge in patch block");
            int u = check_vertex(parse_int(toks[0], line_no));
            int v = check_vertex(parse_int(toks[1], line_no));
            patch.kept_edges.push_back({u, v});
            continue;
        }

        // Map section.
        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "surfacemap" || toks[1] != "1")
                parse_fail(line_no, "expected header 'surfacemap 1'");
            saw_header = true;
            continue;
        }
        if (toks[0] == "vertices") {
            if (toks.size() != 2) parse_fail(line_no, "expected 'vertices N'");
            long n = parse_int(toks[1], line_no);
            if (n < 0) parse_fail(line_no, "negative vertex count");
            vertex_count = (int)n;
            nbrs.assign(vertex_count, {});
            have_rot.assign(vertex_count, 0);
            tags.assign(vertex_count, VertexTag::None);
        } else if (toks[0] == "rot") {
            if (toks.size() < 2 || toks[1].back() != ':')
                parse_fail(line_no, "expected 'rot v: u1 u2 ...'");
            int v = check_vertex(parse_int(toks[1].substr(0, toks[1].size() - 1), line_no));
            if (have_rot[v]) parse_fail(line_no, "duplicate rot line for vertex " + std::to_string(v));
            have_rot[v] = 1;
            for (size_t i = 2; i < toks.size(); ++i)
                nbrs[v].push_back(check_vertex(parse_int(toks[i], line_no)));
        } else if (toks[0] == "sign") {
            if (toks.size() != 4 || toks[3] != "-") parse_fail(line_no, "expected 'sign u v -'");
            negatives.push_back({check_vertex(parse_int(toks[1], line_no)),
                                 check_vertex(parse_int(toks[2], line_no))});
        } else if (toks[0] == "hole") {
            if (toks.size() != 3) parse_fail(line_no, "expected 'hole u v'");
            holes.push_back({check_vertex(parse_int(toks[1], line_no)),
                             check_vertex(parse_int(toks[2], line_no))});
        } else if (toks[0] == "tag") {
            if (toks.size() != 3) parse_fail(line_no, "expected 'tag v black|white'");
            int v = check_vertex(parse_int(toks[1], line_no));
            if (toks[2] == "black")
                tags[v] = VertexTag::Black;
            else if (toks[2] == "white")
                tags[v] = VertexTag::White;
            else
                parse_fail(line_no, "unknown tag '" + toks[2] + "'");
            any_tag = true;
        } else if (toks[0] == "patch") {
            section = Section::Patch;
        } else if (toks[0] == "result") {
            section = Section::Result;
        } else {
            parse_fail(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!saw_header) fail(ErrorCode::ParseError, "empty input: missing 'surfacemap 1' header");
    if (vertex_count < 0) fail(ErrorCode::ParseError, "missing 'vertices' line");

    try {
        doc.map = build_map(vertex_count, nbrs, negatives, holes, any_tag ? tags : std::vector<VertexTag>{});
    } catch (const Error&) {
        throw;
    }
    if (section == Section::PatchHoles && pending_hole_walks > 0)
        fail(ErrorCode::ParseError, "truncated patch block: missing hole walks");
    if (section != Section::Map) doc.patch = patch;
    return doc;
}

inline SurfaceMap parse_map(const std::string& text) { return parse_document(text).map; }

// Deterministic anchor for a face: the least '+'-side state in it.
inline HoleAnchor face_anchor(const SurfaceMap& m, int f) {
    int s = m.faces[f].least_state;
    if ((s & 1) == 0) return {m.dart_tail[s >> 1], m.dart_head[s >> 1]};
    for (int st = 0; st < (int)m.face_of_state.size(); st += 2)
        if (m.face_of_state[st] == f) return {m.dart_tail[st >> 1], m.dart_head[st >> 1]};
    fail(ErrorCode::InvalidArgument, "face has no states");
}

inline std::string serialize_map(const SurfaceMap& m) {
    std::ostringstream out;
    out << "surfacemap 1\n";
    out << "vertices " << m.vertex_count << "\n";
    for (int v = 0; v < m.vertex_count; ++v) {
        out << "rot " << v << ":";
        for (int d : m.rotation[v]) out << " " << m.dart_head[d];
        out << "\n";
    }
    for (int e = 0; e < m.num_edges(); ++e)
        if (m.edge_sign[e] < 0) {
            int u = m.dart_tail[2 * e], v = m.dart_head[2 * e];
            out << "sign " << std::min(u, v) << " " << std::max(u, v) << " -\n";
        }
    for (int f : m.hole_faces()) {
        auto a = face_anchor(m, f);
        out << "hole " << a.u << " " << a.v << "\n";
    }
    if (!m.tags.empty())
        for (int v = 0; v < m.vertex_count; ++v) {
            if (m.tags[v] == VertexTag::Black) out << "tag " << v << " black\n";
            if (m.tags[v] == VertexTag::White) out << "tag " << v << " white\n";
        }
    return out.str();
}

inline std::string serialize_patch(const PatchText& p) {
    std::ostringstream out;
    out << "patch\n";
    auto edges = p.kept_edges;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (auto& [u, v] : edges) out << u << " " << v << "\n";
    out << "holes " << p.hole_walks.size() << "\n";
    for (const auto& w : p.hole_walks) {
        for (size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << "\n";
    }
    return out.str();
}

// Structured command output.  Human form is a `result` block of key: value
// lines; machine form is a single canonical line with sorted keys.
struct ResultRecord {
    std::string command;
    std::string digest;  // content hash of the normalized input map text
    std::vector<std::pair<std::string, std::string>> values;

    void put(const std::string& k, const std::string& v) { values.push_back({k, v}); }
    void put(const std::string& k, long long v) { values.push_back({k, std::to_string(v)}); }
    void put(const std::string& k, bool v) { values.push_back({k, v ? "true" : "false"}); }

    std::string human() const {
        std::ostringstream out;
        out << "result\n";
        out << "command: " << command << "\n";
        if (!digest.empty()) out << "digest: " << digest << "\n";
        for (const auto& [k, v] : values) out << k << ": " << v << "\n";
        return out.str();
    }
    std::string machine() const {
        std::map<std::string, std::string> sorted(values.begin(), values.end());
        sorted["command"] = command;
        if (!digest.empty()) sorted["digest"] = digest;
        std::ostringstream out;
        out << "record-v1";
        for (const auto& [k, v] : sorted) out << " " << k << "=" << v;
        return out.str();
    }
};

inline std::string map_digest(const SurfaceMap& m) { return to_hex(fnv1a64(serialize_map(m))); }

}  // namespace surfmap
