#pragma once

#include "framing.hpp"
#include "graph.hpp"

namespace polyframe {

struct StringEdge {
    int from, to, witness;
};

// Cellular k-strings: F -> G iff ta_k(F) and so_k(G) share a k-face.
struct StringGraph {
    int k = 0;
    std::vector<int> nodes;  // faces of dimension > k
    std::vector<StringEdge> edges;
};

inline StringGraph build_string_graph(const FramedPolytope& fp, int k)
{
    fp.require_admissible();
    if (k < 0 || k > fp.dim() - 2)
        throw InputError("string graph: need 0 <= k <= dim P - 2");
    const auto& lat = fp.lattice();
    StringGraph g;
    g.k = k;
    std::map<int, std::vector<int>> tails, heads;
    for (std::size_t f = 1; f < lat.size(); ++f) {
        if (lat.faces[f].dim <= k)
            continue;
        int F = static_cast<int>(f);
        g.nodes.push_back(F);
        const ST& st = fp.st(F, k);
        for (int w : st.ta)
            tails[w].push_back(F);
        for (int w : st.so)
            heads[w].push_back(F);
    }
    std::map<std::pair<int, int>, int> seen;
    for (const auto& [w, ts] : tails) {
        auto it = heads.find(w);
        if (it == heads.end())
            continue;
        for (int F : ts)
            for (int G : it->second)
                seen.emplace(std::make_pair(F, G), w);
    }
    for (const auto& [fg, w] : seen)
        g.edges.push_back({fg.first, fg.second, w});
    return g;
}

// Faces compared by their sorted vertex lists.
inline std::function<bool(int, int)> face_less(const FaceLattice& lat)
{
    return [&lat](int a, int b) { return lat[a].verts < lat[b].verts; };
}

struct Cycle {
    std::vector<int> faces;
    std::vector<int> witnesses;  // witness between faces[i] and faces[i+1] (cyclically)
};

namespace detail {

inline std::optional<std::vector<int>> canonical_cycle(const FaceLattice& lat, const std::vector<int>& nodes,
                                                       const std::vector<std::pair<int, int>>& arcs)
{
    std::map<int, int> pos;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        pos[nodes[i]] = static_cast<int>(i);
    Digraph g(nodes.size());
    for (auto [a, b] : arcs)
        g.add(pos.at(a), pos.at(b));
    g.finish();
    auto less = [&](int a, int b) { return lat[nodes[static_cast<std::size_t>(a)]].verts < lat[nodes[static_cast<std::size_t>(b)]].verts; };
    auto c = find_cycle(g, less);
    if (!c)
        return std::nullopt;
    std::vector<int> out;
    for (int i : *c)
        out.push_back(nodes[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace detail

namespace detail {

inline Digraph string_digraph(const StringGraph& g, const std::vector<int>& nodes, std::map<int, int>& pos)
{
    pos.clear();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        pos[nodes[i]] = static_cast<int>(i);
    Digraph d(nodes.size());
    for (const auto& e : g.edges) {
        auto a = pos.find(e.from), b = pos.find(e.to);
        if (a != pos.end() && b != pos.end())
            d.add(a->second, b->second);
    }
    d.finish();
    return d;
}

} // namespace detail

// Whether some cellular k-string loops back, without building a witness.
inline bool has_k_loop(const FramedPolytope& fp, int k)
{
    auto g = build_string_graph(fp, k);
    std::map<int, int> pos;
    return has_cycle(detail::string_digraph(g, g.nodes, pos));
}

// A canonical k-loop. Loops through (k+1)-faces alone are preferred when they exist.
inline std::optional<Cycle> find_k_loop(const FramedPolytope& fp, int k)
{
    auto g = build_string_graph(fp, k);
    std::map<std::pair<int, int>, int> wit;
    for (const auto& e : g.edges)
        wit[{e.from, e.to}] = e.witness;
    std::vector<int> low;
    for (int F : g.nodes)
        if (fp.lattice()[F].dim == k + 1)
            low.push_back(F);
    std::optional<std::vector<int>> c;
    for (const auto* nodes : {&low, &g.nodes}) {
        std::map<int, int> pos;
        auto d = detail::string_digraph(g, *nodes, pos);
        const auto& lat = fp.lattice();
        auto less = [&](int a, int b) {
            return lat[(*nodes)[static_cast<std::size_t>(a)]].verts < lat[(*nodes)[static_cast<std::size_t>(b)]].verts;
        };
        if (auto r = find_cycle(d, less)) {
            c.emplace();
            for (int i : *r)
                c->push_back((*nodes)[static_cast<std::size_t>(i)]);
            break;
        }
    }
    if (!c)
        return std::nullopt;
    Cycle out{*c, {}};
    for (std::size_t i = 0; i < c->size(); ++i)
        out.witnesses.push_back(wit.at({(*c)[i], (*c)[(i + 1) % c->size()]}));
    return out;
}

// True iff consecutive faces (cyclically) form a cellular k-string.
inline bool validate_k_cycle(const FramedPolytope& fp, int k, const std::vector<int>& cycle)
{
    if (cycle.empty())
        return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int F = cycle[i], G = cycle[(i + 1) % cycle.size()];
        if (fp.lattice()[F].dim <= k || fp.lattice()[G].dim <= k)
            return false;
        const auto& t = fp.st(F, k).ta;
        const auto& s = fp.st(G, k).so;
        bool meet = std::any_of(t.begin(), t.end(), [&](int w) { return std::find(s.begin(), s.end(), w) != s.end(); });
        if (!meet)
            return false;
    }
    return true;
}

// F <_N G iff F in so(G) or G in ta(F).
inline std::vector<std::pair<int, int>> inhomogeneous_arcs(const FramedPolytope& fp)
{
    const auto& lat = fp.lattice();
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t f = 1; f < lat.size(); ++f) {
        int F = static_cast<int>(f);
        if (lat[F].dim < 1)
            continue;
        const ST& st = fp.st(F, lat[F].dim - 1);
        for (int E : st.so)
            arcs.emplace_back(E, F);
        for (int E : st.ta)
            arcs.emplace_back(F, E);
    }
    return arcs;
}

struct StrongVerdict {
    bool strongly_loop_free = true;
    std::vector<int> cycle;
};

inline StrongVerdict strong_loop_check(const FramedPolytope& fp)
{
    fp.require_admissible();
    const auto& lat = fp.lattice();
    std::vector<int> nodes;
    for (std::size_t f = 1; f < lat.size(); ++f)
        nodes.push_back(static_cast<int>(f));
    auto c = detail::canonical_cycle(lat, nodes, inhomogeneous_arcs(fp));
    if (!c)
        return {};
    return {false, *c};
}

inline bool validate_inhomogeneous_cycle(const FramedPolytope& fp, const std::vector<int>& cycle)
{
    auto arcs = inhomogeneous_arcs(fp);
    std::set<std::pair<int, int>> s(arcs.begin(), arcs.end());
    if (cycle.empty())
        return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!s.count({cycle[i], cycle[(i + 1) % cycle.size()]}))
            return false;
    return true;
}

struct KLoopReport {
    int k = 0;
    bool loop_free = true;
    std::optional<Cycle> cycle;
};

struct LoopReport {
    std::vector<KLoopReport> levels;
    StrongVerdict strong;

    bool loop_free() const
    {
        return std::all_of(levels.begin(), levels.end(), [](const KLoopReport& r) { return r.loop_free; });
    }
};

inline LoopReport loop_report(const FramedPolytope& fp, bool with_strong = true)
{
    LoopReport r;
    for (int k = 0; k <= fp.dim() - 2; ++k) {
        auto c = find_k_loop(fp, k);
        r.levels.push_back({k, !c.has_value(), c});
    }
    if (with_strong)
        r.strong = strong_loop_check(fp);
    return r;
}

// The framed projection pi_k(P) in V_k with frame (v_1, ..., v_k), in frame coordinates.
inline FramedPolytope projected(const FramedPolytope& fp, int k)
{
    std::vector<RVec> pts;
    for (std::size_t v = 0; v < fp.cfg().size(); ++v)
        pts.push_back(fp.proj(static_cast<int>(v), k));
    PointConfig c;
    c.dim = static_cast<std::size_t>(k);
    for (int i : hull_vertex_indices(pts)) {
        c.points.push_back(pts[static_cast<std::size_t>(i)]);
        c.labels.push_back(fp.cfg().labels[static_cast<std::size_t>(i)]);
    }
    return FramedPolytope(c, Frame::canonical(static_cast<std::size_t>(k)));
}

struct ProjectionLevel {
    int k = 0;
    bool admissible = false;
    bool loop_free = false;
    bool strongly_loop_free = false;
};

struct ProjectionCheck {
    bool consistent = true;
    std::vector<ProjectionLevel> levels;
};

// Loop-freeness of P must pass to every framed projection pi_k(P).
inline ProjectionCheck projected_loop_lift(const FramedPolytope& fp)
{
    fp.require_admissible();
    auto whole = loop_report(fp);
    ProjectionCheck out;
    for (int k = 1; k < fp.dim(); ++k) {
        auto pk = projected(fp, k);
        ProjectionLevel lv{k, pk.admissible(), false, false};
        if (lv.admissible) {
            auto r = loop_report(pk);
            lv.loop_free = r.loop_free();
            lv.strongly_loop_free = r.strong.strongly_loop_free;
            if (whole.loop_free() && !lv.loop_free)
                out.consistent = false;
            if (whole.strong.strongly_loop_free && !lv.strongly_loop_free)
                out.consistent = false;
        } else {
            out.consistent = false;
        }
        out.levels.push_back(lv);
    }
    return out;
}

} // namespace polyframe
