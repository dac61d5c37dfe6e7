#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

namespace polyframe {

// Directed graph on nodes 0..n-1 with sorted, duplicate-free successor lists.
struct Digraph {
    std::vector<std::vector<int>> succ;

    explicit Digraph(std::size_t n = 0) : succ(n) {}

    void add(int u, int v) { succ[static_cast<std::size_t>(u)].push_back(v); }

    void finish()
    {
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
    }

    std::size_t size() const { return succ.size(); }
};

inline std::vector<int> strong_components(const Digraph& g, int& count)
{
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
    G bg(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        for (int v : g.succ[u])
            boost::add_edge(u, static_cast<std::size_t>(v), bg);
    std::vector<int> comp(g.size());
    count = g.size() ? boost::strong_components(bg, comp.data()) : 0;
    return comp;
}

inline bool has_cycle(const Digraph& g)
{
    int count = 0;
    strong_components(g, count);
    if (static_cast<std::size_t>(count) < g.size())
        return true;
    for (std::size_t u = 0; u < g.size(); ++u)
        if (std::binary_search(g.succ[u].begin(), g.succ[u].end(), static_cast<int>(u)))
            return true;
    return false;
}

// Canonical directed cycle, or nothing if g is acyclic: a shortest cycle, written from
// its `less`-minimal node, lexicographically least among all shortest cycles so written.
inline std::optional<std::vector<int>> find_cycle(const Digraph& g, const std::function<bool(int, int)>& less)
{
    const std::size_t n = g.size();
    int count = 0;
    auto comp = strong_components(g, count);
    std::vector<int> csize(static_cast<std::size_t>(count), 0);
    for (int c : comp)
        ++csize[static_cast<std::size_t>(c)];
    std::vector<int> order, loops;
    for (std::size_t u = 0; u < n; ++u) {
        if (std::binary_search(g.succ[u].begin(), g.succ[u].end(), static_cast<int>(u)))
            loops.push_back(static_cast<int>(u));
        if (csize[static_cast<std::size_t>(comp[u])] > 1)
            order.push_back(static_cast<int>(u));
    }
    if (!loops.empty())
        return std::vector<int>{*std::min_element(loops.begin(), loops.end(), less)};
    if (order.empty())
        return std::nullopt;
    std::sort(order.begin(), order.end(), less);
    std::vector<int> rank(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    // predecessor lists, for distances to s
    std::vector<std::vector<int>> pred(n);
    for (std::size_t u = 0; u < n; ++u)
        for (int v : g.succ[u])
            pred[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));

    // dist[v] = length of a shortest path v -> s through nodes of rank >= rank(s) in s's component
    auto dist_to = [&](int s, int cap) {
        std::vector<int> dist(n, -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (dist[static_cast<std::size_t>(u)] >= cap)
                continue;
            for (int w : pred[static_cast<std::size_t>(u)]) {
                auto wi = static_cast<std::size_t>(w);
                if (dist[wi] != -1 || comp[wi] != comp[static_cast<std::size_t>(s)] || rank[wi] < rank[static_cast<std::size_t>(s)])
                    continue;
                dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(w);
            }
        }
        return dist;
    };
    auto cycle_len = [&](int s, const std::vector<int>& dist) {
        int best = -1;
        for (int v : g.succ[static_cast<std::size_t>(s)]) {
            int d = dist[static_cast<std::size_t>(v)];
            if (d >= 0 && (best < 0 || d + 1 < best))
                best = d + 1;
        }
        return best;
    };

    int best = static_cast<int>(n) + 1, best_s = -1;
    for (int s : order) {
        auto dist = dist_to(s, best);
        int len = cycle_len(s, dist);
        if (len > 0 && len < best) {
            best = len;
            best_s = s;
            if (best == 2)
                break;
        }
    }
    auto dist = dist_to(best_s, best);
    std::vector<int> cyc{best_s};
    int cur = best_s;
    for (int step = 1; step < best; ++step) {
        int pick = -1;
        for (int v : g.succ[static_cast<std::size_t>(cur)]) {
            if (v == best_s || dist[static_cast<std::size_t>(v)] != best - step)
                continue;
            if (pick < 0 || less(v, pick))
                pick = v;
        }
        cyc.push_back(pick);
        cur = pick;
    }
    return cyc;
}

} // namespace polyframe
