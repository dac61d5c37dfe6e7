#pragma once

#include "framing.hpp"
#include "graph.hpp"

#include <map>
#include <sstream>
#include <string>

namespace polyframe {

// Sparse integer chain: basis index -> nonzero coefficient.
using Chain = std::map<int, long long>;

inline void chain_add(Chain& c, int b, long long x)
{
    if (x == 0)
        return;
    auto& v = c[b];
    v += x;
    if (v == 0)
        c.erase(b);
}

inline Chain positive_part(const Chain& c)
{
    Chain r;
    for (auto [b, x] : c)
        if (x > 0)
            r[b] = x;
    return r;
}

inline Chain negative_part(const Chain& c)
{
    Chain r;
    for (auto [b, x] : c)
        if (x < 0)
            r[b] = -x;
    return r;
}

// Graded augmented chain complex with a distinguished basis.
struct BasedComplex {
    std::vector<std::string> labels;
    std::vector<int> degree;
    std::vector<Chain> boundary;
    std::vector<long long> augmentation;  // meaningful in degree 0
    std::map<std::string, int> index;

    std::size_t size() const { return labels.size(); }

    int add(const std::string& label, int deg)
    {
        if (deg < 0)
            throw InputError("basis element " + label + " has negative degree");
        if (!index.emplace(label, static_cast<int>(labels.size())).second)
            throw InputError("duplicate basis label " + label);
        labels.push_back(label);
        degree.push_back(deg);
        boundary.emplace_back();
        augmentation.push_back(deg == 0 ? 1 : 0);
        return static_cast<int>(labels.size()) - 1;
    }

    int at(const std::string& label) const
    {
        auto it = index.find(label);
        if (it == index.end())
            throw InputError("unknown basis label " + label);
        return it->second;
    }

    int max_degree() const { return degree.empty() ? -1 : *std::max_element(degree.begin(), degree.end()); }

    Chain d(const Chain& c) const
    {
        Chain r;
        for (auto [b, x] : c)
            for (auto [e, y] : boundary[static_cast<std::size_t>(b)])
                chain_add(r, e, x * y);
        return r;
    }

    long long eps(const Chain& c) const
    {
        long long s = 0;
        for (auto [b, x] : c)
            s += x * augmentation[static_cast<std::size_t>(b)];
        return s;
    }

    std::string chain_string(const Chain& c) const
    {
        std::string s;
        for (auto [b, x] : c) {
            if (!s.empty() || x < 0)
                s += x < 0 ? " - " : " + ";
            long long a = x < 0 ? -x : x;
            if (a != 1)
                s += std::to_string(a) + "*";
            s += labels[static_cast<std::size_t>(b)];
        }
        return s.empty() ? "0" : s;
    }

    // Degree shape, d∘d = 0, eps∘d = 0 and eps = 1 on degree 0. Throws naming the first offender.
    void validate() const
    {
        for (std::size_t b = 0; b < size(); ++b) {
            for (auto [e, x] : boundary[b])
                if (degree[static_cast<std::size_t>(e)] != degree[b] - 1)
                    throw InputError("boundary of " + labels[b] + " has a term of the wrong degree");
            if (degree[b] == 0 && augmentation[b] != 1)
                throw InputError("augmentation of " + labels[b] + " is not 1");
            Chain c{{static_cast<int>(b), 1}};
            if (!d(d(c)).empty())
                throw InputError("d∘d != 0 at " + labels[b]);
            if (degree[b] == 1 && eps(d(c)) != 0)
                throw InputError("eps∘d != 0 at " + labels[b]);
        }
    }
};

// Complex of an f-oriented polytope: d F = sum ta(F) - sum so(F), eps = 1 on vertices.
inline BasedComplex chains_of(const FaceLattice& lat, const FOrientation& o, const std::vector<std::string>& vlabels)
{
    BasedComplex c;
    auto label = [&](int F) {
        std::string s = "[";
        const auto& v = lat[F].verts;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + vlabels[static_cast<std::size_t>(v[i])];
        return s + "]";
    };
    std::vector<int> id(lat.size(), -1);
    for (std::size_t f = 1; f < lat.size(); ++f)
        id[f] = c.add(label(static_cast<int>(f)), lat.faces[f].dim);
    for (std::size_t f = 1; f < lat.size(); ++f) {
        if (lat.faces[f].dim < 1)
            continue;
        if (f >= o.so.size() || o.so[f].size() + o.ta[f].size() != lat.below[f].size())
            throw InputError("orientation does not partition the facets of " + label(static_cast<int>(f)));
        auto& b = c.boundary[static_cast<std::size_t>(id[f])];
        for (int E : o.ta[f])
            chain_add(b, id[static_cast<std::size_t>(E)], 1);
        for (int E : o.so[f])
            chain_add(b, id[static_cast<std::size_t>(E)], -1);
    }
    c.validate();
    return c;
}

inline BasedComplex chains_of(const FramedPolytope& fp)
{
    return chains_of(fp.lattice(), f_orientation(fp), fp.cfg().labels);
}

// atoms[b][k] = (<b>_k^-, <b>_k^+) for 0 <= k < deg b.
using AtomTable = std::vector<std::vector<std::pair<Chain, Chain>>>;

inline AtomTable atoms(const BasedComplex& c)
{
    AtomTable t(c.size());
    for (std::size_t b = 0; b < c.size(); ++b) {
        int n = c.degree[b];
        if (n == 0)
            continue;
        t[b].resize(static_cast<std::size_t>(n));
        Chain db = c.boundary[b];
        Chain minus = negative_part(db), plus = positive_part(db);
        for (int k = n - 1; k >= 0; --k) {
            t[b][static_cast<std::size_t>(k)] = {minus, plus};
            if (k > 0) {
                minus = negative_part(c.d(minus));
                plus = positive_part(c.d(plus));
            }
        }
    }
    return t;
}

// <b>_k^eps, with <b>_{deg b}^eps = b.
inline Chain atom(const BasedComplex& c, const AtomTable& t, int b, int k, bool plus)
{
    int n = c.degree[static_cast<std::size_t>(b)];
    if (k >= n)
        return Chain{{b, 1}};
    const auto& p = t[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
    return plus ? p.second : p.first;
}

inline bool is_unital(const BasedComplex& c, const AtomTable& t)
{
    for (std::size_t b = 0; b < c.size(); ++b)
        if (c.degree[b] > 0) {
            const auto& [m, p] = t[b][0];
            if (c.eps(m) != 1 || c.eps(p) != 1)
                return false;
        }
    return true;
}

inline bool is_unital(const BasedComplex& c) { return is_unital(c, atoms(c)); }

// Every atom is a sum of distinct basis elements.
inline bool atoms_distinct(const AtomTable& t)
{
    for (const auto& row : t)
        for (const auto& [m, p] : row)
            for (const Chain* ch : {&m, &p})
                for (auto [b, x] : *ch)
                    if (x != 1)
                        return false;
    return true;
}

struct SteinerVerdict {
    bool unital = true;
    bool loop_free = true;
    bool strongly_loop_free = true;
    int loop_level = -1;  // first k with a cycle in <_k
    std::vector<std::string> cycle, strong_cycle;
};

namespace detail {

inline std::optional<std::vector<std::string>> label_cycle(const BasedComplex& c, Digraph g)
{
    // self-relations do not violate antisymmetry
    for (std::size_t u = 0; u < g.size(); ++u) {
        auto& s = g.succ[u];
        s.erase(std::remove(s.begin(), s.end(), static_cast<int>(u)), s.end());
    }
    auto cyc = find_cycle(g, [&](int a, int b) { return c.labels[static_cast<std::size_t>(a)] < c.labels[static_cast<std::size_t>(b)]; });
    if (!cyc)
        return std::nullopt;
    std::vector<std::string> out;
    for (int i : *cyc)
        out.push_back(c.labels[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace detail

// b <_k b' iff deg b, deg b' > k and <b>_k^+ and <b'>_k^- share a basis element.
inline Digraph steiner_relation(const BasedComplex& c, const AtomTable& t, int k)
{
    Digraph g(c.size());
    std::map<int, std::vector<int>> heads;  // basis element -> b' with it in <b'>_k^-
    for (std::size_t b = 0; b < c.size(); ++b)
        if (c.degree[b] > k)
            for (auto [e, x] : t[b][static_cast<std::size_t>(k)].first)
                heads[e].push_back(static_cast<int>(b));
    for (std::size_t b = 0; b < c.size(); ++b)
        if (c.degree[b] > k)
            for (auto [e, x] : t[b][static_cast<std::size_t>(k)].second) {
                auto it = heads.find(e);
                if (it != heads.end())
                    for (int b2 : it->second)
                        g.add(static_cast<int>(b), b2);
            }
    g.finish();
    return g;
}

// b <_N b' iff b in d^-(b') or b' in d^+(b).
inline Digraph inhomogeneous_relation(const BasedComplex& c)
{
    Digraph g(c.size());
    for (std::size_t b = 0; b < c.size(); ++b)
        for (auto [e, x] : c.boundary[b]) {
            if (x < 0)
                g.add(e, static_cast<int>(b));
            else
                g.add(static_cast<int>(b), e);
        }
    g.finish();
    return g;
}

inline SteinerVerdict steiner_check(const BasedComplex& c)
{
    auto t = atoms(c);
    SteinerVerdict v;
    v.unital = is_unital(c, t);
    for (int k = 0; k < c.max_degree(); ++k) {
        if (auto cyc = detail::label_cycle(c, steiner_relation(c, t, k))) {
            v.loop_free = false;
            v.loop_level = k;
            v.cycle = *cyc;
            break;
        }
    }
    if (auto cyc = detail::label_cycle(c, inhomogeneous_relation(c))) {
        v.strongly_loop_free = false;
        v.strong_cycle = *cyc;
    }
    return v;
}

inline bool loop_free(const BasedComplex& c) { return steiner_check(c).loop_free; }
inline bool strongly_loop_free(const BasedComplex& c) { return steiner_check(c).strongly_loop_free; }

// Per-level verdict of <_k alone.
inline bool loop_free_at(const BasedComplex& c, const AtomTable& t, int k)
{
    return !detail::label_cycle(c, steiner_relation(c, t, k)).has_value();
}

// The single-vertex complex, unit of the Gray tensor product.
inline BasedComplex point_complex(const std::string& label = "*")
{
    BasedComplex c;
    c.add(label, 0);
    return c;
}

// Gray tensor product with Koszul signs: d(x|y) = dx|y + (-1)^{deg x} x|dy.
inline BasedComplex gray_tensor(const BasedComplex& a, const BasedComplex& b)
{
    BasedComplex c;
    auto id = [&](std::size_t i, std::size_t j) { return static_cast<int>(i * b.size() + j); };
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c.add(a.labels[i] + "|" + b.labels[j], a.degree[i] + b.degree[j]);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto& bd = c.boundary[static_cast<std::size_t>(id(i, j))];
            for (auto [e, x] : a.boundary[i])
                chain_add(bd, id(static_cast<std::size_t>(e), j), x);
            long long s = a.degree[i] % 2 ? -1 : 1;
            for (auto [e, x] : b.boundary[j])
                chain_add(bd, id(i, static_cast<std::size_t>(e)), s * x);
            c.augmentation[static_cast<std::size_t>(id(i, j))] = a.augmentation[i] * b.augmentation[j];
        }
    return c;
}

// Basis 0, 1, 01 with d(01) = 1 - 0.
inline BasedComplex interval()
{
    BasedComplex c;
    int z = c.add("0", 0), o = c.add("1", 0), e = c.add("01", 1);
    c.boundary[static_cast<std::size_t>(e)] = {{o, 1}, {z, -1}};
    return c;
}

// d-fold Gray tensor power of the interval; labels are words like "01|0|1".
inline BasedComplex cubical_oriental(int d)
{
    if (d < 0)
        throw InputError("cubical oriental: negative dimension");
    if (d == 0)
        return point_complex();
    BasedComplex c = interval();
    for (int i = 1; i < d; ++i)
        c = gray_tensor(c, interval());
    return c;
}

inline std::string index_list_label(const VSet& s)
{
    std::string r = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        r += (i ? "," : "") + std::to_string(s[i]);
    return r + "]";
}

// Nonempty subsets of {0..d}; d[p0..pk] = sum (-1)^i [p0..^pi..pk].
inline BasedComplex street_oriental(int d)
{
    if (d < 0)
        throw InputError("street oriental: negative dimension");
    if (d > 20)
        throw InputError("street oriental: dimension too large");
    const int n = d + 1;
    std::vector<VSet> sets;
    for (unsigned m = 1; m < (1u << n); ++m) {
        VSet s;
        for (int i = 0; i < n; ++i)
            if (m & (1u << i))
                s.push_back(i);
        sets.push_back(s);
    }
    std::stable_sort(sets.begin(), sets.end(), [](const VSet& a, const VSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    BasedComplex c;
    for (const auto& s : sets)
        c.add(index_list_label(s), static_cast<int>(s.size()) - 1);
    for (const auto& s : sets) {
        if (s.size() < 2)
            continue;
        auto& bd = c.boundary[static_cast<std::size_t>(c.at(index_list_label(s)))];
        for (std::size_t i = 0; i < s.size(); ++i) {
            VSet t = s;
            t.erase(t.begin() + static_cast<long>(i));
            chain_add(bd, c.at(index_list_label(t)), i % 2 ? -1 : 1);
        }
    }
    return c;
}

// Whether relabeling a's basis through corr gives b exactly (degrees, boundaries, augmentation).
inline bool iso_check(const BasedComplex& a, const BasedComplex& b, const std::map<std::string, std::string>& corr,
                      std::string* why = nullptr)
{
    auto fail = [&](const std::string& m) {
        if (why)
            *why = m;
        return false;
    };
    if (corr.size() != a.size())
        throw InputError("correspondence is not total on the source basis");
    std::vector<int> to(a.size(), -1);
    std::vector<bool> hit(b.size(), false);
    for (const auto& [x, y] : corr) {
        int i = a.at(x), j = b.at(y);
        if (hit[static_cast<std::size_t>(j)])
            throw InputError("correspondence is not injective at " + y);
        hit[static_cast<std::size_t>(j)] = true;
        to[static_cast<std::size_t>(i)] = j;
    }
    if (a.size() != b.size())
        throw InputError("correspondence is not surjective");
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto j = static_cast<std::size_t>(to[i]);
        if (a.degree[i] != b.degree[j])
            return fail("degree differs at " + a.labels[i]);
        if (a.augmentation[i] != b.augmentation[j])
            return fail("augmentation differs at " + a.labels[i]);
        Chain mapped;
        for (auto [e, x] : a.boundary[i])
            chain_add(mapped, to[static_cast<std::size_t>(e)], x);
        if (mapped != b.boundary[j])
            return fail("boundary differs at " + a.labels[i] + ": " + b.chain_string(mapped) + " vs " +
                        b.chain_string(b.boundary[j]));
    }
    return true;
}

inline std::map<std::string, std::string> identity_correspondence(const BasedComplex& c)
{
    std::map<std::string, std::string> m;
    for (const auto& l : c.labels)
        m[l] = l;
    return m;
}

// Cyclic simplex faces [i1,...] (labels 1..d+1) to Street labels [i1-1,...].
inline std::map<std::string, std::string> simplex_correspondence(const BasedComplex& polytope_complex)
{
    std::map<std::string, std::string> m;
    for (const auto& l : polytope_complex.labels) {
        VSet s;
        std::string body = l.substr(1, l.size() - 2);
        std::stringstream ss(body);
        for (std::string tok; std::getline(ss, tok, ',');)
            s.push_back(std::stoi(tok) - 1);
        m[l] = index_list_label(s);
    }
    return m;
}

// Cyclic cube face, given by its vertex subsets, to the tensor word: coordinate i reads
// 01 if i is free (in L), 1 if always present (in A), 0 otherwise.
inline std::map<std::string, std::string> cube_correspondence(const FramedPolytope& fp)
{
    const auto& lat = fp.lattice();
    int d = fp.dim();
    std::map<std::string, std::string> m;
    for (std::size_t f = 1; f < lat.size(); ++f) {
        std::vector<int> count(static_cast<std::size_t>(d) + 1, 0);
        const auto& vs = lat.faces[f].verts;
        for (int v : vs)
            for (int i : parse_subset_label(fp.cfg().labels[static_cast<std::size_t>(v)]))
                ++count[static_cast<std::size_t>(i)];
        std::string w;
        for (int i = 1; i <= d; ++i) {
            int c = count[static_cast<std::size_t>(i)];
            w += (i > 1 ? "|" : "");
            w += c == 0 ? "0" : c == static_cast<int>(vs.size()) ? "1" : "01";
        }
        m[fp.face_label(static_cast<int>(f))] = w;
    }
    return m;
}

struct OrientalVerdict {
    bool iso = false;
    bool strongly_loop_free = false;
    std::string why;
};

// Alternatingly framed cyclic d-simplex against the Street oriental, or the cyclic d-cube
// against the d-fold Gray tensor of intervals.
inline OrientalVerdict oriental_verify(const std::string& kind, int d)
{
    if (d < 1)
        throw InputError("oriental: dimension must be positive");
    OrientalVerdict v;
    if (kind == "simplex") {
        FramedPolytope fp(make_family({Family::CyclicSimplex, 0, d, {}}), Frame::alternating(static_cast<std::size_t>(d)));
        auto c = chains_of(fp);
        v.iso = iso_check(c, street_oriental(d), simplex_correspondence(c), &v.why);
        v.strongly_loop_free = steiner_check(c).strongly_loop_free;
    } else if (kind == "cube") {
        FramedPolytope fp(make_family({Family::CyclicCube, 0, d, {}}), Frame::alternating(static_cast<std::size_t>(d)));
        auto c = chains_of(fp);
        v.iso = iso_check(c, cubical_oriental(d), cube_correspondence(fp), &v.why);
        v.strongly_loop_free = steiner_check(c).strongly_loop_free;
    } else {
        throw InputError("oriental: kind must be simplex or cube");
    }
    return v;
}

} // namespace polyframe
