#pragma once

#include "framing.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace polyframe {

// Sign map on sorted rank-tuples of {0..n-1}; unsorted tuples by alternation.
struct Chirotope {
    int n = 0;
    int rank = 0;
    std::map<VSet, int> signs;
    bool acyclic = false;  // built from a point configuration

    int operator()(VSet t) const
    {
        if (static_cast<int>(t.size()) != rank)
            throw InputError("chirotope: tuple has wrong length");
        int s = 1;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[i] == t[j])
                    return 0;
                if (t[i] > t[j])
                    s = -s;
            }
        std::sort(t.begin(), t.end());
        auto it = signs.find(t);
        if (it == signs.end())
            throw InputError("chirotope: index out of range");
        return s * it->second;
    }

    friend bool operator==(const Chirotope& a, const Chirotope& b)
    {
        return a.n == b.n && a.rank == b.rank && a.signs == b.signs;
    }
};

// All sorted r-subsets of {0..n-1}, lexicographic.
inline std::vector<VSet> index_subsets(int n, int r)
{
    std::vector<VSet> out;
    if (r < 0 || r > n)
        return out;
    VSet c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        c[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(c);
        int i = r - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline Chirotope chirotope_of_vectors(const std::vector<RVec>& vs)
{
    Chirotope c;
    c.n = static_cast<int>(vs.size());
    c.rank = vs.empty() ? 0 : static_cast<int>(vs[0].size());
    for (const auto& t : index_subsets(c.n, c.rank)) {
        RMat m(static_cast<std::size_t>(c.rank), static_cast<std::size_t>(c.rank));
        for (std::size_t j = 0; j < t.size(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i)
                m(i, j) = vs[static_cast<std::size_t>(t[j])][i];
        c.signs[t] = det_sign(m);
    }
    return c;
}

// Chirotope of the homogenized points (1, p).
inline Chirotope chirotope_of_points(const std::vector<RVec>& pts)
{
    std::vector<RVec> h;
    for (const auto& p : pts) {
        RVec v{Rat(1)};
        v.insert(v.end(), p.begin(), p.end());
        h.push_back(v);
    }
    Chirotope c = chirotope_of_vectors(h);
    c.acyclic = true;
    return c;
}

inline Chirotope chirotope_of_points(const PointConfig& cfg) { return chirotope_of_points(cfg.points); }

inline bool is_uniform(const Chirotope& c)
{
    return std::all_of(c.signs.begin(), c.signs.end(), [](const auto& kv) { return kv.second != 0; });
}

inline bool is_acyclic(const Chirotope& c) { return c.acyclic; }

// {"i,j,k": "+|-|0"} with 1-based indices.
inline std::string tuple_key(const VSet& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s;
}

inline char sign_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

// ---------------------------------------------------------------------------
// Flag chirotopes of framed simplices.

struct FlagChirotope {
    std::vector<Chirotope> levels;  // level k has rank k+1

    bool uniform() const
    {
        return std::all_of(levels.begin(), levels.end(), [](const Chirotope& c) { return is_uniform(c); });
    }
    bool acyclic() const
    {
        return std::all_of(levels.begin(), levels.end(), [](const Chirotope& c) { return c.acyclic; });
    }
};

inline bool is_simplex(const FramedPolytope& fp)
{
    return static_cast<int>(fp.cfg().size()) == fp.dim() + 1 && fp.dim() == static_cast<int>(fp.cfg().dim);
}

// chi_k = chirotope of pi_k of the vertices, in frame coordinates.
inline FlagChirotope flag_chirotope(const FramedPolytope& fp)
{
    if (!is_simplex(fp))
        throw InputError("flag chirotope: polytope is not a full-dimensional simplex");
    FlagChirotope f;
    for (int k = 0; k <= fp.dim(); ++k) {
        std::vector<RVec> pts;
        for (std::size_t v = 0; v < fp.cfg().size(); ++v)
            pts.push_back(fp.proj(static_cast<int>(v), k));
        f.levels.push_back(chirotope_of_points(pts));
    }
    return f;
}

// For F = {i_0 < ... < i_k} and E = F minus i_j: E in so(F) iff (-1)^(k-j) chi_k(F) = chi_{k-1}(E).
inline FOrientation orientation_from_flag(const FaceLattice& lat, const FlagChirotope& f)
{
    FOrientation o;
    o.so.resize(lat.size());
    o.ta.resize(lat.size());
    for (std::size_t F = 1; F < lat.size(); ++F) {
        const auto& v = lat.faces[F].verts;
        int k = lat.faces[F].dim;
        if (k < 1)
            continue;
        int top = f.levels[static_cast<std::size_t>(k)](v);
        for (int E : lat.below[F]) {
            const auto& e = lat[E].verts;
            std::size_t j = 0;
            while (j < e.size() && e[j] == v[j])
                ++j;
            int lhs = ((k - static_cast<int>(j)) % 2 ? -1 : 1) * top;
            int rhs = f.levels[static_cast<std::size_t>(k - 1)](e);
            if (lhs == 0 || rhs == 0)
                throw InputError("flag chirotope is not uniform on a face");
            (lhs == rhs ? o.so[F] : o.ta[F]).push_back(E);
        }
    }
    return o;
}

inline bool f_orientation_roundtrip(const FramedPolytope& fp)
{
    fp.require_admissible();
    auto f = flag_chirotope(fp);
    return orientation_from_flag(fp.lattice(), f) == f_orientation(fp);
}

// ---------------------------------------------------------------------------
// Cyclic lift of a planar configuration.

struct CyclicLift {
    PointConfig cfg;
    std::vector<Int> K;  // K_3, ..., K_{n-1}
};

// Rows 3..n-1 are K_j^i for point i = 1..n; each K_j doubles until the chirotope of
// pi_j is read off pi_{j-1} by dropping the largest index.
inline CyclicLift cyclic_lift(const PointConfig& A)
{
    if (A.dim != 2)
        throw InputError("cyclic lift: configuration must be planar");
    int n = static_cast<int>(A.size());
    if (n < 3)
        throw InputError("cyclic lift: need at least three points");
    if (!is_uniform(chirotope_of_points(A.points)))
        throw InputError("cyclic lift: points are not in general position");
    CyclicLift out;
    out.cfg.dim = static_cast<std::size_t>(n - 1);
    out.cfg.labels = A.labels;
    out.cfg.points = A.points;
    for (auto& p : out.cfg.points)
        p.resize(out.cfg.dim);
    Int K = 2;
    for (int row = 2; row < n - 1; ++row) {
        // row is the 0-based coordinate; level j = row + 1
        int j = row + 1;
        auto lower = [&] {
            std::vector<RVec> pts;
            for (const auto& p : out.cfg.points)
                pts.push_back(RVec(p.begin(), p.begin() + row));
            return chirotope_of_points(pts);
        }();
        for (int guard = 0;; ++guard) {
            if (guard > 200)
                throw InternalError("cyclic lift: no constant found");
            Rat pw = 1;
            for (int i = 0; i < n; ++i) {
                pw *= Rat(K);
                out.cfg.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)] = pw;
            }
            std::vector<RVec> pts;
            for (const auto& p : out.cfg.points)
                pts.push_back(RVec(p.begin(), p.begin() + row + 1));
            Chirotope upper = chirotope_of_points(pts);
            bool ok = true;
            for (const auto& I : index_subsets(n, j + 1)) {
                VSet J(I.begin(), I.end() - 1);
                if (upper(I) != lower(J)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                break;
            K *= 2;
        }
        out.K.push_back(K);
        K *= 2;
    }
    return out;
}

// Sign the lift should carry at level j on I: drop maxima down to the three smallest indices.
inline int cyclic_lift_predicted(const Chirotope& planar, const VSet& I)
{
    return planar(VSet(I.begin(), I.begin() + 3));
}

// Every level of the lift against the prediction, by direct determinants.
inline bool cyclic_lift_verify(const PointConfig& A, const CyclicLift& L)
{
    auto base = chirotope_of_points(A.points);
    for (std::size_t row = 2; row <= L.cfg.dim; ++row) {
        std::vector<RVec> pts;
        for (const auto& p : L.cfg.points)
            pts.push_back(RVec(p.begin(), p.begin() + static_cast<long>(row)));
        auto c = chirotope_of_points(pts);
        for (const auto& [I, s] : c.signs)
            if (s != cyclic_lift_predicted(base, I))
                return false;
    }
    for (std::size_t i = 0; i < A.size(); ++i)
        if (RVec(L.cfg.points[i].begin(), L.cfg.points[i].begin() + 2) != A.points[i])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Higher Bruhat orders B(n,d) and cubillages of Z(n,d).

struct BruhatOrder {
    int n = 0, d = 0;
    std::vector<VSet> ground;               // C([n], d+1), 1-based, lexicographic
    std::vector<std::uint64_t> elements;    // consistent sets, BFS order from the empty set
    std::vector<std::pair<int, int>> covers;  // (U, U') with U' = U + one set
};

inline constexpr int bruhat_max_n = 7;
inline constexpr int bruhat_max_d = 3;

// 1-based k-subsets of [n].
inline std::vector<VSet> subsets1(int n, int k)
{
    auto s = index_subsets(n, k);
    for (auto& t : s)
        for (auto& x : t)
            ++x;
    return s;
}

namespace detail {

struct Packets {
    // for each (d+2)-set M, ground indices of P(M) in lexicographic order
    std::vector<std::vector<int>> packets;
    // packets containing each ground element
    std::vector<std::vector<int>> of;
};

inline Packets make_packets(int n, int d, const std::vector<VSet>& ground)
{
    std::map<VSet, int> id;
    for (std::size_t i = 0; i < ground.size(); ++i)
        id[ground[i]] = static_cast<int>(i);
    Packets p;
    p.of.resize(ground.size());
    for (const auto& M : subsets1(n, d + 2)) {
        std::vector<int> pk;
        // lexicographic order of M minus m: drop the largest element first
        for (std::size_t r = M.size(); r-- > 0;) {
            VSet s = M;
            s.erase(s.begin() + static_cast<long>(r));
            pk.push_back(id.at(s));
        }
        for (int g : pk)
            p.of[static_cast<std::size_t>(g)].push_back(static_cast<int>(p.packets.size()));
        p.packets.push_back(pk);
    }
    return p;
}

inline bool packet_ok(const std::vector<int>& pk, std::uint64_t U)
{
    // membership pattern must be 1..10..0 or 0..01..1
    std::size_t i = 0, m = pk.size();
    auto in = [&](std::size_t t) { return (U >> pk[t]) & 1u; };
    while (i < m && in(i))
        ++i;
    std::size_t j = i;
    while (j < m && !in(j))
        ++j;
    if (j == m)
        return true;
    if (i != 0)
        return false;
    while (j < m && in(j))
        ++j;
    return j == m;
}

} // namespace detail

inline bool is_consistent(int n, int d, const std::vector<VSet>& ground, std::uint64_t U)
{
    auto p = detail::make_packets(n, d, ground);
    return std::all_of(p.packets.begin(), p.packets.end(), [&](const auto& pk) { return detail::packet_ok(pk, U); });
}

inline BruhatOrder enumerate_bruhat(int n, int d)
{
    if (d < 1 || n < d + 1)
        throw InputError("bruhat: need 1 <= d and n >= d+1");
    if (n > bruhat_max_n || d > bruhat_max_d)
        throw InputError("bruhat: refusing n > " + std::to_string(bruhat_max_n) + " or d > " +
                         std::to_string(bruhat_max_d));
    BruhatOrder B;
    B.n = n;
    B.d = d;
    B.ground = subsets1(n, d + 1);
    auto P = detail::make_packets(n, d, B.ground);
    std::map<std::uint64_t, int> seen{{0, 0}};
    B.elements.push_back(0);
    for (std::size_t qi = 0; qi < B.elements.size(); ++qi) {
        std::uint64_t U = B.elements[qi];
        for (std::size_t g = 0; g < B.ground.size(); ++g) {
            if ((U >> g) & 1u)
                continue;
            std::uint64_t V = U | (std::uint64_t{1} << g);
            bool ok = true;
            for (int pk : P.of[g])
                if (!detail::packet_ok(P.packets[static_cast<std::size_t>(pk)], V)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            auto [it, fresh] = seen.emplace(V, static_cast<int>(B.elements.size()));
            if (fresh)
                B.elements.push_back(V);
            B.covers.emplace_back(static_cast<int>(qi), it->second);
        }
    }
    return B;
}

struct Cube {
    VSet L, A;  // free generators, fixed generators (1-based)

    friend bool operator<(const Cube& a, const Cube& b) { return std::tie(a.L, a.A) < std::tie(b.L, b.A); }
    friend bool operator==(const Cube& a, const Cube& b) { return a.L == b.L && a.A == b.A; }
};

using Cubillage = std::vector<Cube>;

// a is an even gap of L when |{l in L : l > a}| is even.
inline bool even_gap(int a, const VSet& L)
{
    return std::count_if(L.begin(), L.end(), [a](int l) { return l > a; }) % 2 == 0;
}

// phi(U) = {(L, A_L^U) : L in C([n], d)}.
inline Cubillage phi_to_cubillage(const BruhatOrder& B, std::uint64_t U)
{
    std::map<VSet, int> id;
    for (std::size_t i = 0; i < B.ground.size(); ++i)
        id[B.ground[i]] = static_cast<int>(i);
    Cubillage out;
    for (const auto& L : subsets1(B.n, B.d)) {
        Cube c{L, {}};
        for (int a = 1; a <= B.n; ++a) {
            if (std::binary_search(L.begin(), L.end(), a))
                continue;
            VSet La = L;
            La.insert(std::lower_bound(La.begin(), La.end(), a), a);
            bool in = (U >> id.at(La)) & 1u;
            bool even = even_gap(a, L);
            if ((in && even) || (!in && !even))
                c.A.push_back(a);
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<RVec> cube_vertices(const Cube& c, int d, const std::vector<Rat>& t)
{
    RVec base(static_cast<std::size_t>(d));
    for (int a : c.A)
        base = add(base, veronese_point(t[static_cast<std::size_t>(a - 1)], d));
    std::vector<RVec> out;
    for (unsigned m = 0; m < (1u << c.L.size()); ++m) {
        RVec v = base;
        for (std::size_t i = 0; i < c.L.size(); ++i)
            if ((m >> i) & 1u)
                v = add(v, veronese_point(t[static_cast<std::size_t>(c.L[i] - 1)], d));
        out.push_back(v);
    }
    return out;
}

struct TilingVerdict {
    bool ok = true;
    Rat cells = 0, hull = 0;  // d! times the volumes
    std::vector<std::pair<int, int>> overlaps;
};

// Cells of a cubillage cover Z(n,d) exactly: volumes add up and interiors are disjoint.
inline TilingVerdict tiling_check(int n, int d, const Cubillage& cells)
{
    auto t = default_params(n);
    TilingVerdict v;
    Rat fact = 1;
    for (int i = 2; i <= d; ++i)
        fact *= i;
    std::vector<std::vector<RVec>> verts;
    for (const auto& c : cells) {
        if (static_cast<int>(c.L.size()) != d)
            throw InputError("cubillage cell does not have d generators");
        RMat m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (std::size_t j = 0; j < c.L.size(); ++j) {
            RVec g = veronese_point(t[static_cast<std::size_t>(c.L[j] - 1)], d);
            for (std::size_t i = 0; i < g.size(); ++i)
                m(i, j) = g[i];
        }
        v.cells += abs(det(m)) * fact;
        verts.push_back(cube_vertices(c, d, t));
    }
    v.hull = hull_nvolume(make_family({Family::CyclicZonotope, n, d, t}).points);
    if (v.cells != v.hull)
        v.ok = false;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (interiors_meet(verts[i], verts[j])) {
                v.ok = false;
                v.overlaps.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
    return v;
}

// d-faces of Z(n,d+1) in its source/target under the canonical frame, as cubes.
inline std::pair<Cubillage, Cubillage> zonotope_source_target_cubes(int n, int d)
{
    FramedPolytope fp(make_family({Family::CyclicZonotope, n, d + 1, {}}), Frame::canonical(static_cast<std::size_t>(d + 1)));
    fp.require_admissible();
    const auto& lat = fp.lattice();
    auto to_cube = [&](int F) {
        std::map<int, std::size_t> count;
        const auto& vs = lat[F].verts;
        for (int v : vs)
            for (int i : parse_subset_label(fp.cfg().labels[static_cast<std::size_t>(v)]))
                ++count[i];
        Cube c;
        for (auto [i, k] : count)
            (k == vs.size() ? c.A : c.L).push_back(i);
        return c;
    };
    const ST& st = fp.st(fp.top(), d);
    Cubillage so, ta;
    for (int F : st.so)
        so.push_back(to_cube(F));
    for (int F : st.ta)
        ta.push_back(to_cube(F));
    std::sort(so.begin(), so.end());
    std::sort(ta.begin(), ta.end());
    return {so, ta};
}

inline std::string cube_label(const Cube& c) { return "(" + subset_label(c.L) + "," + subset_label(c.A) + ")"; }

} // namespace polyframe
