#pragma once

#include "exact.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace polyframe {

using VSet = std::vector<int>;  // sorted vertex indices
using Bits = boost::dynamic_bitset<>;

struct PointConfig {
    std::size_t dim = 0;
    std::vector<RVec> points;
    std::vector<std::string> labels;

    std::size_t size() const { return points.size(); }

    static PointConfig from_columns(const RMat& m, std::vector<std::string> labels = {})
    {
        PointConfig c;
        c.dim = m.rows();
        for (std::size_t j = 0; j < m.cols(); ++j)
            c.points.push_back(m.col(j));
        if (labels.empty())
            for (std::size_t j = 0; j < m.cols(); ++j)
                labels.push_back(std::to_string(j + 1));
        c.labels = std::move(labels);
        c.validate();
        return c;
    }

    void validate() const
    {
        if (labels.size() != points.size())
            throw InputError("labels and vertices differ in number");
        for (const auto& p : points)
            if (p.size() != dim)
                throw InputError("vertex with wrong dimension");
        std::set<RVec> seen(points.begin(), points.end());
        if (seen.size() != points.size())
            throw InputError("repeated vertex");
    }
};

inline Bits to_bits(const VSet& s, std::size_t n)
{
    Bits b(n);
    for (int i : s)
        b.set(static_cast<std::size_t>(i));
    return b;
}

inline VSet from_bits(const Bits& b)
{
    VSet s;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
        s.push_back(static_cast<int>(i));
    return s;
}

// Affine dimension of a finite point set (-1 for empty).
inline int affine_dim(const std::vector<RVec>& pts)
{
    if (pts.empty())
        return -1;
    if (pts.size() == 1)
        return 0;
    RMat m(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            m(i - 1, j) = pts[i][j] - pts[0][j];
    return static_cast<int>(rank(m));
}

namespace detail {

// Coordinates of the points in an affine chart of their span: a subset of the original
// coordinates on which the projection is injective.
inline std::vector<RVec> affine_chart(const std::vector<RVec>& pts)
{
    if (pts.size() <= 1)
        return std::vector<RVec>(pts.size());
    RMat m(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            m(i - 1, j) = pts[i][j] - pts[0][j];
    auto piv = rref(m);
    std::vector<RVec> out;
    for (const auto& p : pts) {
        RVec q;
        for (auto c : piv)
            q.push_back(p[c]);
        out.push_back(std::move(q));
    }
    return out;
}

inline std::vector<Int> primitive(std::vector<Int> v)
{
    Int g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

inline Int idot(const std::vector<Int>& a, const std::vector<Int>& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace detail

// Facets of conv(pts), each as the set of indices of input points lying on it.
// Double description on the cone of valid inequalities {y : (1,p).y >= 0}.
// The points must affinely span a space of dimension >= 1.
inline std::vector<VSet> hull_facets(const std::vector<RVec>& pts)
{
    auto chart = detail::affine_chart(pts);
    std::size_t n = pts.size();
    std::size_t r = chart.empty() ? 0 : chart[0].size();
    if (r == 0)
        throw InputError("hull_facets: point set is zero-dimensional");
    std::size_t D = r + 1;

    std::vector<std::vector<Int>> rows(n, std::vector<Int>(D));
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (const auto& x : chart[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        rows[i][0] = l;
        for (std::size_t j = 0; j < r; ++j)
            rows[i][j + 1] = chart[i][j].get_num() * (l / chart[i][j].get_den());
    }

    // Greedy choice of D independent rows.
    std::vector<std::size_t> basis_rows;
    {
        std::vector<RVec> chosen;
        for (std::size_t i = 0; i < n && basis_rows.size() < D; ++i) {
            RVec v(D);
            for (std::size_t j = 0; j < D; ++j)
                v[j] = rows[i][j];
            chosen.push_back(v);
            if (rank(RMat::from_rows(chosen)) == chosen.size())
                basis_rows.push_back(i);
            else
                chosen.pop_back();
        }
    }
    if (basis_rows.size() != D)
        throw InternalError("hull_facets: affine chart is degenerate");

    struct Ray {
        std::vector<Int> v;
        Bits zero;
    };
    std::vector<Ray> rays;
    {
        RMat a(D, D);
        for (std::size_t l = 0; l < D; ++l)
            for (std::size_t j = 0; j < D; ++j)
                a(l, j) = rows[basis_rows[l]][j];
        RMat inv = inverse(a);
        for (std::size_t c = 0; c < D; ++c) {
            Int l = 1;
            for (std::size_t j = 0; j < D; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), inv(j, c).get_den_mpz_t());
            std::vector<Int> v(D);
            for (std::size_t j = 0; j < D; ++j)
                v[j] = inv(j, c).get_num() * (l / inv(j, c).get_den());
            Ray ray{detail::primitive(std::move(v)), Bits(n)};
            for (std::size_t l2 = 0; l2 < D; ++l2)
                if (l2 != c)
                    ray.zero.set(basis_rows[l2]);
            rays.push_back(std::move(ray));
        }
    }

    std::vector<bool> used(n, false);
    for (auto b : basis_rows)
        used[b] = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i])
            continue;
        std::vector<std::size_t> pos, neg;
        std::vector<Int> val(rays.size());
        std::vector<Ray> next;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            val[j] = detail::idot(rows[i], rays[j].v);
            int s = sign(val[j]);
            if (s > 0)
                pos.push_back(j);
            else if (s < 0)
                neg.push_back(j);
            else
                rays[j].zero.set(i);
        }
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (sign(val[j]) >= 0)
                next.push_back(rays[j]);
        for (auto p : pos)
            for (auto q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < D)
                    continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != q && common.is_subset_of(rays[t].zero))
                        adjacent = false;
                if (!adjacent)
                    continue;
                std::vector<Int> v(D);
                for (std::size_t j = 0; j < D; ++j)
                    v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
                Ray ray{detail::primitive(std::move(v)), common};
                ray.zero.set(i);
                next.push_back(std::move(ray));
            }
        rays = std::move(next);
        used[i] = true;
    }

    std::set<VSet> out;
    for (const auto& ray : rays) {
        VSet f;
        for (std::size_t i = 0; i < n; ++i)
            if (detail::idot(rows[i], ray.v) == 0)
                f.push_back(static_cast<int>(i));
        out.insert(f);
    }
    return {out.begin(), out.end()};
}

namespace detail {

// All intersections of facets, together with the full set and the empty set.
inline std::set<VSet> close_under_intersection(std::size_t n, const std::vector<VSet>& fac)
{
    std::vector<Bits> facet_bits;
    for (const auto& f : fac)
        facet_bits.push_back(to_bits(f, n));
    std::set<VSet> seen;
    std::vector<Bits> queue;
    Bits all(n);
    all.set();
    seen.insert(from_bits(all));
    for (const auto& b : facet_bits)
        if (seen.insert(from_bits(b)).second)
            queue.push_back(b);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Bits g = queue[qi];
        for (const auto& h : facet_bits) {
            Bits x = g & h;
            if (seen.insert(from_bits(x)).second)
                queue.push_back(x);
        }
    }
    seen.insert(VSet{});
    return seen;
}

} // namespace detail

// Indices of the points that are vertices of their convex hull. Repeated points
// count once (first occurrence).
inline std::vector<int> hull_vertex_indices(const std::vector<RVec>& pts)
{
    std::vector<int> uniq;
    std::map<RVec, int> first;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (first.emplace(pts[i], static_cast<int>(i)).second)
            uniq.push_back(static_cast<int>(i));
    std::vector<RVec> u;
    for (int i : uniq)
        u.push_back(pts[static_cast<std::size_t>(i)]);
    if (affine_dim(u) <= 0)
        return uniq;
    auto seen = detail::close_under_intersection(u.size(), hull_facets(u));
    std::vector<int> out;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (seen.count(VSet{static_cast<int>(i)}))
            out.push_back(uniq[i]);
    return out;
}

struct Face {
    VSet verts;
    int dim = -1;
};

// All faces of a polytope, sorted by (dim, vertex list). Index 0 is the empty face,
// the last index is the polytope itself.
class FaceLattice {
public:
    std::vector<Face> faces;
    std::vector<std::vector<int>> below;  // facets of each face
    std::vector<std::vector<int>> above;  // faces covering each face
    std::size_t nverts = 0;

    std::size_t size() const { return faces.size(); }
    int top() const { return static_cast<int>(faces.size()) - 1; }
    int empty() const { return 0; }
    int dim() const { return faces.back().dim; }
    const Face& operator[](int i) const { return faces[static_cast<std::size_t>(i)]; }

    int index_of(const VSet& verts) const
    {
        auto it = index_.find(verts);
        return it == index_.end() ? -1 : it->second;
    }

    int vertex_face(int v) const { return index_of(VSet{v}); }

    std::vector<int> of_dim(int k) const
    {
        std::vector<int> r;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i].dim == k)
                r.push_back(static_cast<int>(i));
        return r;
    }

    bool contains(int big, int small) const
    {
        return bits_[static_cast<std::size_t>(small)].is_subset_of(bits_[static_cast<std::size_t>(big)]);
    }

    // k-faces contained in F.
    std::vector<int> subfaces(int F, int k) const
    {
        std::vector<int> r;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i].dim == k && contains(F, static_cast<int>(i)))
                r.push_back(static_cast<int>(i));
        return r;
    }

    // Nonempty faces contained in F, including F.
    std::vector<int> closure(int F) const
    {
        std::vector<int> r;
        for (std::size_t i = 1; i < faces.size(); ++i)
            if (contains(F, static_cast<int>(i)))
                r.push_back(static_cast<int>(i));
        return r;
    }

    const Bits& bits(int F) const { return bits_[static_cast<std::size_t>(F)]; }

    void build(std::vector<Face> fs, std::size_t nv)
    {
        nverts = nv;
        std::sort(fs.begin(), fs.end(), [](const Face& a, const Face& b) {
            return a.dim != b.dim ? a.dim < b.dim : a.verts < b.verts;
        });
        faces = std::move(fs);
        index_.clear();
        bits_.clear();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            index_[faces[i].verts] = static_cast<int>(i);
            bits_.push_back(to_bits(faces[i].verts, nv));
        }
        below.assign(faces.size(), {});
        above.assign(faces.size(), {});
        std::map<int, std::vector<int>> by_dim;
        for (std::size_t i = 0; i < faces.size(); ++i)
            by_dim[faces[i].dim].push_back(static_cast<int>(i));
        for (std::size_t g = 0; g < faces.size(); ++g) {
            auto it = by_dim.find(faces[g].dim - 1);
            if (it == by_dim.end())
                continue;
            for (int f : it->second)
                if (contains(static_cast<int>(g), f)) {
                    below[g].push_back(f);
                    above[static_cast<std::size_t>(f)].push_back(static_cast<int>(g));
                }
        }
    }

private:
    std::map<VSet, int> index_;
    std::vector<Bits> bits_;
};

// Facets of conv(cfg), as vertex sets. Throws if some point is not a vertex.
inline std::vector<VSet> facets(const PointConfig& cfg);

inline FaceLattice lattice_of_points(const std::vector<RVec>& pts, const std::vector<std::string>& labels,
                                     std::vector<VSet>* facet_out = nullptr)
{
    std::size_t n = pts.size();
    if (n == 0)
        throw InputError("empty point configuration");
    int d = affine_dim(pts);
    std::vector<Face> fs;
    fs.push_back({{}, -1});
    if (d == 0) {
        fs.push_back({{0}, 0});
        FaceLattice lat;
        lat.build(std::move(fs), n);
        if (facet_out)
            *facet_out = {VSet{}};
        return lat;
    }
    auto fac = hull_facets(pts);
    if (facet_out)
        *facet_out = fac;
    auto seen = detail::close_under_intersection(n, fac);
    for (std::size_t i = 0; i < n; ++i)
        if (!seen.count(VSet{static_cast<int>(i)}))
            throw InputError("point " + labels[i] + " is not a vertex of the convex hull");
    auto chart = detail::affine_chart(pts);
    for (const auto& s : seen) {
        if (s.empty())
            continue;
        std::vector<RVec> sub;
        for (int i : s)
            sub.push_back(chart[static_cast<std::size_t>(i)]);
        fs.push_back({s, affine_dim(sub)});
    }
    FaceLattice lat;
    lat.build(std::move(fs), n);
    return lat;
}

inline std::vector<VSet> facets(const PointConfig& cfg)
{
    std::vector<VSet> fac;
    lattice_of_points(cfg.points, cfg.labels, &fac);
    return fac;
}

inline FaceLattice face_lattice(const PointConfig& cfg)
{
    cfg.validate();
    return lattice_of_points(cfg.points, cfg.labels);
}

// Succeeds iff every point is exposed; otherwise throws naming the first non-vertex.
// A point is a vertex iff it is not a convex combination of the others.
inline void assert_vertices(const PointConfig& cfg)
{
    std::size_t n = cfg.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (n == 1)
            return;
        std::vector<Constraint> cons;
        for (std::size_t r = 0; r <= cfg.dim; ++r) {
            RVec a;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                a.push_back(r == cfg.dim ? Rat(1) : cfg.points[j][r]);
            }
            cons.push_back({a, Rel::Eq, r == cfg.dim ? Rat(1) : cfg.points[i][r]});
        }
        if (lp_feasible(cons, n - 1, true).feasible)
            throw InputError("point " + cfg.labels[i] + " is not a vertex of the convex hull");
    }
}

// Pulling triangulation of face F: cone from its smallest vertex over the
// triangulations of the facets not containing it.
inline std::vector<VSet> pulling_triangulation(const FaceLattice& lat, int F)
{
    std::map<int, std::vector<VSet>> memo;
    auto rec = [&](auto&& self, int G) -> const std::vector<VSet>& {
        auto it = memo.find(G);
        if (it != memo.end())
            return it->second;
        std::vector<VSet> out;
        const Face& g = lat[G];
        if (g.dim <= 0) {
            out.push_back(g.verts);
        } else {
            int apex = g.verts.front();
            for (int H : lat.below[static_cast<std::size_t>(G)]) {
                if (std::binary_search(lat[H].verts.begin(), lat[H].verts.end(), apex))
                    continue;
                for (VSet s : self(self, H)) {
                    s.insert(std::lower_bound(s.begin(), s.end(), apex), apex);
                    out.push_back(std::move(s));
                }
            }
        }
        return memo.emplace(G, std::move(out)).first->second;
    };
    return rec(rec, F);
}

// |det| of the homogenised simplex, i.e. k! times its k-volume.
inline Rat simplex_nvolume(const std::vector<RVec>& pts, const VSet& s)
{
    std::size_t k = s.size() - 1;
    RMat m(k + 1, k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        m(0, j) = 1;
        for (std::size_t i = 0; i < k; ++i)
            m(i + 1, j) = pts[static_cast<std::size_t>(s[j])][i];
    }
    return abs(det(m));
}

// k! times the volume of the face F of lat, measured on the coordinates pts
// (which must map F affinely isomorphically onto a full-dimensional polytope in R^k).
inline Rat face_nvolume(const FaceLattice& lat, int F, const std::vector<RVec>& pts)
{
    Rat v = 0;
    for (const auto& s : pulling_triangulation(lat, F))
        v += simplex_nvolume(pts, s);
    return v;
}

// k! times the volume of conv(pts), pts in R^k spanning it affinely. k = 0 gives 1.
inline Rat hull_nvolume(const std::vector<RVec>& pts)
{
    if (pts.empty())
        return 0;
    if (pts[0].empty())
        return 1;
    auto vi = hull_vertex_indices(pts);
    std::vector<RVec> v;
    std::vector<std::string> lab;
    for (int i : vi) {
        v.push_back(pts[static_cast<std::size_t>(i)]);
        lab.push_back(std::to_string(i));
    }
    if (affine_dim(v) != static_cast<int>(pts[0].size()))
        return 0;
    auto lat = lattice_of_points(v, lab);
    return face_nvolume(lat, lat.top(), v);
}

// ---------------------------------------------------------------------------
// Families.

enum class Family { Simplex, Cube, Cross, CyclicPolytope, CyclicZonotope, CyclicCube, CyclicSimplex };

struct FamilySpec {
    Family kind = Family::Simplex;
    int n = 0;  // number of points / generators (cyclic families)
    int d = 0;
    std::vector<Rat> t;  // curve parameters, default t_i = i
};

inline RVec moment_point(const Rat& t, int d)
{
    RVec v(static_cast<std::size_t>(d));
    Rat p = t;
    for (int i = 0; i < d; ++i) {
        v[static_cast<std::size_t>(i)] = p;
        p *= t;
    }
    return v;
}

inline RVec veronese_point(const Rat& t, int d)
{
    RVec v(static_cast<std::size_t>(d));
    Rat p = 1;
    for (int i = 0; i < d; ++i) {
        v[static_cast<std::size_t>(i)] = p;
        p *= t;
    }
    return v;
}

inline std::string subset_label(const VSet& s)
{
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

inline VSet parse_subset_label(const std::string& s)
{
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw InputError("not a subset label: " + s);
    VSet out;
    std::string cur;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else
            cur += s[i];
    }
    if (!cur.empty())
        out.push_back(std::stoi(cur));
    return out;
}

// Subsets A of [n] (1-based) whose generator sums are vertices of Z(n,d):
// indicator sequences with at most d-1 sign changes.
inline std::vector<VSet> zonotope_vertex_sets(int n, int d)
{
    std::vector<VSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int changes = 0;
        for (int i = 1; i < n; ++i)
            if (((mask >> i) & 1u) != ((mask >> (i - 1)) & 1u))
                ++changes;
        if (changes > d - 1)
            continue;
        VSet a;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                a.push_back(i + 1);
        out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Rat> default_params(int n)
{
    std::vector<Rat> t;
    for (int i = 1; i <= n; ++i)
        t.emplace_back(i);
    return t;
}

inline PointConfig make_family(FamilySpec spec)
{
    PointConfig c;
    int n = spec.n, d = spec.d;
    if (spec.kind == Family::CyclicCube) {
        spec.kind = Family::CyclicZonotope;
        n = d;
    } else if (spec.kind == Family::CyclicSimplex) {
        spec.kind = Family::CyclicPolytope;
        n = d + 1;
    }
    if (d < 0 || (d == 0 && spec.kind != Family::Simplex))
        throw InputError("make_family: invalid dimension");
    if (spec.t.empty())
        spec.t = default_params(std::max(n, 0));
    switch (spec.kind) {
    case Family::Simplex:
        c.dim = static_cast<std::size_t>(d + 1);
        for (int i = 0; i <= d; ++i) {
            RVec v(c.dim);
            v[static_cast<std::size_t>(i)] = 1;
            c.points.push_back(v);
            c.labels.push_back(std::to_string(i + 1));
        }
        break;
    case Family::Cube:
        c.dim = static_cast<std::size_t>(d);
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            RVec v(c.dim);
            VSet s;
            for (int i = 0; i < d; ++i)
                if (mask & (1u << i)) {
                    v[static_cast<std::size_t>(i)] = 1;
                    s.push_back(i + 1);
                }
            c.points.push_back(v);
            c.labels.push_back(subset_label(s));
        }
        break;
    case Family::Cross:
        c.dim = static_cast<std::size_t>(d);
        for (int i = 0; i < d; ++i)
            for (int s : {1, -1}) {
                RVec v(c.dim);
                v[static_cast<std::size_t>(i)] = s;
                c.points.push_back(v);
                c.labels.push_back((s > 0 ? "+" : "-") + std::to_string(i + 1));
            }
        break;
    case Family::CyclicPolytope:
        if (n < d + 1)
            throw InputError("cyclic polytope needs n >= d+1");
        if (static_cast<int>(spec.t.size()) != n)
            throw InputError("wrong number of curve parameters");
        for (int i = 0; i + 1 < n; ++i)
            if (!(spec.t[static_cast<std::size_t>(i)] < spec.t[static_cast<std::size_t>(i + 1)]))
                throw InputError("curve parameters must increase");
        c.dim = static_cast<std::size_t>(d);
        for (int i = 0; i < n; ++i) {
            c.points.push_back(moment_point(spec.t[static_cast<std::size_t>(i)], d));
            c.labels.push_back(std::to_string(i + 1));
        }
        break;
    case Family::CyclicZonotope: {
        if (n < d)
            throw InputError("cyclic zonotope needs n >= d");
        if (static_cast<int>(spec.t.size()) != n)
            throw InputError("wrong number of curve parameters");
        for (int i = 0; i + 1 < n; ++i)
            if (!(spec.t[static_cast<std::size_t>(i)] < spec.t[static_cast<std::size_t>(i + 1)]))
                throw InputError("curve parameters must increase");
        if (n > 20)
            throw InputError("cyclic zonotope: too many generators");
        c.dim = static_cast<std::size_t>(d);
        for (const auto& a : zonotope_vertex_sets(n, d)) {
            RVec v(c.dim);
            for (int i : a)
                v = add(v, veronese_point(spec.t[static_cast<std::size_t>(i - 1)], d));
            c.points.push_back(v);
            c.labels.push_back(subset_label(a));
        }
        break;
    }
    default:
        break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Gale-type combinatorial rules. Elements are 1-based.

// b is even in L iff |{l in L : l > b}| is even.
inline bool even_in(int b, const VSet& L)
{
    int c = 0;
    for (int l : L)
        if (l > b)
            ++c;
    return c % 2 == 0;
}

struct CombinatorialFacet {
    VSet L;  // facet vertex set (cyclic polytope) or free generators (zonotope)
    VSet A;  // generators fully included (zonotope only)
    bool source = false;
};

inline std::vector<VSet> k_subsets(int n, int k)
{
    std::vector<VSet> out;
    if (k < 0 || k > n)
        return out;
    VSet cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::vector<CombinatorialFacet> combinatorial_faces(Family kind, int n, int d)
{
    std::vector<CombinatorialFacet> out;
    if (kind == Family::CyclicPolytope || kind == Family::CyclicSimplex) {
        if (kind == Family::CyclicSimplex)
            n = d + 1;
        for (const auto& F : k_subsets(n, d)) {
            int even = 0, odd = 0;
            for (int b = 1; b <= n; ++b) {
                if (std::binary_search(F.begin(), F.end(), b))
                    continue;
                (even_in(b, F) ? even : odd)++;
            }
            if (even && odd)
                continue;
            out.push_back({F, {}, odd == 0});
        }
    } else if (kind == Family::CyclicZonotope || kind == Family::CyclicCube) {
        if (kind == Family::CyclicCube)
            n = d;
        for (const auto& L : k_subsets(n, d - 1)) {
            VSet odd_set, even_set;
            for (int b = 1; b <= n; ++b) {
                if (std::binary_search(L.begin(), L.end(), b))
                    continue;
                (even_in(b, L) ? even_set : odd_set).push_back(b);
            }
            out.push_back({L, odd_set, true});
            out.push_back({L, even_set, false});
        }
    } else {
        throw InputError("combinatorial_faces: kind must be a cyclic family");
    }
    return out;
}

// Face rule for the cyclic simplex: L minus l lies in ta(L) iff l is odd in L minus l.
inline bool simplex_facet_is_target(const VSet& L, int l)
{
    VSet E;
    for (int x : L)
        if (x != l)
            E.push_back(x);
    return !even_in(l, E);
}

// Face rule for the cyclic cube. Facets of (L,A) are (L-l, A) and (L-l, A+l).
inline bool cube_facet_is_target(const VSet& L, int l, bool l_added)
{
    VSet E;
    for (int x : L)
        if (x != l)
            E.push_back(x);
    bool odd = !even_in(l, E);
    return l_added ? !odd : odd;
}

// ---------------------------------------------------------------------------

// Intersection of conv(cfg) with {x : c.x = level}; vertices are edge crossings.
inline PointConfig slice(const PointConfig& cfg, const RVec& c, const Rat& level)
{
    if (c.size() != cfg.dim)
        throw InputError("slice: functional has wrong dimension");
    std::vector<std::string> touching;
    std::vector<Rat> val;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        val.push_back(dot(c, cfg.points[i]));
        if (val.back() == level)
            touching.push_back(cfg.labels[i]);
    }
    if (!touching.empty()) {
        std::string msg = "slice: hyperplane is not generic, touches";
        for (const auto& t : touching)
            msg += " " + t;
        throw InputError(msg);
    }
    auto lat = face_lattice(cfg);
    PointConfig out;
    out.dim = cfg.dim;
    for (int e : lat.of_dim(1)) {
        int u = lat[e].verts[0], w = lat[e].verts[1];
        const Rat& a = val[static_cast<std::size_t>(u)];
        const Rat& b = val[static_cast<std::size_t>(w)];
        if ((a < level) == (b < level))
            continue;
        Rat s = (level - a) / (b - a);
        out.points.push_back(add(cfg.points[static_cast<std::size_t>(u)],
                                 scale(s, sub(cfg.points[static_cast<std::size_t>(w)], cfg.points[static_cast<std::size_t>(u)]))));
        out.labels.push_back(cfg.labels[static_cast<std::size_t>(u)] + "-" + cfg.labels[static_cast<std::size_t>(w)]);
    }
    if (out.points.empty())
        throw InputError("slice: hyperplane misses the polytope");
    return out;
}

} // namespace polyframe
