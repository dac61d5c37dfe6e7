#pragma once

#include "framing.hpp"
#include "graph.hpp"

#include <map>
#include <string>

namespace polyframe {

// Face lattice with a sign on every cover E ⋖ F, the empty face included.
// signs[F][i] is the label of below[F][i] ⋖ F.
struct OrientedGradedPoset {
    FaceLattice lattice;
    std::vector<std::vector<int>> signs;

    int label(int E, int F) const
    {
        const auto& b = lattice.below[static_cast<std::size_t>(F)];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] == E)
                return signs[static_cast<std::size_t>(F)][i];
        throw InputError("label: not a cover relation");
    }
};

struct ThinnessViolation {
    int bottom = -1, top = -1;
    std::string what;
};

// First diamond that breaks groundedness or thinness, if any.
inline std::optional<ThinnessViolation> thinness_violation(const OrientedGradedPoset& p)
{
    const auto& lat = p.lattice;
    for (int v : lat.of_dim(0))
        if (p.label(lat.empty(), v) != 1)
            return ThinnessViolation{lat.empty(), v, "not grounded"};
    for (std::size_t g = 1; g < lat.size(); ++g) {
        int G = static_cast<int>(g);
        if (lat[G].dim < 1)
            continue;
        // E ⋖ F ⋖ G, grouped by E
        std::map<int, std::vector<int>> mids;
        for (int F : lat.below[g])
            for (int E : lat.below[static_cast<std::size_t>(F)])
                mids[E].push_back(F);
        for (const auto& [E, fs] : mids) {
            if (fs.size() != 2)
                return ThinnessViolation{E, G, "interval is not a diamond"};
            int a = p.label(E, fs[0]) * p.label(fs[0], G);
            int b = p.label(E, fs[1]) * p.label(fs[1], G);
            if (a != -b)
                return ThinnessViolation{E, G, "diamond signs do not cancel"};
        }
    }
    return std::nullopt;
}

// so -> -, ta -> +, empty ⋖ vertex -> +.
inline OrientedGradedPoset poset_orientation(const FaceLattice& lat, const FOrientation& o)
{
    OrientedGradedPoset p{lat, {}};
    p.signs.resize(lat.size());
    for (std::size_t f = 1; f < lat.size(); ++f) {
        for (int E : lat.below[f]) {
            int s = 1;
            if (lat.faces[f].dim >= 1) {
                bool so = std::find(o.so[f].begin(), o.so[f].end(), E) != o.so[f].end();
                bool ta = std::find(o.ta[f].begin(), o.ta[f].end(), E) != o.ta[f].end();
                if (so == ta)
                    throw InputError("orientation does not partition the facets of a face");
                s = so ? -1 : 1;
            }
            p.signs[f].push_back(s);
        }
    }
    return p;
}

inline OrientedGradedPoset poset_orientation(const FramedPolytope& fp)
{
    return poset_orientation(fp.lattice(), f_orientation(fp));
}

inline FOrientation reconstruct(const OrientedGradedPoset& p)
{
    if (auto v = thinness_violation(p)) {
        std::string s = "[";
        for (int x : p.lattice[v->bottom].verts)
            s += std::to_string(x) + " ";
        s += "] < [";
        for (int x : p.lattice[v->top].verts)
            s += std::to_string(x) + " ";
        throw InputError("poset orientation fails at " + s + "]: " + v->what);
    }
    const auto& lat = p.lattice;
    FOrientation o;
    o.so.resize(lat.size());
    o.ta.resize(lat.size());
    for (std::size_t f = 1; f < lat.size(); ++f) {
        if (lat.faces[f].dim < 1)
            continue;
        for (std::size_t i = 0; i < lat.below[f].size(); ++i)
            (p.signs[f][i] < 0 ? o.so[f] : o.ta[f]).push_back(lat.below[f][i]);
    }
    return o;
}

// ---------------------------------------------------------------------------
// Closed subsets, as bitsets over lattice indices; the empty face is never included.

using FaceSet = Bits;

inline FaceSet face_set(const FaceLattice& lat, const std::vector<int>& faces)
{
    FaceSet s(lat.size());
    for (int f : faces)
        if (f != lat.empty())
            s.set(static_cast<std::size_t>(f));
    return s;
}

inline std::vector<int> members(const FaceSet& s)
{
    std::vector<int> r;
    for (auto i = s.find_first(); i != FaceSet::npos; i = s.find_next(i))
        r.push_back(static_cast<int>(i));
    return r;
}

inline FaceSet closure(const FaceLattice& lat, const FaceSet& s)
{
    FaceSet c = s;
    std::vector<int> stack = members(s);
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e : lat.below[static_cast<std::size_t>(f)])
            if (e != lat.empty() && !c.test(static_cast<std::size_t>(e))) {
                c.set(static_cast<std::size_t>(e));
                stack.push_back(e);
            }
    }
    return c;
}

inline FaceSet atom_set(const FaceLattice& lat, int F) { return closure(lat, face_set(lat, {F})); }

inline bool is_closed(const FaceLattice& lat, const FaceSet& s) { return closure(lat, s) == s; }

inline int set_dim(const FaceLattice& lat, const FaceSet& s)
{
    int d = -1;
    for (int f : members(s))
        d = std::max(d, lat[f].dim);
    return d;
}

inline std::vector<int> maximal(const FaceLattice& lat, const FaceSet& s)
{
    std::vector<int> r;
    for (int f : members(s)) {
        const auto& up = lat.above[static_cast<std::size_t>(f)];
        if (std::none_of(up.begin(), up.end(), [&](int g) { return s.test(static_cast<std::size_t>(g)); }))
            r.push_back(f);
    }
    return r;
}

// k-faces of U all of whose covers inside U carry the given sign.
inline std::vector<int> set_st(const OrientedGradedPoset& p, const FaceSet& U, int k, int sign)
{
    const auto& lat = p.lattice;
    std::vector<int> r;
    for (int f : members(U)) {
        if (lat[f].dim != k)
            continue;
        bool ok = true;
        for (int g : lat.above[static_cast<std::size_t>(f)])
            if (U.test(static_cast<std::size_t>(g)) && p.label(f, g) != sign) {
                ok = false;
                break;
            }
        if (ok)
            r.push_back(f);
    }
    return r;
}

// Input (sign -1) or output (sign +1) k-boundary of a closed subset.
inline FaceSet set_boundary(const OrientedGradedPoset& p, const FaceSet& U, int k, int sign)
{
    const auto& lat = p.lattice;
    FaceSet r(lat.size());
    if (k < 0)
        return r;
    std::vector<int> gen = set_st(p, U, k, sign);
    for (int m : maximal(lat, U))
        if (lat[m].dim < k)
            gen.push_back(m);
    return closure(lat, face_set(lat, gen));
}

inline FaceSet bso(const OrientedGradedPoset& p, const FaceSet& U, int k) { return set_boundary(p, U, k, -1); }
inline FaceSet bta(const OrientedGradedPoset& p, const FaceSet& U, int k) { return set_boundary(p, U, k, +1); }

struct Boundaries {
    FaceSet source, target;
};

inline Boundaries boundaries(const OrientedGradedPoset& p, const FaceSet& U, int k)
{
    return {bso(p, U, k), bta(p, U, k)};
}

// ---------------------------------------------------------------------------
// Molecules by exhaustive search (small inputs only).

namespace detail {

struct MoleculeSearch {
    const OrientedGradedPoset& p;
    std::size_t budget;
    std::map<FaceSet, bool> memo;

    bool run(const FaceSet& U)
    {
        if (auto it = memo.find(U); it != memo.end())
            return it->second;
        bool r = search(U);
        memo[U] = r;
        return r;
    }

    bool search(const FaceSet& U)
    {
        const auto& lat = p.lattice;
        if (U.none())
            return false;
        auto M = maximal(lat, U);
        if (M.size() == 1)
            return true;
        if (M.size() > budget)
            throw InputError("is_molecule: " + std::to_string(M.size()) + " maximal faces exceed the search budget of " +
                             std::to_string(budget));
        int dim = set_dim(lat, U);
        const unsigned full = (1u << M.size()) - 1;
        for (int k = 0; k < dim; ++k)
            for (unsigned mask = 1; mask < full; ++mask) {
                FaceSet s1(lat.size()), s2(lat.size());
                for (std::size_t i = 0; i < M.size(); ++i)
                    ((mask >> i) & 1u ? s1 : s2).set(static_cast<std::size_t>(M[i]));
                // U1 starts at closure(s1) and absorbs bso_k(U2) until the gluing closes up
                FaceSet U1 = closure(lat, s1), U2, t1;
                for (;;) {
                    t1 = bta(p, U1, k);
                    U2 = closure(lat, s2) | t1;
                    FaceSet grown = U1 | bso(p, U2, k);
                    if (grown == U1)
                        break;
                    U1 = grown;
                }
                if (U1 == U || U2 == U || (U1 | U2) != U)
                    continue;
                if ((U1 & U2) != t1 || bso(p, U2, k) != t1)
                    continue;
                if (run(U1) && run(U2))
                    return true;
            }
        return false;
    }
};

} // namespace detail

// U is a molecule: an atom, or U1 ∘_k U2 for molecules with U1 ∩ U2 = bta_k(U1) = bso_k(U2).
// The search splits max(U) into two generating sets; the first part absorbs the input
// boundary of the second, the second absorbs the output boundary of the first. Every
// split found is checked literally, so a positive answer is certain; a negative one
// means no split of this shape exists.
inline bool is_molecule(const OrientedGradedPoset& p, const FaceSet& U, std::size_t budget = 12)
{
    if (!is_closed(p.lattice, U))
        throw InputError("is_molecule: subset is not closed");
    detail::MoleculeSearch s{p, budget, {}};
    return s.run(U);
}

// ---------------------------------------------------------------------------
// Generalized sources and targets for frames that need not be admissible.

struct ProjectedFacet {
    int face = -1;  // preimage of the facet inside F
    RVec normal;    // outward, in frame coordinates of V_{k+1}
};

// Facets of pi_m(F) with their preimages in F; requires dim pi_m(F) = m.
inline std::vector<ProjectedFacet> projected_facets(const FramedPolytope& fp, int F, int m)
{
    const auto& lat = fp.lattice();
    const auto& verts = lat[F].verts;
    std::vector<RVec> pts;
    for (int v : verts)
        pts.push_back(fp.proj(v, m));
    if (affine_dim(pts) != m)
        throw InputError("projected face has dimension below " + std::to_string(m));
    std::vector<ProjectedFacet> out;
    if (m == 0)
        return out;
    for (const auto& g : hull_facets(pts)) {
        VSet pre;
        for (int i : g)
            pre.push_back(verts[static_cast<std::size_t>(i)]);
        int E = lat.index_of(pre);
        if (E < 0)
            throw InternalError("projected facet preimage is not a face");
        RVec n;
        if (m == 1) {
            n = RVec{1};
        } else {
            RMat diff(g.size() - 1, static_cast<std::size_t>(m));
            const RVec& base = pts[static_cast<std::size_t>(g[0])];
            for (std::size_t i = 1; i < g.size(); ++i) {
                RVec d = sub(pts[static_cast<std::size_t>(g[i])], base);
                for (int j = 0; j < m; ++j)
                    diff(i - 1, static_cast<std::size_t>(j)) = d[static_cast<std::size_t>(j)];
            }
            auto ns = nullspace(diff);
            if (ns.size() != 1)
                throw InternalError("projected facet is degenerate");
            n = ns[0];
        }
        Rat side = 0;
        for (const auto& q : pts) {
            side = dot(n, sub(q, pts[static_cast<std::size_t>(g[0])]));
            if (side != 0)
                break;
        }
        if (side > 0)
            n = scale(-1, n);
        out.push_back({E, n});
    }
    std::sort(out.begin(), out.end(), [](const ProjectedFacet& a, const ProjectedFacet& b) { return a.face < b.face; });
    return out;
}

// k-source/target of F as preimages of the lower/upper facets of pi_{k+1}(F).
inline ST generalized_k_st(const FramedPolytope& fp, int F, int k)
{
    const auto& lat = fp.lattice();
    if (k < 0 || lat[F].dim <= k)
        throw InputError("generalized_k_st: need 0 <= k < dim F");
    ST r;
    for (const auto& pf : projected_facets(fp, F, k + 1)) {
        const Rat& c = pf.normal[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        r.bd.push_back(pf.face);
        (c < 0 ? r.so : r.ta).push_back(pf.face);
    }
    return r;
}

inline ST generalized_k_st(const PointConfig& cfg, const Frame& frame, const VSet& face, int k)
{
    FramedPolytope fp(cfg, frame);
    int F = fp.lattice().index_of(face);
    if (F < 0)
        throw InputError("generalized_k_st: vertex set is not a face");
    return generalized_k_st(fp, F, k);
}

// ---------------------------------------------------------------------------
// Layerings from the lambda order.

struct Layering {
    int face = -1;
    int k = 0;           // boundary dimension; layers are glued along (k-1)-boundaries
    bool source = true;  // layering of bso_k(F) or bta_k(F)
    std::vector<int> order;         // the k-faces G_1..G_l
    std::vector<Rat> lambda;        // after any perturbation, parallel to order
    bool perturbed = false;
    Rat delta = 0;
    std::vector<FaceSet> layers;    // H_1..H_l
    std::vector<FaceSet> prefixes;  // G_0..G_l
    bool gluing_ok = false;         // G_m ∩ H_{m+1} = bta_{k-1}(G_m) = bso_{k-1}(H_{m+1}), G_l = boundary
    bool order_ok = false;          // ta_{k-1}(G_i) ∩ so_{k-1}(G_j) nonempty only for i before j
};

namespace detail {

// Jitter direction for v_k: sum_j c_j v_j over j < k, with c_j = (j+1)^t for the t-th attempt.
inline std::vector<Rat> jitter_coeffs(int k, int attempt)
{
    std::vector<Rat> c(static_cast<std::size_t>(k - 1));
    for (int j = 0; j + 1 < k; ++j) {
        Rat x = 1;
        for (int t = 0; t <= attempt; ++t)
            x *= j + 1 + attempt;
        c[static_cast<std::size_t>(j)] = (j % 2 ? -x : x);
    }
    return c;
}

inline Rat jitter_slope(const RVec& n, int k, const std::vector<Rat>& c)
{
    Rat s = 0;
    for (int j = 0; j + 1 < k; ++j)
        s += c[static_cast<std::size_t>(j)] * n[static_cast<std::size_t>(j)];
    return s / n[static_cast<std::size_t>(k)];
}

} // namespace detail

inline Layering layering(const FramedPolytope& fp, const OrientedGradedPoset& p, int F, int k, bool source)
{
    fp.require_admissible();
    const auto& lat = fp.lattice();
    if (k < 0 || k >= lat[F].dim)
        throw InputError("layering: need 0 <= k < dim F");
    Layering L;
    L.face = F;
    L.k = k;
    L.source = source;
    FaceSet atomF = atom_set(lat, F);
    FaceSet target = source ? bso(p, atomF, k) : bta(p, atomF, k);
    const ST& st = fp.st(F, k);
    const auto& cells = source ? st.so : st.ta;

    if (k == 0) {
        L.order = cells;
        L.lambda.assign(cells.size(), 0);
        L.prefixes = {FaceSet(lat.size())};
        for (int G : cells) {
            L.layers.push_back(atom_set(lat, G));
            L.prefixes.push_back(L.prefixes.back() | L.layers.back());
        }
        L.gluing_ok = cells.size() == 1 && L.prefixes.back() == target;
        L.order_ok = true;
        return L;
    }

    // lambda_i = <n, v_k> / <n, v_{k+1}> over facets of pi_{k+1}(F), in frame coordinates
    std::map<int, RVec> normal;
    for (const auto& pf : projected_facets(fp, F, k + 1))
        normal[pf.face] = pf.normal;
    std::vector<std::pair<Rat, int>> lam;
    for (int G : cells) {
        auto it = normal.find(G);
        if (it == normal.end())
            throw InternalError("layering: k-face is not over a facet of the projection");
        const RVec& n = it->second;
        lam.emplace_back(n[static_cast<std::size_t>(k - 1)] / n[static_cast<std::size_t>(k)], G);
    }
    auto distinct = [](std::vector<std::pair<Rat, int>> v) {
        std::sort(v.begin(), v.end());
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].first == v[i - 1].first)
                return false;
        return true;
    };
    if (!distinct(lam)) {
        // perturb v_k by delta * sum c_j v_j (j < k), halving delta until ties break,
        // strict comparisons survive and the orientation is unchanged
        bool done = false;
        FOrientation base = f_orientation(fp);
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
            auto c = detail::jitter_coeffs(k, attempt);
            std::vector<Rat> slope;
            for (int G : cells)
                slope.push_back(detail::jitter_slope(normal.at(G), k, c));
            Rat delta = 1;
            for (int h = 0; h < 64 && !done; ++h, delta /= 2) {
                std::vector<std::pair<Rat, int>> moved;
                for (std::size_t i = 0; i < lam.size(); ++i)
                    moved.emplace_back(lam[i].first + delta * slope[i], lam[i].second);
                if (!distinct(moved))
                    continue;
                bool kept = true;
                for (std::size_t i = 0; i < lam.size() && kept; ++i)
                    for (std::size_t j = 0; j < lam.size() && kept; ++j)
                        if (lam[i].first < lam[j].first && !(moved[i].first < moved[j].first))
                            kept = false;
                if (!kept)
                    continue;
                RMat m = fp.frame().matrix();
                for (int j = 0; j + 1 < k; ++j)
                    for (std::size_t r = 0; r < m.rows(); ++r)
                        m(r, static_cast<std::size_t>(k - 1)) += delta * c[static_cast<std::size_t>(j)] * m(r, static_cast<std::size_t>(j));
                FramedPolytope moved_fp(fp.cfg(), Frame(m));
                if (!moved_fp.admissible() || !(f_orientation(moved_fp) == base))
                    continue;
                lam = moved;
                L.perturbed = true;
                L.delta = delta;
                done = true;
            }
        }
        if (!done)
            throw InternalError("layering: could not break lambda ties by perturbation");
    }
    std::sort(lam.begin(), lam.end());
    if (source)
        std::reverse(lam.begin(), lam.end());
    for (const auto& [l, G] : lam) {
        L.order.push_back(G);
        L.lambda.push_back(l);
    }

    FaceSet G0 = bso(p, atomF, k - 1);
    L.prefixes.push_back(G0);
    bool ok = true;
    for (int G : L.order) {
        const FaceSet& Gm = L.prefixes.back();
        FaceSet t = bta(p, Gm, k - 1);
        FaceSet H = atom_set(lat, G) | t;
        if ((Gm & H) != t || bso(p, H, k - 1) != t)
            ok = false;
        L.layers.push_back(H);
        L.prefixes.push_back(Gm | H);
    }
    L.gluing_ok = ok && L.prefixes.back() == target;

    L.order_ok = true;
    for (std::size_t i = 0; i < L.order.size(); ++i)
        for (std::size_t j = 0; j < L.order.size(); ++j) {
            if (i == j)
                continue;
            const auto& t = fp.st(L.order[i], k - 1).ta;
            const auto& s = fp.st(L.order[j], k - 1).so;
            bool meet = std::any_of(t.begin(), t.end(), [&](int w) { return std::find(s.begin(), s.end(), w) != s.end(); });
            if (meet && i > j)
                L.order_ok = false;
        }
    return L;
}

inline Layering layering(const FramedPolytope& fp, int k, bool source = true)
{
    return layering(fp, poset_orientation(fp), fp.top(), k, source);
}

// ---------------------------------------------------------------------------
// Regular directed complex axioms.

struct RdcFace {
    int face = -1;
    bool molecules = true;  // (1)
    bool globular = true;   // (2)
    bool intersect = true;  // (3)
    bool layering_order = true;
    std::string detail;

    bool ok() const { return molecules && globular && intersect && layering_order; }
};

struct RdcVerdict {
    bool ok = true;
    std::vector<RdcFace> faces;
};

inline RdcFace rdc_face(const FramedPolytope& fp, const OrientedGradedPoset& p, int F)
{
    const auto& lat = fp.lattice();
    RdcFace r;
    r.face = F;
    int d = lat[F].dim;
    FaceSet U = atom_set(lat, F);
    for (bool src : {true, false}) {
        Layering L = layering(fp, p, F, d - 1, src);
        if (!L.gluing_ok) {
            r.molecules = false;
            r.detail += std::string(src ? "source" : "target") + " layering fails; ";
        }
        if (!L.order_ok) {
            r.layering_order = false;
            r.detail += "lambda order contradicts strings; ";
        }
    }
    if (d > 1) {
        FaceSet s = bso(p, U, d - 1), t = bta(p, U, d - 1);
        if (bso(p, t, d - 2) != bso(p, s, d - 2) || bta(p, s, d - 2) != bta(p, t, d - 2)) {
            r.globular = false;
            r.detail += "globular identities fail; ";
        }
    }
    for (int k = 0; k < d; ++k) {
        FaceSet lhs = bso(p, U, k) & bta(p, U, k);
        FaceSet rhs = bso(p, U, k - 1) | bta(p, U, k - 1);
        if (lhs != rhs) {
            r.intersect = false;
            r.detail += "boundary intersection fails at k=" + std::to_string(k) + "; ";
        }
    }
    return r;
}

inline RdcVerdict rdc_check(const FramedPolytope& fp)
{
    fp.require_admissible();
    auto p = poset_orientation(fp);
    RdcVerdict v;
    const auto& lat = fp.lattice();
    for (std::size_t f = 1; f < lat.size(); ++f) {
        if (lat.faces[f].dim < 1)
            continue;
        auto r = rdc_face(fp, p, static_cast<int>(f));
        v.ok = v.ok && r.ok();
        v.faces.push_back(std::move(r));
    }
    return v;
}

} // namespace polyframe
