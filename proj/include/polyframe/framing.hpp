#pragma once

#include "polytope.hpp"

#include <memory>
#include <mutex>

namespace polyframe {

class Frame {
public:
    Frame() = default;

    // Columns of m are v_1, ..., v_d.
    explicit Frame(RMat m) : m_(std::move(m))
    {
        if (m_.rows() != m_.cols())
            throw InputError("frame matrix must be square");
        if (det_sign(m_) == 0)
            throw InputError("frame vectors are linearly dependent");
        inv_ = inverse(m_);
    }

    static Frame from_vectors(const std::vector<RVec>& v)
    {
        return Frame(RMat::from_columns(v, v.empty() ? 0 : v[0].size()));
    }

    static Frame canonical(std::size_t d) { return Frame(RMat::identity(d)); }

    // (e_1, -e_2, e_3, ...)
    static Frame alternating(std::size_t d)
    {
        RMat m = RMat::identity(d);
        for (std::size_t i = 1; i < d; i += 2)
            m(i, i) = -1;
        return Frame(m);
    }

    std::size_t dim() const { return m_.rows(); }
    const RMat& matrix() const { return m_; }
    const RMat& inverse_matrix() const { return inv_; }
    RVec vec(std::size_t i) const { return m_.col(i); }
    RVec coords(const RVec& x) const { return inv_ * x; }

    friend bool operator==(const Frame& a, const Frame& b) { return a.m_ == b.m_; }

private:
    RMat m_, inv_;
};

inline PointConfig frame_coords(const PointConfig& cfg, const Frame& frame)
{
    if (frame.dim() != cfg.dim)
        throw InputError("frame dimension differs from ambient dimension");
    PointConfig out = cfg;
    for (auto& p : out.points)
        p = frame.coords(p);
    return out;
}

struct Admissibility {
    bool ok = true;
    int face = -1;  // offending face
    int k = -1;
};

// Boundary, source and target of a face at one level; face indices.
struct ST {
    std::vector<int> bd, so, ta;
};

// Per nonempty face of dim >= 1 the source/target partition of its facets.
struct FOrientation {
    std::vector<std::vector<int>> so, ta;
    bool grounded = true;

    friend bool operator==(const FOrientation& a, const FOrientation& b) { return a.so == b.so && a.ta == b.ta; }
};

inline bool f_orientation_equal(const FOrientation& a, const FOrientation& b) { return a == b; }

class FramedPolytope {
public:
    FramedPolytope(PointConfig cfg, Frame frame)
        : cfg_(std::move(cfg)), frame_(std::move(frame)), lat_(face_lattice(cfg_))
    {
        if (frame_.dim() != cfg_.dim)
            throw InputError("frame dimension differs from ambient dimension");
        for (const auto& p : cfg_.points)
            w_.push_back(frame_.coords(p));
        basis_.resize(lat_.size());
        for (std::size_t f = 1; f < lat_.size(); ++f)
            basis_[f] = compute_affine_basis(static_cast<int>(f));
        adm_ = compute_admissibility();
    }

    const PointConfig& cfg() const { return cfg_; }
    const Frame& frame() const { return frame_; }
    const FaceLattice& lattice() const { return lat_; }
    int dim() const { return lat_.dim(); }
    int top() const { return lat_.top(); }

    // Frame coordinates of vertex v.
    const RVec& coords(int v) const { return w_[static_cast<std::size_t>(v)]; }
    const std::vector<RVec>& coords() const { return w_; }

    // First k frame coordinates of vertex v.
    RVec proj(int v, int k) const
    {
        const RVec& w = coords(v);
        return RVec(w.begin(), w.begin() + k);
    }

    const Admissibility& admissibility() const { return adm_; }
    bool admissible() const { return adm_.ok; }

    // Lexicographically first affinely independent subset of the vertices of F.
    const VSet& affine_basis(int F) const { return basis_[static_cast<std::size_t>(F)]; }

    // sign det of [1 ... 1; pi_k(w_{i_0}) ... pi_k(w_{i_k})] in the given order.
    int chi(int k, const VSet& idx) const
    {
        VSet s = idx;
        int par = 1;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] > s[j])
                    par = -par;
        std::sort(s.begin(), s.end());
        return par * chi_sorted(k, s);
    }

    int chi_sorted(int k, const VSet& s) const
    {
        if (static_cast<int>(s.size()) != k + 1)
            throw InputError("chi: tuple size must be k+1");
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->chi.find({k, s});
            if (it != cache_->chi.end())
                return it->second;
        }
        RMat m(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1));
        for (std::size_t j = 0; j < s.size(); ++j) {
            m(0, j) = 1;
            for (int i = 0; i < k; ++i)
                m(static_cast<std::size_t>(i + 1), j) = coords(s[j])[static_cast<std::size_t>(i)];
        }
        int r = det_sign(m);
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->chi.emplace(std::make_pair(k, s), r);
        return r;
    }

    // bd_k(F), so_k(F), ta_k(F) from the sign of the explicit determinants.
    const ST& st(int F, int k) const
    {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->st.find({F, k});
            if (it != cache_->st.end())
                return it->second;
        }
        ST r = compute_st(F, k);
        std::lock_guard<std::mutex> lock(cache_->mu);
        return cache_->st.emplace(std::make_pair(F, k), std::move(r)).first->second;
    }

    // Source/target partition of the facets of F via normal covectors of pi_k(E) in pi_k(F).
    ST face_source_target(int F) const
    {
        require_admissible();
        const Face& f = lat_[F];
        int m = f.dim;
        if (m < 1)
            throw InputError("face_source_target: face must have dimension >= 1");
        ST r;
        for (int E : lat_.below[static_cast<std::size_t>(F)]) {
            const Face& e = lat_[E];
            RVec n;
            if (m == 1) {
                n = RVec{1};
            } else {
                RMat diff(e.verts.size() - 1, static_cast<std::size_t>(m));
                RVec base = proj(e.verts[0], m);
                for (std::size_t i = 1; i < e.verts.size(); ++i) {
                    RVec d = sub(proj(e.verts[i], m), base);
                    for (int j = 0; j < m; ++j)
                        diff(i - 1, static_cast<std::size_t>(j)) = d[static_cast<std::size_t>(j)];
                }
                auto ns = nullspace(diff);
                if (ns.size() != 1)
                    throw InternalError("face_source_target: projected facet is degenerate");
                n = ns[0];
            }
            // normalise: first nonzero coordinate +-1, then orient outward
            for (const auto& x : n)
                if (x != 0) {
                    n = scale(1 / abs(x), n);
                    break;
                }
            int q = -1;
            for (int v : f.verts)
                if (!std::binary_search(e.verts.begin(), e.verts.end(), v)) {
                    q = v;
                    break;
                }
            Rat side = dot(n, sub(proj(q, m), proj(e.verts[0], m)));
            if (side == 0)
                throw InternalError("face_source_target: vertex on facet hyperplane");
            if (side > 0)
                n = scale(-1, n);
            r.bd.push_back(E);
            (n[static_cast<std::size_t>(m - 1)] < 0 ? r.so : r.ta).push_back(E);
        }
        return r;
    }

    void require_admissible() const
    {
        if (!adm_.ok)
            throw InputError("frame is not admissible: face " + face_label(adm_.face) + " degenerates under pi_" +
                             std::to_string(adm_.k));
    }

    std::string face_label(int F) const
    {
        std::string s = "[";
        const auto& v = lat_[F].verts;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + cfg_.labels[static_cast<std::size_t>(v[i])];
        return s + "]";
    }

private:
    VSet compute_affine_basis(int F) const
    {
        VSet b;
        std::vector<RVec> pts;
        for (int v : lat_[F].verts) {
            pts.push_back(cfg_.points[static_cast<std::size_t>(v)]);
            if (affine_dim(pts) == static_cast<int>(pts.size()) - 1)
                b.push_back(v);
            else
                pts.pop_back();
        }
        return b;
    }

    Admissibility compute_admissibility() const
    {
        for (std::size_t f = 1; f < lat_.size(); ++f) {
            int k = lat_.faces[f].dim;
            if (k < 1)
                continue;
            if (chi_sorted(k, basis_[f]) == 0)
                return {false, static_cast<int>(f), k};
        }
        return {};
    }

    ST compute_st(int F, int k) const
    {
        require_admissible();
        const Face& f = lat_[F];
        if (k < 0 || k >= f.dim)
            throw InputError("st: need 0 <= k < dim F");
        ST r;
        for (int E : lat_.subfaces(F, k)) {
            const VSet& p = affine_basis(E);
            int eq2 = chi_sorted(k, p);
            if (eq2 == 0)
                throw InternalError("st: zero determinant for an admissible frame");
            int s = 0;
            bool boundary = true;
            const VSet& ev = lat_[E].verts;
            for (int q : f.verts) {
                if (std::binary_search(ev.begin(), ev.end(), q))
                    continue;
                VSet t = p;
                auto pos = std::lower_bound(t.begin(), t.end(), q);
                int j = static_cast<int>(pos - t.begin());
                t.insert(pos, q);
                int v = chi_sorted(k + 1, t);
                if ((k + 1 - j) % 2)
                    v = -v;
                if (v == 0 || (s != 0 && v != s)) {
                    boundary = false;
                    break;
                }
                s = v;
            }
            if (!boundary)
                continue;
            r.bd.push_back(E);
            (s == eq2 ? r.so : r.ta).push_back(E);
        }
        return r;
    }

    PointConfig cfg_;
    Frame frame_;
    FaceLattice lat_;
    std::vector<RVec> w_;
    std::vector<VSet> basis_;
    Admissibility adm_;
    // Compute-once memo tables; copies of a framed polytope share them.
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, VSet>, int> chi;
        std::map<std::pair<int, int>, ST> st;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline Admissibility is_admissible(const FramedPolytope& fp) { return fp.admissibility(); }

inline ST k_boundary(const FramedPolytope& fp, int F, int k) { return fp.st(F, k); }
inline std::vector<int> k_source(const FramedPolytope& fp, int F, int k) { return fp.st(F, k).so; }
inline std::vector<int> k_target(const FramedPolytope& fp, int F, int k) { return fp.st(F, k).ta; }
inline ST face_source_target(const FramedPolytope& fp, int F) { return fp.face_source_target(F); }

inline FOrientation f_orientation(const FramedPolytope& fp)
{
    const auto& lat = fp.lattice();
    FOrientation o;
    o.so.resize(lat.size());
    o.ta.resize(lat.size());
    for (std::size_t f = 1; f < lat.size(); ++f) {
        if (lat.faces[f].dim < 1)
            continue;
        auto r = fp.face_source_target(static_cast<int>(f));
        o.so[f] = std::move(r.so);
        o.ta[f] = std::move(r.ta);
    }
    return o;
}

// ---------------------------------------------------------------------------
// Frame transformations.

// v'_q = lambda_q v_q + sum_{p>q} lower(p,q) v_p
inline Frame lower_triangular(const Frame& f, const std::vector<Rat>& lambda, const RMat& lower)
{
    std::size_t d = f.dim();
    if (lambda.size() != d || lower.rows() != d || lower.cols() != d)
        throw InputError("lower_triangular: coefficient shapes do not match the frame");
    for (const auto& l : lambda)
        if (l <= 0)
            throw InputError("lower_triangular: diagonal coefficients must be positive");
    std::vector<RVec> v;
    for (std::size_t q = 0; q < d; ++q) {
        RVec x = scale(lambda[q], f.vec(q));
        for (std::size_t p = q + 1; p < d; ++p)
            if (lower(p, q) != 0)
                x = add(x, scale(lower(p, q), f.vec(p)));
        v.push_back(x);
    }
    return Frame::from_vectors(v);
}

inline Frame reorient(const Frame& f, const std::vector<int>& signs)
{
    if (signs.size() != f.dim())
        throw InputError("reorient: one sign per frame vector");
    std::vector<RVec> v;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw InputError("reorient: signs must be +1 or -1");
        v.push_back(scale(signs[i], f.vec(i)));
    }
    return Frame::from_vectors(v);
}

// Gram-Schmidt from the last vector to the first, without normalisation.
inline Frame orthogonalize(const Frame& f)
{
    std::size_t d = f.dim();
    std::vector<RVec> v(d);
    for (std::size_t q = d; q-- > 0;) {
        RVec x = f.vec(q);
        for (std::size_t p = q + 1; p < d; ++p)
            x = sub(x, scale(dot(f.vec(q), v[p]) / dot(v[p], v[p]), v[p]));
        v[q] = x;
    }
    return Frame::from_vectors(v);
}

// Scales the i-th frame coordinate of every vertex by eps_i, keeping the frame.
inline FramedPolytope flatten(const FramedPolytope& fp, const std::vector<Rat>& eps)
{
    const Frame& f = fp.frame();
    if (eps.size() != f.dim())
        throw InputError("flatten: one factor per frame vector");
    for (const auto& e : eps)
        if (e <= 0)
            throw InputError("flatten: factors must be positive");
    PointConfig c = fp.cfg();
    for (std::size_t v = 0; v < c.size(); ++v) {
        RVec w = fp.coords(static_cast<int>(v));
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] *= eps[i];
        c.points[v] = f.matrix() * w;
    }
    return FramedPolytope(c, f);
}

// ---------------------------------------------------------------------------

struct SubdivisionVerdict {
    bool ok = true;
    Rat cell_volume, hull_volume;  // k! times volumes
    std::vector<std::pair<int, int>> overlaps;
    std::string detail;
};

// Do the open cells conv(a) and conv(b) (full-dimensional in R^k) meet?
inline bool interiors_meet(const std::vector<RVec>& a, const std::vector<RVec>& b)
{
    std::size_t k = a.empty() ? 0 : a[0].size();
    std::size_t na = a.size(), nb = b.size(), n = na + nb;
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < n; ++i) {
        RVec r(n);
        r[i] = -1;
        cons.push_back({r, Rel::Lt, 0});
    }
    RVec sa(n), sb(n);
    for (std::size_t i = 0; i < na; ++i)
        sa[i] = 1;
    for (std::size_t i = 0; i < nb; ++i)
        sb[na + i] = 1;
    cons.push_back({sa, Rel::Eq, 1});
    cons.push_back({sb, Rel::Eq, 1});
    for (std::size_t c = 0; c < k; ++c) {
        RVec r(n);
        for (std::size_t i = 0; i < na; ++i)
            r[i] = a[i][c];
        for (std::size_t i = 0; i < nb; ++i)
            r[na + i] = -b[i][c];
        cons.push_back({r, Rel::Eq, 0});
    }
    return lp_feasible(cons, n).feasible;
}

// Checks that the cells pi_k(F), F in the k-source (and k-target), tile pi_k(P).
inline SubdivisionVerdict subdivision_check(const FramedPolytope& fp, int k)
{
    fp.require_admissible();
    int d = fp.dim();
    if (k < 0 || k >= d)
        throw InputError("subdivision_check: need 0 <= k < dim P");
    const auto& lat = fp.lattice();
    std::vector<RVec> proj;
    for (std::size_t v = 0; v < fp.cfg().size(); ++v)
        proj.push_back(fp.proj(static_cast<int>(v), k));
    SubdivisionVerdict out;
    out.hull_volume = hull_nvolume(proj);
    const ST& st = fp.st(fp.top(), k);
    for (const auto* cells : {&st.so, &st.ta}) {
        Rat total = 0;
        for (int F : *cells)
            total += k == 0 ? Rat(1) : face_nvolume(lat, F, proj);
        if (cells == &st.so)
            out.cell_volume = total;
        if (total != out.hull_volume) {
            out.ok = false;
            out.detail = std::string(cells == &st.so ? "source" : "target") + " cells cover volume " +
                         to_string(total) + " of " + to_string(out.hull_volume);
        }
        for (std::size_t i = 0; i < cells->size(); ++i)
            for (std::size_t j = i + 1; j < cells->size(); ++j) {
                std::vector<RVec> a, b;
                for (int v : lat[(*cells)[i]].verts)
                    a.push_back(proj[static_cast<std::size_t>(v)]);
                for (int v : lat[(*cells)[j]].verts)
                    b.push_back(proj[static_cast<std::size_t>(v)]);
                if (interiors_meet(a, b)) {
                    out.ok = false;
                    out.overlaps.emplace_back((*cells)[i], (*cells)[j]);
                }
            }
    }
    return out;
}

// Gale-type facet rules of C(n,d) and Z(n,d) against the geometric so/ta of the
// canonically framed polytope. Returns the number of facets classified differently
// (facets missing on either side count too).
inline int gale_rule_mismatches(Family kind, int n, int d)
{
    FramedPolytope fp(make_family({kind, n, d, {}}), Frame::canonical(static_cast<std::size_t>(d)));
    fp.require_admissible();
    const auto& lat = fp.lattice();
    const ST& st = fp.st(fp.top(), d - 1);
    bool zonotope = kind == Family::CyclicZonotope || kind == Family::CyclicCube;
    std::map<std::pair<VSet, VSet>, bool> geometric;
    auto key = [&](int F) {
        const auto& vs = lat[F].verts;
        if (!zonotope) {
            VSet L;
            for (int v : vs)
                L.push_back(std::stoi(fp.cfg().labels[static_cast<std::size_t>(v)]));
            std::sort(L.begin(), L.end());
            return std::make_pair(L, VSet{});
        }
        std::map<int, std::size_t> count;
        for (int v : vs)
            for (int i : parse_subset_label(fp.cfg().labels[static_cast<std::size_t>(v)]))
                ++count[i];
        VSet L, A;
        for (auto [i, c] : count)
            (c == vs.size() ? A : L).push_back(i);
        return std::make_pair(L, A);
    };
    for (int F : st.so)
        geometric[key(F)] = true;
    for (int F : st.ta)
        geometric[key(F)] = false;
    int bad = 0;
    auto rules = combinatorial_faces(kind, n, d);
    for (const auto& r : rules) {
        auto it = geometric.find({r.L, r.A});
        if (it == geometric.end() || it->second != r.source)
            ++bad;
    }
    bad += static_cast<int>(geometric.size()) - static_cast<int>(rules.size());
    return std::abs(bad);
}

} // namespace polyframe
