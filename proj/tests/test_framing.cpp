#include "polyframe/experiment.hpp"
#include "polyframe/fixtures.hpp"

#include <catch_amalgamated.hpp>

using namespace polyframe;

namespace {

PointConfig square()
{
    return make_family({Family::Cube, 0, 2, {}});
}

std::vector<std::string> labels(const FramedPolytope& fp, const std::vector<int>& fs)
{
    std::vector<std::string> out;
    for (int F : fs)
        out.push_back(fp.face_label(F));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("frame coordinates")
{
    auto sq = square();
    CHECK(frame_coords(sq, Frame::canonical(2)).points == sq.points);
    Frame swap(RMat::from_rows({{0, 1}, {1, 0}}));
    auto w = frame_coords(sq, swap);
    for (std::size_t i = 0; i < sq.size(); ++i)
        CHECK(w.points[i] == RVec{sq.points[i][1], sq.points[i][0]});

    // one Q6 column by hand: B w = q
    auto q = fixtures::q6();
    Frame B = fixtures::q6_frame();
    auto wq = frame_coords(q, B);
    for (std::size_t v = 0; v < q.size(); ++v)
        CHECK(B.matrix() * wq.points[v] == q.points[v]);
}

TEST_CASE("admissibility")
{
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= d + 3; ++n)
            CHECK(FramedPolytope(make_family({Family::CyclicPolytope, n, d, {}}), Frame::canonical(static_cast<std::size_t>(d)))
                      .admissible());
    CHECK(FramedPolytope(fixtures::p5(), Frame::canonical(5)).admissible());

    FramedPolytope sq(square(), Frame::canonical(2));
    REQUIRE_FALSE(sq.admissible());
    CHECK(sq.lattice()[sq.admissibility().face].dim == 1);
    CHECK(sq.admissibility().k == 1);
    CHECK_THROWS_AS(sq.require_admissible(), InputError);
}

TEST_CASE("k-sources and targets of the fixtures")
{
    FramedPolytope p5(fixtures::p5(), Frame::canonical(5));
    const auto& lat = p5.lattice();
    int e23 = lat.index_of({1, 2});
    auto has = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    CHECK(has(p5.st(lat.index_of({0, 1, 2}), 1).ta, e23));
    CHECK(has(p5.st(lat.index_of({1, 2, 5}), 1).so, e23));

    // every face has a single 0-source and a single 0-target vertex
    for (std::size_t f = 1; f < lat.size(); ++f)
        if (lat.faces[f].dim >= 1) {
            CHECK(p5.st(static_cast<int>(f), 0).so.size() == 1);
            CHECK(p5.st(static_cast<int>(f), 0).ta.size() == 1);
        }

    FramedPolytope q6(fixtures::q6(), fixtures::q6_frame());
    REQUIRE(q6.admissible());
    const ST& st = q6.st(q6.lattice().index_of({0, 1, 4, 5}), 2);
    CHECK(labels(q6, st.so) == std::vector<std::string>{"[q0,q1,q5]"});
    CHECK(labels(q6, st.ta) == std::vector<std::string>{"[q0,q1,q4]", "[q0,q4,q5]", "[q1,q4,q5]"});
}

TEST_CASE("segment and cyclic simplex facet rules")
{
    PointConfig seg;
    seg.dim = 1;
    seg.points = {{3}, {-2}};
    seg.labels = {"r", "l"};
    FramedPolytope fp(seg, Frame::canonical(1));
    auto st = face_source_target(fp, fp.top());
    CHECK(labels(fp, st.so) == std::vector<std::string>{"[l]"});

    for (int d = 2; d <= 5; ++d) {
        FramedPolytope c(make_family({Family::CyclicSimplex, 0, d, {}}), Frame::canonical(static_cast<std::size_t>(d)));
        const auto& lat = c.lattice();
        for (std::size_t f = 1; f < lat.size(); ++f) {
            if (lat.faces[f].dim < 1)
                continue;
            auto r = c.face_source_target(static_cast<int>(f));
            VSet L;
            for (int v : lat.faces[f].verts)
                L.push_back(v + 1);
            for (int E : r.bd) {
                int l = -1;
                for (int v : lat.faces[f].verts)
                    if (!std::binary_search(lat[E].verts.begin(), lat[E].verts.end(), v))
                        l = v + 1;
                bool target = std::find(r.ta.begin(), r.ta.end(), E) != r.ta.end();
                CHECK(target == simplex_facet_is_target(L, l));
            }
        }
    }
}

TEST_CASE("determinant route and normal route agree on random polytopes")
{
    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        auto fp = random_framed_polytope(rng, 3 + it % 2);
        const auto& lat = fp.lattice();
        for (std::size_t f = 1; f < lat.size(); ++f) {
            int m = lat.faces[f].dim;
            if (m < 1)
                continue;
            auto a = fp.face_source_target(static_cast<int>(f));
            const ST& b = fp.st(static_cast<int>(f), m - 1);
            CHECK(sorted(a.so) == sorted(b.so));
            CHECK(sorted(a.ta) == sorted(b.ta));
        }
    }
}

TEST_CASE("frame transformations keep the f-orientation")
{
    // (v, w) and (v', w) with v' = v + w on the hexagon
    Frame vw = Frame::canonical(2);
    Frame v2w = Frame::from_vectors({{1, 1}, {0, 1}});
    FramedPolytope a(fixtures::hexagon(), vw), b(fixtures::hexagon(), v2w);
    REQUIRE(a.admissible());
    REQUIRE(b.admissible());
    CHECK(f_orientation_equal(f_orientation(a), f_orientation(a)));
    CHECK(f_orientation(a) == f_orientation(b));

    RMat lower(2, 2);
    lower(1, 0) = -3;
    FramedPolytope c(fixtures::hexagon(), lower_triangular(vw, {2, Rat(1, 3)}, lower));
    REQUIRE(c.admissible());
    CHECK(f_orientation(a) == f_orientation(c));

    std::mt19937_64 rng(23);
    for (int it = 0; it < 30; ++it) {
        auto fp = random_framed_polytope(rng, 2 + it % 3, 0);
        FramedPolytope o(fp.cfg(), orthogonalize(fp.frame()));
        REQUIRE(o.admissible());
        CHECK(f_orientation(o) == f_orientation(fp));
    }

    auto alt = reorient(Frame::canonical(4), {1, -1, 1, -1});
    CHECK(alt == Frame::alternating(4));
    CHECK_THROWS_AS(lower_triangular(vw, {1, 0}, RMat(2, 2)), InputError);
}

TEST_CASE("flattening makes two hexagon frames agree")
{
    Frame e = Frame::canonical(2);
    Frame sheared = Frame::from_vectors({{1, 0}, {1, 1}});
    FramedPolytope x(fixtures::hexagon(), e), y(fixtures::hexagon(), sheared);
    REQUIRE(x.admissible());
    REQUIRE(y.admissible());
    CHECK_FALSE(f_orientation(x) == f_orientation(y));
    auto flat = flatten(x, {1, Rat(1, 4)});
    FramedPolytope y2(flat.cfg(), sheared);
    REQUIRE(y2.admissible());
    CHECK(f_orientation(flat) == f_orientation(y2));
}

TEST_CASE("subdivisions by k-sources and k-targets")
{
    for (const auto& nf : fixtures::corpus()) {
        FramedPolytope fp(nf.cfg, nf.frame);
        for (int k = 1; k < fp.dim(); ++k) {
            INFO(nf.name << " k=" << k);
            CHECK(subdivision_check(fp, k).ok);
        }
    }
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        auto fp = random_framed_polytope(rng, 4, 2);
        for (int k = 1; k <= 3; ++k)
            CHECK(subdivision_check(fp, k).ok);
    }
}
