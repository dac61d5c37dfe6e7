#include "polyframe/fixtures.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace polyframe;

namespace {

PointConfig pts(std::vector<RVec> p)
{
    PointConfig c;
    c.dim = p.empty() ? 0 : p[0].size();
    c.points = std::move(p);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        c.labels.push_back(std::to_string(i + 1));
    return c;
}

// i is a vertex iff some hyperplane through d other points (or a shifted copy) separates it;
// brute force over all hyperplanes spanned by d of the other points.
bool vertex_by_hyperplanes(const PointConfig& c, std::size_t i)
{
    std::size_t d = c.dim, n = c.size();
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
        if (j != i)
            others.push_back(j);
    // normals from d-subsets of differences of the other points
    std::vector<RVec> normals;
    std::vector<bool> pick(others.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(d, others.size())), true);
    do {
        std::vector<RVec> sel;
        for (std::size_t t = 0; t < others.size(); ++t)
            if (pick[t])
                sel.push_back(c.points[others[t]]);
        if (sel.size() < d)
            continue;
        RMat m(d - 1, d);
        for (std::size_t r = 1; r < d; ++r)
            for (std::size_t k = 0; k < d; ++k)
                m(r - 1, k) = sel[r][k] - sel[0][k];
        for (const auto& nv : nullspace(m))
            normals.push_back(nv);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    for (const auto& nv : normals)
        for (int s : {1, -1}) {
            Rat me = dot(nv, c.points[i]) * s;
            bool sep = std::all_of(others.begin(), others.end(), [&](std::size_t j) { return dot(nv, c.points[j]) * s < me; });
            if (sep)
                return true;
        }
    return false;
}

} // namespace

TEST_CASE("assert_vertices")
{
    CHECK_NOTHROW(assert_vertices(make_family({Family::Simplex, 0, 2, {}})));
    auto sq = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {Rat(1, 2), Rat(1, 2)}});
    CHECK_THROWS_AS(assert_vertices(sq), InputError);
    CHECK_NOTHROW(assert_vertices(fixtures::p5()));
}

TEST_CASE("vertex LP agrees with hyperplane enumeration on random 3-polytopes")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> u(-4, 4);
    for (int it = 0; it < 20; ++it) {
        std::set<RVec> s;
        while (s.size() < 9)
            s.insert({u(rng), u(rng), u(rng)});
        auto c = pts({s.begin(), s.end()});
        if (affine_dim(c.points) < 3)
            continue;
        auto hv = hull_vertex_indices(c.points);
        std::set<int> hs(hv.begin(), hv.end());
        for (std::size_t i = 0; i < c.size(); ++i)
            CHECK(static_cast<bool>(hs.count(static_cast<int>(i))) == vertex_by_hyperplanes(c, i));
    }
}

TEST_CASE("facets")
{
    CHECK(facets(make_family({Family::Simplex, 0, 2, {}})).size() == 3);
    CHECK(facets(make_family({Family::Cross, 0, 3, {}})).size() == 8);
    auto f = facets(make_family({Family::CyclicPolytope, 6, 4, {}}));
    CHECK(std::find(f.begin(), f.end(), VSet{0, 1, 2, 3}) != f.end());
}

TEST_CASE("face lattice counts")
{
    auto seg = pts({{0}, {1}});
    CHECK(face_lattice(seg).size() == 4);
    auto cube = face_lattice(make_family({Family::Cube, 0, 3, {}}));
    CHECK(cube.size() == 28);
    CHECK(cube.of_dim(0).size() == 8);
    CHECK(cube.of_dim(1).size() == 12);
    CHECK(cube.of_dim(2).size() == 6);
    CHECK(face_lattice(fixtures::p5()).size() == 64);
    CHECK(face_lattice(make_family({Family::Cube, 0, 2, {}})).size() == 10);
    CHECK(cube[cube.top()].dim == 3);
    CHECK(cube[0].verts.empty());
}

TEST_CASE("families")
{
    auto s = make_family({Family::Simplex, 0, 2, {}});
    CHECK(s.dim == 3);
    CHECK(s.points[1] == RVec{0, 1, 0});
    auto c = make_family({Family::CyclicPolytope, 6, 4, {}});
    CHECK(c.points[2] == RVec{3, 9, 27, 81});
    auto z = make_family({Family::CyclicCube, 0, 2, {}});
    REQUIRE(z.size() == 4);
    std::set<RVec> zv(z.points.begin(), z.points.end());
    std::set<RVec> want{{0, 0}, {1, 1}, {1, 2}, {2, 3}};
    CHECK(zv == want);
}

TEST_CASE("Gale evenness rules match the geometric classification")
{
    for (int d = 2; d <= 4; ++d)
        for (int n = d + 1; n <= 7; ++n) {
            CHECK(gale_rule_mismatches(Family::CyclicPolytope, n, d) == 0);
            CHECK(gale_rule_mismatches(Family::CyclicZonotope, n, d) == 0);
        }
    // C(3,2): the chord {1,3} is the only target
    auto rules = combinatorial_faces(Family::CyclicPolytope, 3, 2);
    for (const auto& r : rules)
        CHECK(r.source == (r.L != VSet{1, 3}));
}

TEST_CASE("slices")
{
    auto seg = pts({{0}, {2}});
    auto p = slice(seg, {1}, 1);
    REQUIRE(p.size() == 1);
    CHECK(p.points[0] == RVec{1});

    auto cube = make_family({Family::Cube, 0, 3, {}});
    auto t = slice(cube, {1, 1, 1}, Rat(1, 2));
    std::set<RVec> got(t.points.begin(), t.points.end());
    std::set<RVec> want{{Rat(1, 2), 0, 0}, {0, Rat(1, 2), 0}, {0, 0, Rat(1, 2)}};
    CHECK(got == want);

    // near the minimal vertex of Z(3): a triangle on the three generators
    auto z = make_family({Family::CyclicCube, 0, 3, {}});
    auto tri = slice(z, {1, 0, 0}, Rat(1, 2));
    CHECK(tri.size() == 3);
    CHECK(affine_dim(tri.points) == 2);
    CHECK_THROWS_AS(slice(cube, {1, 0, 0}, 1), InputError);
}

TEST_CASE("volumes")
{
    auto cube = make_family({Family::Cube, 0, 3, {}});
    CHECK(hull_nvolume(cube.points) == 6);  // d! * vol
    auto z = make_family({Family::CyclicZonotope, 4, 2, {}});
    // sum over pairs of |det(xi_i, xi_j)| = |j - i|
    Rat expect = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            expect += (j - i) * 2;
    CHECK(hull_nvolume(z.points) == expect);
}
