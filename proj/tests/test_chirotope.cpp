#include "polyframe/chirotope.hpp"
#include "polyframe/experiment.hpp"
#include "polyframe/fixtures.hpp"

#include <catch_amalgamated.hpp>

using namespace polyframe;

namespace {

// Integer simplex under an integer frame.
FramedPolytope random_framed_simplex(std::mt19937_64& rng, int d)
{
    for (;;) {
        auto fp = random_framed_polytope(rng, d, 0);
        if (is_simplex(fp))
            return fp;
    }
}

} // namespace

TEST_CASE("point chirotopes")
{
    auto tri = chirotope_of_points(std::vector<RVec>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(tri.rank == 3);
    CHECK(tri({0, 1, 2}) == 1);
    CHECK(tri({1, 0, 2}) == -1);
    CHECK(tri({2, 0, 1}) == 1);
    CHECK(tri({0, 0, 2}) == 0);
    CHECK(is_acyclic(tri));
    CHECK_THROWS_AS(tri({0, 1}), InputError);
    CHECK_THROWS_AS(tri({0, 1, 5}), InputError);

    auto line = chirotope_of_points(std::vector<RVec>{{0, 0}, {1, 1}, {2, 2}, {0, 1}});
    CHECK(line({0, 1, 2}) == 0);
    CHECK_FALSE(is_uniform(line));

    // points on the moment curve in increasing order: every sign is +
    auto c = make_family({Family::CyclicPolytope, 7, 3, {}});
    auto mc = chirotope_of_points(c);
    CHECK(is_uniform(mc));
    for (const auto& [t, s] : mc.signs)
        CHECK(s == 1);
}

TEST_CASE("alternation and reorientation")
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> u(-5, 5);
    std::vector<RVec> vs(6, RVec(3));
    for (auto& v : vs)
        for (auto& x : v)
            x = u(rng);
    auto c = chirotope_of_vectors(vs);
    for (const auto& t : index_subsets(6, 3)) {
        VSet s{t[1], t[0], t[2]};
        CHECK(c(s) == -c(t));
        VSet r{t[1], t[2], t[0]};
        CHECK(c(r) == c(t));
    }
    auto flipped = vs;
    flipped[2] = scale(-1, flipped[2]);
    auto f = chirotope_of_vectors(flipped);
    for (const auto& t : index_subsets(6, 3)) {
        bool has2 = std::find(t.begin(), t.end(), 2) != t.end();
        CHECK(f(t) == (has2 ? -c(t) : c(t)));
    }
}

TEST_CASE("flag chirotope determines the f-orientation")
{
    std::mt19937_64 rng(77);
    for (int it = 0; it < 100; ++it) {
        int d = 1 + it % 5;
        auto fp = random_framed_simplex(rng, d);
        auto f = flag_chirotope(fp);
        CHECK(f.levels.size() == static_cast<std::size_t>(d + 1));
        CHECK(f.uniform());
        CHECK(f.acyclic());
        CHECK(f_orientation_roundtrip(fp));
    }
    FramedPolytope sq(make_family({Family::Cube, 0, 2, {}}), Frame::from_vectors({{2, 1}, {1, 3}}));
    CHECK_THROWS_AS(flag_chirotope(sq), InputError);
    // the standard simplex sits in a hyperplane
    FramedPolytope st(make_family({Family::Simplex, 0, 2, {}}), Frame::canonical(3));
    CHECK_FALSE(is_simplex(st));
}

TEST_CASE("cyclic lift")
{
    PointConfig A;
    A.dim = 2;
    A.points = {{0, 0}, {4, 1}, {1, 3}, {-2, 2}, {2, -3}};
    A.labels = {"a", "b", "c", "d", "e"};
    auto L = cyclic_lift(A);
    CHECK(L.cfg.dim == 4);
    CHECK(L.K.size() == 2);
    CHECK(std::is_sorted(L.K.begin(), L.K.end()));
    CHECK(cyclic_lift_verify(A, L));
    FramedPolytope lifted(L.cfg, Frame::canonical(4));
    CHECK(lifted.admissible());
    CHECK(is_simplex(lifted));
    CHECK(flag_chirotope(lifted).uniform());

    // a triangle needs no extra rows
    auto T = cyclic_lift(fixtures::triangle_def());
    CHECK(T.cfg.dim == 2);
    CHECK(T.K.empty());

    std::mt19937 rng(4);
    std::uniform_int_distribution<int> u(-9, 9);
    for (int it = 0; it < 10; ++it) {
        PointConfig B;
        B.dim = 2;
        for (int i = 0; i < 6; ++i) {
            B.points.push_back({u(rng), u(rng)});
            B.labels.push_back("p" + std::to_string(i));
        }
        if (!is_uniform(chirotope_of_points(B.points))) {
            CHECK_THROWS_AS(cyclic_lift(B), InputError);
            continue;
        }
        CHECK(cyclic_lift_verify(B, cyclic_lift(B)));
    }

    PointConfig bad = A;
    bad.points[2] = {8, 2};  // on the line through a and b
    CHECK_THROWS_AS(cyclic_lift(bad), InputError);
}

TEST_CASE("higher Bruhat order sizes")
{
    const std::vector<std::pair<std::pair<int, int>, std::size_t>> known{
        {{2, 1}, 2}, {{3, 1}, 6}, {{4, 1}, 24}, {{5, 1}, 120}, {{4, 2}, 8}, {{5, 2}, 62}, {{5, 3}, 10}, {{6, 2}, 908}};
    for (const auto& [nd, size] : known) {
        auto B = enumerate_bruhat(nd.first, nd.second);
        INFO("n=" << nd.first << " d=" << nd.second);
        CHECK(B.elements.size() == size);
        for (auto U : B.elements)
            CHECK(is_consistent(B.n, B.d, B.ground, U));
    }
    auto B = enumerate_bruhat(4, 2);
    // ground C([4],3); the full set is the unique maximum
    CHECK(B.ground.size() == 4);
    CHECK(std::count(B.elements.begin(), B.elements.end(), std::uint64_t{15}) == 1);
    // a two-element set breaking the packet {123,124,134,234}
    std::uint64_t mid = (1u << 0) | (1u << 3);
    CHECK_FALSE(is_consistent(4, 2, B.ground, mid));
    CHECK_THROWS_AS(enumerate_bruhat(9, 2), InputError);
    CHECK_THROWS_AS(enumerate_bruhat(3, 3), InputError);
}

TEST_CASE("cubillages from the Bruhat order")
{
    for (auto [n, d] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        INFO("n=" << n << " d=" << d);
        auto B = enumerate_bruhat(n, d);
        std::set<Cubillage> images;
        for (auto U : B.elements) {
            auto cells = phi_to_cubillage(B, U);
            auto v = tiling_check(n, d, cells);
            CHECK(v.ok);
            CHECK(v.cells == v.hull);
            CHECK(v.overlaps.empty());
            images.insert(cells);
        }
        CHECK(images.size() == B.elements.size());
        auto [so, ta] = zonotope_source_target_cubes(n, d);
        CHECK(phi_to_cubillage(B, 0) == so);
        CHECK(phi_to_cubillage(B, B.elements.back()) == ta);
    }
}

TEST_CASE("overlapping cells are caught")
{
    auto B = enumerate_bruhat(4, 2);
    auto cells = phi_to_cubillage(B, 0);
    cells[1] = cells[0];
    auto v = tiling_check(4, 2, cells);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.overlaps.empty());
    CHECK(cube_label(Cube{{1, 2}, {4}}) == "({1,2},{4})");
}
