#include "polyframe/exact.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace polyframe;

namespace {

Rat cofactor_det(const RMat& m)
{
    std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    Rat s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        RMat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        Rat t = m(0, j) * cofactor_det(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}

RMat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> u(lo, hi);
    RMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = u(rng);
    return m;
}

} // namespace

TEST_CASE("det_sign basics")
{
    CHECK(det_sign(RMat::identity(4)) == 1);
    RMat swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(det_sign(swap) == -1);
    CHECK(det_sign(RMat(3, 3)) == 0);
}

TEST_CASE("det matches cofactor expansion on random 5x5")
{
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        RMat m = random_matrix(rng, 5, 5, -3, 3);
        Rat ref = cofactor_det(m);
        CHECK(det(m) == ref);
        CHECK(det_sign(m) == sgn(ref));
    }
}

TEST_CASE("det with rational entries")
{
    RMat m(2, 2);
    m(0, 0) = Rat(1, 2);
    m(0, 1) = Rat(1, 3);
    m(1, 0) = Rat(1, 4);
    m(1, 1) = Rat(1, 5);
    CHECK(det(m) == Rat(1, 10) - Rat(1, 12));
}

TEST_CASE("rank")
{
    CHECK(rank(RMat(3, 4)) == 0);
    CHECK(rank(RMat::identity(5)) == 5);
    RMat m = RMat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
}

TEST_CASE("solve")
{
    RVec b{3, -1, 2};
    auto x = solve(RMat::identity(3), b);
    REQUIRE(x);
    CHECK(*x == b);
    RMat sing = RMat::from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(solve(sing, RVec{1, 2}));

    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        RMat m = random_matrix(rng, 3, 3, -5, 5);
        if (det_sign(m) == 0)
            continue;
        RVec rhs{Rat(rng() % 7), Rat(1), Rat(-2)};
        auto sol = solve(m, rhs);
        REQUIRE(sol);
        Rat D = det(m);
        for (std::size_t j = 0; j < 3; ++j) {
            RMat mj = m;
            for (std::size_t i = 0; i < 3; ++i)
                mj(i, j) = rhs[i];
            CHECK((*sol)[j] == det(mj) / D);  // Cramer
        }
    }
}

TEST_CASE("nullspace and inverse")
{
    RMat m = RMat::from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(m * v == RVec(2));
    RMat a = RMat::from_rows({{2, 1}, {1, 1}});
    CHECK(a * inverse(a) == RMat::identity(2));
}

TEST_CASE("lp_feasible")
{
    auto empty = lp_feasible({}, 2);
    CHECK(empty.feasible);
    CHECK(empty.witness == RVec(2));

    std::vector<Constraint> bad{{{Rat(-1)}, Rel::Le, Rat(-1)}, {{Rat(1)}, Rel::Le, Rat(0)}};
    CHECK_FALSE(lp_feasible(bad, 1).feasible);

    // 0 < x < 1 strictly, x + y = 3
    std::vector<Constraint> strict{{{Rat(-1), Rat(0)}, Rel::Lt, Rat(0)},
                                   {{Rat(1), Rat(0)}, Rel::Lt, Rat(1)},
                                   {{Rat(1), Rat(1)}, Rel::Eq, Rat(3)}};
    auto r = lp_feasible(strict, 2);
    REQUIRE(r.feasible);
    for (const auto& c : strict)
        CHECK(satisfies(c, r.witness));
    // x < 0 and x > 0
    std::vector<Constraint> none{{{Rat(1)}, Rel::Lt, Rat(0)}, {{Rat(-1)}, Rel::Lt, Rat(0)}};
    CHECK_FALSE(lp_feasible(none, 1).feasible);
}

TEST_CASE("parse_rat")
{
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("abc"), InputError);
}
