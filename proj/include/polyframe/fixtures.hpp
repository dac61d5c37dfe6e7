#pragma once

#include "framing.hpp"

#include <initializer_list>

namespace polyframe::fixtures {

inline RMat int_matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<RVec> r;
    for (auto row : rows) {
        RVec v;
        for (long x : row)
            v.emplace_back(x);
        r.push_back(v);
    }
    return RMat::from_rows(r);
}

inline std::vector<std::string> prefixed(const std::string& p, int from, int to)
{
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i)
        out.push_back(p + std::to_string(i));
    return out;
}

// A 5-simplex whose canonical frame carries a cellular 1-loop.
inline PointConfig p5()
{
    return PointConfig::from_columns(int_matrix({{-3, -2, -1, 1, 2, 3},
                                                 {-1, 1, 0, 0, 1, -1},
                                                 {-1, 1, 0, 1, -1, 1},
                                                 {0, 0, 1, 1, 0, 0},
                                                 {1, 1, 1, 0, 0, 0}}),
                                     prefixed("p", 1, 6));
}

// The 4-simplex carrying the 1-loop of p5 on its triangles. Its third row differs from
// the truncation of p5 in one entry (p4); see p5_truncated.
inline PointConfig p4()
{
    return PointConfig::from_columns(int_matrix({{-3, -2, -1, 1, 2, 3},
                                                 {-1, 1, 0, 0, 1, -1},
                                                 {-1, 1, 0, 0, -1, 1},
                                                 {0, 0, 1, 1, 0, 0}}),
                                     prefixed("p", 1, 6));
}

// First four coordinates of p5, taken literally.
inline PointConfig p5_truncated()
{
    PointConfig c = p5();
    for (auto& p : c.points)
        p.resize(4);
    c.dim = 4;
    return c;
}

// A 6-simplex with a frame carrying a cellular 2-loop.
inline PointConfig q6()
{
    return PointConfig::from_columns(int_matrix({{0, 10, 0, 0, 7, 2, 3},
                                                 {0, 0, 10, 0, 3, 7, 2},
                                                 {0, 0, 0, 10, 2, 3, 7},
                                                 {1, 1, 1, 0, 1, 0, 0},
                                                 {0, 0, 0, 1, 1, 0, 1},
                                                 {0, 0, 1, 0, 0, 1, 0}}),
                                     prefixed("q", 0, 6));
}

inline Frame q6_frame()
{
    return Frame(int_matrix({{-1, 2, 1, 0, 0, 0},
                             {1, 4, 1, 0, 0, 0},
                             {-1, -1, 1, 0, 0, 0},
                             {0, 0, 0, 1, 0, 0},
                             {0, 0, 0, 1, 1, 0},
                             {0, 0, 0, 1, 1, 1}}));
}

// Octahedron with (a,b,c,d,e,f) = (-e1, e3, -e2, e1, -e3, e2).
inline PointConfig cross3()
{
    return PointConfig::from_columns(int_matrix({{-1, 0, 0, 1, 0, 0},
                                                 {0, 0, -1, 0, 0, 1},
                                                 {0, 1, 0, 0, -1, 0}}),
                                     {"a", "b", "c", "d", "e", "f"});
}

inline Frame cross3_frame()
{
    RMat m = int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    m(0, 1) = Rat(1, 2);
    return Frame(m);
}

// Hexagon a..f with vertices (1,0), (1/2,h), (-1/2,h), (-1,0), (-1/2,-h), (1/2,-h),
// h = 7/8 standing in for sqrt(3)/2.
inline PointConfig hexagon()
{
    Rat h(7, 8), half(1, 2);
    PointConfig c;
    c.dim = 2;
    c.points = {{1, 0}, {half, h}, {-half, h}, {-1, 0}, {-half, -h}, {half, -h}};
    c.labels = {"a", "b", "c", "d", "e", "f"};
    return c;
}

// The 3-polytope with eight vertices and a two-level globe of cells.
inline PointConfig globe()
{
    Rat x(10, 17), y(10, 7), z(5, 6), X(30, 17), Z(5, 3);
    PointConfig c;
    c.dim = 3;
    c.points = {{-x, y, -z}, {x, y, z}, {X, 0, 0}, {x, 0, -Z}, {-x, -y, -z}, {-X, 0, 0}, {-x, 0, Z}, {x, -y, z}};
    c.labels = prefixed("g", 1, 8);
    return c;
}

// Hand-given f-orientation of the hexagon: d+ P = [ab]+[cd]+[ef], edges a->b, c->d, e->f,
// c->b, a->f, e->d. Not induced by any frame; its atom <P>_0^+ = b+d+f is not unital.
inline FOrientation hexagon_not_unital(const FaceLattice& lat)
{
    auto id = [&](VSet v) { return lat.index_of(v); };
    enum { a, b, c, d, e, f };
    FOrientation o;
    o.so.resize(lat.size());
    o.ta.resize(lat.size());
    auto edge = [&](int from, int to) {
        int E = id(VSet{std::min(from, to), std::max(from, to)});
        o.so[static_cast<std::size_t>(E)] = {id({from})};
        o.ta[static_cast<std::size_t>(E)] = {id({to})};
    };
    edge(a, b);
    edge(c, d);
    edge(e, f);
    edge(c, b);
    edge(a, f);
    edge(e, d);
    auto P = static_cast<std::size_t>(lat.top());
    o.ta[P] = {id({a, b}), id({c, d}), id({e, f})};
    o.so[P] = {id({b, c}), id({d, e}), id({a, f})};
    for (auto* v : {&o.ta[P], &o.so[P]})
        std::sort(v->begin(), v->end());
    return o;
}

// Triangle d, e, f at (-1,0), (1,0), (0,7/4); with the canonical frame so(P) = {[d,e]}.
inline PointConfig triangle_def()
{
    PointConfig c;
    c.dim = 2;
    c.points = {{-1, 0}, {1, 0}, {0, Rat(7, 4)}};
    c.labels = {"d", "e", "f"};
    return c;
}

inline Frame frame_from_cols(std::initializer_list<std::initializer_list<long>> rows)
{
    return Frame(int_matrix(rows));
}

struct NamedFramed {
    std::string name;
    PointConfig cfg;
    Frame frame;
};

// Named framed polytopes with admissible frames, used by corpus-wide checks.
inline std::vector<NamedFramed> corpus()
{
    std::vector<NamedFramed> out;
    out.push_back({"p5", p5(), Frame::canonical(5)});
    out.push_back({"p4", p4(), Frame::canonical(4)});
    out.push_back({"q6", q6(), q6_frame()});
    out.push_back({"cross3", cross3(), cross3_frame()});
    out.push_back({"hexagon", hexagon(), Frame::canonical(2)});
    out.push_back({"globe", globe(), Frame::canonical(3)});
    for (int d = 1; d <= 4; ++d)
        out.push_back({"cyclic_simplex_" + std::to_string(d), make_family({Family::CyclicSimplex, 0, d, {}}),
                       Frame::alternating(static_cast<std::size_t>(d))});
    for (int d = 1; d <= 3; ++d)
        out.push_back({"cyclic_cube_" + std::to_string(d), make_family({Family::CyclicCube, 0, d, {}}),
                       Frame::alternating(static_cast<std::size_t>(d))});
    out.push_back({"cyclic_polytope_6_3", make_family({Family::CyclicPolytope, 6, 3, {}}), Frame::canonical(3)});
    out.push_back({"cyclic_zonotope_5_3", make_family({Family::CyclicZonotope, 5, 3, {}}), Frame::canonical(3)});
    return out;
}

} // namespace polyframe::fixtures
