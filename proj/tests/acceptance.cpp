// Acceptance run: one PASS/FAIL line per criterion with wall time. Exit 0 iff all pass.

#include "polyframe/chirotope.hpp"
#include "polyframe/diagram.hpp"
#include "polyframe/experiment.hpp"
#include "polyframe/fixtures.hpp"
#include "polyframe/molecules.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace polyframe;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void need(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

std::vector<std::string> names(const FramedPolytope& fp, const std::vector<int>& fs)
{
    std::vector<std::string> out;
    for (int F : fs)
        out.push_back(fp.face_label(F));
    return out;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : " ") + x;
    return s;
}

std::vector<std::string> sorted_names(const FramedPolytope& fp, const std::vector<int>& fs)
{
    auto v = names(fp, fs);
    std::sort(v.begin(), v.end());
    return v;
}

Outcome p5_loop()
{
    Outcome o;
    FramedPolytope fp(fixtures::p5(), Frame::canonical(5));
    o.need(fp.admissible(), "P5 not admissible");
    auto c = find_k_loop(fp, 1);
    o.need(c.has_value(), "no 1-loop");
    if (!c)
        return o;
    auto got = names(fp, c->faces);
    std::vector<std::string> want{"[p1,p2,p3]", "[p2,p3,p6]", "[p2,p4,p6]", "[p4,p5,p6]", "[p1,p4,p5]", "[p1,p3,p5]"};
    o.need(got == want, "cycle " + join(got));
    o.need(validate_k_cycle(fp, 1, c->faces), "cycle is not a chain of 1-strings");
    o.note = o.ok ? join(got) : o.note;
    return o;
}

Outcome p4_loop()
{
    Outcome o;
    FramedPolytope fp(fixtures::p4(), Frame::canonical(4));
    o.need(fp.admissible(), "P4 not admissible");
    auto c = find_k_loop(fp, 1);
    o.need(c && c->faces.size() == 6, "no 6-face 1-loop");
    if (c)
        o.need(validate_k_cycle(fp, 1, c->faces), "cycle is not a chain of 1-strings");
    // every facet but [p1,p2,p5,p6] is a 3-target
    const ST& st = fp.st(fp.top(), 3);
    o.need(sorted_names(fp, st.so) == std::vector<std::string>{"[p1,p2,p5,p6]"}, "3-source differs");
    FramedPolytope t(fixtures::p5_truncated(), Frame::canonical(4));
    std::cout << "  info: literal truncation of P5 admissible=" << t.admissible()
              << " has_1_loop=" << (t.admissible() && has_k_loop(t, 1)) << "\n";
    if (o.ok && c)
        o.note = join(names(fp, c->faces));
    return o;
}

Outcome q6_loop()
{
    Outcome o;
    FramedPolytope fp(fixtures::q6(), fixtures::q6_frame());
    o.need(fp.admissible(), "Q6 not admissible");
    auto c = find_k_loop(fp, 2);
    o.need(c.has_value(), "no 2-loop");
    if (!c)
        return o;
    std::vector<std::string> want{"[q0,q1,q2,q5]", "[q0,q1,q4,q5]", "[q0,q1,q3,q4]",
                                  "[q0,q3,q4,q6]", "[q0,q2,q3,q6]", "[q0,q2,q5,q6]"};
    o.need(names(fp, c->faces) == want, "cycle " + join(names(fp, c->faces)));
    const ST& st = fp.st(fp.lattice().index_of({0, 1, 4, 5}), 2);
    o.need(sorted_names(fp, st.so) == std::vector<std::string>{"[q0,q1,q5]"}, "so_2 of [q0,q1,q4,q5]");
    o.need(sorted_names(fp, st.ta) == std::vector<std::string>{"[q0,q1,q4]", "[q0,q4,q5]", "[q1,q4,q5]"},
           "ta_2 of [q0,q1,q4,q5]");
    o.need(!has_k_loop(fp, 0) && !has_k_loop(fp, 4), "unexpected loop at k = 0 or 4");
    if (o.ok)
        o.note = join(names(fp, c->faces));
    return o;
}

Outcome cross_polytope()
{
    Outcome o;
    FramedPolytope fp(fixtures::cross3(), fixtures::cross3_frame());
    o.need(fp.admissible(), "not admissible");
    auto r = loop_report(fp);
    o.need(r.loop_free(), "has a k-loop");
    o.need(!r.strong.strongly_loop_free, "strongly loop-free");
    auto got = names(fp, r.strong.cycle);
    o.need(got == std::vector<std::string>{"[a,b,c]", "[b,c]", "[c]", "[c,d]", "[c,d,e]", "[a,b,c,d,e,f]"},
           "cycle " + join(got));
    o.need(validate_inhomogeneous_cycle(fp, r.strong.cycle), "cycle does not follow the relation");
    auto v = steiner_check(chains_of(fp));
    o.need(v.loop_free && !v.strongly_loop_free, "diagram verdict differs");
    if (o.ok)
        o.note = join(got);
    return o;
}

Outcome random_polytopes()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    int count = 0;
    for (int it = 0; it < 500; ++it) {
        int d = 2 + it % 3;
        auto fp = random_framed_polytope(rng, d);
        std::string tag = "sample " + std::to_string(it) + " (d=" + std::to_string(d) + ")";
        o.need(!has_k_loop(fp, 0), tag + ": 0-loop");
        o.need(!has_k_loop(fp, d - 2), tag + ": (d-2)-loop");
        auto rep = loop_report(fp);
        if (d <= 3)
            o.need(rep.loop_free(), tag + ": loop in dimension <= 3");
        for (int k = 1; k < d; ++k)
            o.need(subdivision_check(fp, k).ok, tag + ": subdivision at k=" + std::to_string(k));
        auto c = chains_of(fp);
        auto t = atoms(c);
        o.need(is_unital(c, t), tag + ": not unital");
        const auto& lat = fp.lattice();
        for (std::size_t f = 1; f < lat.size(); ++f) {
            int n = lat.faces[f].dim;
            int b = c.at(fp.face_label(static_cast<int>(f)));
            for (int k = 0; k < n; ++k) {
                const ST& st = fp.st(static_cast<int>(f), k);
                Chain so, ta;
                for (int E : st.so)
                    chain_add(so, c.at(fp.face_label(E)), 1);
                for (int E : st.ta)
                    chain_add(ta, c.at(fp.face_label(E)), 1);
                o.need(atom(c, t, b, k, false) == so && atom(c, t, b, k, true) == ta,
                       tag + ": atom differs from sum of k-sources/targets");
            }
        }
        auto v = steiner_check(c);
        o.need(v.loop_free == rep.loop_free(), tag + ": loop verdicts differ");
        o.need(v.strongly_loop_free == rep.strong.strongly_loop_free, tag + ": strong verdicts differ");
        ++count;
    }
    if (o.ok)
        o.note = std::to_string(count) + " polytopes";
    return o;
}

Outcome orientals()
{
    Outcome o;
    for (int d = 1; d <= 6; ++d) {
        auto v = oriental_verify("simplex", d);
        o.need(v.iso, "simplex d=" + std::to_string(d) + ": " + v.why);
        o.need(v.strongly_loop_free, "simplex d=" + std::to_string(d) + " has a loop");
    }
    for (int d = 1; d <= 4; ++d) {
        auto v = oriental_verify("cube", d);
        o.need(v.iso, "cube d=" + std::to_string(d) + ": " + v.why);
        o.need(v.strongly_loop_free, "cube d=" + std::to_string(d) + " has a loop");
    }
    int cases = 0;
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= 8; ++n) {
            for (auto kind : {Family::CyclicPolytope, Family::CyclicZonotope}) {
                int m = gale_rule_mismatches(kind, n, d);
                o.need(m == 0, std::string(kind == Family::CyclicPolytope ? "C(" : "Z(") + std::to_string(n) + "," +
                                   std::to_string(d) + "): " + std::to_string(m) + " facets misclassified");
                ++cases;
            }
        }
    if (o.ok)
        o.note = "simplex 1..6, cube 1..4, " + std::to_string(cases) + " facet-rule cases";
    return o;
}

Outcome bruhat()
{
    Outcome o;
    auto fact = [](int n) {
        std::size_t r = 1;
        for (int i = 2; i <= n; ++i)
            r *= static_cast<std::size_t>(i);
        return r;
    };
    std::string sizes;
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= std::min(3, n - 1); ++d) {
            auto B = enumerate_bruhat(n, d);
            std::size_t s = B.elements.size();
            sizes += " B(" + std::to_string(n) + "," + std::to_string(d) + ")=" + std::to_string(s);
            if (d == 1)
                o.need(s == fact(n), "B(n,1) != n!");
            if (d == n - 1)
                o.need(s == 2, "B(n,n-1) != 2");
            if (d == n - 2)
                o.need(s == 2 * static_cast<std::size_t>(n), "B(n,n-2) != 2n");
        }
    o.need(enumerate_bruhat(5, 2).elements.size() == 62, "B(5,2) != 62");
    for (auto [n, d] : {std::pair{4, 2}, {5, 2}}) {
        auto B = enumerate_bruhat(n, d);
        std::set<Cubillage> images;
        for (auto U : B.elements) {
            auto cells = phi_to_cubillage(B, U);
            o.need(tiling_check(n, d, cells).ok, "a cubillage of Z(" + std::to_string(n) + "," + std::to_string(d) + ") does not tile");
            images.insert(cells);
        }
        o.need(images.size() == B.elements.size(), "phi is not injective");
        auto [so, ta] = zonotope_source_target_cubes(n, d);
        o.need(phi_to_cubillage(B, 0) == so, "phi(empty) is not the d-source");
        o.need(phi_to_cubillage(B, B.elements.back()) == ta, "phi(full) is not the d-target");
    }
    if (o.ok)
        o.note = sizes.substr(1);
    return o;
}

Outcome flag_roundtrip()
{
    Outcome o;
    std::mt19937_64 rng(555);
    int done = 0;
    while (done < 100) {
        int d = 1 + done % 5;
        auto fp = random_framed_polytope(rng, d, 0);
        if (!is_simplex(fp))
            continue;
        auto f = flag_chirotope(fp);
        o.need(f.uniform(), "flag chirotope not uniform");
        o.need(f_orientation_roundtrip(fp), "f-orientation differs from the flag rule");
        ++done;
    }
    if (o.ok)
        o.note = "100 simplices, d <= 5";
    return o;
}

Outcome rdc()
{
    Outcome o;
    int faces = 0;
    for (const auto& nf : fixtures::corpus()) {
        FramedPolytope fp(nf.cfg, nf.frame);
        auto v = rdc_check(fp);
        for (const auto& r : v.faces)
            o.need(r.ok(), nf.name + " face " + fp.face_label(r.face) + ": " + r.detail);
        faces += static_cast<int>(v.faces.size());
        for (int k = 1; k < fp.dim(); ++k)
            for (bool src : {true, false}) {
                auto L = layering(fp, k, src);
                o.need(L.gluing_ok, nf.name + ": layering does not glue at k=" + std::to_string(k));
                o.need(L.order_ok, nf.name + ": layering order contradicts strings at k=" + std::to_string(k));
            }
    }
    if (o.ok)
        o.note = std::to_string(fixtures::corpus().size()) + " polytopes, " + std::to_string(faces) + " faces";
    return o;
}

Outcome experiment()
{
    Outcome o;
    ExperimentSpec s;
    s.kind = ExperimentKind::GaussianSimplex;
    s.dim_lo = 3;
    s.dim_hi = 9;
    s.samples = 200;
    s.seed = 42;
    auto r = run_experiment(s);
    std::string line;
    for (const auto& d : r.dims) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " d=%d:%d/%d", d.dim, d.with_loop, d.samples);
        line += buf;
    }
    const auto& d3 = r.dims.front();
    const auto& d4 = r.dims[1];
    const auto& d9 = r.dims.back();
    o.need(d3.with_loop == 0, "dimension 3 control has loops");
    o.need(d9.fraction() > d4.fraction(), "fraction at 9 does not exceed fraction at 4");
    for (const auto& d : r.dims)
        o.need(d.loops_by_k.empty() || (d.loops_by_k.front() == 0 && d.loops_by_k.back() == 0),
               "0-loop or (d-2)-loop at d=" + std::to_string(d.dim));

    // rerun a slice with other thread counts
    ExperimentSpec a = s, b = s;
    a.samples = b.samples = 25;
    a.threads = 1;
    b.threads = 4;
    auto ra = run_experiment(a), rb = run_experiment(b);
    for (std::size_t i = 0; i < ra.dims.size(); ++i)
        o.need(ra.dims[i].with_loop == rb.dims[i].with_loop && ra.dims[i].loops_by_k == rb.dims[i].loops_by_k,
               "rerun differs at d=" + std::to_string(ra.dims[i].dim));
    if (o.ok)
        o.note = line.substr(1);
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"P5 carries the printed 1-loop", p5_loop},
        {"P4 carries a 1-loop, facet 3-sources", p4_loop},
        {"Q6 carries the printed 2-loop, so/ta lists", q6_loop},
        {"cross-polytope loop-free, inhomogeneous loop", cross_polytope},
        {"random 2-4 polytopes: structural checks", random_polytopes},
        {"orientals and facet rules", orientals},
        {"higher Bruhat orders and cubillages", bruhat},
        {"flag chirotope round trip", flag_roundtrip},
        {"regular directed complex axioms", rdc},
        {"loop frequency grows with dimension", experiment},
    };
    int failed = 0;
    auto total0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char head[32];
        std::snprintf(head, sizeof head, "%s [%2zu] ", r.ok ? "PASS" : "FAIL", i + 1);
        char tail[32];
        std::snprintf(tail, sizeof tail, " (%.2fs)", secs);
        std::cout << head << criteria[i].first << tail << (r.note.empty() ? "" : " - " + r.note) << std::endl;
        failed += !r.ok;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total0).count();
    std::printf("%zu/%zu passed in %.1fs\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size(), total);
    return failed ? 1 : 0;
}
