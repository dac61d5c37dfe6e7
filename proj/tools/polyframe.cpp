// polyframe: command-line front end over the library.
// Exit codes: 0 pass, 1 negative verdict, 2 input error.

#include "polyframe/chirotope.hpp"
#include "polyframe/diagram.hpp"
#include "polyframe/experiment.hpp"
#include "polyframe/io.hpp"
#include "polyframe/molecules.hpp"
#include "polyframe/strings.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

using namespace polyframe;
using io::json;

namespace {

struct FramedArgs {
    std::string file;
    std::string frame;
};

void add_framed(CLI::App* sub, FramedArgs& a, bool with_frame = true)
{
    sub->add_option("--file,-f", a.file, "polytope JSON")->required();
    if (with_frame)
        sub->add_option("--frame", a.frame, "canonical | alternating | file:PATH (default: the file's frame, else canonical)");
}

FramedPolytope load_framed(const FramedArgs& a)
{
    auto in = io::framed_from_json(io::read_file(a.file));
    assert_vertices(in.cfg);
    return FramedPolytope(in.cfg, io::resolve_frame(a.frame, in));
}

json labels_of(const FramedPolytope& fp, int F)
{
    json a = json::array();
    for (int v : fp.lattice()[F].verts)
        a.push_back(fp.cfg().labels[static_cast<std::size_t>(v)]);
    return a;
}

json faces_json(const FramedPolytope& fp, const std::vector<int>& fs)
{
    json a = json::array();
    for (int F : fs)
        a.push_back(labels_of(fp, F));
    return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json admissibility_json(const FramedPolytope& fp)
{
    json j;
    j["admissible"] = fp.admissible();
    if (!fp.admissible()) {
        j["face"] = labels_of(fp, fp.admissibility().face);
        j["k"] = fp.admissibility().k;
    }
    return j;
}

int require_admissible(const FramedPolytope& fp)
{
    if (fp.admissible())
        return 0;
    json j = admissibility_json(fp);
    std::cerr << "frame is not admissible: " << j.dump() << "\n";
    return 1;
}

json cycle_json(const FramedPolytope& fp, const KLoopReport& r)
{
    json j;
    j["k"] = r.k;
    j["loop_free"] = r.loop_free;
    j["cycle"] = json::array();
    j["witnesses"] = json::array();
    if (r.cycle) {
        j["cycle"] = faces_json(fp, r.cycle->faces);
        j["witnesses"] = faces_json(fp, r.cycle->witnesses);
    }
    return j;
}

json layering_json(const FramedPolytope& fp, const OrientedGradedPoset& p, const Layering& L)
{
    json j;
    j["k"] = L.k;
    j["side"] = L.source ? "source" : "target";
    j["order"] = faces_json(fp, L.order);
    j["perturbed"] = L.perturbed;
    j["gluing_ok"] = L.gluing_ok;
    j["order_ok"] = L.order_ok;
    json pre = json::array();
    for (const auto& s : L.prefixes)
        pre.push_back(faces_json(fp, maximal(p.lattice, s)));
    j["prefixes"] = pre;
    return j;
}

std::pair<int, int> parse_dims(const std::string& s)
{
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int d = std::stoi(s);
            return {d, d};
        }
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    } catch (const std::exception&) {
        throw InputError("--dims: expected A..B, got '" + s + "'");
    }
}

json report_json(const ExperimentReport& r)
{
    json j;
    j["kind"] = kind_name(r.spec.kind);
    j["seed"] = r.spec.seed;
    j["samples"] = r.spec.samples;
    j["dims"] = {r.spec.dim_lo, r.spec.dim_hi};
    json rows = json::array();
    for (const auto& d : r.dims) {
        json row;
        row["dim"] = d.dim;
        row["samples"] = d.samples;
        row["resampled"] = d.resampled;
        row["loops_by_k"] = d.loops_by_k;
        row["with_loop"] = d.with_loop;
        row["fraction"] = d.fraction();
        rows.push_back(row);
    }
    j["results"] = rows;
    return j;
}

std::string report_csv(const ExperimentReport& r)
{
    std::ostringstream out;
    out << "dim,samples,resampled,with_loop,fraction,k,loops_at_k\n";
    for (const auto& d : r.dims) {
        auto head = [&] {
            out << d.dim << "," << d.samples << "," << d.resampled << "," << d.with_loop << "," << std::setprecision(6)
                << d.fraction() << ",";
        };
        if (d.loops_by_k.empty()) {
            head();
            out << ",\n";
        }
        for (std::size_t k = 0; k < d.loops_by_k.size(); ++k) {
            head();
            out << k << "," << d.loops_by_k[k] << "\n";
        }
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Framed polytopes: orientations, loops, diagrams, orientals, chirotopes, molecules"};
    app.require_subcommand(1);
    int rc = 0;

    // faces
    FramedArgs faces_a;
    auto* faces = app.add_subcommand("faces", "face lattice of a polytope");
    add_framed(faces, faces_a, false);
    faces->callback([&] {
        auto in = io::framed_from_json(io::read_file(faces_a.file));
        assert_vertices(in.cfg);
        auto lat = face_lattice(in.cfg);
        json j;
        j["dim"] = lat.dim();
        json fv = json::array();
        for (int k = -1; k <= lat.dim(); ++k)
            fv.push_back(lat.of_dim(k).size());
        j["f_vector"] = fv;
        j["count"] = lat.size();
        json fs = json::array();
        for (std::size_t f = 0; f < lat.size(); ++f) {
            json e;
            e["dim"] = lat.faces[f].dim;
            json ls = json::array();
            for (int v : lat.faces[f].verts)
                ls.push_back(in.cfg.labels[static_cast<std::size_t>(v)]);
            e["vertices"] = ls;
            fs.push_back(e);
        }
        j["faces"] = fs;
        emit(j);
    });

    // check-frame
    FramedArgs check_a;
    auto* check = app.add_subcommand("check-frame", "is the frame admissible for the polytope");
    add_framed(check, check_a);
    check->callback([&] {
        auto fp = load_framed(check_a);
        emit(admissibility_json(fp));
        rc = fp.admissible() ? 0 : 1;
    });

    // orient
    FramedArgs orient_a;
    int orient_k = -1;
    auto* orient = app.add_subcommand("orient", "f-orientation, or k-sources/targets with --k");
    add_framed(orient, orient_a);
    orient->add_option("--k", orient_k, "report so_k/ta_k of every face of dim > k");
    orient->callback([&] {
        auto fp = load_framed(orient_a);
        if ((rc = require_admissible(fp)))
            return;
        const auto& lat = fp.lattice();
        if (orient_k >= fp.dim())
            throw InputError("--k must be below the dimension");
        json fs = json::array();
        for (std::size_t f = 1; f < lat.size(); ++f) {
            int F = static_cast<int>(f);
            int k = orient_k < 0 ? lat[F].dim - 1 : orient_k;
            if (lat[F].dim < 1 || lat[F].dim <= k)
                continue;
            const ST& st = fp.st(F, k);
            json e;
            e["face"] = labels_of(fp, F);
            e["k"] = k;
            e["source"] = faces_json(fp, st.so);
            e["target"] = faces_json(fp, st.ta);
            fs.push_back(e);
        }
        json j;
        j["faces"] = fs;
        emit(j);
    });

    // loops
    FramedArgs loops_a;
    int loops_k = -1;
    bool loops_strong = false;
    auto* loops = app.add_subcommand("loops", "cellular k-loops (all k unless --k)");
    add_framed(loops, loops_a);
    loops->add_option("--k", loops_k, "single level");
    loops->add_flag("--strong", loops_strong, "also search inhomogeneous loops");
    loops->callback([&] {
        auto fp = load_framed(loops_a);
        if ((rc = require_admissible(fp)))
            return;
        bool any = false;
        if (loops_k >= 0) {
            if (loops_k > fp.dim() - 2)
                throw InputError("--k must satisfy 0 <= k <= dim - 2");
            auto c = find_k_loop(fp, loops_k);
            KLoopReport r{loops_k, !c, c};
            any = !r.loop_free;
            json j = cycle_json(fp, r);
            if (loops_strong) {
                auto s = strong_loop_check(fp);
                j["strongly_loop_free"] = s.strongly_loop_free;
                j["strong_cycle"] = faces_json(fp, s.cycle);
                any = any || !s.strongly_loop_free;
            }
            emit(j);
        } else {
            auto r = loop_report(fp, loops_strong);
            json j;
            j["loop_free"] = r.loop_free();
            json lv = json::array();
            for (const auto& l : r.levels)
                lv.push_back(cycle_json(fp, l));
            j["levels"] = lv;
            any = !r.loop_free();
            if (loops_strong) {
                j["strongly_loop_free"] = r.strong.strongly_loop_free;
                j["strong_cycle"] = faces_json(fp, r.strong.cycle);
                any = any || !r.strong.strongly_loop_free;
            }
            emit(j);
        }
        rc = any ? 1 : 0;
    });

    // chains
    FramedArgs chains_a;
    std::string chains_complex, chains_out;
    auto* chains = app.add_subcommand("chains", "based chain complex of a framed polytope, or check a complex file");
    chains->add_option("--file,-f", chains_a.file, "framed polytope JSON");
    chains->add_option("--frame", chains_a.frame, "canonical | alternating | file:PATH");
    chains->add_option("--complex", chains_complex, "based complex JSON to check instead");
    chains->add_option("--out", chains_out, "write the complex JSON here");
    chains->callback([&] {
        BasedComplex c;
        if (!chains_complex.empty()) {
            c = io::complex_from_json(io::read_file(chains_complex));
        } else {
            if (chains_a.file.empty())
                throw InputError("chains: need --file or --complex");
            auto fp = load_framed(chains_a);
            if ((rc = require_admissible(fp)))
                return;
            c = chains_of(fp);
        }
        auto v = steiner_check(c);
        json j;
        j["unital"] = v.unital;
        j["loop_free"] = v.loop_free;
        j["strongly_loop_free"] = v.strongly_loop_free;
        if (!v.loop_free) {
            j["loop_level"] = v.loop_level;
            j["cycle"] = v.cycle;
        }
        if (!v.strongly_loop_free)
            j["strong_cycle"] = v.strong_cycle;
        if (!chains_out.empty())
            io::write_file(chains_out, io::complex_to_json(c).dump(2) + "\n");
        else if (chains_complex.empty())
            j["complex"] = io::complex_to_json(c);
        emit(j);
        rc = v.unital && v.loop_free ? 0 : 1;
    });

    // oriental-verify
    std::string or_kind = "simplex";
    int or_dim = 3;
    auto* oriental = app.add_subcommand("oriental-verify", "cyclic simplex / cube against Street / cubical orientals");
    oriental->add_option("--kind", or_kind, "simplex | cube")->check(CLI::IsMember({"simplex", "cube"}));
    oriental->add_option("--dim", or_dim, "dimension")->required()->check(CLI::Range(1, 8));
    oriental->callback([&] {
        auto v = oriental_verify(or_kind, or_dim);
        std::cout << (v.iso ? "ISO OK" : "ISO FAIL: " + v.why) << "\n";
        std::cout << "strongly loop-free: " << (v.strongly_loop_free ? "yes" : "no") << "\n";
        rc = v.iso && v.strongly_loop_free ? 0 : 1;
    });

    // bruhat
    int b_n = 4, b_d = 1;
    bool b_count = false, b_verify = false;
    auto* bruhat = app.add_subcommand("bruhat", "higher Bruhat order B(n,d) and its cubillages");
    bruhat->add_option("--n", b_n)->required();
    bruhat->add_option("--d", b_d)->required();
    bruhat->add_flag("--count-only", b_count, "print only the number of elements and covers");
    bruhat->add_flag("--verify", b_verify, "check that every phi(U) tiles Z(n,d) and the extremal identities");
    bruhat->callback([&] {
        auto B = enumerate_bruhat(b_n, b_d);
        json j;
        j["n"] = b_n;
        j["d"] = b_d;
        j["elements"] = B.elements.size();
        j["covers"] = B.covers.size();
        bool ok = true;
        if (b_verify) {
            std::set<Cubillage> seen;
            int bad = 0;
            for (auto U : B.elements) {
                auto c = phi_to_cubillage(B, U);
                if (!tiling_check(b_n, b_d, c).ok)
                    ++bad;
                seen.insert(c);
            }
            auto [so, ta] = zonotope_source_target_cubes(b_n, b_d);
            std::uint64_t full = (std::uint64_t{1} << B.ground.size()) - 1;
            j["non_tiling"] = bad;
            j["injective"] = seen.size() == B.elements.size();
            j["phi_empty_is_source"] = phi_to_cubillage(B, 0) == so;
            j["phi_full_is_target"] = phi_to_cubillage(B, full) == ta;
            ok = bad == 0 && seen.size() == B.elements.size() && phi_to_cubillage(B, 0) == so &&
                 phi_to_cubillage(B, full) == ta;
            j["ok"] = ok;
        }
        if (!b_count) {
            json es = json::array();
            for (auto U : B.elements) {
                json e = json::array();
                for (std::size_t g = 0; g < B.ground.size(); ++g)
                    if ((U >> g) & 1u)
                        e.push_back(subset_label(B.ground[g]));
                json item;
                item["set"] = e;
                json cells = json::array();
                for (const auto& c : phi_to_cubillage(B, U))
                    cells.push_back(cube_label(c));
                item["cubillage"] = cells;
                es.push_back(item);
            }
            j["poset"] = es;
            json cv = json::array();
            for (auto [a, b] : B.covers)
                cv.push_back({a, b});
            j["cover_pairs"] = cv;
        }
        emit(j);
        rc = ok ? 0 : 1;
    });

    // chirotope
    FramedArgs chi_a;
    bool chi_flag = false, chi_lift = false;
    auto* chiro = app.add_subcommand("chirotope", "chirotope of a point set, flag chirotope, or cyclic lift");
    add_framed(chiro, chi_a);
    chiro->add_flag("--flag", chi_flag, "flag chirotope of a framed simplex with the f-orientation roundtrip");
    chiro->add_flag("--lift", chi_lift, "cyclic lift of a planar configuration (framed polytope JSON)");
    chiro->callback([&] {
        if (chi_lift) {
            auto in = io::framed_from_json(io::read_file(chi_a.file));
            auto L = cyclic_lift(in.cfg);
            json j = io::framed_to_json(L.cfg, Frame::canonical(L.cfg.dim));
            json ks = json::array();
            for (const auto& k : L.K)
                ks.push_back(k.get_str());
            j["constants"] = ks;
            j["verified"] = cyclic_lift_verify(in.cfg, L);
            emit(j);
            rc = j["verified"].get<bool>() ? 0 : 1;
            return;
        }
        if (chi_flag) {
            auto fp = load_framed(chi_a);
            if ((rc = require_admissible(fp)))
                return;
            auto f = flag_chirotope(fp);
            json j;
            json lv = json::array();
            for (const auto& c : f.levels)
                lv.push_back(io::chirotope_to_json(c));
            j["levels"] = lv;
            j["uniform"] = f.uniform();
            bool rt = f_orientation_roundtrip(fp);
            j["roundtrip"] = rt;
            emit(j);
            rc = rt && f.uniform() ? 0 : 1;
            return;
        }
        auto in = io::framed_from_json(io::read_file(chi_a.file));
        auto c = chirotope_of_points(in.cfg);
        json j = io::chirotope_to_json(c);
        j["uniform"] = is_uniform(c);
        j["acyclic"] = is_acyclic(c);
        emit(j);
    });

    // molecule
    FramedArgs mol_a;
    std::string mol_action = "check";
    std::size_t molecule_budget = 10;
    auto* mol = app.add_subcommand("molecule", "molecule status of every atom and its k-boundaries");
    mol->add_option("action", mol_action, "check")->check(CLI::IsMember({"check"}));
    add_framed(mol, mol_a);
    mol->add_option("--budget", molecule_budget, "largest number of maximal faces searched")->check(CLI::Range(1, 16));
    mol->callback([&] {
        auto fp = load_framed(mol_a);
        if ((rc = require_admissible(fp)))
            return;
        auto p = poset_orientation(fp);
        const auto& lat = fp.lattice();
        json fs = json::array();
        bool all = true;
        for (std::size_t f = 1; f < lat.size(); ++f) {
            int F = static_cast<int>(f);
            FaceSet U = atom_set(lat, F);
            json e;
            e["face"] = labels_of(fp, F);
            bool ok = true;
            // true / false, or "over budget" when the search refuses
            auto status = [&](const FaceSet& S) -> json {
                if (maximal(lat, S).size() > molecule_budget)
                    return "over budget";
                bool m = is_molecule(p, S, molecule_budget);
                ok = ok && m;
                return m;
            };
            json ks = json::array();
            for (int k = 0; k < lat[F].dim; ++k) {
                auto [s, t] = boundaries(p, U, k);
                json ms = status(s), mt = status(t);
                ks.push_back({{"k", k}, {"source", ms}, {"target", mt}});
            }
            e["boundaries"] = ks;
            e["pass"] = ok;
            all = all && ok;
            fs.push_back(e);
        }
        json j;
        j["pass"] = all;
        j["faces"] = fs;
        emit(j);
        rc = all ? 0 : 1;
    });

    // rdc
    FramedArgs rdc_a;
    std::string rdc_action = "check";
    bool rdc_layer = false;
    auto* rdc = app.add_subcommand("rdc", "regular directed complex conditions per face");
    rdc->add_option("action", rdc_action, "check")->check(CLI::IsMember({"check"}));
    add_framed(rdc, rdc_a);
    rdc->add_flag("--layerings", rdc_layer, "include the top face's layerings");
    rdc->callback([&] {
        auto fp = load_framed(rdc_a);
        if ((rc = require_admissible(fp)))
            return;
        auto v = rdc_check(fp);
        json fs = json::array();
        for (const auto& r : v.faces) {
            json e;
            e["face"] = labels_of(fp, r.face);
            e["molecules"] = r.molecules;
            e["globular"] = r.globular;
            e["intersect"] = r.intersect;
            e["layering_order"] = r.layering_order;
            e["pass"] = r.ok();
            if (!r.detail.empty())
                e["detail"] = r.detail;
            fs.push_back(e);
        }
        json j;
        j["pass"] = v.ok;
        j["faces"] = fs;
        if (rdc_layer) {
            auto p = poset_orientation(fp);
            json ls = json::array();
            for (int k = 0; k < fp.dim(); ++k)
                for (bool src : {true, false})
                    ls.push_back(layering_json(fp, p, layering(fp, p, fp.top(), k, src)));
            j["layerings"] = ls;
        }
        emit(j);
        rc = v.ok ? 0 : 1;
    });

    // experiment
    std::string ex_kind = "gaussian_simplex", ex_dims = "3..6", ex_out, ex_csv;
    std::uint64_t ex_seed = 1;
    int ex_samples = 100;
    unsigned ex_threads = 0;
    auto* exp = app.add_subcommand("experiment", "seeded Monte Carlo loop frequencies");
    exp->add_option("--kind", ex_kind, "gaussian_simplex | random_frame_simplex | random_frame_cube");
    exp->add_option("--seed", ex_seed);
    exp->add_option("--samples", ex_samples);
    exp->add_option("--dims", ex_dims, "A..B");
    exp->add_option("--out", ex_out, "JSON report path (default stdout)");
    exp->add_option("--csv", ex_csv, "CSV report path");
    exp->add_option("--threads", ex_threads, "worker threads; results do not depend on it");
    exp->callback([&] {
        ExperimentSpec s;
        s.kind = parse_kind(ex_kind);
        std::tie(s.dim_lo, s.dim_hi) = parse_dims(ex_dims);
        s.samples = ex_samples;
        s.seed = ex_seed;
        s.threads = ex_threads;
        auto r = run_experiment(s);
        std::string text = report_json(r).dump(2) + "\n";
        if (ex_out.empty())
            std::cout << text;
        else
            io::write_file(ex_out, text);
        if (!ex_csv.empty())
            io::write_file(ex_csv, report_csv(r));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
