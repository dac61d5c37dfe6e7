#pragma once

#include "chirotope.hpp"
#include "diagram.hpp"
#include "framing.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polyframe::io {

using json = nlohmann::ordered_json;

inline Rat rat_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rat(Int(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (j.is_number_float())
        throw InputError(where + ": floating value " + j.dump() + "; write rationals as integers or \"p/q\" strings");
    throw InputError(where + ": expected a rational, got " + std::string(j.type_name()));
}

// Integers that fit stay JSON numbers; everything else becomes "p/q".
inline json rat_to_json(const Rat& r)
{
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return r.get_num().get_si();
    return r.get_str();
}

inline const json& field(const json& j, const char* name, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end())
        throw InputError(where + ": missing field \"" + name + "\"");
    return *it;
}

inline RVec rvec_from_json(const json& j, std::size_t len, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    if (j.size() != len)
        throw InputError(where + ": expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    RVec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline json rvec_to_json(const RVec& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(rat_to_json(x));
    return a;
}

inline json parse(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

inline json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

// {"dim": d, "vertices": [[rat,...],...], "labels": [...]}
inline PointConfig polytope_from_json(const json& j)
{
    const json& d = field(j, "dim", "polytope");
    if (!d.is_number_integer() || d.get<long>() < 0)
        throw InputError("polytope.dim: expected a nonnegative integer");
    PointConfig c;
    c.dim = d.get<std::size_t>();
    const json& vs = field(j, "vertices", "polytope");
    if (!vs.is_array() || vs.empty())
        throw InputError("polytope.vertices: expected a nonempty array");
    for (std::size_t i = 0; i < vs.size(); ++i)
        c.points.push_back(rvec_from_json(vs[i], c.dim, "polytope.vertices[" + std::to_string(i) + "]"));
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array() || it->size() != vs.size())
            throw InputError("polytope.labels: expected one label per vertex");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& l = (*it)[i];
            if (l.is_string())
                c.labels.push_back(l.get<std::string>());
            else if (l.is_number_integer())
                c.labels.push_back(l.dump());
            else
                throw InputError("polytope.labels[" + std::to_string(i) + "]: expected a string");
        }
        if (std::set<std::string>(c.labels.begin(), c.labels.end()).size() != c.labels.size())
            throw InputError("polytope.labels: duplicate label");
    } else {
        for (std::size_t i = 0; i < vs.size(); ++i)
            c.labels.push_back(std::to_string(i + 1));
    }
    c.validate();
    return c;
}

inline json polytope_to_json(const PointConfig& c)
{
    json j;
    j["dim"] = c.dim;
    j["vertices"] = json::array();
    for (const auto& p : c.points)
        j["vertices"].push_back(rvec_to_json(p));
    j["labels"] = c.labels;
    return j;
}

// Frame given as its columns v_1..v_d.
inline Frame frame_from_json(const json& j, std::size_t d, const std::string& where = "frame")
{
    if (!j.is_array() || j.size() != d)
        throw InputError(where + ": expected " + std::to_string(d) + " column vectors");
    std::vector<RVec> cols;
    for (std::size_t i = 0; i < d; ++i)
        cols.push_back(rvec_from_json(j[i], d, where + "[" + std::to_string(i) + "]"));
    try {
        return Frame::from_vectors(cols);
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline json frame_to_json(const Frame& f)
{
    json a = json::array();
    for (std::size_t i = 0; i < f.dim(); ++i)
        a.push_back(rvec_to_json(f.vec(i)));
    return a;
}

struct FramedInput {
    PointConfig cfg;
    std::optional<Frame> frame;
};

inline FramedInput framed_from_json(const json& j)
{
    FramedInput in{polytope_from_json(j), std::nullopt};
    if (auto it = j.find("frame"); it != j.end())
        in.frame = frame_from_json(*it, in.cfg.dim);
    return in;
}

inline json framed_to_json(const PointConfig& c, const Frame& f)
{
    json j = polytope_to_json(c);
    j["frame"] = frame_to_json(f);
    return j;
}

// canonical | alternating | file:PATH (a bare frame array or an object with "frame").
inline Frame resolve_frame(const std::string& spec, const FramedInput& in)
{
    if (spec.empty()) {
        if (in.frame)
            return *in.frame;
        return Frame::canonical(in.cfg.dim);
    }
    if (spec == "canonical")
        return Frame::canonical(in.cfg.dim);
    if (spec == "alternating")
        return Frame::alternating(in.cfg.dim);
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        json j = read_file(path);
        if (j.is_object())
            return frame_from_json(field(j, "frame", path), in.cfg.dim, path + ".frame");
        return frame_from_json(j, in.cfg.dim, path);
    }
    throw InputError("--frame: expected canonical, alternating or file:PATH, got '" + spec + "'");
}

// {"basis": {deg: [labels]}, "boundary": {label: {label: int}}, "augmentation": {label: int}}
inline json complex_to_json(const BasedComplex& c)
{
    json j;
    json basis = json::object();
    for (int d = 0; d <= c.max_degree(); ++d) {
        json a = json::array();
        for (std::size_t b = 0; b < c.size(); ++b)
            if (c.degree[b] == d)
                a.push_back(c.labels[b]);
        basis[std::to_string(d)] = a;
    }
    j["basis"] = basis;
    json bd = json::object();
    for (std::size_t b = 0; b < c.size(); ++b) {
        if (c.degree[b] == 0)
            continue;
        json terms = json::object();
        for (auto [e, x] : c.boundary[b])
            terms[c.labels[static_cast<std::size_t>(e)]] = x;
        bd[c.labels[b]] = terms;
    }
    j["boundary"] = bd;
    json aug = json::object();
    for (std::size_t b = 0; b < c.size(); ++b)
        if (c.degree[b] == 0)
            aug[c.labels[b]] = c.augmentation[b];
    j["augmentation"] = aug;
    return j;
}

inline BasedComplex complex_from_json(const json& j)
{
    BasedComplex c;
    const json& basis = field(j, "basis", "complex");
    if (!basis.is_object())
        throw InputError("complex.basis: expected an object keyed by degree");
    std::vector<std::pair<int, std::string>> items;
    for (auto it = basis.begin(); it != basis.end(); ++it) {
        int deg = 0;
        try {
            std::size_t used = 0;
            deg = std::stoi(it.key(), &used);
            if (used != it.key().size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError("complex.basis: degree key '" + it.key() + "' is not an integer");
        }
        if (!it.value().is_array())
            throw InputError("complex.basis." + it.key() + ": expected an array of labels");
        for (const auto& l : it.value()) {
            if (!l.is_string())
                throw InputError("complex.basis." + it.key() + ": labels must be strings");
            items.emplace_back(deg, l.get<std::string>());
        }
    }
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [d, l] : items)
        c.add(l, d);
    if (auto it = j.find("boundary"); it != j.end()) {
        if (!it->is_object())
            throw InputError("complex.boundary: expected an object");
        for (auto b = it->begin(); b != it->end(); ++b) {
            int bi = c.at(b.key());
            if (!b.value().is_object())
                throw InputError("complex.boundary." + b.key() + ": expected an object");
            for (auto t = b.value().begin(); t != b.value().end(); ++t) {
                if (!t.value().is_number_integer())
                    throw InputError("complex.boundary." + b.key() + "." + t.key() + ": expected an integer");
                chain_add(c.boundary[static_cast<std::size_t>(bi)], c.at(t.key()), t.value().get<long long>());
            }
        }
    }
    if (auto it = j.find("augmentation"); it != j.end()) {
        if (!it->is_object())
            throw InputError("complex.augmentation: expected an object");
        for (auto a = it->begin(); a != it->end(); ++a) {
            if (!a.value().is_number_integer())
                throw InputError("complex.augmentation." + a.key() + ": expected an integer");
            c.augmentation[static_cast<std::size_t>(c.at(a.key()))] = a.value().get<long long>();
        }
    }
    c.validate();
    return c;
}

// {"rank": r, "signs": {"i,j,k": "+|-|0"}} with 1-based indices; "n" is optional.
inline json chirotope_to_json(const Chirotope& c)
{
    json j;
    j["rank"] = c.rank;
    j["n"] = c.n;
    json s = json::object();
    for (const auto& [t, x] : c.signs)
        s[tuple_key(t)] = std::string(1, sign_char(x));
    j["signs"] = s;
    return j;
}

inline Chirotope chirotope_from_json(const json& j)
{
    Chirotope c;
    const json& r = field(j, "rank", "chirotope");
    if (!r.is_number_integer() || r.get<int>() < 1)
        throw InputError("chirotope.rank: expected a positive integer");
    c.rank = r.get<int>();
    const json& s = field(j, "signs", "chirotope");
    if (!s.is_object())
        throw InputError("chirotope.signs: expected an object");
    int n = 0;
    for (auto it = s.begin(); it != s.end(); ++it) {
        VSet t;
        std::stringstream ss(it.key());
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                t.push_back(std::stoi(part) - 1);
            } catch (const std::exception&) {
                throw InputError("chirotope.signs: bad key '" + it.key() + "'");
            }
        }
        if (static_cast<int>(t.size()) != c.rank || !std::is_sorted(t.begin(), t.end()) ||
            std::adjacent_find(t.begin(), t.end()) != t.end() || t.front() < 0)
            throw InputError("chirotope.signs: key '" + it.key() + "' is not an increasing " + std::to_string(c.rank) +
                             "-tuple of positive indices");
        const json& v = it.value();
        std::string sv = v.is_string() ? v.get<std::string>() : "";
        int x = sv == "+" ? 1 : sv == "-" ? -1 : sv == "0" ? 0 : 2;
        if (x == 2)
            throw InputError("chirotope.signs." + it.key() + ": expected \"+\", \"-\" or \"0\"");
        c.signs[t] = x;
        n = std::max(n, t.back() + 1);
    }
    if (auto it = j.find("n"); it != j.end()) {
        if (!it->is_number_integer() || it->get<int>() < n)
            throw InputError("chirotope.n: smaller than the largest index");
        n = it->get<int>();
    }
    c.n = n;
    for (const auto& t : index_subsets(n, c.rank))
        if (!c.signs.count(t))
            throw InputError("chirotope.signs: missing tuple " + tuple_key(t));
    return c;
}

} // namespace polyframe::io
