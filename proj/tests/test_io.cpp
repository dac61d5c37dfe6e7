#include "polyframe/chirotope.hpp"
#include "polyframe/fixtures.hpp"
#include "polyframe/io.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyframe;
using io::json;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("rationals")
{
    CHECK(io::rat_from_json(json(7), "x") == 7);
    CHECK(io::rat_from_json(json("-3/6"), "x") == Rat(-1, 2));
    // integers past 64 bits go in as strings; the parser would turn them into floats
    CHECK(io::rat_from_json(json("123456789012345678901234567890"), "x") == Rat(Int("123456789012345678901234567890")));
    CHECK_THROWS_AS(io::rat_from_json(json::parse("123456789012345678901234567890"), "x"), InputError);
    CHECK_THROWS_WITH(io::rat_from_json(json(0.5), "pt"), Catch::Matchers::ContainsSubstring("floating"));
    CHECK_THROWS_WITH(io::rat_from_json(json("1/0"), "pt"), Catch::Matchers::ContainsSubstring("pt"));
    CHECK_THROWS_AS(io::rat_from_json(json::array(), "pt"), InputError);
    CHECK(io::rat_to_json(Rat(4)) == json(4));
    CHECK(io::rat_to_json(Rat(7, 8)) == json("7/8"));
}

TEST_CASE("bundled data files match the fixtures bit for bit")
{
    std::filesystem::path dir = DATA_DIR;
    auto items = fixtures::corpus();
    items.push_back({"p5_truncated", fixtures::p5_truncated(), Frame::canonical(4)});
    items.push_back({"square", make_family({Family::Cube, 0, 2, {}}), Frame::canonical(2)});
    items.push_back({"triangle_def", fixtures::triangle_def(), Frame::canonical(2)});
    for (const auto& it : items) {
        auto path = dir / (it.name + ".json");
        INFO(path.string());
        REQUIRE(std::filesystem::exists(path));
        auto in = io::framed_from_json(io::read_file(path.string()));
        CHECK(in.cfg.points == it.cfg.points);
        CHECK(in.cfg.labels == it.cfg.labels);
        REQUIRE(in.frame);
        CHECK(*in.frame == it.frame);
        CHECK(io::framed_to_json(in.cfg, *in.frame).dump(2) + "\n" == slurp(path));
    }
}

TEST_CASE("polytope input errors")
{
    auto bad = [](const char* text) { return io::polytope_from_json(json::parse(text)); };
    CHECK_THROWS_WITH(bad(R"({"vertices": [[0]]})"), Catch::Matchers::ContainsSubstring("dim"));
    CHECK_THROWS_WITH(bad(R"({"dim": 2, "vertices": [[0, 0], [1]]})"), Catch::Matchers::ContainsSubstring("vertices[1]"));
    CHECK_THROWS_WITH(bad(R"({"dim": 1, "vertices": [[0], [1]], "labels": ["a", "a"]})"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_AS(assert_vertices(bad(R"({"dim": 1, "vertices": [[0], [1], [2]]})")), InputError);
    CHECK_THROWS_AS(io::parse("{not json", "stdin"), InputError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/x.json"), InputError);

    auto c = bad(R"({"dim": 1, "vertices": [["-1/2"], [3]]})");
    CHECK(c.labels == std::vector<std::string>{"1", "2"});
    CHECK(c.points[0] == RVec{Rat(-1, 2)});
}

TEST_CASE("frames")
{
    io::FramedInput in{make_family({Family::Cube, 0, 2, {}}), std::nullopt};
    CHECK(io::resolve_frame("", in) == Frame::canonical(2));
    CHECK(io::resolve_frame("alternating", in) == Frame::alternating(2));
    CHECK_THROWS_AS(io::resolve_frame("sideways", in), InputError);
    CHECK_THROWS_WITH(io::frame_from_json(json::parse("[[1, 2], [2, 4]]"), 2), Catch::Matchers::ContainsSubstring("dependent"));
    CHECK_THROWS_AS(io::frame_from_json(json::parse("[[1, 0]]"), 2), InputError);

    auto f = fixtures::q6_frame();
    CHECK(io::frame_from_json(io::frame_to_json(f), f.dim()) == f);

    auto tmp = std::filesystem::temp_directory_path() / "polyframe_frame_test.json";
    io::write_file(tmp.string(), R"({"frame": [[0, 1], [1, 0]]})");
    CHECK(io::resolve_frame("file:" + tmp.string(), in) == Frame::from_vectors({{0, 1}, {1, 0}}));
    std::filesystem::remove(tmp);
}

TEST_CASE("complex JSON")
{
    auto s = street_oriental(3);
    auto back = io::complex_from_json(io::complex_to_json(s));
    CHECK(iso_check(s, back, identity_correspondence(s)));

    auto j = json::parse(R"({"basis": {"0": ["x", "y"], "1": ["e"]}, "boundary": {"e": {"y": 1, "x": 1}}})");
    CHECK_THROWS_WITH(io::complex_from_json(j), Catch::Matchers::ContainsSubstring("e"));
    j["boundary"]["e"]["x"] = -1;
    CHECK_NOTHROW(io::complex_from_json(j));
    j["boundary"]["e"]["z"] = 1;
    CHECK_THROWS_WITH(io::complex_from_json(j), Catch::Matchers::ContainsSubstring("unknown basis label z"));
}

TEST_CASE("chirotope JSON")
{
    auto c = chirotope_of_points(make_family({Family::CyclicPolytope, 5, 2, {}}));
    auto j = io::chirotope_to_json(c);
    CHECK(j["signs"]["1,2,3"] == "+");
    CHECK(io::chirotope_from_json(j) == c);
    j["signs"].erase("2,4,5");
    CHECK_THROWS_WITH(io::chirotope_from_json(j), Catch::Matchers::ContainsSubstring("missing tuple 2,4,5"));
    j["signs"]["2,4,5"] = "?";
    CHECK_THROWS_AS(io::chirotope_from_json(j), InputError);
    j["signs"]["2,4,5"] = "+";
    j["signs"]["3,2,1"] = "+";
    CHECK_THROWS_AS(io::chirotope_from_json(j), InputError);
}
