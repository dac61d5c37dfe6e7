// Writes the bundled fixtures as framed-polytope JSON into a directory.

#include "polyframe/fixtures.hpp"
#include "polyframe/io.hpp"

#include <filesystem>
#include <iostream>

using namespace polyframe;

int main(int argc, char** argv)
{
    std::filesystem::path dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);
    auto items = fixtures::corpus();
    items.push_back({"p5_truncated", fixtures::p5_truncated(), Frame::canonical(4)});
    items.push_back({"square", make_family({Family::Cube, 0, 2, {}}), Frame::canonical(2)});
    items.push_back({"triangle_def", fixtures::triangle_def(), Frame::canonical(2)});
    for (const auto& it : items) {
        auto path = dir / (it.name + ".json");
        io::write_file(path.string(), io::framed_to_json(it.cfg, it.frame).dump(2) + "\n");
        std::cout << path.string() << "\n";
    }
}
