#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sc3d/io.hpp"

using namespace sc3d;

TEST_CASE("alist text for a small matrix") {
    // rows {0,1},{1,2} over 4 columns
    std::vector<BitVec> rows{BitVec::from_indices(4, {0, 1}), BitVec::from_indices(4, {1, 2})};
    auto s = alist_string(rows, 4);
    std::istringstream in(s);
    std::size_t n, m;
    in >> n >> m;
    CHECK(n == 4);
    CHECK(m == 2);
    std::size_t max_col, max_row;
    in >> max_col >> max_row;
    CHECK(max_col == 2);  // column 1 appears in both rows
    CHECK(max_row == 2);

    std::vector<std::size_t> col_deg(4), row_deg(2);
    for (auto& d : col_deg) in >> d;
    for (auto& d : row_deg) in >> d;
    CHECK(col_deg == std::vector<std::size_t>{1, 2, 1, 0});
    CHECK(row_deg == std::vector<std::size_t>{2, 2});

    // column lists, 1-based, padded to max_col entries
    std::vector<std::vector<std::size_t>> cols(4, std::vector<std::size_t>(2));
    for (auto& c : cols)
        for (auto& e : c) in >> e;
    CHECK(cols[0] == std::vector<std::size_t>{1, 0});
    CHECK(cols[1] == std::vector<std::size_t>{1, 2});
    CHECK(cols[3] == std::vector<std::size_t>{0, 0});

    std::vector<std::vector<std::size_t>> rws(2, std::vector<std::size_t>(2));
    for (auto& r : rws)
        for (auto& e : r) in >> e;
    CHECK(rws[0] == std::vector<std::size_t>{1, 2});
    CHECK(rws[1] == std::vector<std::size_t>{2, 3});
    CHECK(in.good());
}

TEST_CASE("code json round trips through hex rows") {
    auto code = build_2d(3, Picture::rotated);
    auto j = code_to_json(code);
    CHECK(j["n"] == 9);
    CHECK(j["label"] == code.label);
    REQUIRE(j["hx"].size() == code.hx.size());
    for (std::size_t i = 0; i < code.hx.size(); ++i)
        CHECK(BitVec::from_hex(9, j["hx"][i].get<std::string>()) == code.hx[i]);
    for (std::size_t i = 0; i < code.hz.size(); ++i)
        CHECK(BitVec::from_hex(9, j["hz"][i].get<std::string>()) == code.hz[i]);
    CHECK(BitVec::from_hex(9, j["logical_z"][0].get<std::string>()) == code.logical_z[0]);
}

TEST_CASE("lattice and stack json carry the geometry") {
    auto stack = build_stack(2);
    auto lj = lattice_to_json(stack.lattice);
    CHECK(lj["n"] == 12);
    CHECK(lj["vertices"].size() == 12);
    CHECK(lj["cells"].size() == stack.lattice.cells.size());
    CHECK(lj["faces"].size() == stack.lattice.faces.size());
    CHECK(lj["dims"]["dx"] == 2);
    // d = 2 is all boundary: every cell is clipped, and the serializer must
    // still name each kind. Full octahedra only show up from d = 3.
    bool saw_clipped = false;
    for (auto& c : lj["cells"]) {
        std::string k = c["kind"].get<std::string>();
        CHECK((k == "octahedron" || k == "cuboctahedron" || k == "clipped"));
        if (k == "clipped") saw_clipped = true;
    }
    CHECK(saw_clipped);
    auto lj3 = lattice_to_json(build_lattice({3, 3, 3}));
    bool saw_octa = false, saw_cubocta = false;
    for (auto& c : lj3["cells"]) {
        if (c["kind"] == "octahedron") saw_octa = true;
        if (c["kind"] == "cuboctahedron") saw_cubocta = true;
    }
    CHECK(saw_octa);
    CHECK(saw_cubocta);

    auto sj = stack_to_json(stack);
    CHECK(sj["codes"].size() == 3);
    CHECK(sj["codes"].contains("r"));
    CHECK(sj["lattice"]["n"] == 12);
}

TEST_CASE("report json keeps pass state and details") {
    Report rep;
    rep.title = "demo";
    rep.add("first", true, "ok");
    rep.add("second", false, "boom");
    auto j = report_to_json(rep);
    CHECK(j["title"] == "demo");
    CHECK(j["pass"] == false);
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "first");
    CHECK(j["checks"][1]["pass"] == false);
    CHECK(j["checks"][1]["detail"] == "boom");
}

TEST_CASE("circuit json names gates") {
    Circuit c;
    c.n_qubits = 2;
    c.add(GateKind::H, {0});
    c.add(GateKind::CX, {0, 1});
    c.add(GateKind::MeasureZ, {1});
    c.add(GateKind::X, {0}, 0);
    auto j = circuit_to_json(c);
    CHECK(j["n_qubits"] == 2);
    REQUIRE(j["gates"].size() == 4);
    CHECK(j["gates"][0]["kind"] == "H");
    CHECK(j["gates"][1]["targets"][1] == 1);
    CHECK(j["gates"][3]["control"] == 0);
}

TEST_CASE("export_code writes the three artifact files") {
    auto dir = std::filesystem::temp_directory_path() / "sc3d_io_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    auto code = build_2d(2, Picture::rotated, 0);
    export_code(code, dir.string(), "demo");
    for (const char* name : {"demo_hx.alist", "demo_hz.alist", "demo.json"})
        CHECK(std::filesystem::exists(dir / name));

    std::ifstream in(dir / "demo.json");
    auto j = ordered_json::parse(in);
    CHECK(j["n"] == 4);
    std::filesystem::remove_all(dir);
}

TEST_CASE("merge report json summarizes the surgery") {
    auto a = build_stack(2);
    auto m = merge_stacks(a, a, Color::g);
    auto j = merge_report_to_json(m);
    CHECK(j["axis"] == "g");
    CHECK(j["new_qubits"].size() == 4);
    CHECK(j["color_map_b"].size() == 3);
    CHECK(j["checks"]["pass"] == true);
    CHECK(j["merged_n"] == 28);

    auto s = split_stack(m, Color::g);
    auto js = split_result_to_json(s);
    CHECK(js["removed_qubits"].size() == 4);
    CHECK(js["checks"]["pass"] == true);
}
