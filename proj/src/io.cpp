#include "sc3d/io.hpp"

#include <fstream>
#include <stdexcept>

namespace sc3d {

namespace {

ordered_json hex_rows(const std::vector<BitVec>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(r.to_hex());
    return arr;
}

ordered_json coord_json(const Coord3& c) { return ordered_json::array({c.x, c.y, c.z}); }

const char* kind_string(CellKind k) {
    switch (k) {
        case CellKind::octahedron: return "octahedron";
        case CellKind::cuboctahedron: return "cuboctahedron";
        default: return "clipped";
    }
}

const char* kind_string(FaceKind k) {
    switch (k) {
        case FaceKind::triangle: return "triangle";
        case FaceKind::square: return "square";
        default: return "clipped_edge";
    }
}

ordered_json delta_json(const RowDelta& d) {
    return ordered_json{{"inherited", d.inherited}, {"modified", d.modified}, {"fresh", d.fresh}};
}

}  // namespace

ordered_json code_to_json(const CssCode& code) {
    return ordered_json{{"label", code.label},
                        {"n", code.n},
                        {"hx", hex_rows(code.hx)},
                        {"hz", hex_rows(code.hz)},
                        {"logical_x", hex_rows(code.logical_x)},
                        {"logical_z", hex_rows(code.logical_z)}};
}

ordered_json lattice_to_json(const Lattice& lat) {
    ordered_json verts = ordered_json::array();
    for (const auto& v : lat.vertices) verts.push_back(coord_json(v));
    ordered_json cells = ordered_json::array();
    for (const auto& c : lat.cells)
        cells.push_back(ordered_json{{"center", coord_json(c.center)},
                                     {"color", to_string(c.color)},
                                     {"kind", kind_string(c.kind)},
                                     {"support", c.support}});
    ordered_json faces = ordered_json::array();
    for (const auto& f : lat.faces)
        faces.push_back(ordered_json{{"center", coord_json(f.center)},
                                     {"pair", to_string(f.pair)},
                                     {"kind", kind_string(f.kind)},
                                     {"support", f.support}});
    return ordered_json{{"dims", {{"dx", lat.dims.dx}, {"dy", lat.dims.dy}, {"dz", lat.dims.dz}}},
                        {"n", lat.n()},
                        {"vertices", verts},
                        {"cells", cells},
                        {"faces", faces}};
}

ordered_json stack_to_json(const Stack& stack) {
    ordered_json codes;
    for (const auto& [c, code] : stack.codes) codes[to_string(c)] = code_to_json(code);
    ordered_json cz, cx;
    for (const auto& [c, v] : stack.canonical_z) cz[to_string(c)] = v.to_hex();
    for (const auto& [c, v] : stack.canonical_x) cx[to_string(c)] = v.to_hex();
    return ordered_json{{"lattice", lattice_to_json(stack.lattice)},
                        {"codes", codes},
                        {"canonical_z", cz},
                        {"canonical_x", cx}};
}

ordered_json report_to_json(const Report& rep) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return ordered_json{{"title", rep.title}, {"pass", rep.all_pass()}, {"checks", checks}};
}

ordered_json count_report_to_json(const CountReport& rep) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : rep.lines)
        lines.push_back(ordered_json{{"color", to_string(l.color)},
                                     {"rank_x", l.rank_x},
                                     {"expect_x", l.expect_x},
                                     {"rank_z", l.rank_z},
                                     {"expect_z", l.expect_z},
                                     {"pass", l.pass}});
    return ordered_json{
        {"n", rep.n}, {"expect_n", rep.expect_n}, {"pass", rep.pass}, {"lines", lines}};
}

ordered_json redundancy_report_to_json(const RedundancyReport& rep) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : rep.lines)
        lines.push_back(ordered_json{{"color", to_string(l.color)},
                                     {"identities", l.identity_count},
                                     {"rows", l.rows},
                                     {"rank", l.rank},
                                     {"pass", l.pass}});
    return ordered_json{{"pass", rep.pass}, {"lines", lines}};
}

ordered_json merge_report_to_json(const MergeReport& rep) {
    ordered_json deltas_x, deltas_z;
    for (const auto& [c, d] : rep.x_rows) deltas_x[to_string(c)] = delta_json(d);
    for (const auto& [c, d] : rep.z_rows) deltas_z[to_string(c)] = delta_json(d);
    return ordered_json{
        {"axis", to_string(rep.axis)},
        {"merged_n", rep.merged.n()},
        {"embed_a", rep.embed_a},
        {"embed_b", rep.embed_b},
        {"color_map_b",
         {to_string(rep.color_map_b[0]), to_string(rep.color_map_b[1]),
          to_string(rep.color_map_b[2])}},
        {"new_qubits", rep.new_qubits},
        {"x_rows", deltas_x},
        {"z_rows", deltas_z},
        {"measured_product", rep.measured_product.to_hex()},
        {"checks", report_to_json(rep.checks)}};
}

ordered_json split_result_to_json(const SplitResult& res) {
    return ordered_json{{"removed_qubits", res.removed_qubits},
                        {"a_n", res.a.n()},
                        {"b_n", res.b.n()},
                        {"checks", report_to_json(res.checks)}};
}

ordered_json merge_2d3d_report_to_json(const Merge2D3DReport& rep) {
    ordered_json wc = ordered_json::array();
    for (const auto& [before, after] : rep.weight_changes)
        wc.push_back(ordered_json::array({before, after}));
    return ordered_json{{"color", to_string(rep.color)},
                        {"merged_n", rep.merged.n},
                        {"ancillas", rep.ancillas},
                        {"new_z_rows", hex_rows(rep.new_z_rows)},
                        {"modified_x_rows", rep.modified_x_rows},
                        {"weight_changes", wc},
                        {"measured_product", rep.measured_product.to_hex()},
                        {"checks", report_to_json(rep.checks)}};
}

ordered_json concat_code_to_json(const ConcatCode& cc) {
    ordered_json inherited;
    for (const auto& [c, zx] : cc.inherited)
        inherited[to_string(c)] =
            ordered_json{{"z", zx.first.to_hex()}, {"x", zx.second.to_hex()}};
    return ordered_json{{"code", code_to_json(cc.code)},
                        {"blocks", cc.block_map.size()},
                        {"inherited", inherited}};
}

const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "Tdg";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::CCZ: return "CCZ";
        case GateKind::MeasureX: return "MeasureX";
        default: return "MeasureZ";
    }
}

ordered_json circuit_to_json(const Circuit& c) {
    ordered_json gates = ordered_json::array();
    for (const auto& g : c.gates) {
        ordered_json gj{{"kind", to_string(g.kind)}, {"targets", g.targets}};
        if (g.classical_control >= 0) gj["control"] = g.classical_control;
        gates.push_back(std::move(gj));
    }
    return ordered_json{{"n_qubits", c.n_qubits}, {"gates", gates}};
}

std::string alist_string(const std::vector<BitVec>& rows, std::size_t n) {
    const std::size_t m = rows.size();
    std::vector<std::vector<std::size_t>> col_lists(n), row_lists(m);
    for (std::size_t r = 0; r < m; ++r)
        for (auto q : rows[r].indices()) {
            col_lists[q].push_back(r + 1);
            row_lists[r].push_back(q + 1);
        }
    std::size_t cmax = 0, rmax = 0;
    for (const auto& l : col_lists) cmax = std::max(cmax, l.size());
    for (const auto& l : row_lists) rmax = std::max(rmax, l.size());

    std::string out = std::to_string(n) + " " + std::to_string(m) + "\n" +
                      std::to_string(cmax) + " " + std::to_string(rmax) + "\n";
    auto append_degrees = [&out](const std::vector<std::vector<std::size_t>>& lists) {
        for (std::size_t i = 0; i < lists.size(); ++i)
            out += (i ? " " : "") + std::to_string(lists[i].size());
        out += "\n";
    };
    auto append_lists = [&out](const std::vector<std::vector<std::size_t>>& lists,
                               std::size_t width) {
        for (const auto& l : lists) {
            for (std::size_t i = 0; i < width; ++i)
                out += (i ? " " : "") + std::to_string(i < l.size() ? l[i] : 0);
            out += "\n";
        }
    };
    append_degrees(col_lists);
    append_degrees(row_lists);
    append_lists(col_lists, cmax);
    append_lists(row_lists, rmax);
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void export_code(const CssCode& code, const std::string& dir, const std::string& stem) {
    const std::string base = dir.empty() ? stem : dir + "/" + stem;
    write_file(base + "_hx.alist", alist_string(code.hx, code.n));
    write_file(base + "_hz.alist", alist_string(code.hz, code.n));
    write_file(base + ".json", code_to_json(code).dump(2) + "\n");
}

}  // namespace sc3d
