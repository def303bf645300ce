// Command line front end. Machine-readable JSON lines go to stdout and are
// byte-identical for a fixed command line and seed; human summaries and
// timings go to stderr. Exit code 0 means every executed check passed.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sc3d/io.hpp"
#include "sc3d/transversal.hpp"

using namespace sc3d;

namespace {

struct Session {
    bool all_pass = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }
    void note(const std::string& line) { std::cerr << line << "\n"; }
    void result(const std::string& what, bool pass) {
        all_pass = all_pass && pass;
        note(what + ": " + (pass ? "pass" : "FAIL"));
    }
    void finish() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr.setf(std::ios::fixed);
        std::cerr.precision(2);
        std::cerr << "total " << secs << "s, " << (all_pass ? "all checks passed" : "FAILURES")
                  << "\n";
    }
};

LatticeDims pick_dims(int d, const std::vector<int>& dims) {
    if (!dims.empty()) return {dims[0], dims[1], dims[2]};
    return {d, d, d};
}

ordered_json phase_table_json(const std::string& suite, const PhaseTable& t, bool pass) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.entries)
        entries.push_back(ordered_json{{"alpha", e.alpha},
                                       {"beta", e.beta},
                                       {"gamma", e.gamma},
                                       {"phase", e.phase},
                                       {"checked", e.checked}});
    return ordered_json{{"suite", suite},
                        {"sampled", t.sampled},
                        {"seed", t.seed},
                        {"entries", entries},
                        {"pass", pass}};
}

int cmd_build(int d, const std::vector<int>& dims, const std::string& out,
              const std::string& format) {
    Session s;
    auto stack = build_stack(pick_dims(d, dims));
    ordered_json summary{{"command", "build"},
                         {"dims",
                          {{"dx", stack.lattice.dims.dx},
                           {"dy", stack.lattice.dims.dy},
                           {"dz", stack.lattice.dims.dz}}},
                         {"n", stack.n()},
                         {"cells", stack.lattice.cells.size()},
                         {"faces", stack.lattice.faces.size()}};
    ordered_json ranks;
    for (const auto& [c, code] : stack.codes)
        ranks[to_string(c)] = ordered_json{{"rank_x", gf2_rank(code.hx)},
                                           {"rank_z", gf2_rank(code.hz)},
                                           {"k", code_k(code)}};
    summary["codes"] = ranks;
    s.emit(summary);

    if (!out.empty()) {
        if (format == "json") {
            write_file(out + "/stack.json", stack_to_json(stack).dump(2) + "\n");
            s.note("wrote " + out + "/stack.json");
        } else {
            for (const auto& [c, code] : stack.codes) {
                export_code(code, out, std::string("sc_") + to_string(c));
                s.note(std::string("wrote ") + out + "/sc_" + to_string(c) + "_{hx,hz}.alist");
            }
        }
    }
    s.result("build", true);
    s.finish();
    return 0;
}

int cmd_verify(int d, const std::vector<int>& dims, const std::string& suite,
               std::uint64_t samples, std::uint64_t seed, bool parallel) {
    Session s;
    Exec exec = parallel ? Exec::parallel : Exec::serial;
    auto stack = build_stack(pick_dims(d, dims));
    bool run_all = suite == "all";

    if (run_all || suite == "counts") {
        auto rep = verify_counts(stack);
        s.emit(count_report_to_json(rep));
        s.result("counts", rep.pass);
    }
    if (run_all || suite == "redundancy") {
        auto rep = redundancy_identities(stack);
        s.emit(redundancy_report_to_json(rep));
        s.result("redundancy", rep.pass);
    }
    if (suite == "fixture" || (run_all && stack.d() == 2 && stack.lattice.dims.isotropic())) {
        if (stack.d() != 2 || !stack.lattice.dims.isotropic())
            throw std::invalid_argument("the fixture suite needs the distance-2 stack");
        auto perm = match_fixture_d2(stack);
        s.emit(ordered_json{{"suite", "fixture"}, {"permutation", perm}, {"pass", true}});
        s.result("fixture", true);
    }
    if (run_all || suite == "ccz") {
        PhaseTable table;
        if (samples > 0) {
            table = ccz_phase_sampled(stack, samples, seed, exec);
        } else {
            try {
                table = ccz_phase_exhaustive(stack);
            } catch (const ResourceError&) {
                table = ccz_phase_sampled(stack, 100000, seed, exec);
            }
        }
        bool pass = table.matches_ccz_pattern();
        s.emit(phase_table_json("ccz", table, pass));
        s.result("ccz", pass);
    }
    if (run_all || suite == "cz") {
        const std::pair<Color, Color> pairs[] = {{Color::r, Color::g},
                                                 {Color::g, Color::b},
                                                 {Color::r, Color::b}};
        for (auto pair : pairs) {
            auto table =
                cz_phase_check(stack, pair, BoundarySide::canonical, samples, seed, exec);
            bool pass = table.matches_cz_pattern();
            s.emit(phase_table_json(std::string("cz_") + to_string(pair.first) +
                                        to_string(pair.second),
                                    table, pass));
            s.result(std::string("cz ") + to_string(pair.first) + to_string(pair.second), pass);
        }
    }
    s.finish();
    return s.all_pass ? 0 : 1;
}

int cmd_surgery(int d, const std::string& axis_name, const std::string& out) {
    Session s;
    Color axis = color_from_string(axis_name);
    auto a = build_stack(d);
    auto b = build_stack(d);

    auto m = merge_stacks(a, b, axis);
    s.emit(merge_report_to_json(m));
    s.result("merge", m.checks.all_pass());

    auto sp = split_stack(m, axis);
    s.emit(split_result_to_json(sp));
    s.result("split", sp.checks.all_pass());

    // sheet-to-stack merge on the same colour; the working face parity of the
    // sheet depends on the distance parity
    Merge2D3DReport rep2d;
    try {
        rep2d = merge_2d3d(build_2d(d, Picture::rotated, d % 2), a, axis);
    } catch (const std::invalid_argument&) {
        rep2d = merge_2d3d(build_2d(d, Picture::rotated, 1 - d % 2), a, axis);
    }
    s.emit(merge_2d3d_report_to_json(rep2d));
    s.result("merge_2d3d", rep2d.checks.all_pass());

    if (!out.empty()) {
        write_file(out + "/merged_stack.json", stack_to_json(m.merged).dump(2) + "\n");
        s.note("wrote " + out + "/merged_stack.json");
    }
    s.finish();
    return s.all_pass ? 0 : 1;
}

int cmd_concat(int d, std::size_t max_weight, const std::string& out) {
    Session s;
    auto stack = build_stack(d);
    auto cc = concatenate(stack);
    s.emit(concat_code_to_json(cc));

    auto rep = verify_colorcode_distance(cc, max_weight);
    s.emit(report_to_json(rep));
    s.result("concat distance certificate", rep.all_pass());

    if (!out.empty()) {
        export_code(cc.code, out, "colorcode");
        s.note("wrote " + out + "/colorcode.json and alists");
    }
    s.finish();
    return s.all_pass ? 0 : 1;
}

int cmd_circuits() {
    Session s;
    for (auto rep : {verify_teleported_h(), verify_ccz_injection(), verify_832_gates()}) {
        s.emit(report_to_json(rep));
        s.result(rep.title, rep.all_pass());
    }
    auto z = simulate_merge_mapping(build_2d(2, Picture::rotated, 0),
                                    build_2d(2, Picture::rotated, 0), Pauli::Z);
    s.emit(report_to_json(z));
    s.result(z.title, z.all_pass());
    auto x = simulate_merge_mapping(build_2d(2, Picture::rotated, 1),
                                    build_2d(2, Picture::rotated, 1), Pauli::X);
    s.emit(report_to_json(x));
    s.result(x.title, x.all_pass());
    s.finish();
    return s.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification toolkit for 3D surface code stacks"};
    app.require_subcommand(1);

    int d = 2;
    std::vector<int> dims;
    std::string out, format = "json", suite = "all", axis = "g";
    std::uint64_t samples = 0, seed = 1;
    std::size_t max_weight = 2;
    bool parallel = false;

    auto add_size = [&](CLI::App* cmd) {
        cmd->add_option("--d", d, "isotropic distance")->check(CLI::PositiveNumber);
        cmd->add_option("--dims", dims, "dx,dy,dz extents")->delimiter(',')->expected(3);
    };

    auto* build = app.add_subcommand("build", "construct a stack and export it");
    add_size(build);
    build->add_option("--out", out, "output directory");
    build->add_option("--format", format, "export format")
        ->check(CLI::IsMember({"alist", "json"}));

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_size(verify);
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"counts", "ccz", "cz", "fixture", "redundancy", "all"}));
    verify->add_option("--samples", samples, "sampled checks: number of samples");
    verify->add_option("--seed", seed, "sampled checks: RNG seed");
    verify->add_flag("--parallel", parallel, "use the parallel kernels");

    auto* surgery = app.add_subcommand("surgery", "merge and split two stacks");
    surgery->add_option("--d", d, "isotropic distance")->check(CLI::PositiveNumber);
    surgery->add_option("--axis", axis, "boundary colour to merge along")
        ->check(CLI::IsMember({"r", "g", "b"}));
    surgery->add_option("--out", out, "output directory");

    auto* concat = app.add_subcommand("concat", "concatenate with the cube code");
    concat->add_option("--d", d, "isotropic distance")->check(CLI::PositiveNumber);
    concat->add_option("--max-weight", max_weight, "exhaustive logical scan cutoff");
    concat->add_option("--out", out, "output directory");

    app.add_subcommand("circuits", "run the circuit-level oracles");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("build")) return cmd_build(d, dims, out, format);
        if (app.got_subcommand("verify")) return cmd_verify(d, dims, suite, samples, seed, parallel);
        if (app.got_subcommand("surgery")) return cmd_surgery(d, axis, out);
        if (app.got_subcommand("concat")) return cmd_concat(d, max_weight, out);
        return cmd_circuits();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
