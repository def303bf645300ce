#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sc3d/surgery.hpp"

using namespace sc3d;

namespace {

const Color kAll[] = {Color::r, Color::g, Color::b};

void check_embeddings(const MergeReport& m, std::size_t n_in) {
    REQUIRE(m.embed_a.size() == n_in);
    REQUIRE(m.embed_b.size() == n_in);
    std::set<std::size_t> seen;
    for (auto q : m.embed_a) CHECK(seen.insert(q).second);
    for (auto q : m.embed_b) CHECK(seen.insert(q).second);
    for (auto q : m.new_qubits) CHECK(seen.insert(q).second);
    CHECK(seen.size() == m.merged.n());
}

}  // namespace

TEST_CASE("distance 2 merge along each boundary colour") {
    auto a = build_stack(2);
    auto b = build_stack(2);
    for (Color axis : kAll) {
        auto m = merge_stacks(a, b, axis);
        INFO("axis ", to_string(axis));
        CHECK(m.checks.all_pass());
        CHECK(m.axis == axis);
        check_embeddings(m, 12);

        std::size_t expect_new = axis == Color::g ? 4 : 2;  // 2d(d-1) vs d(d-1)
        CHECK(m.new_qubits.size() == expect_new);
        CHECK(m.merged.n() == 24 + expect_new);

        // even distance: embedding preserves every colour
        for (std::size_t i = 0; i < 3; ++i) CHECK(m.color_map_b[i] == static_cast<Color>(i));

        for (Color c : kAll) {
            CHECK(code_k(m.merged.codes.at(c)) == 1);
            const auto& dx = m.x_rows.at(c);
            const auto& dz = m.z_rows.at(c);
            std::size_t total_x =
                dx.inherited.size() + dx.modified.size() + dx.fresh.size();
            CHECK(total_x == m.merged.codes.at(c).hx.size());
            std::size_t total_z =
                dz.inherited.size() + dz.modified.size() + dz.fresh.size();
            CHECK(total_z == m.merged.codes.at(c).hz.size());
            if (c != axis) {
                CHECK(dx.fresh.empty());
                CHECK(dz.fresh.size() > 0);
            }
        }
        CHECK(m.x_rows.at(axis).fresh.size() > 0);
        CHECK(m.measured_product.any());
    }
}

TEST_CASE("odd distance merge relabels the two side colours") {
    auto a = build_stack(3);
    auto b = build_stack(3);
    auto m = merge_stacks(a, b, Color::g);
    CHECK(m.checks.all_pass());
    CHECK(m.color_map_b[static_cast<std::size_t>(Color::r)] == Color::b);
    CHECK(m.color_map_b[static_cast<std::size_t>(Color::g)] == Color::g);
    CHECK(m.color_map_b[static_cast<std::size_t>(Color::b)] == Color::r);

    CHECK(m.new_qubits.size() == 12);  // 2d(d-1)
    // junction layer contributes d^2 octahedra and (d-1)^2 squares
    CHECK(m.x_rows.at(Color::g).fresh.size() == 9);
    CHECK(m.z_rows.at(Color::g).fresh.size() == 4);
    check_embeddings(m, 51);

    // the measured product is the embedded membrane pair modulo stabilizers
    BitVec target(m.merged.n());
    for (auto i : a.canonical_x.at(Color::g).indices()) target.set(m.embed_a[i]);
    for (auto i : b.canonical_x.at(Color::g).indices()) target.set(m.embed_b[i]);
    auto span = gf2_span(m.merged.codes.at(Color::g).hx, m.merged.n());
    CHECK(span.reduce(m.measured_product) == span.reduce(target));
}

TEST_CASE("odd distance merge along a side colour axis") {
    auto a = build_stack(3);
    auto b = build_stack(3);
    auto m = merge_stacks(a, b, Color::r);
    CHECK(m.checks.all_pass());
    CHECK(m.new_qubits.size() == 6);  // d(d-1)
    for (Color c : kAll) CHECK(code_k(m.merged.codes.at(c)) == 1);
}

TEST_CASE("split undoes the merge exactly") {
    auto a = build_stack(2);
    auto b = build_stack(2);
    for (Color axis : kAll) {
        auto m = merge_stacks(a, b, axis);
        auto s = split_stack(m, axis);
        INFO("axis ", to_string(axis));
        CHECK(s.checks.all_pass());
        CHECK(s.removed_qubits == m.new_qubits);
        // recovered stacks are freshly built reference stacks of the same size
        CHECK(s.a.n() == 12);
        CHECK(s.b.n() == 12);
        for (Color c : kAll) {
            CHECK(gf2_span(s.a.codes.at(c).hx, 12) == gf2_span(a.codes.at(c).hx, 12));
            CHECK(gf2_span(s.b.codes.at(c).hz, 12) == gf2_span(b.codes.at(c).hz, 12));
        }
        CHECK_THROWS_AS(
            split_stack(m, axis == Color::g ? Color::r : Color::g), std::invalid_argument);
    }
}

TEST_CASE("split works after an odd distance merge") {
    auto a = build_stack(3);
    auto m = merge_stacks(a, a, Color::b);
    auto s = split_stack(m, Color::b);
    CHECK(s.checks.all_pass());
    CHECK(s.removed_qubits.size() == 6);
}

TEST_CASE("merge rejects mismatched inputs") {
    auto a = build_stack(2);
    auto b = build_stack(3);
    CHECK_THROWS_AS(merge_stacks(a, b, Color::g), std::invalid_argument);
    auto aniso = build_stack({2, 3, 2});
    CHECK_THROWS_AS(merge_stacks(aniso, aniso, Color::g), std::invalid_argument);
}

TEST_CASE("sheet to stack merge, distance 2") {
    auto stack = build_stack(2);
    auto sheet = build_2d(2, Picture::rotated, 0);
    for (Color c : kAll) {
        auto rep = merge_2d3d(sheet, stack, c);
        INFO("colour ", to_string(c));
        CHECK(rep.checks.all_pass());
        CHECK(rep.ancillas.size() == 2);
        CHECK(rep.new_z_rows.size() == 3);
        CHECK(rep.merged.n == 4 + 2 + 12);
        CHECK(code_k(rep.merged) == 1);
        CHECK(rep.modified_x_rows.size() == rep.weight_changes.size());
        for (auto [old_w, new_w] : rep.weight_changes) CHECK(new_w == old_w + 2);

        // telescoped product = sheet edge column x stack line
        BitVec target(rep.merged.n);
        target.set(1);  // sheet qubit (0,1)
        target.set(3);  // sheet qubit (1,1)
        for (auto i : stack.canonical_z.at(c).indices()) target.set(rep.embed_stack[i]);
        BitVec acc(rep.merged.n);
        for (auto& r : rep.new_z_rows) acc ^= r;
        CHECK(acc == target);
    }
}

TEST_CASE("sheet to stack merge, distance 3") {
    auto stack = build_stack(3);
    auto sheet = build_2d(3, Picture::rotated, 1);
    auto rep = merge_2d3d(sheet, stack, Color::b);
    CHECK(rep.checks.all_pass());
    CHECK(rep.ancillas.size() == 3);
    CHECK(rep.new_z_rows.size() == 4);
    CHECK(code_k(rep.merged) == 1);

    // the sheet's right-edge X half grows 2 -> 4 and the stack's flattened
    // boundary cell grows 3 -> 5
    bool saw_sheet_half = false, saw_flat_cell = false;
    for (auto [old_w, new_w] : rep.weight_changes) {
        if (old_w == 2 && new_w == 4) saw_sheet_half = true;
        if (old_w == 3 && new_w == 5) saw_flat_cell = true;
    }
    CHECK(saw_sheet_half);
    CHECK(saw_flat_cell);
}

TEST_CASE("sheet to stack merge rejects incompatible sheets") {
    auto stack = build_stack(2);
    CHECK_THROWS_AS(merge_2d3d(build_2d(2, Picture::kitaev), stack, Color::g),
                    std::invalid_argument);
    CHECK_THROWS_AS(merge_2d3d(build_2d(3, Picture::rotated, 1), stack, Color::g),
                    std::invalid_argument);
}

TEST_CASE("statevector merge and split mapping, Z type") {
    auto sheet = build_2d(2, Picture::rotated, 0);
    auto rep = simulate_merge_mapping(sheet, sheet, Pauli::Z);
    for (auto& line : rep.checks) {
        INFO(line.name, ": ", line.detail);
        CHECK(line.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("statevector merge and split mapping, X type") {
    auto sheet = build_2d(2, Picture::rotated, 1);
    auto rep = simulate_merge_mapping(sheet, sheet, Pauli::X);
    CHECK(rep.all_pass());
}

TEST_CASE("statevector mapping rejects wrong inputs") {
    auto big = build_2d(3, Picture::rotated, 0);
    CHECK_THROWS_AS(simulate_merge_mapping(big, big, Pauli::Z), ResourceError);

    auto p0 = build_2d(2, Picture::rotated, 0);
    auto p1 = build_2d(2, Picture::rotated, 1);
    CHECK_THROWS_AS(simulate_merge_mapping(p1, p1, Pauli::Z), std::invalid_argument);
    CHECK_THROWS_AS(simulate_merge_mapping(p0, p0, Pauli::X), std::invalid_argument);
    CHECK_THROWS_AS(simulate_merge_mapping(p0, p1, Pauli::Z), std::invalid_argument);
}
