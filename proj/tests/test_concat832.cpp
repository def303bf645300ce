#include <set>

#include "doctest.h"
#include "sc3d/concat832.hpp"

using namespace sc3d;

TEST_CASE("cube code tables") {
    auto c = code832();
    CHECK(c.code.n == 8);
    CHECK(code_k(c.code) == 3);
    REQUIRE(c.code.hx.size() == 1);
    CHECK(c.code.hx[0].popcount() == 8);
    CHECK(gf2_rank(c.code.hz) == 4);

    REQUIRE(c.code.logical_x.size() == 3);
    REQUIRE(c.code.logical_z.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(c.code.logical_x[i].popcount() == 4);  // face membranes
        CHECK(c.code.logical_z[i].popcount() == 2);  // edge strings
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(BitVec::overlap_parity(c.code.logical_x[i], c.code.logical_z[j]) == (i == j));
    }
    CHECK_NOTHROW(check_css(c.code));

    CHECK(c.vertex_parity == BitVec::from_indices(8, {0, 3, 5, 6}));
    CHECK(brute_distance(c.code, Pauli::Z, 8)->weight == 2);
    CHECK(brute_distance(c.code, Pauli::X, 8)->weight == 4);
}

TEST_CASE("cube code encoder and corner pattern") {
    auto rep = verify_832_gates();
    for (auto& line : rep.checks) {
        INFO(line.name, ": ", line.detail);
        CHECK(line.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("encoder circuit shape") {
    auto enc = encoder_832();
    CHECK(enc.n_qubits == 8);
    CHECK(enc.measurement_count() == 0);
}

TEST_CASE("block concatenation of the distance 2 stack") {
    auto stack = build_stack(2);
    auto cc = concatenate(stack);
    CHECK(cc.code.n == 96);
    CHECK(cc.block_map.size() == 12);
    CHECK(gf2_rank(cc.code.hx) + gf2_rank(cc.code.hz) == 93);
    CHECK(code_k(cc.code) == 3);
    CHECK_NOTHROW(check_css(cc.code));

    // blocks partition the qubits
    std::set<std::size_t> seen;
    for (auto& blk : cc.block_map)
        for (auto q : blk) CHECK(seen.insert(q).second);
    CHECK(seen.size() == 96);

    REQUIRE(cc.code.logical_x.size() == 3);
    REQUIRE(cc.code.logical_z.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(BitVec::overlap_parity(cc.code.logical_x[i], cc.code.logical_z[j]) ==
                  (i == j));

    // inherited logicals: a weight-d line of weight-2 block strings, and a
    // membrane of weight-4 block faces
    for (auto& [c, pair] : cc.inherited) {
        auto& [z, x] = pair;
        CHECK(z.popcount() == 4);   // d * 2
        CHECK(x.popcount() == stack.canonical_x.at(c).popcount() * 4);
        for (auto& r : cc.code.hx) CHECK_FALSE(BitVec::overlap_parity(z, r));
        for (auto& r : cc.code.hz) CHECK_FALSE(BitVec::overlap_parity(x, r));
        CHECK_FALSE(in_rowspan(z, cc.code.hz));
        CHECK_FALSE(in_rowspan(x, cc.code.hx));
    }
}

TEST_CASE("distance certificate reacts to a damaged block") {
    auto cc = concatenate(build_stack(2));
    auto rep = verify_colorcode_distance(cc, 2);
    for (auto& line : rep.checks) {
        INFO(line.name, ": ", line.detail);
        CHECK(line.pass);
    }
    CHECK(rep.all_pass());
}
