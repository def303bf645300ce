#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "sc3d/gf2.hpp"

using namespace sc3d;

namespace {

std::vector<BitVec> rows_from(std::size_t n,
                              std::initializer_list<std::initializer_list<std::size_t>> lists) {
    std::vector<BitVec> out;
    for (auto& l : lists) out.push_back(BitVec::from_indices(n, l));
    return out;
}

}  // namespace

TEST_CASE("basis insert tracks independence") {
    Gf2Basis b(6);
    CHECK(b.insert(BitVec::from_indices(6, {0, 1})));
    CHECK(b.insert(BitVec::from_indices(6, {1, 2})));
    CHECK_FALSE(b.insert(BitVec::from_indices(6, {0, 2})));
    CHECK(b.rank() == 2);
    CHECK(b.contains(BitVec::from_indices(6, {0, 2})));
    CHECK_FALSE(b.contains(BitVec::from_indices(6, {0, 3})));
    CHECK_FALSE(b.insert(BitVec(6)));
}

TEST_CASE("basis is a canonical form: span equality means equality") {
    auto rows = rows_from(8, {{0, 1, 2}, {2, 3}, {4, 5, 6}, {0, 3}, {1, 6}});
    Gf2Basis a(8);
    for (auto& r : rows) a.insert(r);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        auto shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        // also mix rows together: same span, different generating set
        if (shuffled.size() > 1) shuffled[0] ^= shuffled[1];
        Gf2Basis c(8);
        for (auto& r : shuffled) c.insert(r);
        CHECK(a == c);
    }

    Gf2Basis d(8);
    for (auto& r : rows) d.insert(r);
    d.insert(BitVec::from_indices(8, {7}));
    CHECK_FALSE(a == d);
}

TEST_CASE("rank, span membership, independent subset") {
    auto rows = rows_from(5, {{0, 1}, {1, 2}, {0, 2}, {3}});
    CHECK(gf2_rank(rows) == 3);
    CHECK(in_rowspan(BitVec::from_indices(5, {0, 2}), rows));
    CHECK(in_rowspan(BitVec::from_indices(5, {0, 1, 3}), rows));
    CHECK_FALSE(in_rowspan(BitVec::from_indices(5, {4}), rows));

    auto keep = independent_rows(rows, 5);
    CHECK(keep == std::vector<std::size_t>{0, 1, 3});

    auto span = gf2_span(rows, 5);
    CHECK(span.rank() == 3);
    CHECK(span.contains(BitVec::from_indices(5, {0, 2, 3})));
}

TEST_CASE("solve returns combination coefficients") {
    auto rows = rows_from(6, {{0, 1}, {1, 2}, {2, 3}, {4}});
    auto sol = gf2_solve(rows, BitVec::from_indices(6, {0, 3}));
    REQUIRE(sol.has_value());
    BitVec acc(6);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((*sol)[i]) acc ^= rows[i];
    CHECK(acc == BitVec::from_indices(6, {0, 3}));

    CHECK_FALSE(gf2_solve(rows, BitVec::from_indices(6, {5})).has_value());
    auto zero = gf2_solve(rows, BitVec(6));
    REQUIRE(zero.has_value());
    CHECK(std::count(zero->begin(), zero->end(), 1) == 0);
}

TEST_CASE("kernel of the syndrome map") {
    auto rows = rows_from(5, {{0, 1}, {1, 2}});
    auto ker = gf2_kernel(rows, 5);
    CHECK(ker.size() == 3);  // n - rank
    for (auto& v : ker)
        for (auto& r : rows) CHECK_FALSE(BitVec::overlap_parity(v, r));
    CHECK(gf2_rank(ker) == 3);

    // empty row set: kernel is everything
    CHECK(gf2_kernel({}, 4).size() == 4);
}

TEST_CASE("pivots are the lowest set indices, ascending") {
    auto rows = rows_from(6, {{1, 3}, {0, 1}, {3, 5}});
    auto span = gf2_span(rows, 6);
    auto piv = span.pivots();
    REQUIRE(piv.size() == 3);
    CHECK(std::is_sorted(piv.begin(), piv.end()));
    for (std::size_t i = 0; i < piv.size(); ++i) CHECK(span.rows()[i].first_set() == piv[i]);
    // RREF: no other row touches a pivot column
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < piv.size(); ++j)
            if (i != j) CHECK_FALSE(span.rows()[j].get(piv[i]));
}
