#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sc3d/simkit.hpp"
#include "sc3d/stack.hpp"

using namespace sc3d;

TEST_CASE("statevector construction and gates") {
    CHECK_THROWS_AS(StateVector(17), ResourceError);

    auto s = StateVector::basis(2, 0b01);  // qubit 0 set
    CHECK(s.qubits() == 2);
    CHECK(s.amp(1) == cplx(1.0));

    s.apply_x(1);
    CHECK(s.amp(3) == cplx(1.0));
    s.apply_z(0);
    CHECK(s.amp(3) == cplx(-1.0));
    s.apply_cx(1, 0);
    CHECK(s.amp(2) == cplx(-1.0));
    s.apply_cz(0, 1);
    CHECK(s.amp(2) == cplx(-1.0));  // control bit 0 is zero: no phase
    s.apply_x(0);
    s.apply_cz(0, 1);
    CHECK(s.amp(3) == cplx(1.0));
}

TEST_CASE("hadamard and phase gates") {
    auto s = StateVector::basis(1, 0);
    s.apply_h(0);
    CHECK(std::abs(s.amp(0) - cplx(kSqrt2Inv)) < 1e-12);
    CHECK(std::abs(s.amp(1) - cplx(kSqrt2Inv)) < 1e-12);
    s.apply_phase(0, cplx(0, 1));  // S
    CHECK(std::abs(s.amp(1) - cplx(0, kSqrt2Inv)) < 1e-12);
    s.apply_h(0);
    CHECK(std::abs(std::norm(s.amp(0)) - 0.5) < 1e-12);
    CHECK(s.norm() == doctest::Approx(1.0));
}

TEST_CASE("ccz flips the sign of the all-ones component only") {
    auto s = StateVector::basis(3, 0);
    for (int q = 0; q < 3; ++q) s.apply_h(q);
    s.apply_ccz(0, 1, 2);
    for (std::uint64_t i = 0; i < 8; ++i) {
        double expect = (i == 7) ? -1.0 : 1.0;
        CHECK(std::abs(s.amp(i) - cplx(expect * std::pow(kSqrt2Inv, 3))) < 1e-12);
    }
}

TEST_CASE("pauli masks") {
    auto s = StateVector::basis(4, 0b0011);
    s.apply_x_mask(BitVec::from_indices(4, {1, 2}));
    CHECK(s.amp(0b0101) == cplx(1.0));
    s.apply_z_mask(BitVec::from_indices(4, {0, 2}));
    CHECK(s.amp(0b0101) == cplx(1.0));  // two set bits hit: sign cancels
    s.apply_z_mask(BitVec::from_indices(4, {0, 1}));
    CHECK(s.amp(0b0101) == cplx(-1.0));
}

TEST_CASE("z measurement on deterministic states") {
    auto s = StateVector::basis(2, 0b10);
    auto r = s.measure_z(1, std::nullopt, 0);
    CHECK(r.outcome == 1);
    CHECK(r.probability == doctest::Approx(1.0));
    CHECK_THROWS_AS(s.measure_z(1, 0, 0), std::invalid_argument);  // dead branch
}

TEST_CASE("x measurement projects and renormalizes") {
    auto s = StateVector::basis(1, 0);
    auto plus = s;
    plus.apply_h(0);
    auto r = plus.measure_x(0, std::nullopt, 0);
    CHECK(r.outcome == 0);
    CHECK(r.probability == doctest::Approx(1.0));

    // |0> measured in X: both branches probability 1/2; force each
    auto b0 = StateVector::basis(1, 0);
    auto r0 = b0.measure_x(0, 0, 0);
    CHECK(r0.probability == doctest::Approx(0.5));
    CHECK(std::abs(b0.amp(0) - cplx(kSqrt2Inv)) < 1e-12);
    CHECK(std::abs(b0.amp(1) - cplx(kSqrt2Inv)) < 1e-12);

    auto b1 = StateVector::basis(1, 0);
    auto r1 = b1.measure_x(0, 1, 0);
    CHECK(r1.probability == doctest::Approx(0.5));
    CHECK(std::abs(b1.amp(1) + cplx(kSqrt2Inv)) < 1e-12);
}

TEST_CASE("mask measurements agree with single qubit ones") {
    auto s = StateVector::basis(3, 0b101);
    auto r = s.measure_z_mask(BitVec::from_indices(3, {0, 2}), std::nullopt, 0);
    CHECK(r.outcome == 0);  // even parity of set bits
    CHECK(r.probability == doctest::Approx(1.0));
    auto r2 = s.measure_z_mask(BitVec::from_indices(3, {0, 1}), std::nullopt, 0);
    CHECK(r2.outcome == 1);

    // Bell pair: XX stabilizer value +1, single X fully random
    auto bell = StateVector::basis(2, 0);
    bell.apply_h(0);
    bell.apply_cx(0, 1);
    auto rx = bell.measure_x_mask(BitVec::from_indices(2, {0, 1}), std::nullopt, 0);
    CHECK(rx.outcome == 0);
    CHECK(rx.probability == doctest::Approx(1.0));
    auto single = bell.measure_x(0, 1, 0);
    CHECK(single.probability == doctest::Approx(0.5));
}

TEST_CASE("circuit run with forced and sampled branches") {
    Circuit c;
    c.n_qubits = 2;
    c.add(GateKind::H, {0});
    c.add(GateKind::CX, {0, 1});
    c.add(GateKind::MeasureZ, {0});
    c.add(GateKind::X, {1}, 0);  // undo the correlation when outcome is 1
    CHECK(c.measurement_count() == 1);

    for (int forced : {0, 1}) {
        auto res = run(c, StateVector::basis(2, 0), {forced});
        REQUIRE(res.outcomes.size() == 1);
        CHECK(res.outcomes[0] == forced);
        CHECK(res.probabilities[0] == doctest::Approx(0.5));
        CHECK(std::abs(res.state.amp(forced ? 1 : 0) - cplx(1.0)) < 1e-12);
    }

    // seeded sampling is deterministic
    auto a = run(c, StateVector::basis(2, 0), {}, 42);
    auto b = run(c, StateVector::basis(2, 0), {}, 42);
    CHECK(a.outcomes == b.outcomes);
}

TEST_CASE("gate kinds dispatch through run") {
    Circuit c;
    c.n_qubits = 1;
    c.add(GateKind::H, {0});
    c.add(GateKind::T, {0});
    c.add(GateKind::Tdg, {0});
    c.add(GateKind::S, {0});
    c.add(GateKind::Sdg, {0});
    c.add(GateKind::H, {0});
    auto res = run(c, StateVector::basis(1, 0));
    CHECK(equal_up_to_phase(res.state, StateVector::basis(1, 0)));
}

TEST_CASE("equal_up_to_phase tolerates a global phase only") {
    auto a = StateVector::basis(2, 1);
    auto b = a;
    b.apply_z(0);  // global -1 on this basis state
    CHECK(equal_up_to_phase(a, b));
    auto c = StateVector::basis(2, 2);
    CHECK_FALSE(equal_up_to_phase(a, c));
}

TEST_CASE("encode_css_state produces stabilizer eigenstates") {
    auto code = build_2d(2, Picture::rotated, 0);
    for (int v : {0, 1}) {
        auto s = encode_css_state(code, {v});
        CHECK(s.norm() == doctest::Approx(1.0));
        for (auto& row : code.hx) {
            auto t = s;
            t.apply_x_mask(row);
            CHECK(equal_up_to_phase(s, t));
        }
        for (auto& row : code.hz) {
            auto m = s.measure_z_mask(row, std::nullopt, 0);
            CHECK(m.outcome == 0);
        }
        auto lz = s.measure_z_mask(code.logical_z[0], std::nullopt, 0);
        CHECK(lz.outcome == v);
        CHECK(lz.probability == doctest::Approx(1.0));
    }
}

TEST_CASE("splitmix64 matches the reference sequence") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafull);
    CHECK(splitmix64(0x9e3779b97f4a7c15ull) == 0x6e789e6aa1b965f4ull);
    CHECK(splitmix64(1) != splitmix64(2));
}
