#include "sc3d/circuits.hpp"

#include <array>

namespace sc3d {

namespace {

StateVector product_state(const std::vector<std::array<cplx, 2>>& wires) {
    int n = static_cast<int>(wires.size());
    StateVector s(n);
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
        cplx a(1, 0);
        for (int q = 0; q < n; ++q) a *= wires[static_cast<std::size_t>(q)][(b >> q) & 1];
        s.amp(b) = a;
    }
    return s;
}

const std::array<cplx, 2> kZero{cplx(1, 0), cplx(0, 0)};
const std::array<cplx, 2> kPlus{cplx(kSqrt2Inv, 0), cplx(kSqrt2Inv, 0)};

}  // namespace

Circuit teleported_h_circuit() {
    Circuit c;
    c.n_qubits = 2;
    c.add(GateKind::H, {1});
    c.add(GateKind::CZ, {0, 1});
    c.add(GateKind::MeasureX, {0});
    c.add(GateKind::X, {1}, 0);
    return c;
}

Circuit teleported_h_chain(int hops) {
    Circuit c;
    c.n_qubits = 3;
    bool prepped[3] = {true, false, false};  // wire 0 carries the input
    int meas = 0;
    for (int h = 0; h < hops; ++h) {
        int src = h % 3, dst = (h + 1) % 3;
        if (!prepped[dst]) {
            c.add(GateKind::H, {dst});
            prepped[dst] = true;
        }
        c.add(GateKind::CZ, {src, dst});
        c.add(GateKind::MeasureX, {src});
        c.add(GateKind::X, {dst}, meas);
        c.add(GateKind::Z, {src}, meas);  // reset the measured wire to |+>
        ++meas;
    }
    return c;
}

Circuit ccz_injection_circuit() {
    Circuit c;
    c.n_qubits = 6;
    // resource register: CCZ |+++> on wires 0..2
    c.add(GateKind::H, {0});
    c.add(GateKind::H, {1});
    c.add(GateKind::H, {2});
    c.add(GateKind::CCZ, {0, 1, 2});
    // entangle with the data register (wires 3..5)
    c.add(GateKind::CX, {0, 3});
    c.add(GateKind::CX, {1, 4});
    c.add(GateKind::CX, {2, 5});
    // consume the data wires one at a time; each X byproduct converts the
    // remaining CCZ entanglement into a CZ byproduct on the other two wires
    c.add(GateKind::MeasureZ, {5});
    c.add(GateKind::X, {2}, 0);
    c.add(GateKind::CZ, {0, 1}, 0);
    c.add(GateKind::MeasureZ, {4});
    c.add(GateKind::X, {1}, 1);
    c.add(GateKind::CZ, {0, 2}, 1);
    c.add(GateKind::MeasureZ, {3});
    c.add(GateKind::X, {0}, 2);
    c.add(GateKind::CZ, {1, 2}, 2);
    return c;
}

Report verify_teleported_h() {
    Report rep{"teleported_h", {}};
    std::vector<std::pair<std::string, std::array<cplx, 2>>> inputs = {
        {"zero", {cplx(1, 0), cplx(0, 0)}},
        {"one", {cplx(0, 0), cplx(1, 0)}},
        {"plus", kPlus},
        {"generic", {cplx(0.6, 0), cplx(0, 0.8)}},
    };
    auto h_of = [](const std::array<cplx, 2>& v) {
        return std::array<cplx, 2>{(v[0] + v[1]) * kSqrt2Inv, (v[0] - v[1]) * kSqrt2Inv};
    };

    Circuit single = teleported_h_circuit();
    for (const auto& [name, psi] : inputs) {
        for (int m = 0; m < 2; ++m) {
            auto rr = run(single, product_state({psi, kZero}), {m});
            std::array<cplx, 2> src{cplx(kSqrt2Inv, 0), cplx(m ? -kSqrt2Inv : kSqrt2Inv, 0)};
            bool ok = equal_up_to_phase(rr.state, product_state({src, h_of(psi)}));
            rep.add("h_gate." + name + ".branch" + std::to_string(m), ok);
        }
    }

    // two hops move the state unchanged, three apply H; measured wires are
    // reset to |+> and reused
    for (int hops : {2, 3}) {
        Circuit chain = teleported_h_chain(hops);
        for (const auto& [name, psi] : inputs) {
            for (int b = 0; b < (1 << hops); ++b) {
                std::vector<int> forced;
                for (int i = 0; i < hops; ++i) forced.push_back((b >> i) & 1);
                auto rr = run(chain, product_state({psi, kZero, kZero}), forced);
                std::vector<std::array<cplx, 2>> want(3, kPlus);
                want[static_cast<std::size_t>(hops % 3)] = hops % 2 ? h_of(psi) : psi;
                bool ok = equal_up_to_phase(rr.state, product_state(want));
                rep.add("hops" + std::to_string(hops) + "." + name + ".branch" +
                            std::to_string(b),
                        ok);
            }
        }
    }
    return rep;
}

Report verify_ccz_injection() {
    Report rep{"ccz_injection", {}};
    Circuit inj = ccz_injection_circuit();

    auto embed_input = [&](const StateVector& data3) {
        StateVector s(6);
        s.amp(0) = 0;
        for (std::uint64_t b = 0; b < 8; ++b) s.amp(b << 3) = data3.amp(b);
        return s;
    };
    auto expected_state = [&](const StateVector& data3, int mx, int my, int mz) {
        StateVector out(6);
        out.amp(0) = 0;
        std::uint64_t meas = (std::uint64_t(mx) << 3) | (std::uint64_t(my) << 4) |
                             (std::uint64_t(mz) << 5);
        for (std::uint64_t b = 0; b < 8; ++b) {
            cplx a = data3.amp(b);
            if (b == 7) a = -a;  // CCZ on the data state
            out.amp(b | meas) = a;
        }
        return out;
    };

    std::vector<std::pair<std::string, StateVector>> inputs;
    for (std::uint64_t b = 0; b < 8; ++b)
        inputs.emplace_back("basis" + std::to_string(b), StateVector::basis(3, b));
    StateVector ghz(3);
    ghz.amp(0) = kSqrt2Inv;
    ghz.amp(7) = kSqrt2Inv;
    inputs.emplace_back("ghz", ghz);
    StateVector plus3(3);
    for (std::uint64_t b = 0; b < 8; ++b) plus3.amp(b) = cplx(0.5 * kSqrt2Inv, 0);
    inputs.emplace_back("plus3", plus3);

    for (const auto& [name, data3] : inputs) {
        for (int br = 0; br < 8; ++br) {
            int mz = br & 1, my = (br >> 1) & 1, mx = (br >> 2) & 1;
            auto rr = run(inj, embed_input(data3), {mz, my, mx});
            bool ok = equal_up_to_phase(rr.state, expected_state(data3, mx, my, mz));
            rep.add("inject." + name + ".branch" + std::to_string(br), ok);
        }
    }
    return rep;
}

}  // namespace sc3d
