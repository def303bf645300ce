#include "sc3d/concat832.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sc3d/gf2.hpp"

namespace sc3d {

Code832 code832() {
    Code832 c;
    c.code.n = 8;
    c.code.label = "[[8,3,2]]";
    c.code.hx = {BitVec::from_indices(8, {0, 1, 2, 3, 4, 5, 6, 7})};
    c.code.hz = {BitVec::from_indices(8, {0, 1, 2, 3}), BitVec::from_indices(8, {0, 1, 4, 5}),
                 BitVec::from_indices(8, {0, 2, 4, 6}), BitVec::from_indices(8, {4, 5, 6, 7})};
    c.code.logical_x = {BitVec::from_indices(8, {1, 3, 5, 7}),   // ry
                        BitVec::from_indices(8, {0, 1, 2, 3}),   // gy
                        BitVec::from_indices(8, {0, 1, 4, 5})};  // by
    c.code.logical_z = {BitVec::from_indices(8, {6, 7}),         // ry
                        BitVec::from_indices(8, {2, 6}),         // gy
                        BitVec::from_indices(8, {4, 6})};        // by
    c.vertex_parity = BitVec::from_indices(8, {0, 3, 5, 6});
    check_css(c.code);
    return c;
}

Circuit encoder_832() {
    Circuit enc;
    enc.n_qubits = 8;
    enc.add(GateKind::H, {6});
    for (int t : {0, 1, 3}) enc.add(GateKind::CX, {2, t});
    for (int t : {0, 1, 5}) enc.add(GateKind::CX, {4, t});
    for (int t : {1, 3, 5}) enc.add(GateKind::CX, {7, t});
    for (int t : {0, 1, 2, 3, 4, 5, 7}) enc.add(GateKind::CX, {6, t});
    return enc;
}

ConcatCode concatenate(const Stack& stack) {
    const Code832 blk = code832();
    const std::size_t n = stack.n();
    ConcatCode cc;
    cc.code.n = 8 * n;
    cc.code.label = "colorcode[d=" + std::to_string(stack.d()) + "]";
    cc.block_map.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < 8; ++i) cc.block_map[v][i] = 8 * v + i;

    auto lift = [&](const BitVec& rows_support, const BitVec& block_op) {
        BitVec out(8 * n);
        for (auto v : rows_support.indices())
            for (auto i : block_op.indices()) out.set(8 * v + i);
        return out;
    };

    for (Color c : {Color::r, Color::g, Color::b}) {
        const std::size_t li = static_cast<std::size_t>(c);
        const CssCode& sc = stack.codes.at(c);
        for (const auto& row : sc.hx) cc.code.hx.push_back(lift(row, blk.code.logical_x[li]));
        for (const auto& row : sc.hz) cc.code.hz.push_back(lift(row, blk.code.logical_z[li]));
        cc.inherited[c] = {lift(stack.canonical_z.at(c), blk.code.logical_z[li]),
                           lift(stack.canonical_x.at(c), blk.code.logical_x[li])};
    }
    for (std::size_t v = 0; v < n; ++v) {
        BitVec xall(8 * n);
        for (std::size_t i = 0; i < 8; ++i) xall.set(8 * v + i);
        cc.code.hx.push_back(std::move(xall));
        for (const auto& face : blk.code.hz) {
            BitVec z(8 * n);
            for (auto i : face.indices()) z.set(8 * v + i);
            cc.code.hz.push_back(std::move(z));
        }
    }
    for (Color c : {Color::r, Color::g, Color::b}) {
        cc.code.logical_z.push_back(cc.inherited.at(c).first);
        cc.code.logical_x.push_back(cc.inherited.at(c).second);
    }
    check_css(cc.code);
    return cc;
}

Report verify_colorcode_distance(const ConcatCode& cc, std::size_t max_weight, Exec exec) {
    Report rep;
    rep.title = "colour code distance scan on " + cc.code.label;
    const std::size_t n = cc.code.n;
    rep.add("qubit count = 8 x vertices", n == 8 * cc.block_map.size(),
            std::to_string(n) + " qubits");
    std::size_t rank_sum = gf2_rank(cc.code.hx) + gf2_rank(cc.code.hz);
    rep.add("independent generator count = n-3", rank_sum == n - 3,
            std::to_string(rank_sum));
    rep.add("k=3", code_k(cc.code) == 3);

    auto dx = brute_distance(cc.code, Pauli::X, max_weight, exec);
    auto dz = brute_distance(cc.code, Pauli::Z, max_weight, exec);
    rep.add("no X logical of weight <= " + std::to_string(max_weight), !dx,
            dx ? "witness weight " + std::to_string(dx->weight) : "");
    rep.add("no Z logical of weight <= " + std::to_string(max_weight), !dz,
            dz ? "witness weight " + std::to_string(dz->weight) : "");

    bool inherited_ok = true;
    std::size_t want_w = 0;
    for (const auto& [c, pair] : cc.inherited) {
        const BitVec& z = pair.first;
        const BitVec& x = pair.second;
        if (want_w == 0) want_w = z.popcount();
        if (z.popcount() != want_w) inherited_ok = false;
        for (const auto& row : cc.code.hx)
            if (BitVec::overlap_parity(z, row)) inherited_ok = false;
        for (const auto& row : cc.code.hz)
            if (BitVec::overlap_parity(x, row)) inherited_ok = false;
        if (!BitVec::overlap_parity(z, x)) inherited_ok = false;
        if (in_rowspan(z, cc.code.hz)) inherited_ok = false;
    }
    rep.add("inherited logicals valid at weight " + std::to_string(want_w), inherited_ok);

    // Damage sensitivity: drop block 0's five stabilizers and watch k move.
    CssCode mut = cc.code;
    const std::size_t mapped_x = cc.code.hx.size() - cc.block_map.size();
    const std::size_t mapped_z = cc.code.hz.size() - 4 * cc.block_map.size();
    mut.hx.erase(mut.hx.begin() + static_cast<std::ptrdiff_t>(mapped_x));
    mut.hz.erase(mut.hz.begin() + static_cast<std::ptrdiff_t>(mapped_z),
                 mut.hz.begin() + static_cast<std::ptrdiff_t>(mapped_z) + 4);
    std::size_t mut_k = code_k(mut);
    bool sensitive = mut_k != 3;
    if (!sensitive) {
        auto mx = brute_distance(mut, Pauli::X, max_weight, exec);
        auto mz = brute_distance(mut, Pauli::Z, max_weight, exec);
        sensitive = mx.has_value() || mz.has_value();
    }
    rep.add("deleting one block's stabilizers is detected", sensitive,
            "k becomes " + std::to_string(mut_k));
    return rep;
}

Report verify_832_gates() {
    Report rep;
    rep.title = "[[8,3,2]] cube code gates";
    const Code832 blk = code832();
    rep.add("k=3", code_k(blk.code) == 3);
    rep.add("Hz rank = 4", gf2_rank(blk.code.hz) == 4);
    auto dx = brute_distance(blk.code, Pauli::X, 2);
    auto dz = brute_distance(blk.code, Pauli::Z, 2);
    const std::size_t none = 99;
    std::size_t dmin = std::min(dx ? dx->weight : none, dz ? dz->weight : none);
    rep.add("brute distance = 2", dmin == 2);

    const Circuit enc = encoder_832();
    const double tol = 1e-10;
    bool enc_ok = true;
    for (int vry = 0; vry < 2; ++vry)
        for (int vgy = 0; vgy < 2; ++vgy)
            for (int vby = 0; vby < 2; ++vby) {
                std::uint64_t bits = (std::uint64_t(vgy) << 2) | (std::uint64_t(vby) << 4) |
                                     (std::uint64_t(vry) << 7);
                RunResult rr = run(enc, StateVector::basis(8, bits));
                StateVector want = encode_css_state(blk.code, {vry, vgy, vby});
                if (!equal_up_to_phase(rr.state, want, tol)) enc_ok = false;
            }
    rep.add("encoder reproduces all 8 codewords", enc_ok);

    const double h = std::sqrt(0.5);
    const cplx t_phase(h, h);
    bool ccz_ok = true;
    for (int vry = 0; vry < 2; ++vry)
        for (int vgy = 0; vgy < 2; ++vgy)
            for (int vby = 0; vby < 2; ++vby) {
                StateVector st = encode_css_state(blk.code, {vry, vgy, vby});
                StateVector want = st;
                for (int q = 0; q < 8; ++q)
                    st.apply_phase(q, blk.vertex_parity.get(std::size_t(q)) ? t_phase
                                                                            : std::conj(t_phase));
                const double sign = (vry & vgy & vby) ? -1.0 : 1.0;
                for (std::uint64_t i = 0; i < 256; ++i)
                    if (std::abs(st.amp(i) - sign * want.amp(i)) > tol) ccz_ok = false;
            }
    rep.add("corner T/Tdg pattern acts as logical CCZ (exact phases)", ccz_ok);
    return rep;
}

}  // namespace sc3d
