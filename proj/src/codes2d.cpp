#include <stdexcept>

#include "sc3d/stack.hpp"

namespace sc3d {

namespace {

CssCode build_rotated(int d, int parity) {
    CssCode code;
    code.n = static_cast<std::size_t>(d) * d;
    auto q = [d](int r, int c) { return static_cast<std::size_t>(r * d + c); };
    // Checkerboard face type, extended to the virtual boundary faces.
    auto is_x = [parity](int r, int c) { return ((r + c + parity) % 2 + 2) % 2 == 0; };

    for (int r = 0; r + 1 < d; ++r)
        for (int c = 0; c + 1 < d; ++c) {
            BitVec f(code.n);
            f.set(q(r, c));
            f.set(q(r, c + 1));
            f.set(q(r + 1, c));
            f.set(q(r + 1, c + 1));
            (is_x(r, c) ? code.hx : code.hz).push_back(std::move(f));
        }
    // Top and bottom edges carry the Z halves, left and right the X halves.
    for (int c = 0; c + 1 < d; ++c) {
        if (!is_x(-1, c)) {
            BitVec f(code.n);
            f.set(q(0, c));
            f.set(q(0, c + 1));
            code.hz.push_back(std::move(f));
        }
        if (!is_x(d - 1, c)) {
            BitVec f(code.n);
            f.set(q(d - 1, c));
            f.set(q(d - 1, c + 1));
            code.hz.push_back(std::move(f));
        }
    }
    for (int r = 0; r + 1 < d; ++r) {
        if (is_x(r, -1)) {
            BitVec f(code.n);
            f.set(q(r, 0));
            f.set(q(r + 1, 0));
            code.hx.push_back(std::move(f));
        }
        if (is_x(r, d - 1)) {
            BitVec f(code.n);
            f.set(q(r, d - 1));
            f.set(q(r + 1, d - 1));
            code.hx.push_back(std::move(f));
        }
    }
    BitVec zbar(code.n), xbar(code.n);
    for (int r = 0; r < d; ++r) zbar.set(q(r, 0));
    for (int c = 0; c < d; ++c) xbar.set(q(0, c));
    code.logical_z = {zbar};
    code.logical_x = {xbar};
    code.label = "rotated_d" + std::to_string(d) + (parity ? "B" : "A");
    return code;
}

CssCode build_kitaev(int d) {
    CssCode code;
    std::size_t nv = static_cast<std::size_t>(d) * d;
    code.n = nv + static_cast<std::size_t>(d - 1) * (d - 1);
    auto v = [d](int r, int c) { return static_cast<std::size_t>(r * d + c); };
    auto h = [d, nv](int r, int c) { return nv + static_cast<std::size_t>(r * (d - 1) + c); };

    for (int r = 0; r + 1 < d; ++r)
        for (int c = 0; c < d; ++c) {
            BitVec star(code.n);
            star.set(v(r, c));
            star.set(v(r + 1, c));
            if (c > 0) star.set(h(r, c - 1));
            if (c + 1 < d) star.set(h(r, c));
            code.hx.push_back(std::move(star));
        }
    for (int r = 0; r < d; ++r)
        for (int c = 0; c + 1 < d; ++c) {
            BitVec plaq(code.n);
            plaq.set(v(r, c));
            plaq.set(v(r, c + 1));
            if (r > 0) plaq.set(h(r - 1, c));
            if (r + 1 < d) plaq.set(h(r, c));
            code.hz.push_back(std::move(plaq));
        }
    BitVec zbar(code.n), xbar(code.n);
    for (int r = 0; r < d; ++r) zbar.set(v(r, 0));
    for (int c = 0; c < d; ++c) xbar.set(v(0, c));
    code.logical_z = {zbar};
    code.logical_x = {xbar};
    code.label = "kitaev_d" + std::to_string(d);
    return code;
}

}  // namespace

CssCode build_2d(int d, Picture picture, int parity) {
    if (d < 2) throw std::invalid_argument("2D code distance must be at least 2");
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    CssCode code =
        picture == Picture::rotated ? build_rotated(d, parity) : build_kitaev(d);
    check_css(code);
    if (code_k(code) != 1) throw ConsistencyError(code.label + ": expected one logical qubit");
    return code;
}

}  // namespace sc3d
