#include "sc3d/stack.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace sc3d {

namespace {

constexpr std::array<Color, 3> kColors{Color::r, Color::g, Color::b};

BitVec line_support(const Lattice& lat, int axis) {
    // axis 0: (x,0,1); axis 1: (0,y,1); axis 2: (0,0,z)
    BitVec v(lat.n());
    for (std::size_t i = 0; i < lat.n(); ++i) {
        const Coord3& c = lat.vertices[i];
        bool on = axis == 0   ? (c.y == 0 && c.z == 1)
                  : axis == 1 ? (c.x == 0 && c.z == 1)
                              : (c.x == 0 && c.y == 0);
        if (on) v.set(i);
    }
    return v;
}

BitVec plane_support(const Lattice& lat, int axis) {
    // axis 0: x=0 plane; axis 1: y=0; axis 2: z=1
    BitVec v(lat.n());
    for (std::size_t i = 0; i < lat.n(); ++i) {
        const Coord3& c = lat.vertices[i];
        int value = axis == 0 ? c.x : axis == 1 ? c.y : c.z;
        if (value == (axis == 2 ? 1 : 0)) v.set(i);
    }
    return v;
}

bool commutes_with_all(const BitVec& v, const std::vector<BitVec>& rows) {
    for (const auto& r : rows)
        if (BitVec::overlap_parity(v, r)) return false;
    return true;
}

}  // namespace

Stack build_stack(const LatticeDims& dims) {
    Stack st;
    st.lattice = build_lattice(dims);
    const Lattice& lat = st.lattice;
    const std::size_t n = lat.n();

    // Canonical logicals: Z strings along the triple boundary intersections,
    // X membranes on the matching boundary planes.
    st.canonical_z[Color::r] = line_support(lat, 0);
    st.canonical_z[Color::b] = line_support(lat, 1);
    st.canonical_z[Color::g] = line_support(lat, 2);
    st.canonical_x[Color::r] = plane_support(lat, 0);
    st.canonical_x[Color::b] = plane_support(lat, 1);
    st.canonical_x[Color::g] = plane_support(lat, 2);

    for (Color c : kColors) {
        CssCode code;
        code.n = n;
        code.label = std::string("SC_") + to_string(c);
        for (const auto& cell : lat.cells)
            if (cell.color == c) code.hx.push_back(lat.support_vec(cell.support));
        for (const auto& face : lat.faces)
            if (face_code_color(face.pair) == c) code.hz.push_back(lat.support_vec(face.support));
        code.logical_z = {st.canonical_z.at(c)};
        code.logical_x = {st.canonical_x.at(c)};
        check_css(code);

        const BitVec& zb = st.canonical_z.at(c);
        const BitVec& xb = st.canonical_x.at(c);
        if (!commutes_with_all(zb, code.hx) || !commutes_with_all(xb, code.hz))
            throw ConsistencyError(code.label + ": canonical logical fails commutation");
        if (!BitVec::overlap_parity(zb, xb))
            throw ConsistencyError(code.label + ": canonical logicals do not anticommute");
        if (in_rowspan(zb, code.hz) || in_rowspan(xb, code.hx))
            throw ConsistencyError(code.label + ": canonical logical is a stabilizer");
        if (code_k(code) != 1)
            throw ConsistencyError(code.label + ": expected one logical qubit");

        st.codes.emplace(c, std::move(code));
    }
    return st;
}

CountReport verify_counts(const Stack& stack) {
    if (!stack.lattice.dims.isotropic())
        throw std::invalid_argument("verify_counts needs an isotropic stack");
    std::size_t d = static_cast<std::size_t>(stack.d());
    CountReport rep;
    rep.n = stack.n();
    rep.expect_n = isotropic_vertex_count(static_cast<int>(d));
    rep.pass = rep.n == rep.expect_n;
    for (Color c : kColors) {
        const CssCode& code = stack.codes.at(c);
        CountLine line;
        line.color = c;
        line.rank_x = gf2_rank(code.hx);
        line.rank_z = gf2_rank(code.hz);
        if (c == Color::g) {
            line.expect_x = d * d * (d - 1);
            line.expect_z = (d - 1) * (2 * d * d - d + 1);
        } else {
            line.expect_x = (d - 1) * (d * d + d) / 2;
            line.expect_z = (d - 1) * (5 * d * d - 3 * d + 2) / 2;
        }
        line.pass = line.rank_x == line.expect_x && line.rank_z == line.expect_z &&
                    line.rank_x + line.rank_z == rep.n - 1;
        rep.pass = rep.pass && line.pass;
        rep.lines.push_back(line);
    }
    return rep;
}

namespace {

std::vector<std::size_t> lbl(std::initializer_list<int> xs) {
    std::vector<std::size_t> out;
    out.reserve(xs.size());
    for (int v : xs) out.push_back(static_cast<std::size_t>(v - 1));
    return out;
}

std::vector<std::vector<std::size_t>> lbl_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& r : rows) out.push_back(lbl(r));
    return out;
}

constexpr std::size_t kFixtureN = 12;

BitVec fixture_vec(const std::vector<std::size_t>& idx) {
    return BitVec::from_indices(kFixtureN, idx.begin(), idx.end());
}

}  // namespace

FixtureD2 fixture_d2() {
    FixtureD2 f;
    f.x_rows[Color::r] = lbl_rows({{5, 6, 7, 8, 9, 10, 11, 12}, {1, 3, 5}, {2, 4, 7}});
    f.z_rows[Color::r] = lbl_rows({{6, 9}, {6, 10}, {8, 11}, {8, 12}, {1, 5, 6}, {2, 6, 7},
                                   {4, 7, 8}, {3, 5, 8}});
    f.logical_z[Color::r] = lbl({1, 3});
    f.logical_x[Color::r] = lbl({3, 4, 8, 11, 12});

    f.x_rows[Color::g] = lbl_rows({{1, 5, 6, 9}, {2, 6, 7, 10}, {3, 5, 8, 11}, {4, 7, 8, 12}});
    f.z_rows[Color::g] = lbl_rows({{1, 3, 5}, {1, 2, 6}, {2, 4, 7}, {3, 4, 8}, {5, 9, 11},
                                   {6, 9, 10}, {7, 10, 12}});
    f.logical_z[Color::g] = lbl({1, 9});
    f.logical_x[Color::g] = lbl({1, 2, 3, 4});

    f.x_rows[Color::b] = lbl_rows({{1, 2, 3, 4, 5, 6, 7, 8}, {6, 9, 10}, {8, 11, 12}});
    f.z_rows[Color::b] = lbl_rows({{1, 5}, {3, 5}, {2, 7}, {4, 7}, {5, 8, 11}, {5, 6, 9},
                                   {6, 7, 10}, {7, 8, 12}});
    f.logical_z[Color::b] = lbl({1, 2});
    f.logical_x[Color::b] = lbl({1, 3, 5, 9, 11});
    return f;
}

std::map<Color, CssCode> FixtureD2::as_codes() const {
    std::map<Color, CssCode> out;
    for (Color c : kColors) {
        CssCode code;
        code.n = kFixtureN;
        code.label = std::string("fixture_SC_") + to_string(c);
        for (const auto& r : x_rows.at(c)) code.hx.push_back(fixture_vec(r));
        for (const auto& r : z_rows.at(c)) code.hz.push_back(fixture_vec(r));
        code.logical_z = {fixture_vec(logical_z.at(c))};
        code.logical_x = {fixture_vec(logical_x.at(c))};
        check_css(code);
        out.emplace(c, std::move(code));
    }
    return out;
}

FixtureD2 load_fixture_d2(const std::string& json_path) {
    std::ifstream in(json_path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + json_path);
    nlohmann::json j;
    in >> j;
    FixtureD2 f;
    auto load_rows = [](const nlohmann::json& arr) {
        std::vector<std::vector<std::size_t>> rows;
        for (const auto& row : arr) {
            std::vector<std::size_t> r;
            for (const auto& v : row) r.push_back(v.get<std::size_t>() - 1);
            rows.push_back(std::move(r));
        }
        return rows;
    };
    auto load_one = [](const nlohmann::json& arr) {
        std::vector<std::size_t> r;
        for (const auto& v : arr) r.push_back(v.get<std::size_t>() - 1);
        return r;
    };
    for (const auto& [key, val] : j.at("codes").items()) {
        Color c = color_from_string(key);
        f.x_rows[c] = load_rows(val.at("x_rows"));
        f.z_rows[c] = load_rows(val.at("z_rows"));
        f.logical_z[c] = load_one(val.at("logical_z"));
        f.logical_x[c] = load_one(val.at("logical_x"));
    }
    return f;
}

namespace {

// Per-qubit signature: for each colour the sorted weights of the X rows
// covering the qubit. X rows are cell supports, identical row multisets on
// both sides, so signatures survive any valid relabeling.
using Signature = std::array<std::vector<std::size_t>, 3>;

Signature qubit_signature(std::size_t q, const std::array<std::vector<BitVec>, 3>& hx_by_color) {
    Signature sig;
    for (std::size_t ci = 0; ci < 3; ++ci) {
        for (const auto& row : hx_by_color[ci])
            if (row.get(q)) sig[ci].push_back(row.popcount());
        std::sort(sig[ci].begin(), sig[ci].end());
    }
    return sig;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_fixture_permutation(
    const std::map<Color, CssCode>& codes, const std::map<Color, BitVec>& canonical_z,
    const std::map<Color, BitVec>& canonical_x, const FixtureD2& fixture) {
    const std::size_t n = codes.at(Color::r).n;
    if (n != kFixtureN) return std::nullopt;

    std::array<std::vector<BitVec>, 3> gen_x, fix_x;
    for (std::size_t ci = 0; ci < 3; ++ci) {
        Color c = kColors[ci];
        gen_x[ci] = codes.at(c).hx;
        for (const auto& r : fixture.x_rows.at(c)) fix_x[ci].push_back(fixture_vec(r));
    }

    // Group qubits into signature classes; a valid map must respect them.
    std::map<Signature, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> classes;
    for (std::size_t q = 0; q < n; ++q) {
        classes[qubit_signature(q, gen_x)].first.push_back(q);
        classes[qubit_signature(q, fix_x)].second.push_back(q);
    }
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cls;
    for (auto& [sig, pr] : classes) {
        if (pr.first.size() != pr.second.size()) return std::nullopt;
        cls.push_back(pr);
    }

    std::vector<std::size_t> perm(n, BitVec::npos);
    auto apply = [&](const BitVec& v) {
        BitVec out(n);
        for (std::size_t i : v.indices()) out.set(perm[i]);
        return out;
    };

    auto leaf_ok = [&]() {
        for (Color c : kColors) {
            const CssCode& gen = codes.at(c);
            Gf2Basis gx(n), fx(n), gz(n), fz(n);
            for (const auto& r : gen.hx) gx.insert(apply(r));
            for (const auto& r : fixture.x_rows.at(c)) fx.insert(fixture_vec(r));
            if (!(gx == fx)) return false;
            for (const auto& r : gen.hz) gz.insert(apply(r));
            for (const auto& r : fixture.z_rows.at(c)) fz.insert(fixture_vec(r));
            if (!(gz == fz)) return false;

            std::vector<BitVec> fzr, fxr;
            for (const auto& r : fixture.z_rows.at(c)) fzr.push_back(fixture_vec(r));
            for (const auto& r : fixture.x_rows.at(c)) fxr.push_back(fixture_vec(r));
            BitVec dz = apply(canonical_z.at(c)) ^ fixture_vec(fixture.logical_z.at(c));
            if (!in_rowspan(dz, fzr)) return false;
            BitVec dx = apply(canonical_x.at(c)) ^ fixture_vec(fixture.logical_x.at(c));
            if (!in_rowspan(dx, fxr)) return false;
        }
        return true;
    };

    // Backtrack class by class over the (small) within-class assignments.
    std::function<bool(std::size_t)> descend = [&](std::size_t ci) -> bool {
        if (ci == cls.size()) return leaf_ok();
        auto& [gens, fixs] = cls[ci];
        std::vector<std::size_t> order = fixs;
        std::sort(order.begin(), order.end());
        do {
            for (std::size_t i = 0; i < gens.size(); ++i) perm[gens[i]] = order[i];
            if (descend(ci + 1)) return true;
        } while (std::next_permutation(order.begin(), order.end()));
        for (std::size_t g : gens) perm[g] = BitVec::npos;
        return false;
    };

    if (!descend(0)) return std::nullopt;
    return perm;
}

std::vector<std::size_t> match_fixture_d2(const Stack& stack) {
    if (!(stack.lattice.dims.isotropic() && stack.d() == 2))
        throw std::invalid_argument("fixture match is defined for the distance-2 stack");
    auto perm = find_fixture_permutation(stack.codes, stack.canonical_z, stack.canonical_x,
                                         fixture_d2());
    if (!perm)
        throw ConsistencyError(
            "no qubit relabeling matches the reference tables: geometry is wrong");
    return *perm;
}

namespace {

using FaceKey = std::tuple<int, int, int, int>;  // pair, x, y, z

FaceKey face_key(ColorPair p, const Coord3& c) {
    return {static_cast<int>(p), c.x, c.y, c.z};
}

}  // namespace

RedundancyReport redundancy_identities(const Stack& stack) {
    const Lattice& lat = stack.lattice;
    RedundancyReport rep;
    rep.pass = true;

    for (Color c : kColors) {
        const CssCode& code = stack.codes.at(c);
        RedundancyReport::PerColor line;
        line.color = c;
        line.rows = code.hz.size();
        line.rank = gf2_rank(code.hz);

        // Row lookup tables for this colour's Z checks.
        std::map<FaceKey, std::vector<std::size_t>> rows_at;     // all faces anchored there
        std::map<std::vector<std::size_t>, std::size_t> by_sup;  // exact support lookup
        {
            std::size_t row = 0;
            for (const auto& face : lat.faces) {
                if (face_code_color(face.pair) != c) continue;
                rows_at[face_key(face.pair, face.center)].push_back(row);
                by_sup[face.support] = row;
                ++row;
            }
        }

        std::vector<BitVec> indicators;  // over row indices
        bool sums_ok = true;
        auto add_identity = [&](const std::vector<std::size_t>& member_rows) {
            BitVec ind(line.rows);
            BitVec sum(code.n);
            for (std::size_t r : member_rows) {
                ind.set(r);
                sum ^= code.hz[r];
            }
            if (sum.any() || member_rows.empty()) sums_ok = false;
            indicators.push_back(std::move(ind));
        };

        if (c == Color::g) {
            // Every in-box cuboctahedron is tiled by its kept square faces.
            for (const auto& cell : lat.cells) {
                if (cell.color == Color::g || !lat.in_box(cell.center)) continue;
                std::vector<std::size_t> members;
                const Coord3 m = cell.center;
                for (const Coord3& fc : {Coord3{m.x - 1, m.y, m.z}, Coord3{m.x + 1, m.y, m.z},
                                         Coord3{m.x, m.y - 1, m.z}, Coord3{m.x, m.y + 1, m.z},
                                         Coord3{m.x, m.y, m.z - 1}, Coord3{m.x, m.y, m.z + 1}}) {
                    auto it = rows_at.find(face_key(ColorPair::rb, fc));
                    if (it == rows_at.end()) continue;
                    for (std::size_t r : it->second) members.push_back(r);
                }
                add_identity(members);
            }
        } else {
            // Triangle pair carrying this code's checks and the opposite
            // cuboctahedron colour.
            ColorPair pair = c == Color::b ? ColorPair::rg : ColorPair::gb;
            Color opp = c == Color::b ? Color::r : Color::b;

            // (a) complete octahedra: their four triangles of this pair tile
            // a closed band.
            for (const auto& cell : lat.cells) {
                if (cell.kind != CellKind::octahedron) continue;
                auto it = rows_at.find(face_key(pair, cell.center));
                std::vector<std::size_t> members;
                if (it != rows_at.end()) members = it->second;
                add_identity(members);
            }

            // (b) complete opposite-colour cuboctahedra: all eight triangle
            // faces carry this pair and tile the cell.
            for (const auto& cell : lat.cells) {
                if (cell.kind != CellKind::cuboctahedron || cell.color != opp) continue;
                const Coord3 m = cell.center;
                std::vector<std::size_t> members;
                bool found_all = true;
                for (int tx : {-1, 1})
                    for (int ty : {-1, 1})
                        for (int tz : {-1, 1}) {
                            std::vector<std::size_t> sup;
                            for (const Coord3& v :
                                 {Coord3{m.x, m.y + ty, m.z + tz}, Coord3{m.x + tx, m.y, m.z + tz},
                                  Coord3{m.x + tx, m.y + ty, m.z}}) {
                                std::size_t idx = lat.vertex_index(v);
                                if (idx != BitVec::npos) sup.push_back(idx);
                            }
                            std::sort(sup.begin(), sup.end());
                            auto it = by_sup.find(sup);
                            if (it == by_sup.end())
                                found_all = false;
                            else
                                members.push_back(it->second);
                        }
                if (!found_all) sums_ok = false;
                add_identity(members);
            }

            // (c) half octahedra resting on a boundary of this colour: two
            // whole triangles plus two boundary-clipped ones close up.
            int xmax = 2 * (lat.dims.dx - 1), ymax = 2 * (lat.dims.dy - 1);
            for (const auto& cell : lat.cells) {
                if (cell.color != Color::g || cell.kind != CellKind::clipped) continue;
                const Coord3 o = cell.center;
                bool on_b = o.y == 0 || o.y == ymax;
                bool on_r = o.x == 0 || o.x == xmax;
                // Strictly one boundary, and it must belong to this code.
                if (c == Color::b && !(on_b && !on_r)) continue;
                if (c == Color::r && !(on_r && !on_b)) continue;
                auto it = rows_at.find(face_key(pair, o));
                std::vector<std::size_t> members;
                if (it != rows_at.end()) members = it->second;
                add_identity(members);
            }

            // (d) flattened opposite-colour cuboctahedra past this code's own
            // boundary: their four boundary-clipped edge triangles run
            // between the cell's four surviving vertices, covering each
            // twice. Needs z interior, otherwise two of the edges are lost.
            for (const auto& cell : lat.cells) {
                if (cell.color != opp || cell.kind != CellKind::clipped) continue;
                const Coord3 m = cell.center;
                int out = c == Color::r ? m.x : m.y;
                if (out != -1 && out != (c == Color::r ? 2 * lat.dims.dx - 1
                                                       : 2 * lat.dims.dy - 1))
                    continue;
                int p = out == -1 ? 0 : out - 1;
                Coord3 ys[2], zs[2];
                if (c == Color::r) {
                    ys[0] = {p, m.y - 1, m.z}, ys[1] = {p, m.y + 1, m.z};
                } else {
                    ys[0] = {m.x - 1, p, m.z}, ys[1] = {m.x + 1, p, m.z};
                }
                if (c == Color::r) {
                    zs[0] = {p, m.y, m.z - 1}, zs[1] = {p, m.y, m.z + 1};
                } else {
                    zs[0] = {m.x, p, m.z - 1}, zs[1] = {m.x, p, m.z + 1};
                }
                bool ok = true;
                std::vector<std::size_t> members;
                for (const Coord3& a : ys)
                    for (const Coord3& bz : zs) {
                        std::size_t ia = lat.vertex_index(a), ib = lat.vertex_index(bz);
                        if (ia == BitVec::npos || ib == BitVec::npos) {
                            ok = false;
                            continue;
                        }
                        std::vector<std::size_t> sup{std::min(ia, ib), std::max(ia, ib)};
                        auto jt = by_sup.find(sup);
                        if (jt == by_sup.end())
                            ok = false;
                        else
                            members.push_back(jt->second);
                    }
                if (ok) add_identity(members);
            }
        }

        line.identity_count = indicators.size();
        bool independent = gf2_rank(indicators) == indicators.size();
        line.pass = sums_ok && independent && (line.rows - line.rank == line.identity_count);
        rep.pass = rep.pass && line.pass;
        rep.lines.push_back(line);
    }
    return rep;
}

}  // namespace sc3d
