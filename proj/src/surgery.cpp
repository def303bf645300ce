#include "sc3d/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sc3d/gf2.hpp"
#include "sc3d/simkit.hpp"

namespace sc3d {

namespace {

constexpr std::array<Color, 3> kColors{Color::r, Color::g, Color::b};

Color swap_color(Color c, bool swap_rb) {
    if (!swap_rb || c == Color::g) return c;
    return c == Color::r ? Color::b : Color::r;
}

ColorPair swap_pair(ColorPair p, bool swap_rb) {
    if (!swap_rb || p == ColorPair::rb) return p;
    return p == ColorPair::rg ? ColorPair::gb : ColorPair::rg;
}

int axis_coord(Color axis, const Coord3& c) {
    switch (axis) {
        case Color::r: return c.x;
        case Color::b: return c.y;
        default: return c.z;
    }
}

// Embedding of the second stack: translating by 2d along the axis flips the
// cuboctahedron two-colouring when d is odd, which would break the boundary
// clipping rules (they are tied to the fixed boundary colours). Composing
// with an x<->y transpose makes the colour swap consistent with the
// geometry, so every input row keeps a slot in the merged lattice.
Coord3 transform_b(const Coord3& v, Color axis, int d, bool transpose) {
    Coord3 t = transpose ? Coord3{v.y, v.x, v.z} : v;
    switch (axis) {
        case Color::r: t.x += 2 * d; break;
        case Color::b: t.y += 2 * d; break;
        default: t.z += 2 * d; break;
    }
    return t;
}

using SlotKey = std::tuple<int, int, int>;
using FaceKey = std::tuple<int, int, int, int>;

SlotKey key_of(const Coord3& c) { return {c.x, c.y, c.z}; }
FaceKey face_key(ColorPair p, const Coord3& c) {
    return {static_cast<int>(p), c.x, c.y, c.z};
}

BitVec embed_bits(const BitVec& v, const std::vector<std::size_t>& emb, std::size_t nm) {
    BitVec out(nm);
    for (auto q : v.indices()) out.set(emb[q]);
    return out;
}

// Cell/face supports of one input stack keyed by their merged-lattice slot.
struct SideTables {
    std::map<Color, std::map<SlotKey, BitVec>> cells;
    std::map<Color, std::map<FaceKey, std::vector<BitVec>>> faces;

    std::size_t leftover() const {
        std::size_t c = 0;
        for (const auto& [col, m] : cells) c += m.size();
        for (const auto& [col, m] : faces)
            for (const auto& [k, v] : m) c += v.size();
        return c;
    }
};

SideTables build_side(const Lattice& lat, const std::vector<std::size_t>& emb, std::size_t nm,
                      Color axis, int d, bool is_b, bool swap_rb) {
    SideTables t;
    for (const auto& cell : lat.cells) {
        Coord3 c = is_b ? transform_b(cell.center, axis, d, swap_rb) : cell.center;
        Color col = is_b ? swap_color(cell.color, swap_rb) : cell.color;
        t.cells[col].emplace(key_of(c), embed_bits(lat.support_vec(cell.support), emb, nm));
    }
    for (const auto& face : lat.faces) {
        Coord3 c = is_b ? transform_b(face.center, axis, d, swap_rb) : face.center;
        ColorPair p = is_b ? swap_pair(face.pair, swap_rb) : face.pair;
        t.faces[face_code_color(p)][face_key(p, c)].push_back(
            embed_bits(lat.support_vec(face.support), emb, nm));
    }
    return t;
}

// 0 = no slot, 1 = slot with smaller support, 2 = slot with equal support.
int consume_cell(std::map<SlotKey, BitVec>& m, const SlotKey& key, const BitVec& sup,
                 bool& subset_ok) {
    auto it = m.find(key);
    if (it == m.end()) return 0;
    int kind = it->second == sup ? 2 : 1;
    if (kind == 1 && !it->second.subset_of(sup)) subset_ok = false;
    m.erase(it);
    return kind;
}

int consume_face(std::map<FaceKey, std::vector<BitVec>>& m, const FaceKey& key,
                 const BitVec& sup) {
    auto it = m.find(key);
    if (it == m.end()) return 0;
    for (auto vit = it->second.begin(); vit != it->second.end(); ++vit)
        if (vit->subset_of(sup)) {
            int kind = *vit == sup ? 2 : 1;
            it->second.erase(vit);
            if (it->second.empty()) m.erase(it);
            return kind;
        }
    return 0;
}

// Removes the given columns from the row set by pivoting: the surviving rows
// span exactly the column-free part of the original row span.
std::vector<BitVec> eliminate_columns(std::vector<BitVec> rows,
                                      const std::vector<std::size_t>& cols) {
    for (auto col : cols) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(col)) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != pivot && rows[i].get(col)) rows[i] ^= rows[pivot];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
    }
    return rows;
}

std::string count3(std::size_t a, std::size_t b, std::size_t c) {
    return std::to_string(a) + " inherited / " + std::to_string(b) + " modified / " +
           std::to_string(c) + " fresh";
}

}  // namespace

MergeReport merge_stacks(const Stack& a, const Stack& b, Color axis) {
    if (!a.lattice.dims.isotropic() || !b.lattice.dims.isotropic() ||
        a.lattice.dims.dx != b.lattice.dims.dx)
        throw std::invalid_argument("merge_stacks: need two isotropic stacks of equal distance");
    const int d = a.lattice.dims.dx;
    const bool swap_rb = d % 2 != 0;

    MergeReport rep;
    rep.axis = axis;
    LatticeDims dims{d, d, d};
    switch (axis) {
        case Color::r: dims.dx *= 2; break;
        case Color::b: dims.dy *= 2; break;
        default: dims.dz *= 2; break;
    }
    rep.merged = build_stack(dims);
    rep.checks.title = std::string("merge_stacks axis=") + to_string(axis) +
                       " d=" + std::to_string(d);

    const Lattice& ml = rep.merged.lattice;
    const std::size_t nm = ml.n();

    rep.embed_a.resize(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
        rep.embed_a[i] = ml.vertex_index(a.lattice.vertices[i]);
        if (rep.embed_a[i] == BitVec::npos)
            throw ConsistencyError("merge_stacks: embedding inconsistency on side a");
    }
    rep.embed_b.resize(b.n());
    for (std::size_t i = 0; i < b.n(); ++i) {
        rep.embed_b[i] = ml.vertex_index(transform_b(b.lattice.vertices[i], axis, d, swap_rb));
        if (rep.embed_b[i] == BitVec::npos)
            throw ConsistencyError("merge_stacks: embedding inconsistency on side b");
    }
    rep.color_map_b = {swap_color(Color::r, swap_rb), Color::g, swap_color(Color::b, swap_rb)};
    auto mapped = [&](Color c) { return rep.color_map_b[static_cast<std::size_t>(c)]; };

    std::vector<int> cover(nm, 0);
    for (auto q : rep.embed_a) ++cover[q];
    for (auto q : rep.embed_b) ++cover[q];
    bool disjoint = true;
    for (std::size_t q = 0; q < nm; ++q) {
        if (cover[q] > 1) disjoint = false;
        if (cover[q] == 0) rep.new_qubits.push_back(q);
    }
    rep.checks.add("embeddings injective with disjoint images", disjoint);

    const std::size_t expected_new =
        axis == Color::g ? 2 * std::size_t(d) * (d - 1) : std::size_t(d) * (d - 1);
    rep.checks.add("junction qubit count",
                   rep.new_qubits.size() == expected_new,
                   std::to_string(rep.new_qubits.size()) + " expected " +
                       std::to_string(expected_new));
    const int jc = axis == Color::g ? 2 * d : 2 * d - 1;
    bool on_plane = true;
    for (auto q : rep.new_qubits)
        if (axis_coord(axis, ml.vertices[q]) != jc) on_plane = false;
    rep.checks.add("junction qubits confined to one plane", on_plane);

    BitVec junction = BitVec::from_indices(nm, rep.new_qubits);

    SideTables ta = build_side(a.lattice, rep.embed_a, nm, axis, d, false, false);
    SideTables tb = build_side(b.lattice, rep.embed_b, nm, axis, d, true, swap_rb);

    std::vector<BitVec> fresh_axis_x;
    for (Color c : kColors) {
        const CssCode& mc = rep.merged.codes.at(c);
        RowDelta dx, dz;
        bool subset_ok = true, touch_ok = true, aligned = true;

        std::size_t row = 0;
        for (const auto& cell : ml.cells) {
            if (cell.color != c) continue;
            BitVec sup = ml.support_vec(cell.support);
            if (!(mc.hx[row] == sup)) aligned = false;
            int ka = consume_cell(ta.cells[c], key_of(cell.center), sup, subset_ok);
            int kb = consume_cell(tb.cells[c], key_of(cell.center), sup, subset_ok);
            if (ka == 0 && kb == 0) {
                dx.fresh.push_back(row);
                if (c == axis) fresh_axis_x.push_back(sup);
            } else if (ka == 2 || kb == 2) {
                if (ka + kb > 2) subset_ok = false;
                dx.inherited.push_back(row);
            } else {
                dx.modified.push_back(row);
                if (!sup.intersects(junction)) touch_ok = false;
            }
            ++row;
        }
        row = 0;
        for (const auto& face : ml.faces) {
            if (face_code_color(face.pair) != c) continue;
            BitVec sup = ml.support_vec(face.support);
            if (!(mc.hz[row] == sup)) aligned = false;
            FaceKey key = face_key(face.pair, face.center);
            int ka = consume_face(ta.faces[c], key, sup);
            int kb = consume_face(tb.faces[c], key, sup);
            if (ka == 0 && kb == 0) {
                dz.fresh.push_back(row);
            } else if (ka == 2 || kb == 2) {
                if (ka + kb > 2) subset_ok = false;
                dz.inherited.push_back(row);
            } else {
                dz.modified.push_back(row);
                if (!sup.intersects(junction)) touch_ok = false;
            }
            ++row;
        }

        std::string lbl = std::string("SC_") + to_string(c);
        rep.checks.add(lbl + " rows aligned with lattice order", aligned);
        rep.checks.add(lbl + " X rows classified", subset_ok,
                       count3(dx.inherited.size(), dx.modified.size(), dx.fresh.size()));
        rep.checks.add(lbl + " Z rows classified", true,
                       count3(dz.inherited.size(), dz.modified.size(), dz.fresh.size()));
        rep.checks.add(lbl + " modified rows touch the junction", touch_ok);
        rep.checks.add(lbl + " merged code k=1", code_k(mc) == 1);
        rep.x_rows[c] = std::move(dx);
        rep.z_rows[c] = std::move(dz);
    }
    std::size_t leftover = ta.leftover() + tb.leftover();
    rep.checks.add("every input row has a merged slot", leftover == 0,
                   std::to_string(leftover) + " unmatched");

    // X-type direction: the fresh X generators of the axis colour measure the
    // product of the two X logicals.
    rep.measured_product = BitVec(nm);
    for (const auto& s : fresh_axis_x) rep.measured_product ^= s;
    const CssCode& ax_code = rep.merged.codes.at(axis);
    const Color cb = mapped(axis);
    if (axis == Color::g) {
        std::size_t fx = rep.x_rows[axis].fresh.size();
        std::size_t fz = rep.z_rows[axis].fresh.size();
        rep.checks.add("axis fresh generators = junction size + 1",
                       fx + fz == rep.new_qubits.size() + 1,
                       std::to_string(fx) + "+" + std::to_string(fz));
    }
    bool commutes = true;
    for (const auto& z : ax_code.hz)
        if (BitVec::overlap_parity(rep.measured_product, z)) commutes = false;
    rep.checks.add("measured product commutes with the axis Z checks", commutes);

    BitVec exa = embed_bits(a.canonical_x.at(axis), rep.embed_a, nm);
    BitVec exb = embed_bits(b.canonical_x.at(cb), rep.embed_b, nm);
    rep.checks.add("measured product = embedded X logical pair modulo merged X span",
                   in_rowspan(rep.measured_product ^ exa ^ exb, ax_code.hx));
    BitVec eza = embed_bits(a.canonical_z.at(axis), rep.embed_a, nm);
    BitVec ezb = embed_bits(b.canonical_z.at(cb), rep.embed_b, nm);
    rep.checks.add("measured product anticommutes both embedded Z logicals",
                   BitVec::overlap_parity(rep.measured_product, eza) &&
                       BitVec::overlap_parity(rep.measured_product, ezb));

    // Z-type direction for the other two colours: the embedded Z logical pair
    // becomes measurable, i.e. enters the merged Z span without being in the
    // span of the embedded input rows alone.
    for (Color c : kColors) {
        if (c == axis) continue;
        std::string lbl = std::string("SC_") + to_string(c);
        BitVec t = embed_bits(a.canonical_z.at(c), rep.embed_a, nm) ^
                   embed_bits(b.canonical_z.at(mapped(c)), rep.embed_b, nm);
        rep.checks.add(lbl + " embedded Z logical pair inside merged Z span",
                       in_rowspan(t, rep.merged.codes.at(c).hz));
        std::vector<BitVec> old_rows;
        for (const auto& r : a.codes.at(c).hz) old_rows.push_back(embed_bits(r, rep.embed_a, nm));
        for (const auto& r : b.codes.at(mapped(c)).hz)
            old_rows.push_back(embed_bits(r, rep.embed_b, nm));
        rep.checks.add(lbl + " embedded Z logical pair outside the old Z span",
                       !in_rowspan(t, old_rows));
    }

    if (!rep.checks.all_pass()) {
        std::string failed;
        for (const auto& c : rep.checks.checks)
            if (!c.pass) failed += " [" + c.name + "]";
        throw ConsistencyError("merge_stacks verification failed:" + failed);
    }
    return rep;
}

SplitResult split_stack(const MergeReport& m, Color axis) {
    if (axis != m.axis) throw std::invalid_argument("split_stack: axis does not match the merge");
    const LatticeDims& md = m.merged.lattice.dims;
    const int d = axis == Color::r ? md.dy : md.dx;

    SplitResult res{build_stack(d), build_stack(d), m.new_qubits, {}};
    res.checks.title = std::string("split_stack axis=") + to_string(axis);

    const std::size_t nm = m.merged.n();
    BitVec im_a(nm), im_b(nm);
    std::vector<std::size_t> inv_a(nm, BitVec::npos), inv_b(nm, BitVec::npos);
    for (std::size_t i = 0; i < m.embed_a.size(); ++i) {
        im_a.set(m.embed_a[i]);
        inv_a[m.embed_a[i]] = i;
    }
    for (std::size_t i = 0; i < m.embed_b.size(); ++i) {
        im_b.set(m.embed_b[i]);
        inv_b[m.embed_b[i]] = i;
    }

    const int jc = axis == Color::g ? 2 * d : 2 * d - 1;
    bool on_plane = true;
    for (auto q : res.removed_qubits)
        if (axis_coord(axis, m.merged.lattice.vertices[q]) != jc) on_plane = false;
    res.checks.add("removed qubits lie on the junction plane", on_plane,
                   std::to_string(res.removed_qubits.size()) + " qubits");

    auto mapped = [&](Color c) { return m.color_map_b[static_cast<std::size_t>(c)]; };
    auto to_local = [&](const BitVec& v, const std::vector<std::size_t>& inv, std::size_t nl) {
        BitVec out(nl);
        for (auto q : v.indices()) {
            if (inv[q] == BitVec::npos)
                throw ConsistencyError("split_stack: embedding inconsistency");
            out.set(inv[q]);
        }
        return out;
    };

    // Measuring the junction layer in the conjugate basis keeps the rows of
    // one type (they restrict to each side) and destroys the junction part of
    // the other type (junction-free combinations survive).
    bool no_straddle = true;
    auto restrict_side = [&](const std::vector<BitVec>& rows, const BitVec& im) {
        std::vector<BitVec> out;
        for (const auto& r : rows) {
            BitVec rr = BitVec::and_of(r, im);
            if (rr.any()) out.push_back(rr);
        }
        return out;
    };
    auto survivors = [&](const std::vector<BitVec>& rows, const BitVec& im) {
        std::vector<BitVec> kept;
        for (const auto& r : eliminate_columns(rows, m.new_qubits))
            if (r.any() && r.subset_of(im)) kept.push_back(r);
        return kept;
    };

    for (Color c : kColors) {
        const CssCode& mc = m.merged.codes.at(c);
        if (c == axis) {
            for (const auto& r : mc.hz)
                if (BitVec::and_of(r, im_a).any() && BitVec::and_of(r, im_b).any())
                    no_straddle = false;
        }
        for (int side = 0; side < 2; ++side) {
            const BitVec& im = side == 0 ? im_a : im_b;
            const auto& inv = side == 0 ? inv_a : inv_b;
            const Stack& fresh = side == 0 ? res.a : res.b;
            Color lc = side == 0 ? c : mapped(c);
            const CssCode& target = fresh.codes.at(lc);
            std::vector<BitVec> rx = c == axis ? survivors(mc.hx, im) : restrict_side(mc.hx, im);
            std::vector<BitVec> rz = c == axis ? restrict_side(mc.hz, im) : survivors(mc.hz, im);

            Gf2Basis bx(target.n), bz(target.n);
            for (const auto& r : rx) bx.insert(to_local(r, inv, target.n));
            for (const auto& r : rz) bz.insert(to_local(r, inv, target.n));
            std::string lbl = std::string(side == 0 ? "side a" : "side b") + " SC_" +
                              to_string(lc);
            res.checks.add(lbl + " X span restored",
                           bx == gf2_span(target.hx, target.n));
            res.checks.add(lbl + " Z span restored",
                           bz == gf2_span(target.hz, target.n));
        }
    }
    res.checks.add("axis Z rows never straddle the two sides", no_straddle);

    if (!res.checks.all_pass()) {
        std::string failed;
        for (const auto& c : res.checks.checks)
            if (!c.pass) failed += " [" + c.name + "]";
        throw ConsistencyError("split_stack verification failed:" + failed);
    }
    return res;
}

Merge2D3DReport merge_2d3d(const CssCode& sheet, const Stack& stack, Color color) {
    if (!stack.lattice.dims.isotropic())
        throw std::invalid_argument("merge_2d3d: stack must be isotropic");
    const int d = stack.d();
    const std::size_t ns = std::size_t(d) * d;
    if (sheet.n != ns) throw std::invalid_argument("merge_2d3d: sheet distance mismatch");
    if (sheet.logical_z.size() != 1 || sheet.logical_x.size() != 1)
        throw std::invalid_argument("merge_2d3d: sheet must encode one qubit");
    BitVec col0(ns), row0(ns), rightcol(ns);
    for (int j = 0; j < d; ++j) {
        col0.set(std::size_t(j) * d);
        row0.set(std::size_t(j));
        rightcol.set(std::size_t(j) * d + d - 1);
    }
    if (!(sheet.logical_z[0] == col0) || !(sheet.logical_x[0] == row0))
        throw std::invalid_argument("merge_2d3d: sheet logicals not in canonical grid layout");
    if (!in_rowspan(rightcol ^ col0, sheet.hz))
        throw std::invalid_argument("merge_2d3d: sheet Z logical cannot be moved to the merge edge");

    const CssCode& sc = stack.codes.at(color);
    std::vector<std::size_t> line = stack.canonical_z.at(color).indices();
    if (line.size() != std::size_t(d))
        throw ConsistencyError("merge_2d3d: canonical Z line has wrong weight");

    Merge2D3DReport rep;
    rep.color = color;
    rep.checks.title = std::string("merge_2d3d SC_") + to_string(color) +
                       " d=" + std::to_string(d);
    const std::size_t na = std::size_t(d);
    const std::size_t nq = ns + na + stack.n();
    rep.embed_sheet.resize(ns);
    for (std::size_t i = 0; i < ns; ++i) rep.embed_sheet[i] = i;
    rep.ancillas.resize(na);
    for (std::size_t i = 0; i < na; ++i) rep.ancillas[i] = ns + i;
    rep.embed_stack.resize(stack.n());
    for (std::size_t i = 0; i < stack.n(); ++i) rep.embed_stack[i] = ns + na + i;

    auto sheet_q = [&](std::size_t q) { return q; };
    auto anc = [&](std::size_t j) { return ns + j; };
    auto stack_q = [&](std::size_t q) { return ns + na + q; };

    // Ladder of d+1 Z generators telescoping to (sheet edge column) x (stack
    // line): caps tie an end ancilla to one chain, interior rungs alternate
    // between sheet pairs and stack pairs.
    auto S = [&](int j) { return sheet_q(std::size_t(j) * d + d - 1); };
    auto J = [&](int j) { return stack_q(line[static_cast<std::size_t>(j)]); };
    rep.new_z_rows.push_back(BitVec::from_indices(nq, {anc(0), J(0)}));
    for (int j = 0; j + 1 < d; ++j) {
        if (j % 2 == 0)
            rep.new_z_rows.push_back(
                BitVec::from_indices(nq, {S(j), S(j + 1), anc(std::size_t(j)), anc(std::size_t(j) + 1)}));
        else
            rep.new_z_rows.push_back(
                BitVec::from_indices(nq, {anc(std::size_t(j)), anc(std::size_t(j) + 1), J(j), J(j + 1)}));
    }
    if ((d - 1) % 2 == 0)
        rep.new_z_rows.push_back(BitVec::from_indices(nq, {S(d - 1), anc(na - 1)}));
    else
        rep.new_z_rows.push_back(BitVec::from_indices(nq, {anc(na - 1), J(d - 1)}));

    // Ancilla i sits in generators i and i+1 (path incidence); appending
    // ancilla X's repairs any even syndrome against the ladder.
    const std::size_t ng = rep.new_z_rows.size();
    std::vector<BitVec> incidence;
    for (std::size_t i = 0; i < na; ++i)
        incidence.push_back(BitVec::from_indices(ng, {i, i + 1}));
    bool repair_ok = true;
    auto repair = [&](BitVec row) {
        BitVec syn(ng);
        for (std::size_t g = 0; g < ng; ++g)
            if (BitVec::overlap_parity(row, rep.new_z_rows[g])) syn.set(g);
        if (!syn.any()) return row;
        auto sol = gf2_solve(incidence, syn);
        if (!sol) {
            repair_ok = false;
            return row;
        }
        for (std::size_t i = 0; i < na; ++i)
            if ((*sol)[i]) row.flip(anc(i));
        return row;
    };

    rep.merged.n = nq;
    rep.merged.label = std::string("merge_2d3d(SC_") + to_string(color) + ")";
    std::size_t idx = 0;
    for (const auto& r : sheet.hx) {
        BitVec e = embed_bits(r, rep.embed_sheet, nq);
        BitVec fixed = repair(e);
        if (!(fixed == e)) {
            rep.modified_x_rows.push_back(idx);
            rep.weight_changes.emplace_back(e.popcount(), fixed.popcount());
        }
        rep.merged.hx.push_back(std::move(fixed));
        ++idx;
    }
    for (const auto& r : sc.hx) {
        BitVec e = embed_bits(r, rep.embed_stack, nq);
        BitVec fixed = repair(e);
        if (!(fixed == e)) {
            rep.modified_x_rows.push_back(idx);
            rep.weight_changes.emplace_back(e.popcount(), fixed.popcount());
        }
        rep.merged.hx.push_back(std::move(fixed));
        ++idx;
    }
    std::vector<BitVec> old_hz;
    for (const auto& r : sheet.hz) old_hz.push_back(embed_bits(r, rep.embed_sheet, nq));
    for (const auto& r : sc.hz) old_hz.push_back(embed_bits(r, rep.embed_stack, nq));
    rep.merged.hz = old_hz;
    for (const auto& g : rep.new_z_rows) rep.merged.hz.push_back(g);

    rep.merged.logical_z.push_back(embed_bits(sheet.logical_z[0], rep.embed_sheet, nq));
    rep.merged.logical_x.push_back(repair(embed_bits(sheet.logical_x[0], rep.embed_sheet, nq) ^
                                          embed_bits(sc.logical_x[0], rep.embed_stack, nq)));

    rep.measured_product = BitVec(nq);
    for (const auto& g : rep.new_z_rows) rep.measured_product ^= g;

    rep.checks.add("ancilla count", rep.ancillas.size() == std::size_t(d),
                   std::to_string(rep.ancillas.size()));
    rep.checks.add("new Z generator count", rep.new_z_rows.size() == std::size_t(d) + 1,
                   std::to_string(rep.new_z_rows.size()));
    rep.checks.add("all X repairs solvable", repair_ok);
    BitVec expect = embed_bits(rightcol, rep.embed_sheet, nq) ^
                    embed_bits(stack.canonical_z.at(color), rep.embed_stack, nq);
    rep.checks.add("ladder telescopes to the edge/line pair", rep.measured_product == expect);
    BitVec pair_z = embed_bits(sheet.logical_z[0], rep.embed_sheet, nq) ^
                    embed_bits(stack.canonical_z.at(color), rep.embed_stack, nq);
    rep.checks.add("measured product = embedded Z logical pair modulo old Z rows",
                   in_rowspan(rep.measured_product ^ pair_z, old_hz));
    rep.checks.add("measured product outside the old Z span",
                   !in_rowspan(rep.measured_product, old_hz));
    bool commutes = true;
    for (const auto& x : rep.merged.hx)
        if (BitVec::overlap_parity(rep.measured_product, x)) commutes = false;
    rep.checks.add("measured product commutes with merged X checks", commutes);
    rep.checks.add("measured product anticommutes both embedded X logicals",
                   BitVec::overlap_parity(rep.measured_product,
                                          embed_bits(sheet.logical_x[0], rep.embed_sheet, nq)) &&
                       BitVec::overlap_parity(
                           rep.measured_product,
                           embed_bits(sc.logical_x[0], rep.embed_stack, nq)));
    rep.checks.add("merged code k=1", code_k(rep.merged) == 1);
    bool lx_ok = true, lz_ok = true;
    for (const auto& z : rep.merged.hz)
        if (BitVec::overlap_parity(rep.merged.logical_x[0], z)) lx_ok = false;
    for (const auto& x : rep.merged.hx)
        if (BitVec::overlap_parity(rep.merged.logical_z[0], x)) lz_ok = false;
    rep.checks.add("merged X logical commutes with Z checks", lx_ok);
    rep.checks.add("merged Z logical commutes with X checks", lz_ok);
    rep.checks.add("merged logical pair anticommutes",
                   BitVec::overlap_parity(rep.merged.logical_x[0], rep.merged.logical_z[0]));

    if (!rep.checks.all_pass()) {
        std::string failed;
        for (const auto& c : rep.checks.checks)
            if (!c.pass) failed += " [" + c.name + "]";
        throw ConsistencyError("merge_2d3d verification failed:" + failed);
    }
    return rep;
}

namespace {

StateVector kron(const StateVector& lo, const StateVector& hi) {
    StateVector out(lo.qubits() + hi.qubits());
    for (std::uint64_t h = 0; h < (std::uint64_t(1) << hi.qubits()); ++h)
        for (std::uint64_t l = 0; l < (std::uint64_t(1) << lo.qubits()); ++l)
            out.amp((h << lo.qubits()) | l) = lo.amp(l) * hi.amp(h);
    return out;
}

StateVector lincomb(cplx ca, const StateVector& va, cplx cb, const StateVector& vb) {
    StateVector out = va;
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << va.qubits()); ++i)
        out.amp(i) = ca * va.amp(i) + cb * vb.amp(i);
    return out;
}

bool same_code(const CssCode& a, const CssCode& b) {
    return a.n == b.n && a.hx == b.hx && a.hz == b.hz && a.logical_x == b.logical_x &&
           a.logical_z == b.logical_z;
}

}  // namespace

Report simulate_merge_mapping(const CssCode& code_a, const CssCode& code_b, Pauli type) {
    if (code_a.n + code_b.n + 2 > 14)
        throw ResourceError("simulate_merge_mapping: qubit budget exceeded");
    const int parity = type == Pauli::Z ? 0 : 1;
    CssCode ref = build_2d(2, Picture::rotated, parity);
    if (!same_code(code_a, ref) || !same_code(code_b, ref))
        throw std::invalid_argument(
            "simulate_merge_mapping: expects two distance-2 rotated sheets matching the merge type");

    Report rep;
    rep.title = type == Pauli::Z ? "z-type merge/split map" : "x-type merge/split map";

    const std::size_t n = 10;
    CssCode merged;
    merged.n = n;
    std::array<BitVec, 3> gens;
    BitVec byproduct(n), corr_m(n), corr_u(n);
    if (type == Pauli::Z) {
        merged.hx = {BitVec::from_indices(n, {0, 1, 2, 3, 4, 5}),
                     BitVec::from_indices(n, {6, 7, 8, 9})};
        merged.hz = {BitVec::from_indices(n, {0, 1}), BitVec::from_indices(n, {2, 3}),
                     BitVec::from_indices(n, {6, 7}), BitVec::from_indices(n, {8, 9})};
        gens = {BitVec::from_indices(n, {1, 4}), BitVec::from_indices(n, {3, 5}),
                BitVec::from_indices(n, {4, 5, 6, 8})};
        for (const auto& g : gens) merged.hz.push_back(g);
        merged.logical_x = {BitVec::from_indices(n, {0, 1, 4, 6, 7})};
        merged.logical_z = {BitVec::from_indices(n, {0, 2})};
        byproduct = merged.logical_z[0];
        corr_m = BitVec::from_indices(n, {6, 7});  // X logical of the far sheet
        corr_u = BitVec::from_indices(n, {6, 8});  // its Z logical, for the split
    } else {
        merged.hz = {BitVec::from_indices(n, {0, 1, 2, 3, 4, 5}),
                     BitVec::from_indices(n, {6, 7, 8, 9})};
        merged.hx = {BitVec::from_indices(n, {0, 2}), BitVec::from_indices(n, {1, 3}),
                     BitVec::from_indices(n, {6, 8}), BitVec::from_indices(n, {7, 9})};
        gens = {BitVec::from_indices(n, {2, 4}), BitVec::from_indices(n, {3, 5}),
                BitVec::from_indices(n, {4, 5, 6, 7})};
        for (const auto& g : gens) merged.hx.push_back(g);
        merged.logical_x = {BitVec::from_indices(n, {0, 1})};
        merged.logical_z = {BitVec::from_indices(n, {0, 2, 4, 6, 8})};
        byproduct = merged.logical_x[0];
        corr_m = BitVec::from_indices(n, {6, 8});  // Z logical of the far sheet
        corr_u = BitVec::from_indices(n, {6, 7});  // its X logical, for the split
    }
    merged.label = rep.title;
    check_css(merged);
    rep.add("merged layout has k=1", code_k(merged) == 1);
    rep.add("merged logical pair anticommutes",
            BitVec::overlap_parity(merged.logical_x[0], merged.logical_z[0]));

    StateVector enc_a0 = encode_css_state(code_a, {0});
    StateVector enc_a1 = encode_css_state(code_a, {1});
    StateVector enc_b0 = encode_css_state(code_b, {0});
    StateVector enc_b1 = encode_css_state(code_b, {1});
    StateVector enc_m0 = encode_css_state(merged, {0});
    StateVector enc_m1 = encode_css_state(merged, {1});
    StateVector anc(2);
    if (type == Pauli::Z) {
        anc.apply_h(0);
        anc.apply_h(1);
    }
    const double s = std::sqrt(0.5);
    const double tol = 1e-10;

    // Merge map: the far sheet's state transfers onto the merged logical with
    // an outcome-dependent byproduct operator of the measured type.
    auto run_merge = [&](cplx alpha, cplx beta, cplx ca, cplx cb) {
        StateVector psi_a = lincomb(alpha, enc_a0, beta, enc_a1);
        StateVector psi_m = lincomb(alpha, enc_m0, beta, enc_m1);
        StateVector phi_b = type == Pauli::Z
                                ? lincomb((ca + cb) * s, enc_b0, (ca - cb) * s, enc_b1)
                                : lincomb(ca, enc_b0, cb, enc_b1);
        StateVector start = kron(kron(psi_a, anc), phi_b);
        bool all_ok = true;
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (int m3 = 0; m3 < 2; ++m3) {
                    StateVector st = start;
                    if (type == Pauli::Z) {
                        st.measure_z_mask(gens[0], m1, 0);
                        st.measure_z_mask(gens[1], m2, 0);
                        st.measure_z_mask(gens[2], m3, 0);
                        if (m1) st.apply_x(4);
                        if (m2) st.apply_x(5);
                        if ((m1 ^ m2 ^ m3) != 0) st.apply_x_mask(corr_m);
                    } else {
                        st.measure_x_mask(gens[0], m1, 0);
                        st.measure_x_mask(gens[1], m2, 0);
                        st.measure_x_mask(gens[2], m3, 0);
                        if (m1) st.apply_z(4);
                        if (m2) st.apply_z(5);
                        if ((m1 ^ m2 ^ m3) != 0) st.apply_z_mask(corr_m);
                    }
                    StateVector flipped = psi_m;
                    if (type == Pauli::Z)
                        flipped.apply_z_mask(byproduct);
                    else
                        flipped.apply_x_mask(byproduct);
                    cplx sign = (m1 ^ m2 ^ m3) ? cplx(-1, 0) : cplx(1, 0);
                    StateVector target = lincomb(ca, psi_m, sign * cb, flipped);
                    target.normalize();
                    if (!equal_up_to_phase(st, target, tol)) all_ok = false;
                }
        return all_ok;
    };

    rep.add("merge map, stabilizer input, 8 outcome branches",
            run_merge(s, s, 1.0, 0.0));
    rep.add("merge map, generic inputs, 8 outcome branches",
            run_merge(cplx(0.6, 0), cplx(0, 0.8), cplx(0.48, 0.36), cplx(0.8, 0)));

    // Split map: measuring the two ancillas in the conjugate basis leaves the
    // two sheets in a logically correlated pair.
    auto run_split = [&](cplx alpha, cplx beta) {
        StateVector plus2(2);
        plus2.apply_h(0);
        plus2.apply_h(1);
        StateVector zero2(2);
        bool all_ok = true;
        for (int u0 = 0; u0 < 2; ++u0)
            for (int u1 = 0; u1 < 2; ++u1) {
                StateVector st(0);
                StateVector target(0);
                if (type == Pauli::Z) {
                    st = lincomb(alpha, enc_m0, beta, enc_m1);
                    st.measure_x(4, u0, 0);
                    st.measure_x(5, u1, 0);
                    if ((u0 ^ u1) != 0) st.apply_z(2);
                    if (u0) st.apply_z_mask(corr_u);
                    if (u0) st.apply_z(4);
                    if (u1) st.apply_z(5);
                    target = lincomb(alpha, kron(kron(enc_a0, plus2), enc_b0), beta,
                                     kron(kron(enc_a1, plus2), enc_b1));
                } else {
                    st = lincomb((alpha + beta) * s, enc_m0, (alpha - beta) * s, enc_m1);
                    st.measure_z(4, u0, 0);
                    st.measure_z(5, u1, 0);
                    if ((u0 ^ u1) != 0) st.apply_x(1);
                    if (u0) st.apply_x_mask(corr_u);
                    if (u0) st.apply_x(4);
                    if (u1) st.apply_x(5);
                    StateVector pa = lincomb(s, enc_a0, s, enc_a1);
                    StateVector ma = lincomb(s, enc_a0, -s, enc_a1);
                    StateVector pb = lincomb(s, enc_b0, s, enc_b1);
                    StateVector mb = lincomb(s, enc_b0, -s, enc_b1);
                    target = lincomb(alpha, kron(kron(pa, zero2), pb), beta,
                                     kron(kron(ma, zero2), mb));
                }
                if (!equal_up_to_phase(st, target, tol)) all_ok = false;
            }
        return all_ok;
    };

    rep.add("split map, generic input, 4 outcome branches",
            run_split(cplx(0.6, 0), cplx(0, 0.8)));

    return rep;
}

}  // namespace sc3d
