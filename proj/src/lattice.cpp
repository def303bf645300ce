#include "sc3d/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sc3d {

const char* to_string(Color c) {
    switch (c) {
        case Color::r: return "r";
        case Color::g: return "g";
        default: return "b";
    }
}

const char* to_string(ColorPair p) {
    switch (p) {
        case ColorPair::rg: return "rg";
        case ColorPair::gb: return "gb";
        default: return "rb";
    }
}

Color color_from_string(const std::string& s) {
    if (s == "r") return Color::r;
    if (s == "g") return Color::g;
    if (s == "b") return Color::b;
    throw std::invalid_argument("unknown colour: " + s);
}

Color face_code_color(ColorPair p) {
    switch (p) {
        case ColorPair::rg: return Color::b;
        case ColorPair::gb: return Color::r;
        default: return Color::g;
    }
}

bool zyx_less(const Coord3& a, const Coord3& b) {
    if (a.z != b.z) return a.z < b.z;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

Color cuboctahedron_color(const Coord3& c) {
    int s = c.x + c.y + c.z;
    return ((s % 4 + 4) % 4) == 3 ? Color::r : Color::b;
}

std::size_t isotropic_vertex_count(int d) {
    std::size_t dd = static_cast<std::size_t>(d);
    return 3 * dd * dd * dd - 4 * dd * dd + 2 * dd;
}

bool Lattice::in_box(const Coord3& c) const {
    return c.x >= 0 && c.x <= 2 * (dims.dx - 1) && c.y >= 0 && c.y <= 2 * (dims.dy - 1) &&
           c.z >= 1 && c.z <= 2 * dims.dz - 1;
}

bool Lattice::is_vertex_coord(const Coord3& c) const {
    int odd = (c.x & 1) + (c.y & 1) + (c.z & 1);
    return odd == 1 && in_box(c);
}

std::size_t Lattice::vertex_index(const Coord3& c) const {
    auto it = index_.find({c.x, c.y, c.z});
    return it == index_.end() ? BitVec::npos : it->second;
}

namespace {

// Boundary colour of the axis a coordinate leaves the box through.
Color axis_color(int axis) {
    return axis == 0 ? Color::r : axis == 1 ? Color::b : Color::g;
}

struct FaceCandidate {
    Coord3 center;
    ColorPair pair;
    bool full;
    std::vector<std::size_t> support;
    std::vector<Coord3> lost;  // valid-parity corners outside the box
};

// Keep a full face always; keep a clipped face of weight >= 2 only when every
// lost corner left the box through boundaries of the face's own code colour.
// Anything else would anticommute with a flattened cell of another code.
bool keep_face(const Lattice& lat, const FaceCandidate& f) {
    if (f.full) return true;
    if (f.support.size() < 2) return false;
    Color cc = face_code_color(f.pair);
    for (const auto& v : f.lost) {
        if (v.x < 0 || v.x > 2 * (lat.dims.dx - 1))
            if (axis_color(0) != cc) return false;
        if (v.y < 0 || v.y > 2 * (lat.dims.dy - 1))
            if (axis_color(1) != cc) return false;
        if (v.z < 1 || v.z > 2 * lat.dims.dz - 1)
            if (axis_color(2) != cc) return false;
    }
    return true;
}

}  // namespace

Lattice build_lattice(const LatticeDims& dims) {
    if (dims.dx < 2 || dims.dy < 2 || dims.dz < 2)
        throw std::invalid_argument("invalid dimension: every extent must be at least 2");

    Lattice lat;
    lat.dims = dims;
    int xmax = 2 * (dims.dx - 1), ymax = 2 * (dims.dy - 1), zmax = 2 * dims.dz - 1;

    for (int z = 1; z <= zmax; ++z)
        for (int y = 0; y <= ymax; ++y)
            for (int x = 0; x <= xmax; ++x) {
                int odd = (x & 1) + (y & 1) + (z & 1);
                if (odd != 1) continue;
                lat.index_[{x, y, z}] = lat.vertices.size();
                lat.vertices.push_back({x, y, z});
            }

    lat.boundary_label = {{"x-", Color::r}, {"x+", Color::r}, {"y-", Color::b},
                          {"y+", Color::b}, {"z-", Color::g}, {"z+", Color::g}};

    auto push_support = [&](const std::vector<Coord3>& corners, std::vector<std::size_t>& sup,
                            std::vector<Coord3>& lost) {
        for (const auto& c : corners) {
            std::size_t i = lat.vertex_index(c);
            if (i != BitVec::npos)
                sup.push_back(i);
            else
                lost.push_back(c);
        }
        std::sort(sup.begin(), sup.end());
    };

    // octahedra: all-even centres, always inside the box (a centre one unit
    // past any boundary would have an odd coordinate)
    for (int z = 2; z <= zmax - 1; z += 2)
        for (int y = 0; y <= ymax; y += 2)
            for (int x = 0; x <= xmax; x += 2) {
                std::vector<Coord3> corners = {{x - 1, y, z}, {x + 1, y, z}, {x, y - 1, z},
                                               {x, y + 1, z}, {x, y, z - 1}, {x, y, z + 1}};
                CellRecord cell;
                cell.center = {x, y, z};
                cell.color = Color::g;
                std::vector<Coord3> lost;
                push_support(corners, cell.support, lost);
                cell.kind = cell.support.size() == 6 ? CellKind::octahedron : CellKind::clipped;
                lat.cells.push_back(std::move(cell));
            }

    // cuboctahedra: all-odd centres; flattened copies survive one unit past a
    // boundary of the other cell colour
    for (int z = 1; z <= zmax; z += 2)
        for (int y = -1; y <= ymax + 1; y += 2)
            for (int x = -1; x <= xmax + 1; x += 2) {
                Coord3 c{x, y, z};
                int out_axes = 0;
                bool beyond_own = false;
                Color col = cuboctahedron_color(c);
                if (x < 0 || x > xmax) {
                    ++out_axes;
                    if (axis_color(0) == col) beyond_own = true;
                }
                if (y < 0 || y > ymax) {
                    ++out_axes;
                    if (axis_color(1) == col) beyond_own = true;
                }
                if (out_axes > 1 || beyond_own) continue;
                std::vector<Coord3> corners;
                for (int a = 0; a < 3; ++a)
                    for (int sa : {-1, 1})
                        for (int sb : {-1, 1}) {
                            Coord3 d{0, 0, 0};
                            if (a == 0) {
                                d.x = sa;
                                d.y = sb;
                            } else if (a == 1) {
                                d.x = sa;
                                d.z = sb;
                            } else {
                                d.y = sa;
                                d.z = sb;
                            }
                            corners.push_back(c + d);
                        }
                CellRecord cell;
                cell.center = c;
                cell.color = col;
                std::vector<Coord3> lost;
                push_support(corners, cell.support, lost);
                if (cell.support.empty()) continue;
                cell.kind =
                    cell.support.size() == 12 ? CellKind::cuboctahedron : CellKind::clipped;
                lat.cells.push_back(std::move(cell));
            }

    // faces, deduplicated on (pair, support)
    std::set<std::pair<int, std::vector<std::size_t>>> seen;
    auto add_face = [&](FaceCandidate&& f, FaceKind full_kind) {
        if (!keep_face(lat, f)) return;
        auto key = std::make_pair(static_cast<int>(f.pair), f.support);
        if (!seen.insert(key).second) return;
        FaceRecord rec;
        rec.center = f.center;
        rec.pair = f.pair;
        rec.kind = f.full ? full_kind : FaceKind::clipped_edge;
        rec.support = std::move(f.support);
        lat.faces.push_back(std::move(rec));
    };

    // triangles between an octahedron (possibly virtual, outside the box) and
    // one of its eight cuboctahedron neighbours
    for (int z = 0; z <= zmax + 1; z += 2)
        for (int y = -2; y <= ymax + 2; y += 2)
            for (int x = -2; x <= xmax + 2; x += 2)
                for (int sx : {-1, 1})
                    for (int sy : {-1, 1})
                        for (int sz : {-1, 1}) {
                            FaceCandidate f;
                            f.center = {x, y, z};
                            Color nb = cuboctahedron_color({x + sx, y + sy, z + sz});
                            f.pair = nb == Color::r ? ColorPair::rg : ColorPair::gb;
                            std::vector<Coord3> corners = {
                                {x + sx, y, z}, {x, y + sy, z}, {x, y, z + sz}};
                            push_support(corners, f.support, f.lost);
                            f.full = f.support.size() == 3;
                            add_face(std::move(f), FaceKind::triangle);
                        }

    // squares between two cuboctahedra: centres with exactly two odd
    // coordinates; corners are the four nearest vertices in the square plane
    auto squares_for = [&](int oddA, int oddB) {
        // oddA/oddB are the two odd axes; the even axis stays inside the box
        int lim[3][2] = {{-1, xmax + 1}, {-1, ymax + 1}, {-1, zmax + 1}};
        int evenAxis = 3 - oddA - oddB;
        int evenLo = evenAxis == 2 ? 2 : 0;
        int evenHi = evenAxis == 0 ? xmax : evenAxis == 1 ? ymax : zmax - 1;
        for (int a = lim[oddA][0]; a <= lim[oddA][1]; a += 2)
            for (int b = lim[oddB][0]; b <= lim[oddB][1]; b += 2)
                for (int e = evenLo; e <= evenHi; e += 2) {
                    int co[3];
                    co[oddA] = a;
                    co[oddB] = b;
                    co[evenAxis] = e;
                    Coord3 m{co[0], co[1], co[2]};
                    FaceCandidate f;
                    f.center = m;
                    f.pair = ColorPair::rb;
                    std::vector<Coord3> corners;
                    for (int axis : {oddA, oddB})
                        for (int s : {-1, 1}) {
                            Coord3 c = m;
                            (axis == 0 ? c.x : axis == 1 ? c.y : c.z) += s;
                            corners.push_back(c);
                        }
                    push_support(corners, f.support, f.lost);
                    f.full = f.support.size() == 4;
                    add_face(std::move(f), FaceKind::square);
                }
    };
    squares_for(0, 1);
    squares_for(0, 2);
    squares_for(1, 2);

    return lat;
}

std::vector<LayerInfo> layer_census(const Lattice& lat) {
    std::vector<LayerInfo> out;
    for (int z = 1; z <= 2 * lat.dims.dz - 1; ++z) {
        LayerInfo info{z, (z & 1) ? "chequerboard" : "diamond", 0};
        for (const auto& v : lat.vertices)
            if (v.z == z) ++info.count;
        out.push_back(std::move(info));
    }
    return out;
}

std::map<Color, std::size_t> cell_census(const Lattice& lat) {
    std::map<Color, std::size_t> out{{Color::r, 0}, {Color::g, 0}, {Color::b, 0}};
    for (const auto& c : lat.cells)
        if (lat.in_box(c.center)) ++out[c.color];
    return out;
}

}  // namespace sc3d
