#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sc3d/bitvec.hpp"

namespace sc3d {

enum class Color : std::uint8_t { r, g, b };
enum class ColorPair : std::uint8_t { rg, gb, rb };
enum class CellKind : std::uint8_t { octahedron, cuboctahedron, clipped };
enum class FaceKind : std::uint8_t { triangle, square, clipped_edge };

const char* to_string(Color c);
const char* to_string(ColorPair p);
Color color_from_string(const std::string& s);

// The colour whose code uses faces of this pair as Z checks (the one not in
// the pair).
Color face_code_color(ColorPair p);

struct Coord3 {
    int x = 0, y = 0, z = 0;
    bool operator==(const Coord3&) const = default;
    Coord3 operator+(const Coord3& o) const { return {x + o.x, y + o.y, z + o.z}; }
};

// Lexicographic (z, y, x): the qubit index order every module shares.
bool zyx_less(const Coord3& a, const Coord3& b);

struct LatticeDims {
    int dx = 0, dy = 0, dz = 0;
    bool isotropic() const { return dx == dy && dy == dz; }
};

struct CellRecord {
    Coord3 center;
    Color color;
    CellKind kind;
    std::vector<std::size_t> support;
};

struct FaceRecord {
    Coord3 center;  // geometric anchor (octahedron centre for triangles)
    ColorPair pair;
    FaceKind kind;
    std::vector<std::size_t> support;
};

struct LayerInfo {
    int z;
    std::string kind;  // "chequerboard" (odd z) or "diamond" (even z)
    std::size_t count;
};

// Vertices are integer triples with exactly one odd coordinate inside the box
// x in [0, 2(dx-1)], y in [0, 2(dy-1)], z in [1, 2dz-1]. Octahedra sit at
// all-even centres (colour g), cuboctahedra at all-odd centres (r when
// (x+y+z) mod 4 == 3, b otherwise). Boundary colours: x planes r, y planes b,
// z planes g. A cell one unit past a boundary of a different colour stays as
// a flattened check; one past its own colour's boundary does not exist.
struct Lattice {
    LatticeDims dims;
    std::vector<Coord3> vertices;
    std::vector<CellRecord> cells;
    std::vector<FaceRecord> faces;
    std::vector<std::pair<std::string, Color>> boundary_label;

    std::size_t n() const { return vertices.size(); }
    bool in_box(const Coord3& c) const;
    bool is_vertex_coord(const Coord3& c) const;  // parity + box
    std::size_t vertex_index(const Coord3& c) const;  // BitVec::npos if absent

    BitVec support_vec(const std::vector<std::size_t>& support) const {
        return BitVec::from_indices(n(), support.begin(), support.end());
    }

private:
    friend Lattice build_lattice(const LatticeDims&);
    std::map<std::tuple<int, int, int>, std::size_t> index_;
};

Lattice build_lattice(const LatticeDims& dims);

std::vector<LayerInfo> layer_census(const Lattice& lat);
std::map<Color, std::size_t> cell_census(const Lattice& lat);  // in-box centres only

// Colour of the cuboctahedron slot at an all-odd coordinate.
Color cuboctahedron_color(const Coord3& c);

// 3 d^3 - 4 d^2 + 2 d, the vertex count of the isotropic distance-d lattice.
std::size_t isotropic_vertex_count(int d);

}  // namespace sc3d
