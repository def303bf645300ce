#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sc3d/lattice.hpp"

using namespace sc3d;

namespace {

bool one_odd(const Coord3& c) {
    return ((c.x & 1) + (c.y & 1) + (c.z & 1)) == 1;
}

}  // namespace

TEST_CASE("vertex set: parity, box, order, count") {
    for (int d : {2, 3, 4}) {
        auto lat = build_lattice({d, d, d});
        CHECK(lat.n() == isotropic_vertex_count(d));
        CHECK(lat.n() == static_cast<std::size_t>(3 * d * d * d - 4 * d * d + 2 * d));

        for (auto& v : lat.vertices) {
            CHECK(one_odd(v));
            CHECK(lat.in_box(v));
        }
        CHECK(std::is_sorted(lat.vertices.begin(), lat.vertices.end(), zyx_less));

        for (std::size_t i = 0; i < lat.n(); ++i) CHECK(lat.vertex_index(lat.vertices[i]) == i);
        CHECK(lat.vertex_index({-1, 0, 1}) == BitVec::npos);
        CHECK(lat.is_vertex_coord({1, 0, 2}));
        CHECK_FALSE(lat.is_vertex_coord({1, 1, 2}));  // two odd coordinates
        CHECK_FALSE(lat.is_vertex_coord({0, 0, 0}));  // z below the slab
    }
    CHECK_THROWS_AS(build_lattice({1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_lattice({2, 2, 1}), std::invalid_argument);
}

TEST_CASE("cells: kinds, colours, ordering") {
    for (int d : {2, 3}) {
        auto lat = build_lattice({d, d, d});

        // octahedra first, then cuboctahedra, each block in (z,y,x) order
        std::size_t first_cubocta = lat.cells.size();
        for (std::size_t i = 0; i < lat.cells.size(); ++i)
            if (lat.cells[i].color != Color::g) {
                first_cubocta = i;
                break;
            }
        for (std::size_t i = 0; i < lat.cells.size(); ++i) {
            const auto& c = lat.cells[i];
            if (i < first_cubocta) {
                CHECK(c.color == Color::g);
                CHECK(c.center.x % 2 == 0);
                CHECK(c.center.z % 2 == 0);
            } else {
                CHECK(c.color != Color::g);
                CHECK(std::abs(c.center.x % 2) == 1);
                CHECK(std::abs(c.center.z % 2) == 1);
            }
            if (i + 1 < lat.cells.size() && (i + 1 < first_cubocta || i >= first_cubocta))
                CHECK(zyx_less(c.center, lat.cells[i + 1].center));

            CHECK(std::is_sorted(c.support.begin(), c.support.end()));
            for (auto q : c.support) CHECK(q < lat.n());
            CHECK(!c.support.empty());
            CHECK(c.support.size() <= (c.color == Color::g ? 6u : 12u));
            if (c.color == Color::g)
                CHECK((c.kind == CellKind::octahedron) == (c.support.size() == 6));
            else
                CHECK((c.kind == CellKind::cuboctahedron) == (c.support.size() == 12));
        }

        // in-box census: d^2(d-1) octahedra, d(d-1)^2 cuboctahedra
        auto census = cell_census(lat);
        CHECK(census[Color::g] == static_cast<std::size_t>(d * d * (d - 1)));
        CHECK(census[Color::r] + census[Color::b] == static_cast<std::size_t>(d * (d - 1) * (d - 1)));
    }
}

TEST_CASE("cuboctahedron colour alternates on the odd grid") {
    CHECK(cuboctahedron_color({1, 1, 1}) == Color::r);
    CHECK(cuboctahedron_color({3, 1, 1}) == Color::b);
    CHECK(cuboctahedron_color({1, 3, 1}) == Color::b);
    CHECK(cuboctahedron_color({1, 1, 3}) == Color::b);
    CHECK(cuboctahedron_color({3, 3, 1}) == Color::r);
    CHECK(cuboctahedron_color({-1, 1, 1}) == Color::b);
}

TEST_CASE("faces: kinds, weight bounds, dedup") {
    for (int d : {2, 3}) {
        auto lat = build_lattice({d, d, d});
        std::set<std::pair<ColorPair, std::vector<std::size_t>>> seen;
        for (auto& f : lat.faces) {
            CHECK(std::is_sorted(f.support.begin(), f.support.end()));
            CHECK(f.support.size() >= 2);
            if (f.kind == FaceKind::triangle) CHECK(f.support.size() == 3);
            if (f.kind == FaceKind::square) {
                CHECK(f.support.size() == 4);
                CHECK(f.pair == ColorPair::rb);
            }
            if (f.kind == FaceKind::clipped_edge) CHECK(f.support.size() < 4);
            CHECK(seen.insert({f.pair, f.support}).second);  // no duplicates
        }
    }
}

TEST_CASE("every face lies on cells of its colours, up to own-boundary squares") {
    // Triangles always sit inside one octahedron and one cuboctahedron of
    // their pair. A square on a colour's own boundary plane is the one
    // exception: the cuboctahedron that would hold it lies one step past
    // that boundary, where no cell (not even a flattened one) exists.
    auto lat = build_lattice({3, 3, 3});
    int xmax = 2 * (lat.dims.dx - 1), ymax = 2 * (lat.dims.dy - 1);
    for (auto& f : lat.faces) {
        auto fv = lat.support_vec(f.support);
        Color c1, c2;
        switch (f.pair) {
            case ColorPair::rg: c1 = Color::r; c2 = Color::g; break;
            case ColorPair::gb: c1 = Color::g; c2 = Color::b; break;
            default: c1 = Color::r; c2 = Color::b; break;
        }
        int hits = 0;
        for (Color c : {c1, c2}) {
            bool found = false;
            for (auto& cell : lat.cells)
                if (cell.color == c && fv.subset_of(lat.support_vec(cell.support))) {
                    found = true;
                    break;
                }
            if (found) {
                ++hits;
                continue;
            }
            // Only rb faces flush against their own colour's boundary may
            // lack a host cell of that colour.
            REQUIRE(f.pair == ColorPair::rb);
            bool on_own_boundary = true;
            for (auto i : f.support) {
                const auto& v = lat.vertices[i];
                if (c == Color::r && v.x != 0 && v.x != xmax) on_own_boundary = false;
                if (c == Color::b && v.y != 0 && v.y != ymax) on_own_boundary = false;
            }
            bool flat = true;  // flush means constant coordinate, not just boundary-valued
            int first = f.support.empty() ? 0
                                          : (c == Color::r ? lat.vertices[f.support[0]].x
                                                           : lat.vertices[f.support[0]].y);
            for (auto i : f.support) {
                const auto& v = lat.vertices[i];
                if ((c == Color::r ? v.x : v.y) != first) flat = false;
            }
            CHECK(on_own_boundary);
            CHECK(flat);
        }
        CHECK(hits >= 1);  // never orphaned on both sides
    }
}

TEST_CASE("layer census alternates chequerboard and diamond") {
    auto lat = build_lattice({3, 3, 3});
    auto layers = layer_census(lat);
    REQUIRE(layers.size() == 5);  // z = 1..5
    std::size_t total = 0;
    for (auto& l : layers) {
        CHECK(l.kind == ((l.z % 2) ? "chequerboard" : "diamond"));
        if (l.z % 2)
            CHECK(l.count == 9);  // d^2: both x and y even
        else
            CHECK(l.count == 12);  // 2 d (d-1): exactly one of x, y odd
        total += l.count;
    }
    CHECK(total == lat.n());
}

TEST_CASE("boundary labels name the three axis colours") {
    auto lat = build_lattice({2, 2, 2});
    REQUIRE(lat.boundary_label.size() == 6);
    std::map<std::string, Color> by_name(lat.boundary_label.begin(), lat.boundary_label.end());
    CHECK(by_name.at("x-") == Color::r);
    CHECK(by_name.at("x+") == Color::r);
    CHECK(by_name.at("y-") == Color::b);
    CHECK(by_name.at("y+") == Color::b);
    CHECK(by_name.at("z-") == Color::g);
    CHECK(by_name.at("z+") == Color::g);
}

TEST_CASE("colour string round trips") {
    for (Color c : {Color::r, Color::g, Color::b}) CHECK(color_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(color_from_string("teal"), std::invalid_argument);
    CHECK(face_code_color(ColorPair::rg) == Color::b);
    CHECK(face_code_color(ColorPair::gb) == Color::r);
    CHECK(face_code_color(ColorPair::rb) == Color::g);
}
