#pragma once

#include <map>
#include <optional>

#include "sc3d/circuits.hpp"
#include "sc3d/css.hpp"
#include "sc3d/lattice.hpp"

namespace sc3d {

// Three surface codes sharing one lattice: SC_c has the c-cells as X checks
// and the c'c''-faces as Z checks. Each code acts on its own n physical
// qubits; the lattice only fixes the common index order.
struct Stack {
    Lattice lattice;
    std::map<Color, CssCode> codes;
    std::map<Color, BitVec> canonical_z;  // boundary-intersection line, weight d
    std::map<Color, BitVec> canonical_x;  // minimal c-boundary membrane

    std::size_t n() const { return lattice.n(); }
    int d() const { return lattice.dims.dx; }  // isotropic callers only
};

// Throws ConsistencyError when any code fails k=1 or a canonical logical
// fails its commutation relations.
Stack build_stack(const LatticeDims& dims);
inline Stack build_stack(int d) { return build_stack({d, d, d}); }

struct CountLine {
    Color color;
    std::size_t rank_x = 0, rank_z = 0;
    std::size_t expect_x = 0, expect_z = 0;
    bool pass = false;
};

struct CountReport {
    std::vector<CountLine> lines;
    std::size_t n = 0;
    std::size_t expect_n = 0;
    bool pass = false;
};

// Rank splits per colour against the closed forms for the isotropic stack:
//   |S_X(g)| = d^2(d-1)            |S_Z(g)| = (d-1)(2d^2-d+1)
//   |S_X(r)| = |S_X(b)| = (d-1)(d^2+d)/2
//   |S_Z(r)| = |S_Z(b)| = (d-1)(5d^2-3d+2)/2
// with every total equal to n-1 = 3d^3-4d^2+2d-1.
CountReport verify_counts(const Stack& stack);

// Reference stabilizer tables for the distance-2 stack over 12 labelled
// qubits (labels here are 0-based; the data file stores the original
// 1-based labels).
struct FixtureD2 {
    std::map<Color, std::vector<std::vector<std::size_t>>> x_rows, z_rows;
    std::map<Color, std::vector<std::size_t>> logical_z, logical_x;

    std::map<Color, CssCode> as_codes() const;
};

FixtureD2 fixture_d2();
FixtureD2 load_fixture_d2(const std::string& json_path);

// Search for a qubit relabeling making every colour's generated row spans
// equal the fixture spans, with canonical logicals mapping into the right
// cosets. perm[generated index] = fixture index.
std::optional<std::vector<std::size_t>> find_fixture_permutation(
    const std::map<Color, CssCode>& codes, const std::map<Color, BitVec>& canonical_z,
    const std::map<Color, BitVec>& canonical_x, const FixtureD2& fixture);

// Throwing wrapper per the contract: mismatch is a fatal geometry bug.
std::vector<std::size_t> match_fixture_d2(const Stack& stack);

// Zero-sum identities explaining why the raw Z row lists are overcomplete:
// for SC_g every in-box cuboctahedron's kept square faces; for SC_b/SC_r the
// complete octahedra, the complete opposite-colour cuboctahedra, and the
// boundary half-octahedra.
struct RedundancyReport {
    struct PerColor {
        Color color;
        std::size_t identity_count = 0;  // all verified zero-sum + independent
        std::size_t rows = 0, rank = 0;
        bool pass = false;
    };
    std::vector<PerColor> lines;
    bool pass = false;
};

RedundancyReport redundancy_identities(const Stack& stack);

enum class Picture { rotated, kitaev };

// 2D surface codes. rotated: d^2 qubits on a grid, checkerboard faces with
// weight-2 boundary halves (parity flips the checkerboard); logicals are the
// first column (Z) and first row (X). kitaev: qubits on the edges of a square
// grid, star/plaquette checks, n = d^2 + (d-1)^2.
CssCode build_2d(int d, Picture picture, int parity = 0);

}  // namespace sc3d
