#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sc3d/circuits.hpp"
#include "sc3d/css.hpp"
#include "sc3d/simkit.hpp"
#include "sc3d/stack.hpp"

namespace sc3d {

// The [[8,3,2]] cube code. Qubit i sits on the cube corner with coordinate
// bits (x,y,z) packed as i = 4x+2y+z. One weight-8 X stabilizer, four
// independent face Z stabilizers, three logical pairs labelled ry/gy/by
// (weight-4 face membrane X, weight-2 edge string Z). vertex_parity marks
// the even-parity corners of the bipartition used for the T/Tdg pattern.
struct Code832 {
    CssCode code;  // logical_x / logical_z ordered ry, gy, by
    BitVec vertex_parity;
};

Code832 code832();

// Encoder circuit: logical inputs gy, by, ry arrive on qubits 2, 4, 7; all
// other qubits start in |0>. Fans the inputs onto their edge strings, then
// spreads the weight-8 X stabilizer from an ancilla |+>.
Circuit encoder_832();

// Concatenating a stack with [[8,3,2]] blocks produces a three-qubit colour
// code: vertex v becomes block v, a single-qubit X (resp. Z) of SC_c turns
// into the block's X (resp. Z) logical with the matching label, and every
// block contributes its own five stabilizers.
struct ConcatCode {
    CssCode code;
    std::vector<std::array<std::size_t, 8>> block_map;
    std::map<Color, std::pair<BitVec, BitVec>> inherited;  // color -> (Z, X)
};

ConcatCode concatenate(const Stack& stack);

// Distance certification by exhaustive low-weight scan: no logical operator
// of either type up to max_weight, inherited logicals stay valid, and the
// certificate reacts when one block's stabilizers are deleted.
Report verify_colorcode_distance(const ConcatCode& cc, std::size_t max_weight,
                                 Exec exec = Exec::serial);

// Numerical validation of the cube code itself: parameters, the encoder on
// all eight logical basis inputs, and the corner T/Tdg pattern acting as
// logical CCZ.
Report verify_832_gates();

}  // namespace sc3d
