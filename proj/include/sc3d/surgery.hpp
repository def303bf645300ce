#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sc3d/circuits.hpp"
#include "sc3d/css.hpp"
#include "sc3d/stack.hpp"

namespace sc3d {

// Row bookkeeping for one code of the merged stack, relative to the inputs.
// A row is inherited when some input cell/face at the same slot has the same
// embedded support, modified when the slot exists but the support grew, and
// fresh when the slot only exists in the merged lattice.
struct RowDelta {
    std::vector<std::size_t> inherited;
    std::vector<std::size_t> modified;
    std::vector<std::size_t> fresh;
};

// Fault-tolerant merge of two equal-distance stacks along one boundary
// colour. The merged stack lives on the lattice with the extent doubled
// along that colour's axis; the junction layer supplies the new qubits.
// The merge is X-type for the axis colour and Z-type for the other two.
struct MergeReport {
    Stack merged;
    Color axis;
    // Qubit embeddings into the merged index space; injective, disjoint.
    std::vector<std::size_t> embed_a;
    std::vector<std::size_t> embed_b;
    // Colour relabeling applied to b's codes by the embedding (identity for
    // even d, r<->b swap for odd d).
    std::array<Color, 3> color_map_b;
    std::vector<std::size_t> new_qubits;
    std::map<Color, RowDelta> x_rows;
    std::map<Color, RowDelta> z_rows;
    // XOR of the fresh X rows of the axis colour; equals the embedded
    // product of the two old X logicals modulo the merged X span.
    BitVec measured_product;
    Report checks;
};

// Throws std::invalid_argument on non-isotropic or unequal distances and
// ConsistencyError when a verification check fails.
MergeReport merge_stacks(const Stack& a, const Stack& b, Color axis);

struct SplitResult {
    Stack a;
    Stack b;
    std::vector<std::size_t> removed_qubits;  // merged indices, junction layer
    Report checks;
};

// Undo a merge by measuring out the junction layer: restrict the rows that
// survive the layer measurement, eliminate the junction support from the
// rest, and check both sides reproduce the original row spans exactly.
SplitResult split_stack(const MergeReport& m, Color axis);

// Merge of a 2D rotated sheet with one code of a 3D stack. The sheet edge
// faces the stack's canonical Z line for the chosen colour; d ancilla qubits
// sit between them and d+1 new Z generators telescope to the product of the
// two Z logicals.
struct Merge2D3DReport {
    CssCode merged;
    Color color;
    std::vector<std::size_t> embed_sheet;
    std::vector<std::size_t> embed_stack;
    std::vector<std::size_t> ancillas;
    std::vector<BitVec> new_z_rows;
    std::vector<std::size_t> modified_x_rows;  // indices into merged.hx
    // (old weight, new weight) for each modified X row, same order.
    std::vector<std::pair<std::size_t, std::size_t>> weight_changes;
    BitVec measured_product;
    Report checks;
};

// Throws std::invalid_argument when the sheet is not a compatible rotated
// code of the stack's distance; ConsistencyError on verification failure.
Merge2D3DReport merge_2d3d(const CssCode& sheet, const Stack& stack, Color color);

// Statevector demonstration of the logical merge and split maps on two
// distance-2 rotated sheets joined through two ancillas (10 qubits total).
// Z-type consumes sheets with the single X check (parity 0); X-type the
// transpose (parity 1). Every measurement branch is forced and the post-
// correction state is compared with the ideal logical map.
Report simulate_merge_mapping(const CssCode& code_a, const CssCode& code_b, Pauli type);

}  // namespace sc3d
