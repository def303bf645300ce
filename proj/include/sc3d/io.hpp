#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sc3d/concat832.hpp"
#include "sc3d/css.hpp"
#include "sc3d/lattice.hpp"
#include "sc3d/simkit.hpp"
#include "sc3d/stack.hpp"
#include "sc3d/surgery.hpp"

namespace sc3d {

using ordered_json = nlohmann::ordered_json;

// Check matrices serialize as hex strings, bit 0 = least significant nibble
// bit, so row order and qubit order survive a round trip exactly.
ordered_json code_to_json(const CssCode& code);
ordered_json lattice_to_json(const Lattice& lat);
ordered_json stack_to_json(const Stack& stack);
ordered_json report_to_json(const Report& rep);
ordered_json count_report_to_json(const CountReport& rep);
ordered_json redundancy_report_to_json(const RedundancyReport& rep);
ordered_json merge_report_to_json(const MergeReport& rep);
ordered_json split_result_to_json(const SplitResult& res);
ordered_json merge_2d3d_report_to_json(const Merge2D3DReport& rep);
ordered_json concat_code_to_json(const ConcatCode& cc);
ordered_json circuit_to_json(const Circuit& c);

// MacKay alist text for one check matrix (rows = checks, columns = qubits),
// 1-based indices, degree lists padded with zeros.
std::string alist_string(const std::vector<BitVec>& rows, std::size_t n);

void write_file(const std::string& path, const std::string& content);

// Writes <stem>_hx.alist, <stem>_hz.alist and <stem>.json under dir.
void export_code(const CssCode& code, const std::string& dir, const std::string& stem);

const char* to_string(GateKind k);

}  // namespace sc3d
