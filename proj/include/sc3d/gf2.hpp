#pragma once

#include <optional>
#include <vector>

#include "sc3d/bitvec.hpp"

namespace sc3d {

// Row basis in reduced row echelon form with deterministic pivots (lowest set
// index). Two bases built from row sets with equal span compare equal.
class Gf2Basis {
public:
    Gf2Basis() = default;
    explicit Gf2Basis(std::size_t n) : n_(n) {}

    // Returns true when v was independent of the current span.
    bool insert(BitVec v);
    // Fully reduce v against the basis; zero result means v is in the span.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return !reduce(v).any(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t length() const { return n_; }
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Gf2Basis&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;          // sorted by pivot, RREF
    std::vector<std::size_t> pivots_;   // pivots_[i] = first_set(rows_[i])
};

std::size_t gf2_rank(const std::vector<BitVec>& rows);
Gf2Basis gf2_span(const std::vector<BitVec>& rows, std::size_t n);
bool in_rowspan(const BitVec& v, const std::vector<BitVec>& rows);

// Indices of a maximal independent subset, scanning in order.
std::vector<std::size_t> independent_rows(const std::vector<BitVec>& rows, std::size_t n);

// Coefficients c (one per row) with sum_{c_i=1} rows[i] == target, if any.
std::optional<std::vector<std::uint8_t>> gf2_solve(const std::vector<BitVec>& rows,
                                                   const BitVec& target);

// Kernel of the syndrome map v -> (|row_i & v| mod 2)_i, as a basis.
std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& rows, std::size_t n);

}  // namespace sc3d
