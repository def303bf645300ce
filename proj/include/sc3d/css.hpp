#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sc3d/bitvec.hpp"
#include "sc3d/gf2.hpp"

namespace sc3d {

// Enumeration/search budgets exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A constructed object failed its own consistency checks.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Pauli { X, Z };
enum class Exec { serial, parallel };

struct CssCode {
    std::size_t n = 0;
    std::vector<BitVec> hx;  // X stabilizer rows, possibly overcomplete
    std::vector<BitVec> hz;  // Z stabilizer rows, possibly overcomplete
    std::vector<BitVec> logical_x;
    std::vector<BitVec> logical_z;
    std::string label;

    const std::vector<BitVec>& rows(Pauli p) const { return p == Pauli::X ? hx : hz; }
};

// Throws ConsistencyError unless every Hx row has even overlap with every Hz
// row and all rows/logicals have length n.
void check_css(const CssCode& code);

// n - rank(Hx) - rank(Hz); checks commutation first.
std::size_t code_k(const CssCode& code);

// Algebraic extraction of k symplectically paired logical representatives
// (kernel of the opposite-type checks, reduced modulo the same-type span).
// Returns {logical_x, logical_z} with overlap(Lx[i], Lz[j]) odd iff i==j.
std::pair<std::vector<BitVec>, std::vector<BitVec>> extract_logicals(const CssCode& code);

struct DistanceResult {
    std::size_t weight = 0;
    BitVec witness;
};

// Minimum weight of a type-P operator commuting with all opposite-type checks
// but outside the same-type row span, searching weights 1..max_weight.
// Guard: C(n, max_weight) <= 1e8, otherwise ResourceError.
std::optional<DistanceResult> brute_distance(const CssCode& code, Pauli type,
                                             std::size_t max_weight, Exec exec = Exec::serial);

struct CosetGroup {
    std::vector<BitVec> basis;  // independent generators
    std::optional<BitVec> shift;
};

// All 2^|basis| coset elements, each exactly once. Budget: |basis| <= 24.
std::vector<BitVec> enumerate_group(const CosetGroup& g);
// Streaming form used by the hot loops; f(element) for every element.
template <typename F>
void for_each_in_group(const CosetGroup& g, F&& f) {
    if (g.basis.size() > 24) throw ResourceError("coset enumeration budget exceeded");
    std::size_t n = g.shift ? g.shift->size() : (g.basis.empty() ? 0 : g.basis.front().size());
    BitVec cur = g.shift ? *g.shift : BitVec(n);
    f(cur);
    std::uint64_t total = std::uint64_t(1) << g.basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= g.basis[static_cast<std::size_t>(std::countr_zero(i))];  // Gray order
        f(cur);
    }
}

// weight(sum vs) == sum weight(v) (mod 2); always true over GF(2).
bool parity_lemma_check(const std::vector<BitVec>& vs);

// C(n, k) with saturation, used for enumeration guards.
double binomial_estimate(std::size_t n, std::size_t k);

}  // namespace sc3d
