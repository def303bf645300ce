#pragma once

#include <cstdint>
#include <utility>

#include "sc3d/stack.hpp"

namespace sc3d {

// Observed phase of the transversal gate on each encoded basis state
// |alpha beta gamma>, together with how many coset triples backed it.
struct PhaseEntry {
    int alpha = 0, beta = 0, gamma = 0;
    int phase = 0;  // +1 or -1
    std::uint64_t checked = 0;
};

struct PhaseTable {
    std::vector<PhaseEntry> entries;  // all 8 states, lexicographic
    std::uint64_t seed = 0;
    bool sampled = false;

    // Physical CCZ acts as logical CCZ: -1 exactly on |111>.
    bool matches_ccz_pattern() const;
    // Boundary CZ acts as logical CZ on the selected pair: -1 iff both 1,
    // independent of the third label.
    bool matches_cz_pattern() const;
};

// One cross-colour X-generator pair: their vertex overlap and whether it lies
// in the third code's Z row span (the mechanised "collisions are even"
// argument).
struct OverlapWitness {
    Color c1 = Color::r, c2 = Color::g;
    std::size_t i1 = 0, i2 = 0;
    BitVec overlap;
    bool member = false;
};

std::vector<OverlapWitness> pairwise_overlap_check(const Stack& stack);

// Every coset triple of the three X groups; throws ConsistencyError on any
// parity deviation, ResourceError when 2^(mr+mg+mb) exceeds 2^24.
PhaseTable ccz_phase_exhaustive(const Stack& stack);

// Seeded uniform triples per basis state; deviations throw with the sample
// index. Deterministic for a given seed regardless of exec.
PhaseTable ccz_phase_sampled(const Stack& stack, std::uint64_t samples, std::uint64_t seed,
                             Exec exec = Exec::serial);

// Canonical-membrane geometry: pairwise X overlaps are boundary-to-boundary
// strings acting as the third colour's Z logical; the triple overlap is a
// single vertex.
Report corner_structure_check(const Stack& stack);

enum class BoundarySide { canonical, opposite };

// Phase of CZ applied on the c''-boundary membrane supporting the canonical
// X of the third colour. samples == 0 picks exhaustive when the coset budget
// allows (2^20), otherwise 10^5 seeded samples.
PhaseTable cz_phase_check(const Stack& stack, std::pair<Color, Color> pair,
                          BoundarySide side = BoundarySide::canonical,
                          std::uint64_t samples = 0, std::uint64_t seed = 1,
                          Exec exec = Exec::serial);

}  // namespace sc3d
