#include "sc3d/transversal.hpp"

#include <array>
#include <atomic>
#include <climits>
#include <sstream>

#include "sc3d/simkit.hpp"

namespace sc3d {

namespace {

constexpr std::array<Color, 3> kColors{Color::r, Color::g, Color::b};
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

Color third_color(Color a, Color b) {
    if (a == b) throw std::invalid_argument("colour pair must name two distinct colours");
    for (Color c : kColors)
        if (c != a && c != b) return c;
    throw std::invalid_argument("colour pair must name two distinct colours");
}

CosetGroup x_group(const Stack& stack, Color c, int label) {
    const CssCode& code = stack.codes.at(c);
    CosetGroup g;
    for (std::size_t i : independent_rows(code.hx, code.n)) g.basis.push_back(code.hx[i]);
    g.shift = label ? stack.canonical_x.at(c) : BitVec(code.n);
    return g;
}

// Deterministic per-sample stream: the sample index fixes every draw, so
// serial and parallel execution agree bit for bit.
std::uint64_t sample_stream_seed(std::uint64_t seed, std::size_t state, std::uint64_t s) {
    std::uint64_t h = splitmix64(seed + kGolden * (state + 1));
    return splitmix64(h + kGolden * (s + 1));
}

BitVec random_coset_element(const CosetGroup& g, std::uint64_t& w) {
    BitVec v = *g.shift;
    std::uint64_t bits = 0;
    int have = 0;
    for (const auto& row : g.basis) {
        if (have == 0) {
            w = splitmix64(w + kGolden);
            bits = w;
            have = 64;
        }
        if (bits & 1) v ^= row;
        bits >>= 1;
        --have;
    }
    return v;
}

[[noreturn]] void parity_violation(const char* what, int a, int b, int g, std::uint64_t where) {
    std::ostringstream os;
    os << what << ": parity deviation on basis state |" << a << b << g << "> at triple " << where;
    throw ConsistencyError(os.str());
}

}  // namespace

bool PhaseTable::matches_ccz_pattern() const {
    if (entries.size() != 8) return false;
    for (const auto& e : entries) {
        int want = (e.alpha && e.beta && e.gamma) ? -1 : 1;
        if (e.phase != want) return false;
    }
    return true;
}

bool PhaseTable::matches_cz_pattern() const {
    if (entries.size() != 8) return false;
    for (const auto& e : entries) {
        int want = (e.alpha && e.beta) ? -1 : 1;
        if (e.phase != want) return false;
    }
    return true;
}

std::vector<OverlapWitness> pairwise_overlap_check(const Stack& stack) {
    std::vector<OverlapWitness> out;
    const std::pair<Color, Color> pairs[] = {
        {Color::r, Color::g}, {Color::r, Color::b}, {Color::g, Color::b}};
    for (auto [c1, c2] : pairs) {
        Color cc = third_color(c1, c2);
        Gf2Basis span(stack.n());
        for (const auto& row : stack.codes.at(cc).hz) span.insert(row);
        const auto& rows1 = stack.codes.at(c1).hx;
        const auto& rows2 = stack.codes.at(c2).hx;
        for (std::size_t i = 0; i < rows1.size(); ++i)
            for (std::size_t j = 0; j < rows2.size(); ++j) {
                OverlapWitness w;
                w.c1 = c1;
                w.c2 = c2;
                w.i1 = i;
                w.i2 = j;
                w.overlap = BitVec::and_of(rows1[i], rows2[j]);
                w.member = span.contains(w.overlap);
                out.push_back(std::move(w));
            }
    }
    return out;
}

PhaseTable ccz_phase_exhaustive(const Stack& stack) {
    std::size_t mr = gf2_rank(stack.codes.at(Color::r).hx);
    std::size_t mg = gf2_rank(stack.codes.at(Color::g).hx);
    std::size_t mb = gf2_rank(stack.codes.at(Color::b).hx);
    if (mr + mg + mb > 24)
        throw ResourceError("exhaustive coset budget exceeded: 2^" +
                            std::to_string(mr + mg + mb) + " triples");

    PhaseTable table;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) {
                CosetGroup gr = x_group(stack, Color::r, a);
                CosetGroup gg = x_group(stack, Color::g, b);
                CosetGroup gb = x_group(stack, Color::b, g);
                int first = -1;
                std::uint64_t checked = 0;
                for_each_in_group(gr, [&](const BitVec& t) {
                    for_each_in_group(gg, [&](const BitVec& u) {
                        BitVec tu = BitVec::and_of(t, u);
                        for_each_in_group(gb, [&](const BitVec& v) {
                            int odd = BitVec::and_popcount(tu, v) & 1 ? 1 : 0;
                            if (first < 0) first = odd;
                            if (odd != first)
                                parity_violation("ccz_phase_exhaustive", a, b, g, checked);
                            ++checked;
                        });
                    });
                });
                table.entries.push_back({a, b, g, first ? -1 : 1, checked});
            }
    return table;
}

PhaseTable ccz_phase_sampled(const Stack& stack, std::uint64_t samples, std::uint64_t seed,
                             Exec exec) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    PhaseTable table;
    table.seed = seed;
    table.sampled = true;
    std::size_t state = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g, ++state) {
                CosetGroup gr = x_group(stack, Color::r, a);
                CosetGroup gg = x_group(stack, Color::g, b);
                CosetGroup gb = x_group(stack, Color::b, g);
                auto parity_of = [&](std::uint64_t s) {
                    std::uint64_t w = sample_stream_seed(seed, state, s);
                    BitVec t = random_coset_element(gr, w);
                    BitVec u = random_coset_element(gg, w);
                    BitVec v = random_coset_element(gb, w);
                    return BitVec::and3_parity(t, u, v) ? 1 : 0;
                };
                int first = parity_of(0);
                std::atomic<long long> bad{LLONG_MAX};
                const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
                for (long long s = 1; s < static_cast<long long>(samples); ++s) {
                    if (parity_of(static_cast<std::uint64_t>(s)) != first) {
                        long long cur = bad.load(std::memory_order_relaxed);
                        while (s < cur && !bad.compare_exchange_weak(cur, s)) {
                        }
                    }
                }
                (void)par;
                if (bad.load() != LLONG_MAX)
                    parity_violation("ccz_phase_sampled", a, b, g,
                                     static_cast<std::uint64_t>(bad.load()));
                table.entries.push_back({a, b, g, first ? -1 : 1, samples});
            }
    return table;
}

Report corner_structure_check(const Stack& stack) {
    Report rep;
    rep.title = "canonical membrane overlap structure";
    const std::pair<Color, Color> pairs[] = {
        {Color::r, Color::g}, {Color::r, Color::b}, {Color::g, Color::b}};
    for (auto [c1, c2] : pairs) {
        Color cc = third_color(c1, c2);
        const CssCode& code = stack.codes.at(cc);
        BitVec o = BitVec::and_of(stack.canonical_x.at(c1), stack.canonical_x.at(c2));
        std::string tag = std::string("X_") + to_string(c1) + "&X_" + to_string(c2);

        rep.add(tag + " equals the canonical Z string of " + to_string(cc),
                o == stack.canonical_z.at(cc));
        bool commutes = true;
        for (const auto& row : code.hx)
            if (BitVec::overlap_parity(o, row)) commutes = false;
        rep.add(tag + " commutes with every X check of " + to_string(cc), commutes);
        rep.add(tag + " is not a Z stabilizer of " + to_string(cc), !in_rowspan(o, code.hz));
        rep.add(tag + " anticommutes with the X logical of " + to_string(cc),
                BitVec::overlap_parity(o, stack.canonical_x.at(cc)));
    }
    BitVec triple = BitVec::and_of(
        BitVec::and_of(stack.canonical_x.at(Color::r), stack.canonical_x.at(Color::g)),
        stack.canonical_x.at(Color::b));
    rep.add("triple membrane overlap has weight 1", triple.popcount() == 1,
            "weight=" + std::to_string(triple.popcount()));
    return rep;
}

PhaseTable cz_phase_check(const Stack& stack, std::pair<Color, Color> pair, BoundarySide side,
                          std::uint64_t samples, std::uint64_t seed, Exec exec) {
    if (side == BoundarySide::opposite)
        throw std::invalid_argument(
            "the opposite boundary needs a re-selected canonical membrane; "
            "only the canonical side is supported");
    Color c1 = pair.first, c2 = pair.second;
    Color cc = third_color(c1, c2);
    const BitVec& membrane = stack.canonical_x.at(cc);

    std::size_t m1 = gf2_rank(stack.codes.at(c1).hx);
    std::size_t m2 = gf2_rank(stack.codes.at(c2).hx);
    bool exhaustive = samples == 0 && m1 + m2 <= 20;
    if (samples == 0 && !exhaustive) samples = 100000;

    PhaseTable table;
    table.seed = seed;
    table.sampled = !exhaustive;
    std::size_t state = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g, ++state) {
                // gamma never enters the parity: the phase is computed from
                // the two selected cosets and the fixed membrane only.
                CosetGroup g1 = x_group(stack, c1, a);
                CosetGroup g2 = x_group(stack, c2, b);
                int first = -1;
                std::uint64_t checked = 0;
                if (exhaustive) {
                    for_each_in_group(g1, [&](const BitVec& t) {
                        BitVec tm = BitVec::and_of(t, membrane);
                        for_each_in_group(g2, [&](const BitVec& u) {
                            int odd = BitVec::and_popcount(tm, u) & 1 ? 1 : 0;
                            if (first < 0) first = odd;
                            if (odd != first) parity_violation("cz_phase_check", a, b, g, checked);
                            ++checked;
                        });
                    });
                } else {
                    auto parity_of = [&](std::uint64_t s) {
                        std::uint64_t w = sample_stream_seed(seed, state, s);
                        BitVec t = random_coset_element(g1, w);
                        BitVec u = random_coset_element(g2, w);
                        return BitVec::and3_parity(t, u, membrane) ? 1 : 0;
                    };
                    first = parity_of(0);
                    std::atomic<long long> bad{LLONG_MAX};
                    const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
                    for (long long s = 1; s < static_cast<long long>(samples); ++s) {
                        if (parity_of(static_cast<std::uint64_t>(s)) != first) {
                            long long cur = bad.load(std::memory_order_relaxed);
                            while (s < cur && !bad.compare_exchange_weak(cur, s)) {
                            }
                        }
                    }
                    (void)par;
                    if (bad.load() != LLONG_MAX)
                        parity_violation("cz_phase_check", a, b, g,
                                         static_cast<std::uint64_t>(bad.load()));
                    checked = samples;
                }
                table.entries.push_back({a, b, g, first ? -1 : 1, checked});
            }
    return table;
}

}  // namespace sc3d
