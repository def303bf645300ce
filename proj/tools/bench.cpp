// Benchmark the OpenMP kernels against their serial reference twins. Both
// paths must produce identical results; the interesting output is the ratio.

#include <chrono>
#include <cstdio>

#include "sc3d/transversal.hpp"

using namespace sc3d;

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_table(const PhaseTable& a, const PhaseTable& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].phase != b.entries[i].phase ||
            a.entries[i].checked != b.entries[i].checked)
            return false;
    return true;
}

}  // namespace

int main() {
    int bad = 0;

    {
        auto stack = build_stack(3);
        const std::uint64_t samples = 200000, seed = 11;
        PhaseTable ts, tp;
        double s = time_s([&] { ts = ccz_phase_sampled(stack, samples, seed, Exec::serial); });
        double p = time_s([&] { tp = ccz_phase_sampled(stack, samples, seed, Exec::parallel); });
        bool ok = same_table(ts, tp) && ts.matches_ccz_pattern();
        std::printf("ccz_phase_sampled d=3 %llux8: serial %.3fs parallel %.3fs speedup %.2fx %s\n",
                    static_cast<unsigned long long>(samples), s, p, s / p,
                    ok ? "match" : "MISMATCH");
        bad += !ok;
    }

    {
        auto code = build_2d(7, Picture::kitaev);
        std::optional<DistanceResult> rs, rp;
        double s = time_s([&] { rs = brute_distance(code, Pauli::Z, 5, Exec::serial); });
        double p = time_s([&] { rp = brute_distance(code, Pauli::Z, 5, Exec::parallel); });
        bool ok = !rs.has_value() && !rp.has_value();  // distance 7: nothing at weight <= 5
        std::printf("brute_distance [[85,1,7]] w<=5:  serial %.3fs parallel %.3fs speedup %.2fx %s\n",
                    s, p, s / p, ok ? "match" : "MISMATCH");
        bad += !ok;
    }

    return bad ? 1 : 0;
}
