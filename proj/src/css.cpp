#include "sc3d/css.hpp"

#include <atomic>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sc3d {

void check_css(const CssCode& code) {
    for (const auto& r : code.hx)
        if (r.size() != code.n) throw ConsistencyError(code.label + ": Hx row length mismatch");
    for (const auto& r : code.hz)
        if (r.size() != code.n) throw ConsistencyError(code.label + ": Hz row length mismatch");
    for (const auto& x : code.hx)
        for (const auto& z : code.hz)
            if (BitVec::overlap_parity(x, z))
                throw ConsistencyError(code.label + ": Hx/Hz rows with odd overlap");
}

std::size_t code_k(const CssCode& code) {
    check_css(code);
    std::size_t rx = gf2_rank(code.hx);
    std::size_t rz = gf2_rank(code.hz);
    if (rx + rz > code.n) throw ConsistencyError(code.label + ": rank exceeds qubit count");
    return code.n - rx - rz;
}

std::pair<std::vector<BitVec>, std::vector<BitVec>> extract_logicals(const CssCode& code) {
    std::size_t k = code_k(code);
    auto pick = [&](Pauli type) {
        const auto& same = code.rows(type);
        const auto& opp = code.rows(type == Pauli::X ? Pauli::Z : Pauli::X);
        Gf2Basis span = gf2_span(same, code.n);
        std::vector<BitVec> out;
        for (const auto& v : gf2_kernel(opp, code.n)) {
            if (span.insert(v)) {
                out.push_back(v);
                if (out.size() == k) break;
            }
        }
        return out;
    };
    std::vector<BitVec> lx = pick(Pauli::X);
    std::vector<BitVec> lz = pick(Pauli::Z);
    if (lx.size() != k || lz.size() != k)
        throw ConsistencyError(code.label + ": logical extraction came up short");

    // Symplectic pairing: transform lz so overlap(lx[i], lz[j]) = [i == j].
    // M is k x k and invertible because the pairing is nondegenerate.
    std::vector<BitVec> m;
    for (std::size_t i = 0; i < k; ++i) {
        BitVec row(k);
        for (std::size_t j = 0; j < k; ++j)
            if (BitVec::overlap_parity(lx[i], lz[j])) row.set(j);
        m.push_back(row);
    }
    // invert M by Gauss-Jordan on [M | I]
    std::vector<BitVec> inv;
    for (std::size_t i = 0; i < k; ++i) {
        BitVec e(k);
        e.set(i);
        inv.push_back(e);
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t p = col;
        while (p < k && !m[p].get(col)) ++p;
        if (p == k) throw ConsistencyError(code.label + ": degenerate logical pairing");
        std::swap(m[p], m[col]);
        std::swap(inv[p], inv[col]);
        for (std::size_t r = 0; r < k; ++r)
            if (r != col && m[r].get(col)) {
                m[r] ^= m[col];
                inv[r] ^= inv[col];
            }
    }
    // new_lz[i] = sum_j inv^T[i][j] lz[j] gives overlap(lx[i], new_lz[j]) = delta_ij
    std::vector<BitVec> lz2;
    for (std::size_t j = 0; j < k; ++j) {
        BitVec v(code.n);
        for (std::size_t l = 0; l < k; ++l)
            if (inv[l].get(j)) v ^= lz[l];
        lz2.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (BitVec::overlap_parity(lx[i], lz2[j]) != (i == j))
                throw ConsistencyError(code.label + ": pairing normalization failed");
    return {lx, lz2};
}

double binomial_estimate(std::size_t n, std::size_t k) {
    double v = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
        if (v > 1e18) return v;
    }
    return v;
}

namespace {

// Depth-first enumeration of supports {i1<...<iw} accumulating the syndrome
// against opposite-type rows; calls sink on every commuting candidate.
template <typename Sink>
void scan_weight(const std::vector<BitVec>& cols, std::size_t n, std::size_t w, std::size_t first,
                 BitVec& syn, std::vector<std::size_t>& idx, Sink&& sink) {
    if (idx.size() == w) {
        if (!syn.any()) sink(idx);
        return;
    }
    std::size_t need = w - idx.size();
    for (std::size_t i = first; i + need <= n; ++i) {
        syn ^= cols[i];
        idx.push_back(i);
        scan_weight(cols, n, w, i + 1, syn, idx, sink);
        idx.pop_back();
        syn ^= cols[i];
    }
}

}  // namespace

std::optional<DistanceResult> brute_distance(const CssCode& code, Pauli type,
                                             std::size_t max_weight, Exec exec) {
    if (binomial_estimate(code.n, max_weight) > 1e8)
        throw ResourceError(code.label + ": distance enumeration budget exceeded");
    const auto& opp = code.rows(type == Pauli::X ? Pauli::Z : Pauli::X);
    const auto& same = code.rows(type);
    // column q = syndrome of a weight-1 operator at qubit q
    std::vector<BitVec> cols(code.n, BitVec(opp.size()));
    for (std::size_t r = 0; r < opp.size(); ++r)
        for (std::size_t q : opp[r].indices()) cols[q].set(r);
    Gf2Basis stab = gf2_span(same, code.n);

    for (std::size_t w = 1; w <= max_weight; ++w) {
        std::optional<DistanceResult> found;
        auto consider = [&](const std::vector<std::size_t>& idx) {
            BitVec v = BitVec::from_indices(code.n, idx.begin(), idx.end());
            if (!stab.contains(v) && !found) found = DistanceResult{w, v};
        };
        bool parallel = exec == Exec::parallel && code.n > 1;
        if (!parallel) {
            BitVec syn(opp.size());
            std::vector<std::size_t> idx;
            scan_weight(cols, code.n, w, 0, syn, idx, consider);
        } else {
            std::atomic<bool> hit{false};
            std::vector<DistanceResult> hits;
#ifdef _OPENMP
#pragma omp parallel
#endif
            {
                std::optional<DistanceResult> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
                for (std::ptrdiff_t i0 = 0; i0 < static_cast<std::ptrdiff_t>(code.n); ++i0) {
                    if (hit.load(std::memory_order_relaxed)) continue;
                    std::size_t i = static_cast<std::size_t>(i0);
                    if (i + w > code.n) continue;
                    BitVec syn = cols[i];
                    std::vector<std::size_t> idx{i};
                    scan_weight(cols, code.n, w, i + 1, syn, idx,
                                [&](const std::vector<std::size_t>& sup) {
                                    BitVec v = BitVec::from_indices(code.n, sup.begin(), sup.end());
                                    if (!stab.contains(v) && !local) {
                                        local = DistanceResult{w, v};
                                        hit.store(true, std::memory_order_relaxed);
                                    }
                                });
                }
#ifdef _OPENMP
#pragma omp critical
#endif
                if (local) hits.push_back(*local);
            }
            for (auto& h : hits)
                if (!found || h.witness < found->witness) found = h;
        }
        if (found) return found;
    }
    return std::nullopt;
}

std::vector<BitVec> enumerate_group(const CosetGroup& g) {
    std::vector<BitVec> out;
    out.reserve(std::size_t(1) << std::min<std::size_t>(g.basis.size(), 24));
    for_each_in_group(g, [&](const BitVec& v) { out.push_back(v); });
    return out;
}

bool parity_lemma_check(const std::vector<BitVec>& vs) {
    if (vs.empty()) return true;
    BitVec sum(vs.front().size());
    std::size_t total = 0;
    for (const auto& v : vs) {
        sum ^= v;
        total += v.popcount();
    }
    return (sum.popcount() & 1u) == (total & 1u);
}

}  // namespace sc3d
