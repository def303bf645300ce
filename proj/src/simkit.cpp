#include "sc3d/simkit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sc3d {

namespace {
constexpr double kSqrtHalf = kSqrt2Inv;
}

int Circuit::measurement_count() const {
    int c = 0;
    for (const auto& g : gates)
        if (g.kind == GateKind::MeasureX || g.kind == GateKind::MeasureZ) ++c;
    return c;
}

StateVector::StateVector(int n) : n_(n), a_(std::size_t(1) << n, cplx(0, 0)) {
    if (n < 0 || n > 16) throw ResourceError("statevector supports at most 16 qubits");
    a_[0] = 1.0;
}

StateVector StateVector::basis(int n, std::uint64_t bits) {
    StateVector s(n);
    s.a_[0] = 0.0;
    s.a_[bits] = 1.0;
    return s;
}

void StateVector::apply_h(int q) {
    std::uint64_t step = std::uint64_t(1) << q;
    for (std::uint64_t i = 0; i < a_.size(); ++i) {
        if (i & step) continue;
        cplx a0 = a_[i], a1 = a_[i | step];
        a_[i] = (a0 + a1) * kSqrtHalf;
        a_[i | step] = (a0 - a1) * kSqrtHalf;
    }
}

void StateVector::apply_x(int q) {
    std::uint64_t step = std::uint64_t(1) << q;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if (!(i & step)) std::swap(a_[i], a_[i | step]);
}

void StateVector::apply_z(int q) {
    std::uint64_t step = std::uint64_t(1) << q;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if (i & step) a_[i] = -a_[i];
}

void StateVector::apply_phase(int q, cplx phase) {
    std::uint64_t step = std::uint64_t(1) << q;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if (i & step) a_[i] *= phase;
}

void StateVector::apply_cx(int c, int t) {
    std::uint64_t cm = std::uint64_t(1) << c, tm = std::uint64_t(1) << t;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if ((i & cm) && !(i & tm)) std::swap(a_[i], a_[i | tm]);
}

void StateVector::apply_cz(int a, int b) {
    std::uint64_t am = std::uint64_t(1) << a, bm = std::uint64_t(1) << b;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if ((i & am) && (i & bm)) a_[i] = -a_[i];
}

void StateVector::apply_ccz(int a, int b, int c) {
    std::uint64_t m = (std::uint64_t(1) << a) | (std::uint64_t(1) << b) | (std::uint64_t(1) << c);
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if ((i & m) == m) a_[i] = -a_[i];
}

void StateVector::apply_x_mask(const BitVec& mask) {
    std::uint64_t m = 0;
    for (auto q : mask.indices()) m |= std::uint64_t(1) << q;
    std::vector<cplx> out(a_.size());
    for (std::uint64_t i = 0; i < a_.size(); ++i) out[i ^ m] = a_[i];
    a_ = std::move(out);
}

void StateVector::apply_z_mask(const BitVec& mask) {
    std::uint64_t m = 0;
    for (auto q : mask.indices()) m |= std::uint64_t(1) << q;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if (std::popcount(i & m) & 1) a_[i] = -a_[i];
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : a_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double s = norm();
    if (s < 1e-300) throw std::runtime_error("cannot normalize null state");
    for (auto& a : a_) a /= s;
}

StateVector::MeasureResult StateVector::measure_z(int q, std::optional<int> force,
                                                  std::uint64_t rng_word) {
    std::uint64_t step = std::uint64_t(1) << q;
    double p1 = 0;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if (i & step) p1 += std::norm(a_[i]);
    int outcome;
    if (force) {
        outcome = *force ? 1 : 0;
        double p = outcome ? p1 : 1.0 - p1;
        if (p < 1e-12) throw std::invalid_argument("selected measurement branch has probability 0");
    } else {
        double u = static_cast<double>(rng_word >> 11) * 0x1.0p-53;
        outcome = u < p1 ? 1 : 0;
    }
    double p = outcome ? p1 : 1.0 - p1;
    double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < a_.size(); ++i) {
        bool one = (i & step) != 0;
        if (one == (outcome == 1))
            a_[i] *= scale;
        else
            a_[i] = 0.0;
    }
    return {outcome, p};
}

StateVector::MeasureResult StateVector::measure_x(int q, std::optional<int> force,
                                                  std::uint64_t rng_word) {
    apply_h(q);
    auto r = measure_z(q, force, rng_word);
    apply_h(q);
    return r;
}

StateVector::MeasureResult StateVector::measure_z_mask(const BitVec& mask,
                                                       std::optional<int> force,
                                                       std::uint64_t rng_word) {
    std::uint64_t m = 0;
    for (auto q : mask.indices()) m |= std::uint64_t(1) << q;
    double p1 = 0;
    for (std::uint64_t i = 0; i < a_.size(); ++i)
        if (std::popcount(i & m) & 1) p1 += std::norm(a_[i]);
    int outcome;
    if (force) {
        outcome = *force ? 1 : 0;
        double p = outcome ? p1 : 1.0 - p1;
        if (p < 1e-12) throw std::invalid_argument("selected measurement branch has probability 0");
    } else {
        double u = static_cast<double>(rng_word >> 11) * 0x1.0p-53;
        outcome = u < p1 ? 1 : 0;
    }
    double p = outcome ? p1 : 1.0 - p1;
    double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < a_.size(); ++i) {
        bool odd = (std::popcount(i & m) & 1) != 0;
        if (odd == (outcome == 1))
            a_[i] *= scale;
        else
            a_[i] = 0.0;
    }
    return {outcome, p};
}

StateVector::MeasureResult StateVector::measure_x_mask(const BitVec& mask,
                                                       std::optional<int> force,
                                                       std::uint64_t rng_word) {
    for (auto q : mask.indices()) apply_h(static_cast<int>(q));
    auto r = measure_z_mask(mask, force, rng_word);
    for (auto q : mask.indices()) apply_h(static_cast<int>(q));
    return r;
}

RunResult run(const Circuit& c, StateVector input, const std::vector<int>& forced,
              std::uint64_t seed) {
    if (input.qubits() != c.n_qubits) throw std::invalid_argument("run: qubit count mismatch");
    RunResult rr{std::move(input), {}, {}};
    std::uint64_t rng_state = seed;
    for (const auto& g : c.gates) {
        if (g.classical_control >= 0) {
            if (g.classical_control >= static_cast<int>(rr.outcomes.size()))
                throw std::invalid_argument("classical control references later measurement");
            if (!rr.outcomes[static_cast<std::size_t>(g.classical_control)]) continue;
        }
        switch (g.kind) {
            case GateKind::H: rr.state.apply_h(g.targets.at(0)); break;
            case GateKind::X: rr.state.apply_x(g.targets.at(0)); break;
            case GateKind::Z: rr.state.apply_z(g.targets.at(0)); break;
            case GateKind::S: rr.state.apply_phase(g.targets.at(0), cplx(0, 1)); break;
            case GateKind::Sdg: rr.state.apply_phase(g.targets.at(0), cplx(0, -1)); break;
            case GateKind::T:
                rr.state.apply_phase(g.targets.at(0), cplx(kSqrtHalf, kSqrtHalf));
                break;
            case GateKind::Tdg:
                rr.state.apply_phase(g.targets.at(0), cplx(kSqrtHalf, -kSqrtHalf));
                break;
            case GateKind::CX: rr.state.apply_cx(g.targets.at(0), g.targets.at(1)); break;
            case GateKind::CZ: rr.state.apply_cz(g.targets.at(0), g.targets.at(1)); break;
            case GateKind::CCZ:
                rr.state.apply_ccz(g.targets.at(0), g.targets.at(1), g.targets.at(2));
                break;
            case GateKind::MeasureX:
            case GateKind::MeasureZ: {
                std::optional<int> force;
                if (!forced.empty()) {
                    if (rr.outcomes.size() >= forced.size())
                        throw std::invalid_argument("forced branch list too short");
                    force = forced[rr.outcomes.size()];
                }
                rng_state = splitmix64(rng_state + 0x9e3779b97f4a7c15ull);
                auto res = g.kind == GateKind::MeasureX
                               ? rr.state.measure_x(g.targets.at(0), force, rng_state)
                               : rr.state.measure_z(g.targets.at(0), force, rng_state);
                rr.outcomes.push_back(res.outcome);
                rr.probabilities.push_back(res.probability);
                break;
            }
        }
    }
    return rr;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.qubits() != b.qubits()) return false;
    const auto& va = a.amplitudes();
    const auto& vb = b.amplitudes();
    // find the largest amplitude of a as the phase reference
    std::uint64_t ref = 0;
    double best = 0;
    for (std::uint64_t i = 0; i < va.size(); ++i)
        if (std::norm(va[i]) > best) {
            best = std::norm(va[i]);
            ref = i;
        }
    if (best < tol * tol) {
        for (std::uint64_t i = 0; i < vb.size(); ++i)
            if (std::abs(vb[i]) > tol) return false;
        return true;
    }
    if (std::abs(vb[ref]) < 1e-300) return false;
    cplx phase = va[ref] / vb[ref];
    double mag = std::abs(phase);
    if (std::abs(mag - 1.0) > tol) return false;
    for (std::uint64_t i = 0; i < va.size(); ++i)
        if (std::abs(va[i] - phase * vb[i]) > tol) return false;
    return true;
}

StateVector encode_css_state(const CssCode& code, const std::vector<int>& logical_values) {
    if (code.n > 16) throw ResourceError("encode_css_state: qubit budget exceeded");
    if (logical_values.size() != code.logical_z.size())
        throw std::invalid_argument("encode_css_state: one value per logical qubit required");
    // Solve for a basis string with even overlap against every Hz row and the
    // requested parity against every logical Z.
    std::vector<BitVec> cons;
    std::vector<int> tgt;
    for (const auto& r : code.hz) {
        cons.push_back(r);
        tgt.push_back(0);
    }
    for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
        cons.push_back(code.logical_z[j]);
        tgt.push_back(logical_values[j]);
    }
    std::vector<BitVec> red;
    std::vector<int> redt;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        BitVec v = cons[i];
        int t = tgt[i];
        for (std::size_t j = 0; j < red.size(); ++j)
            if (v.get(piv[j])) {
                v ^= red[j];
                t ^= redt[j];
            }
        std::size_t p = v.first_set();
        if (p == BitVec::npos) {
            if (t) throw ConsistencyError("encode_css_state: inconsistent Z constraints");
            continue;
        }
        for (std::size_t j = 0; j < red.size(); ++j)
            if (red[j].get(p)) {
                red[j] ^= v;
                redt[j] ^= t;
            }
        red.push_back(std::move(v));
        redt.push_back(t);
        piv.push_back(p);
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < red.size(); ++j)
        if (redt[j]) bits |= std::uint64_t(1) << piv[j];
    StateVector s = StateVector::basis(static_cast<int>(code.n), bits);
    // project onto +1 X-generator eigenspace
    for (auto i : independent_rows(code.hx, code.n)) {
        std::uint64_t m = 0;
        for (auto q : code.hx[i].indices()) m |= std::uint64_t(1) << q;
        std::vector<cplx> out(s.amplitudes().begin(), s.amplitudes().end());
        for (std::uint64_t b = 0; b < out.size(); ++b) out[b] += s.amplitudes()[b ^ m];
        for (std::uint64_t b = 0; b < out.size(); ++b) s.amp(b) = out[b];
    }
    s.normalize();
    return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace sc3d
