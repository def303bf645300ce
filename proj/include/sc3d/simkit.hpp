#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sc3d/bitvec.hpp"
#include "sc3d/css.hpp"

namespace sc3d {

enum class GateKind { H, X, Z, S, Sdg, T, Tdg, CX, CZ, CCZ, MeasureX, MeasureZ };

struct Gate {
    GateKind kind;
    std::vector<int> targets;
    // Applies only when the referenced earlier measurement returned 1.
    int classical_control = -1;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    void add(GateKind k, std::vector<int> targets, int control = -1) {
        gates.push_back(Gate{k, std::move(targets), control});
    }
    int measurement_count() const;
};

using cplx = std::complex<double>;

inline constexpr double kSqrt2Inv = 0.70710678118654752440;

class StateVector {
public:
    explicit StateVector(int n);
    static StateVector basis(int n, std::uint64_t bits);

    int qubits() const { return n_; }
    const std::vector<cplx>& amplitudes() const { return a_; }
    cplx& amp(std::uint64_t i) { return a_[i]; }
    const cplx& amp(std::uint64_t i) const { return a_[i]; }

    void apply_h(int q);
    void apply_x(int q);
    void apply_z(int q);
    void apply_phase(int q, cplx phase);  // diag(1, phase)
    void apply_cx(int c, int t);
    void apply_cz(int a, int b);
    void apply_ccz(int a, int b, int c);
    // Pauli product over a support mask.
    void apply_x_mask(const BitVec& mask);
    void apply_z_mask(const BitVec& mask);

    // Projective measurement; returns outcome and its pre-measurement
    // probability. `force` selects a branch (error if its probability ~ 0).
    struct MeasureResult {
        int outcome;
        double probability;
    };
    MeasureResult measure_z(int q, std::optional<int> force, std::uint64_t rng_word);
    MeasureResult measure_x(int q, std::optional<int> force, std::uint64_t rng_word);
    // Measure the Pauli product Z^mask (resp. X^mask) in one shot.
    MeasureResult measure_z_mask(const BitVec& mask, std::optional<int> force,
                                 std::uint64_t rng_word);
    MeasureResult measure_x_mask(const BitVec& mask, std::optional<int> force,
                                 std::uint64_t rng_word);

    double norm() const;
    void normalize();

private:
    int n_;
    std::vector<cplx> a_;
};

struct RunResult {
    StateVector state;
    std::vector<int> outcomes;
    std::vector<double> probabilities;
};

// Branch selection: if `forced` is nonempty it must cover every measurement in
// order; otherwise outcomes are sampled from the seeded generator.
RunResult run(const Circuit& c, StateVector input, const std::vector<int>& forced = {},
              std::uint64_t seed = 0);

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = 1e-10);

// Encode a CSS stabilizer state: start from a computational basis state that
// already satisfies the Z rows, then project onto the +1 eigenspace of every
// X generator by applying prod (I+G)/norm. logical_values selects the encoded
// computational basis state via the code's logical Z operators.
StateVector encode_css_state(const CssCode& code, const std::vector<int>& logical_values);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace sc3d
