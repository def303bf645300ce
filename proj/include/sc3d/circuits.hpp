#pragma once

#include <string>
#include <vector>

#include "sc3d/simkit.hpp"

namespace sc3d {

// One named check outcome; reports aggregate these.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckLine> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

// Measurement-based Hadamard on two qubits: ancilla in |+>, CZ, X-basis
// measurement of the source, conditional X on the target.
Circuit teleported_h_circuit();

// Three teleportation hops on three wires. Two hops transfer the state
// unchanged, three implement H; measured wires are reset by a conditional Z
// so they can be reused as the next ancilla.
Circuit teleported_h_chain(int hops);

// Gate teleportation of CCZ: three resource qubits prepared as CCZ|+++>,
// transversal CX onto the data, Z measurements of the data wires, and the
// conditional X/CZ byproduct corrections. Output lands on the resource wires.
Circuit ccz_injection_circuit();

Report verify_teleported_h();
Report verify_ccz_injection();

}  // namespace sc3d
