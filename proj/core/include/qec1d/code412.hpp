#pragma once

#include <array>
#include <cstdint>

#include "qec1d/pauli.hpp"

namespace qec1d {

// Algebra of the [[4,1,2]] subsystem code on data roles 1..4 (stored 0-based).
// Stabilizer: X1X2X3X4, Z1Z2Z3Z4. Gauge generators: X1X2, X3X4, Z1Z3, Z2Z4.
// Logical X = X1X3, logical Z = Z1Z2. X-basis data pairs {1,2},{3,4};
// Z-basis data pairs {1,3},{2,4}. The second encoded qubit is ignored:
// anything in the gauge group acts trivially on the protected qubit.
namespace code412 {

// 4-bit masks over data roles (bit i = role i+1).
struct CodeDefinition {
    uint8_t stab_x = 0b1111;  // X1X2X3X4
    uint8_t stab_z = 0b1111;  // Z1Z2Z3Z4
    std::array<uint8_t, 2> gauge_x = {0b0011, 0b1100};  // X1X2, X3X4
    std::array<uint8_t, 2> gauge_z = {0b0101, 0b1010};  // Z1Z3, Z2Z4
    uint8_t logical_x = 0b0101;                         // X1X3
    uint8_t logical_z = 0b0011;                         // Z1Z2
    // Degeneracy pairs, per basis of the *error* being classified.
    std::array<uint8_t, 2> pairs_x = {0b0011, 0b1100};  // X errors: {1,2},{3,4}
    std::array<uint8_t, 2> pairs_z = {0b0101, 0b1010};  // Z errors: {1,3},{2,4}
};

const CodeDefinition& definition();

enum class Basis : uint8_t { X = 0, Z = 1 };
constexpr Basis other(Basis b) { return b == Basis::X ? Basis::Z : Basis::X; }
constexpr const char* basis_name(Basis b) { return b == Basis::X ? "X" : "Z"; }

enum class Parity : uint8_t { Even, Odd };

// Syndrome decode of a two-outcome gauge measurement: even iff m1*m2 = +1.
constexpr Parity decode_parity(int m1, int m2) {
    return (m1 * m2 > 0) ? Parity::Even : Parity::Odd;
}

enum class LogicalAction : uint8_t { Trivial, Logical, Detectable };

// Classifies the b-type component of a 4-role error mask:
// product of b-type gauge generators -> Trivial; that times the b-type
// logical -> Logical; anything else anticommutes with an opposite-type gauge
// operator and would show up as an odd syndrome -> Detectable.
// Equivalently, by pair parities: (even,even) Trivial, (odd,odd) Logical,
// else Detectable.
LogicalAction classify_mask(uint8_t mask, Basis error_basis);

struct BlockAction {
    LogicalAction x;  // classification of the X-error component
    LogicalAction z;  // classification of the Z-error component
};

// Classifies the frame restricted to one block's 4 data positions (given in
// role order d1..d4). A Y entry contributes to both bases.
BlockAction logical_action(const ErrorFrame& frame, const std::array<uint32_t, 4>& data_positions);

// Per-basis mask of the frame over the 4 data roles (bit i set iff the entry
// at role i+1 has a `basis`-type component).
uint8_t component_mask(const ErrorFrame& frame, const std::array<uint32_t, 4>& data_positions,
                       Basis basis);

// Canonical representative of a mask's equivalence class modulo gauge:
// Trivial -> 0, Detectable -> single error on the representative of the odd
// pair, Logical -> one error per pair on the pair representatives.
uint8_t canonical_mask(uint8_t mask, Basis error_basis);

struct TransversalDecode {
    int logical = +1;       // decoded logical outcome
    bool detection = false; // same-basis gauge pair disagreed
};

// Classical decode of a destructive transversal measurement of all 4 data
// roles. Z basis: logical = m1*m2, gauges Z1Z3 and Z2Z4; X basis:
// logical = m1*m3, gauges X1X2 and X3X4. Detection flags odd parity of the
// two same-basis gauge values (= the stabilizer eigenvalue).
TransversalDecode decode_transversal_measurement(const std::array<int, 4>& outcomes, Basis basis);

// Code distance after l levels of concatenation: 2^(l+1).
uint64_t distance_at_level(uint32_t l);

}  // namespace code412
}  // namespace qec1d
