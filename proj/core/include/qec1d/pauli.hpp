#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qec1d {

// Phase-free single-qubit Pauli. Stored as a 2-bit (x,z) symplectic pair:
// I=00, X=10, Z=01, Y=11. Phases are discarded everywhere; only error
// support matters for syndromes and logical action.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool has_x(Pauli p) { return static_cast<uint8_t>(p) & 1u; }
constexpr bool has_z(Pauli p) { return static_cast<uint8_t>(p) & 2u; }

constexpr Pauli make_pauli(bool x, bool z) {
    return static_cast<Pauli>((x ? 1u : 0u) | (z ? 2u : 0u));
}

// Phase-free group product: compose(a,a) == I, compose(X,Z) == Y.
constexpr Pauli compose(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

// True iff a and b anticommute (as single-qubit operators).
constexpr bool anticommutes(Pauli a, Pauli b) {
    bool ax = has_x(a), az = has_z(a), bx = has_x(b), bz = has_z(b);
    return (ax && bz) != (az && bx);
}

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// Sparse assignment of Pauli errors to line positions: the sole quantum state
// surrogate. Identity entries are never stored; lookups of untouched
// positions return I. Backed by dense storage plus a support list so trial
// workers can iterate the (small) set of errored positions cheaply.
class ErrorFrame {
  public:
    ErrorFrame() = default;
    explicit ErrorFrame(uint32_t width) : letters_(width, Pauli::I) {}

    uint32_t width() const { return static_cast<uint32_t>(letters_.size()); }

    Pauli get(uint32_t pos) const { return letters_[pos]; }

    // Overwrites the entry (I erases).
    void set(uint32_t pos, Pauli p);

    // Multiplies p onto the existing entry, phase-free.
    void compose_at(uint32_t pos, Pauli p) { set(pos, compose(letters_[pos], p)); }

    void clear();
    bool empty() const { return support_.empty(); }
    size_t size() const { return support_.size(); }

    // Errored positions, unordered. May be mutated by set(); copy if iterating
    // while writing.
    const std::vector<uint32_t>& support() const { return support_; }

    // Pointwise phase-free product of two frames.
    ErrorFrame composed_with(const ErrorFrame& other) const;

    bool operator==(const ErrorFrame& other) const;

  private:
    std::vector<Pauli> letters_;
    std::vector<uint32_t> support_;  // positions with non-I entries
};

enum class LocationKind : uint8_t {
    PrepZ,
    PrepX,
    MeasZ,
    MeasX,
    Memory,
    CNOT,
    SWAP,
    H,
};

constexpr bool is_two_qubit(LocationKind k) {
    return k == LocationKind::CNOT || k == LocationKind::SWAP;
}
constexpr bool is_prep(LocationKind k) {
    return k == LocationKind::PrepZ || k == LocationKind::PrepX;
}
constexpr bool is_meas(LocationKind k) {
    return k == LocationKind::MeasZ || k == LocationKind::MeasX;
}

const char* kind_name(LocationKind k);
bool kind_from_name(const std::string& s, LocationKind& out);

// Conjugates the frame through one gate (or clears through a prep).
// CNOT: X_c -> X_c X_t and Z_t -> Z_c Z_t; SWAP exchanges entries;
// H exchanges X and Z at its position; preps reset the entry.
// Measurements and Memory leave the frame untouched.
void apply_gate(ErrorFrame& frame, LocationKind kind, uint32_t p0, uint32_t p1 = UINT32_MAX);

// True iff the residual entry at `position` would flip a measurement in the
// given basis: Z-basis readout is flipped by X/Y, X-basis by Z/Y.
bool flips_measurement(const ErrorFrame& frame, uint32_t position, LocationKind meas_basis);

}  // namespace qec1d
