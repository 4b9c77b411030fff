#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qec1d/pauli.hpp"

namespace qec1d {

// One elementary fault site: prep, measurement, memory (idle), or gate, in
// one timeslice. Ids are dense and equal to the index in the circuit's
// canonical location order.
struct Location {
    LocationKind kind = LocationKind::Memory;
    uint8_t level = 1;    // concatenation level of the template that emitted it
    uint8_t npos = 1;
    bool counted = true;  // false for idles on measured-out qubits: errors there cannot matter
    uint32_t slice = 0;
    std::array<uint32_t, 2> pos = {0, 0};

    uint32_t min_pos() const { return npos == 2 ? std::min(pos[0], pos[1]) : pos[0]; }
    bool operator==(const Location&) const = default;
};

struct BlockMeta {
    uint8_t level = 1;
    // home line positions of roles d1, a1, d2, d3, a2, d4
    std::array<uint32_t, 6> home = {};
    bool operator==(const BlockMeta&) const = default;
};

struct LocationCounts {
    uint64_t total = 0;       // counted fault locations (the N of the failure expansion)
    uint64_t uncounted = 0;   // structural idles on dead qubits
    uint64_t cells = 0;       // slice-position cells covered
    std::array<uint64_t, 8> by_kind = {};  // counted, indexed by LocationKind
    uint64_t data_data_swaps = 0;          // counted SWAPs acting on two live qubits
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    std::optional<uint32_t> offending_location;
};

// Time-sliced sequence of locations on a 1-D array. Within a slice the
// locations' positions are disjoint and cover every position of the declared
// width exactly once (idle positions carry explicit Memory locations).
// Immutable after construction in practice; shared read-only across workers.
class Circuit {
  public:
    uint32_t width = 0;
    uint32_t n_slices = 0;
    std::vector<Location> locations;       // canonical order: (slice, min position)
    std::vector<uint32_t> slice_offsets;   // size n_slices + 1
    std::vector<uint8_t> live_at_start;    // size width; positions holding data at t=0
    std::vector<BlockMeta> blocks;
    std::array<uint8_t, 4> qperm = {0, 1, 2, 3};  // output data-role permutation Q

    bool operator==(const Circuit& other) const;

    // Sorts locations canonically, rebuilds slice offsets, and recomputes
    // per-location counted flags by tracking which positions hold live data
    // (liveness starts from live_at_start, is created by preps, destroyed by
    // measurements, and moves with SWAPs).
    void finalize();

    // Nearest-neighbor and coverage validation; returns the first violation.
    ValidationReport validate() const;

    LocationCounts count_locations() const;

    // Live flags per position just before the given slice.
    std::vector<uint8_t> liveness_before(uint32_t slice) const;

    std::string serialize() const;
    static Circuit parse(const std::string& text);
};

// Sequential composition: b's slices appended after a's with b's positions
// shifted by `offset`. Requires offset + b.width <= a.width. Throws on
// overflow or on block metadata claiming the same home positions at the same
// level.
Circuit concatenate(const Circuit& a, const Circuit& b, uint32_t offset);

// FNV-1a hash of the canonical text form; used in run manifests.
uint64_t content_hash(const Circuit& c);

}  // namespace qec1d
