#include "qec1d/code412.hpp"

namespace qec1d {
namespace code412 {

const CodeDefinition& definition() {
    static const CodeDefinition def;
    return def;
}

namespace {
constexpr int popcount4(uint8_t m) { return __builtin_popcount(m & 0xF); }

const std::array<uint8_t, 2>& pairs_for(Basis error_basis) {
    return error_basis == Basis::X ? definition().pairs_x : definition().pairs_z;
}
}  // namespace

LogicalAction classify_mask(uint8_t mask, Basis error_basis) {
    const auto& pairs = pairs_for(error_basis);
    bool odd1 = popcount4(mask & pairs[0]) & 1;
    bool odd2 = popcount4(mask & pairs[1]) & 1;
    if (!odd1 && !odd2) return LogicalAction::Trivial;
    if (odd1 && odd2) return LogicalAction::Logical;
    return LogicalAction::Detectable;
}

uint8_t component_mask(const ErrorFrame& frame, const std::array<uint32_t, 4>& data_positions,
                       Basis basis) {
    uint8_t mask = 0;
    for (int r = 0; r < 4; ++r) {
        Pauli p = frame.get(data_positions[r]);
        bool hit = (basis == Basis::X) ? has_x(p) : has_z(p);
        if (hit) mask |= uint8_t(1u << r);
    }
    return mask;
}

BlockAction logical_action(const ErrorFrame& frame, const std::array<uint32_t, 4>& data_positions) {
    return BlockAction{
        classify_mask(component_mask(frame, data_positions, Basis::X), Basis::X),
        classify_mask(component_mask(frame, data_positions, Basis::Z), Basis::Z),
    };
}

uint8_t canonical_mask(uint8_t mask, Basis error_basis) {
    const auto& pairs = pairs_for(error_basis);
    uint8_t out = 0;
    for (const uint8_t pair : pairs) {
        if (popcount4(mask & pair) & 1) {
            // lowest role in the pair is the representative
            out |= uint8_t(pair & (~pair + 1u));
        }
    }
    return out;
}

TransversalDecode decode_transversal_measurement(const std::array<int, 4>& outcomes, Basis basis) {
    TransversalDecode d;
    if (basis == Basis::Z) {
        d.logical = outcomes[0] * outcomes[1];
        int g1 = outcomes[0] * outcomes[2];  // Z1Z3
        int g2 = outcomes[1] * outcomes[3];  // Z2Z4
        d.detection = decode_parity(g1, g2) == Parity::Odd;
    } else {
        d.logical = outcomes[0] * outcomes[2];
        int g1 = outcomes[0] * outcomes[1];  // X1X2
        int g2 = outcomes[2] * outcomes[3];  // X3X4
        d.detection = decode_parity(g1, g2) == Parity::Odd;
    }
    return d;
}

uint64_t distance_at_level(uint32_t l) { return uint64_t(1) << (l + 1); }

}  // namespace code412
}  // namespace qec1d
