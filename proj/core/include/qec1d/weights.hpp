#pragma once

#include <cstdint>
#include <string>

#include "qec1d/code412.hpp"

namespace qec1d {

// Flag weight: Pr(error) = O(p^w). Absent flags are infinite. Arithmetic
// saturates at infinity; min(inf, w) = w and sums with inf are inf.
struct Weight {
    static constexpr int32_t kInf = INT32_MAX / 4;
    int32_t v = kInf;

    constexpr Weight() = default;
    constexpr explicit Weight(int32_t value) : v(value) {}
    static constexpr Weight inf() { return Weight(); }
    constexpr bool is_inf() const { return v >= kInf; }
    constexpr bool operator==(const Weight& o) const {
        return (is_inf() && o.is_inf()) || v == o.v;
    }
    constexpr bool operator<(const Weight& o) const { return v < o.v; }
};

constexpr Weight wmin(Weight a, Weight b) { return a.v <= b.v ? a : b; }
constexpr Weight wadd(Weight a, Weight b) {
    return (a.is_inf() || b.is_inf()) ? Weight::inf() : Weight(a.v + b.v);
}
// Difference used by the match table; the minuend is never below the chosen
// match, so finite results are nonnegative.
constexpr Weight wsub(Weight a, Weight b) {
    return a.is_inf() ? Weight::inf() : Weight(a.v - b.v);
}
constexpr Weight wmax(Weight a, Weight b) { return a.v >= b.v ? a : b; }

std::string weight_str(Weight w);

// Effect of an error, classically propagated to the block's next syndrome
// extraction in a given basis: whether it flips the two-outcome ancilla
// parity, and whether it leaves a residual error on data pair 1 and/or 2.
enum class EffectClass : uint8_t {
    Null,   // no effect in this basis
    A,      // flips ancilla parity only
    AG1,    // flips parity, residual on pair 1
    AG2,    // flips parity, residual on pair 2
    G1,     // residual on pair 1, no parity effect this cycle
    G2,     // residual on pair 2, no parity effect this cycle
    Joint,  // residual on both pairs, parity flips cancel
    AJoint, // residual on both pairs and parity flip (not producible by level-1 templates)
};

const char* effect_class_name(EffectClass c);

constexpr EffectClass effect_class_from_bits(bool flip, bool g1, bool g2) {
    if (flip) {
        if (g1 && g2) return EffectClass::AJoint;
        if (g1) return EffectClass::AG1;
        if (g2) return EffectClass::AG2;
        return EffectClass::A;
    }
    if (g1 && g2) return EffectClass::Joint;
    if (g1) return EffectClass::G1;
    if (g2) return EffectClass::G2;
    return EffectClass::Null;
}

// Per-block, per-basis decoder state for one error-correction cycle.
// ag1/ag2/a (and joint) describe errors that can explain the upcoming
// syndrome; g1/g2 (and joint_next) accumulate flags that have not yet had an
// opportunity to affect the ancilla and seed the next cycle.
struct BasisBins {
    Weight ag1, ag2, a, joint;
    Weight g1, g2, joint_next;

    void raise(EffectClass c, Weight w);
    // Correlated two-qubit flag: the pair bin takes max(w1, w2); both
    // single-error bins are raised separately by the caller.
    void raise_correlated(EffectClass joint_class, Weight w1, Weight w2) {
        raise(joint_class, wmax(w1, w2));
    }
};

enum class MatchKind : uint8_t { None, AG1, AG2, A };
enum class Correction : uint8_t { None, PairOneRep, PairTwoRep };  // X1/Z1, X3/Z2

const char* match_kind_name(MatchKind m);

// Decoder decision record: one row of the flag-match table.
struct MatchOutcome {
    code412::Parity parity = code412::Parity::Even;
    MatchKind match = MatchKind::None;
    Correction correction = Correction::None;
    Weight c1, c2;   // carry weights: next cycle's ag1/ag2 seeds
    Weight ce;       // encoded weight handed to the level above
    bool inconsistent = false;  // odd parity with no finite explanation
};

enum class DecoderMode : uint8_t {
    TableLiteral,   // encoded weight on even syndrome is ag1 + ag2
    JointExtended,  // ... min'd with the tracked correlated bin
};

// Match selection and weight updates. Even parity always matches no error.
// Odd parity matches the minimum of {ag1, ag2, a} with deterministic tie
// order ag1 < ag2 < a.
//
//   parity | match | correction | c1        | c2        | ce
//   even   | None  | none       | ag1 + a   | ag2 + a   | ag1 + ag2
//   odd    | AG1   | X1/Z1      | a - ag1   | ag2 + a   | ag2 - ag1
//   odd    | AG2   | X3/Z2      | ag1 + a   | a - ag2   | ag1 - ag2
//   odd    | A     | none       | ag1 - a   | ag2 - a   | ag1 + ag2
MatchOutcome match_and_correct(const BasisBins& bins, code412::Parity parity,
                               DecoderMode mode = DecoderMode::TableLiteral);

// End-of-cycle carry: next ag1/ag2 take the minimum of the accumulated g1/g2
// and the outcome's c1/c2; a resets; in extended mode the correlated bin
// carries min(joint_next, ce).
BasisBins carry_over(const BasisBins& bins, const MatchOutcome& outcome,
                     DecoderMode mode = DecoderMode::TableLiteral);

}  // namespace qec1d
