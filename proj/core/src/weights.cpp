#include "qec1d/weights.hpp"

namespace qec1d {

std::string weight_str(Weight w) {
    return w.is_inf() ? "inf" : std::to_string(w.v);
}

const char* effect_class_name(EffectClass c) {
    switch (c) {
        case EffectClass::Null: return "Null";
        case EffectClass::A: return "A";
        case EffectClass::AG1: return "AG1";
        case EffectClass::AG2: return "AG2";
        case EffectClass::G1: return "G1";
        case EffectClass::G2: return "G2";
        case EffectClass::Joint: return "Joint";
        case EffectClass::AJoint: return "AJoint";
    }
    return "?";
}

const char* match_kind_name(MatchKind m) {
    switch (m) {
        case MatchKind::None: return "None";
        case MatchKind::AG1: return "AG1";
        case MatchKind::AG2: return "AG2";
        case MatchKind::A: return "A";
    }
    return "?";
}

void BasisBins::raise(EffectClass c, Weight w) {
    switch (c) {
        case EffectClass::Null: break;
        case EffectClass::A: a = wmin(a, w); break;
        case EffectClass::AG1: ag1 = wmin(ag1, w); break;
        case EffectClass::AG2: ag2 = wmin(ag2, w); break;
        case EffectClass::G1: g1 = wmin(g1, w); break;
        case EffectClass::G2: g2 = wmin(g2, w); break;
        case EffectClass::Joint: joint = wmin(joint, w); break;
        case EffectClass::AJoint:
            // Not producible by the level-1 templates; treat conservatively as
            // both a parity explanation and a correlated-pair worry.
            a = wmin(a, w);
            joint = wmin(joint, w);
            break;
    }
}

MatchOutcome match_and_correct(const BasisBins& bins, code412::Parity parity, DecoderMode mode) {
    MatchOutcome out;
    out.parity = parity;
    if (parity == code412::Parity::Even) {
        out.match = MatchKind::None;
        out.correction = Correction::None;
        out.c1 = wadd(bins.ag1, bins.a);
        out.c2 = wadd(bins.ag2, bins.a);
        out.ce = wadd(bins.ag1, bins.ag2);
        if (mode == DecoderMode::JointExtended) out.ce = wmin(out.ce, bins.joint);
        return out;
    }
    // Odd parity: lowest-weight consistent bin, tie order AG1 < AG2 < A.
    if (bins.ag1.is_inf() && bins.ag2.is_inf() && bins.a.is_inf()) {
        out.inconsistent = true;
        out.match = MatchKind::None;
        out.c1 = out.c2 = out.ce = Weight::inf();
        return out;
    }
    if (!(bins.ag2 < bins.ag1) && !(bins.a < bins.ag1)) {
        out.match = MatchKind::AG1;
        out.correction = Correction::PairOneRep;
        out.c1 = wsub(bins.a, bins.ag1);
        out.c2 = wadd(bins.ag2, bins.a);
        out.ce = wsub(bins.ag2, bins.ag1);
    } else if (!(bins.a < bins.ag2)) {
        out.match = MatchKind::AG2;
        out.correction = Correction::PairTwoRep;
        out.c1 = wadd(bins.ag1, bins.a);
        out.c2 = wsub(bins.a, bins.ag2);
        out.ce = wsub(bins.ag1, bins.ag2);
    } else {
        out.match = MatchKind::A;
        out.correction = Correction::None;
        out.c1 = wsub(bins.ag1, bins.a);
        out.c2 = wsub(bins.ag2, bins.a);
        out.ce = wadd(bins.ag1, bins.ag2);
    }
    return out;
}

BasisBins carry_over(const BasisBins& bins, const MatchOutcome& outcome, DecoderMode mode) {
    BasisBins next;
    next.ag1 = wmin(bins.g1, outcome.c1);
    next.ag2 = wmin(bins.g2, outcome.c2);
    if (mode == DecoderMode::JointExtended)
        next.joint = wmin(bins.joint_next, outcome.ce);
    return next;
}

}  // namespace qec1d
