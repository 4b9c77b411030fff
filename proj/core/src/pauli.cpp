#include "qec1d/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace qec1d {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Z: return 'Z';
        case Pauli::Y: return 'Y';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Z': return Pauli::Z;
        case 'Y': return Pauli::Y;
        default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
    }
}

void ErrorFrame::set(uint32_t pos, Pauli p) {
    Pauli old = letters_[pos];
    if (old == p) return;
    letters_[pos] = p;
    if (old == Pauli::I) {
        support_.push_back(pos);
    } else if (p == Pauli::I) {
        support_.erase(std::find(support_.begin(), support_.end(), pos));
    }
}

void ErrorFrame::clear() {
    for (uint32_t pos : support_) letters_[pos] = Pauli::I;
    support_.clear();
}

ErrorFrame ErrorFrame::composed_with(const ErrorFrame& other) const {
    ErrorFrame out(*this);
    for (uint32_t pos : other.support_) out.compose_at(pos, other.letters_[pos]);
    return out;
}

bool ErrorFrame::operator==(const ErrorFrame& other) const {
    if (letters_.size() != other.letters_.size()) return false;
    if (support_.size() != other.support_.size()) return false;
    for (uint32_t pos : support_)
        if (letters_[pos] != other.letters_[pos]) return false;
    return true;
}

const char* kind_name(LocationKind k) {
    switch (k) {
        case LocationKind::PrepZ: return "PrepZ";
        case LocationKind::PrepX: return "PrepX";
        case LocationKind::MeasZ: return "MeasZ";
        case LocationKind::MeasX: return "MeasX";
        case LocationKind::Memory: return "Memory";
        case LocationKind::CNOT: return "CNOT";
        case LocationKind::SWAP: return "SWAP";
        case LocationKind::H: return "H";
    }
    return "?";
}

bool kind_from_name(const std::string& s, LocationKind& out) {
    static const std::pair<const char*, LocationKind> table[] = {
        {"PrepZ", LocationKind::PrepZ}, {"PrepX", LocationKind::PrepX},
        {"MeasZ", LocationKind::MeasZ}, {"MeasX", LocationKind::MeasX},
        {"Memory", LocationKind::Memory}, {"CNOT", LocationKind::CNOT},
        {"SWAP", LocationKind::SWAP},   {"H", LocationKind::H},
    };
    for (const auto& [name, kind] : table) {
        if (s == name) {
            out = kind;
            return true;
        }
    }
    return false;
}

void apply_gate(ErrorFrame& frame, LocationKind kind, uint32_t p0, uint32_t p1) {
    switch (kind) {
        case LocationKind::CNOT: {
            // control p0, target p1
            Pauli c = frame.get(p0), t = frame.get(p1);
            bool cx = has_x(c), cz = has_z(c), tx = has_x(t), tz = has_z(t);
            // X on control copies to target; Z on target copies to control.
            frame.set(p1, make_pauli(tx ^ cx, tz));
            frame.set(p0, make_pauli(cx, cz ^ tz));
            break;
        }
        case LocationKind::SWAP: {
            Pauli a = frame.get(p0), b = frame.get(p1);
            frame.set(p0, b);
            frame.set(p1, a);
            break;
        }
        case LocationKind::H: {
            Pauli p = frame.get(p0);
            frame.set(p0, make_pauli(has_z(p), has_x(p)));
            break;
        }
        case LocationKind::PrepZ:
        case LocationKind::PrepX:
            frame.set(p0, Pauli::I);
            break;
        case LocationKind::MeasZ:
        case LocationKind::MeasX:
        case LocationKind::Memory:
            break;
    }
}

bool flips_measurement(const ErrorFrame& frame, uint32_t position, LocationKind meas_basis) {
    Pauli p = frame.get(position);
    if (meas_basis == LocationKind::MeasZ || meas_basis == LocationKind::PrepZ)
        return has_x(p);
    return has_z(p);
}

}  // namespace qec1d
