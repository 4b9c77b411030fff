#include "qec1d/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qec1d {

bool Circuit::operator==(const Circuit& other) const {
    return width == other.width && n_slices == other.n_slices && locations == other.locations &&
           live_at_start == other.live_at_start && blocks == other.blocks && qperm == other.qperm;
}

void Circuit::finalize() {
    std::stable_sort(locations.begin(), locations.end(), [](const Location& a, const Location& b) {
        if (a.slice != b.slice) return a.slice < b.slice;
        return a.min_pos() < b.min_pos();
    });
    n_slices = locations.empty() ? 0 : locations.back().slice + 1;
    slice_offsets.assign(n_slices + 1, 0);
    for (const Location& loc : locations) slice_offsets[loc.slice + 1]++;
    for (uint32_t s = 0; s < n_slices; ++s) slice_offsets[s + 1] += slice_offsets[s];

    if (live_at_start.size() != width) live_at_start.assign(width, 1);
    std::vector<uint8_t> live = live_at_start;
    for (Location& loc : locations) {
        switch (loc.kind) {
            case LocationKind::Memory:
                loc.counted = live[loc.pos[0]] != 0;
                break;
            case LocationKind::PrepZ:
            case LocationKind::PrepX:
                loc.counted = true;
                live[loc.pos[0]] = 1;
                break;
            case LocationKind::MeasZ:
            case LocationKind::MeasX:
                loc.counted = live[loc.pos[0]] != 0;
                live[loc.pos[0]] = 0;
                break;
            case LocationKind::H:
                loc.counted = live[loc.pos[0]] != 0;
                break;
            case LocationKind::CNOT:
                loc.counted = live[loc.pos[0]] || live[loc.pos[1]];
                break;
            case LocationKind::SWAP:
                loc.counted = live[loc.pos[0]] || live[loc.pos[1]];
                std::swap(live[loc.pos[0]], live[loc.pos[1]]);
                break;
        }
    }
}

std::vector<uint8_t> Circuit::liveness_before(uint32_t slice) const {
    std::vector<uint8_t> live = live_at_start;
    for (const Location& loc : locations) {
        if (loc.slice >= slice) break;
        if (is_prep(loc.kind)) live[loc.pos[0]] = 1;
        else if (is_meas(loc.kind)) live[loc.pos[0]] = 0;
        else if (loc.kind == LocationKind::SWAP) std::swap(live[loc.pos[0]], live[loc.pos[1]]);
    }
    return live;
}

ValidationReport Circuit::validate() const {
    std::vector<uint32_t> seen(width, UINT32_MAX);
    uint32_t id = 0;
    for (uint32_t s = 0; s < n_slices; ++s) {
        uint32_t covered = 0;
        for (uint32_t i = slice_offsets[s]; i < slice_offsets[s + 1]; ++i, ++id) {
            const Location& loc = locations[i];
            for (int k = 0; k < loc.npos; ++k) {
                uint32_t p = loc.pos[k];
                if (p >= width)
                    return {false, "position beyond declared width", i};
                if (seen[p] == s)
                    return {false, "position used by two locations in one slice", i};
                seen[p] = s;
                ++covered;
            }
            if (is_two_qubit(loc.kind)) {
                if (loc.npos != 2)
                    return {false, "two-qubit kind with one position", i};
                int64_t d = int64_t(loc.pos[0]) - int64_t(loc.pos[1]);
                if (d != 1 && d != -1)
                    return {false, "two-qubit gate on non-adjacent positions", i};
            } else if (loc.npos != 1) {
                return {false, "single-qubit kind with two positions", i};
            }
        }
        if (covered != width)
            return {false, "slice " + std::to_string(s) + " does not cover every position",
                    slice_offsets[s]};
    }
    return {};
}

LocationCounts Circuit::count_locations() const {
    LocationCounts c;
    std::vector<uint8_t> live = live_at_start;
    for (const Location& loc : locations) {
        c.cells += loc.npos;
        if (loc.kind == LocationKind::SWAP && live[loc.pos[0]] && live[loc.pos[1]] && loc.counted)
            c.data_data_swaps++;
        if (is_prep(loc.kind)) live[loc.pos[0]] = 1;
        else if (is_meas(loc.kind)) live[loc.pos[0]] = 0;
        else if (loc.kind == LocationKind::SWAP) std::swap(live[loc.pos[0]], live[loc.pos[1]]);
        if (!loc.counted) {
            c.uncounted++;
            continue;
        }
        c.total++;
        c.by_kind[static_cast<size_t>(loc.kind)]++;
    }
    return c;
}

namespace {

struct ParseCursor {
    const std::string& text;
    size_t pos = 0;
    uint32_t line = 1;
    uint32_t col = 1;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("parse error at " + std::to_string(line) + ":" +
                                 std::to_string(col) + ": " + what);
    }
};

}  // namespace

std::string Circuit::serialize() const {
    std::ostringstream out;
    out << "# qec1d circuit v1\n";
    out << "width " << width << "\n";
    bool all_live = std::all_of(live_at_start.begin(), live_at_start.end(),
                                [](uint8_t v) { return v != 0; });
    if (all_live) {
        out << "live all\n";
    } else {
        out << "live";
        for (uint32_t p = 0; p < width; ++p)
            if (live_at_start[p]) out << ' ' << p;
        out << "\n";
    }
    for (const BlockMeta& b : blocks) {
        out << "block " << unsigned(b.level);
        for (uint32_t p : b.home) out << ' ' << p;
        out << "\n";
    }
    if (qperm != std::array<uint8_t, 4>{0, 1, 2, 3}) {
        out << "qperm";
        for (uint8_t r : qperm) out << ' ' << unsigned(r);
        out << "\n";
    }
    for (uint32_t s = 0; s < n_slices; ++s) {
        out << "slice";
        for (uint32_t i = slice_offsets[s]; i < slice_offsets[s + 1]; ++i) {
            const Location& loc = locations[i];
            out << ' ' << kind_name(loc.kind) << '@' << loc.pos[0];
            if (loc.npos == 2) out << ',' << loc.pos[1];
            if (loc.level != 1) out << ":l" << unsigned(loc.level);
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::parse(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    uint32_t line_no = 0;
    uint32_t slice = 0;
    bool saw_width = false;

    auto fail = [&](uint32_t col, const std::string& what) -> void {
        throw std::runtime_error("parse error at " + std::to_string(line_no) + ":" +
                                 std::to_string(col) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "width") {
            if (!(ls >> c.width)) fail(1, "width expects an integer");
            saw_width = true;
        } else if (head == "live") {
            if (!saw_width) fail(1, "live before width");
            std::string tok;
            c.live_at_start.assign(c.width, 0);
            bool any = false;
            while (ls >> tok) {
                any = true;
                if (tok == "all") {
                    c.live_at_start.assign(c.width, 1);
                    break;
                }
                uint32_t p = uint32_t(std::strtoul(tok.c_str(), nullptr, 10));
                if (p >= c.width) fail(1, "live position beyond width");
                c.live_at_start[p] = 1;
            }
            if (!any) fail(1, "live expects 'all' or positions");
        } else if (head == "block") {
            BlockMeta b;
            unsigned lvl;
            if (!(ls >> lvl)) fail(1, "block expects a level");
            b.level = uint8_t(lvl);
            for (auto& p : b.home)
                if (!(ls >> p)) fail(1, "block expects 6 home positions");
            c.blocks.push_back(b);
        } else if (head == "qperm") {
            for (auto& r : c.qperm) {
                unsigned v;
                if (!(ls >> v)) fail(1, "qperm expects 4 role indices");
                r = uint8_t(v);
            }
        } else if (head == "slice") {
            if (!saw_width) fail(1, "slice before width");
            std::string tok;
            while (ls >> tok) {
                size_t at = tok.find('@');
                if (at == std::string::npos) fail(1, "token missing '@': " + tok);
                Location loc;
                loc.slice = slice;
                LocationKind kind;
                if (!kind_from_name(tok.substr(0, at), kind))
                    fail(1, "unknown location kind: " + tok.substr(0, at));
                loc.kind = kind;
                const char* p = tok.c_str() + at + 1;
                char* end = nullptr;
                loc.pos[0] = uint32_t(std::strtoul(p, &end, 10));
                loc.npos = 1;
                if (*end == ',') {
                    loc.pos[1] = uint32_t(std::strtoul(end + 1, &end, 10));
                    loc.npos = 2;
                }
                loc.level = 1;
                if (*end == ':') {
                    if (end[1] != 'l') fail(1, "bad level suffix in: " + tok);
                    loc.level = uint8_t(std::strtoul(end + 2, &end, 10));
                }
                if (*end != '\0') fail(1, "trailing garbage in token: " + tok);
                if (is_two_qubit(loc.kind) != (loc.npos == 2))
                    fail(1, "wrong arity for " + std::string(kind_name(loc.kind)) + ": " + tok);
                if (loc.npos == 2) {
                    int64_t d = int64_t(loc.pos[0]) - int64_t(loc.pos[1]);
                    if (d != 1 && d != -1)
                        fail(1, "non-adjacent two-qubit location: " + tok);
                }
                c.locations.push_back(loc);
            }
            ++slice;
        } else {
            fail(1, "unknown directive: " + head);
        }
    }
    if (!saw_width) throw std::runtime_error("parse error: missing width");
    if (c.live_at_start.empty()) c.live_at_start.assign(c.width, 1);
    c.finalize();
    ValidationReport rep = c.validate();
    if (!rep.ok) {
        std::string where = rep.offending_location
                                ? " (location " + std::to_string(*rep.offending_location) + ")"
                                : "";
        throw std::runtime_error("parsed circuit is invalid: " + rep.message + where);
    }
    return c;
}

Circuit concatenate(const Circuit& a, const Circuit& b, uint32_t offset) {
    if (uint64_t(offset) + b.width > a.width)
        throw std::invalid_argument("concatenate: offset pushes b beyond a's width");
    Circuit out = a;
    for (Location loc : b.locations) {
        loc.slice += a.n_slices;
        loc.pos[0] += offset;
        if (loc.npos == 2) loc.pos[1] += offset;
        out.locations.push_back(loc);
    }
    for (BlockMeta blk : b.blocks) {
        for (auto& p : blk.home) p += offset;
        for (const BlockMeta& existing : out.blocks)
            if (existing.level == blk.level && existing.home == blk.home)
                throw std::invalid_argument("concatenate: duplicate block layout at same positions");
        out.blocks.push_back(blk);
    }
    out.finalize();
    return out;
}

uint64_t content_hash(const Circuit& c) {
    std::string text = c.serialize();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace qec1d
