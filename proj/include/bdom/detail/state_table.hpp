#pragma once

// Open-addressing map from packed frontier states to the best partial
// solution reaching them within one sweep step.

#include <cstdint>
#include <tuple>
#include <vector>

namespace bdom::detail {

using Packed = unsigned __int128;

struct StateEntry {
    Packed state = 0;
    std::int32_t cost = -1;
    std::uint32_t mask = 0;    // towers placed so far in the current column
    std::uint32_t origin = 0;  // index into the previous column-boundary layer
};

inline bool better(const StateEntry& a, const StateEntry& b) {
    return std::tie(a.cost, a.mask, a.origin) < std::tie(b.cost, b.mask, b.origin);
}

class StateTable {
public:
    void reset(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < 2 * expected + 16) cap <<= 1;
        slots_.assign(cap, 0);
        bits_ = cap - 1;
        entries_.clear();
        entries_.reserve(expected);
    }

    void offer(const StateEntry& e) {
        if (2 * (entries_.size() + 1) > slots_.size()) grow();
        std::size_t h = hash(e.state) & bits_;
        while (slots_[h] != 0) {
            StateEntry& cur = entries_[slots_[h] - 1];
            if (cur.state == e.state) {
                if (better(e, cur)) cur = e;
                return;
            }
            h = (h + 1) & bits_;
        }
        entries_.push_back(e);
        slots_[h] = static_cast<std::uint32_t>(entries_.size());
    }

    [[nodiscard]] std::size_t size() const { return entries_.size(); }

    /// Moves the entries into `out` (replacing its contents).
    void drain(std::vector<StateEntry>& out) {
        out.swap(entries_);
        entries_.clear();
    }

private:
    static std::size_t hash(Packed s) {
        auto lo = static_cast<std::uint64_t>(s);
        auto hi = static_cast<std::uint64_t>(s >> 64);
        std::uint64_t x = lo ^ (hi * 0x9E3779B97F4A7C15ULL);
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDULL;
        x ^= x >> 33;
        x *= 0xC4CEB9FE1A85EC53ULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }

    void grow() {
        slots_.assign(slots_.size() * 2, 0);
        bits_ = slots_.size() - 1;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            std::size_t h = hash(entries_[i].state) & bits_;
            while (slots_[h] != 0) h = (h + 1) & bits_;
            slots_[h] = static_cast<std::uint32_t>(i + 1);
        }
    }

    std::vector<std::uint32_t> slots_;
    std::vector<StateEntry> entries_;
    std::size_t bits_ = 0;
};

}  // namespace bdom::detail
