#pragma once

#include <cstdint>

namespace ss::ops {

// Thread-local tallies of base-field work. Multiplications dominate every
// algorithm here, so they are the headline "field operation" figure;
// inversions are tracked separately and folded in by total().
struct Counters {
    std::uint64_t fp_mul = 0;
    std::uint64_t fp_inv = 0;

    std::uint64_t total() const { return fp_mul + fp_inv; }
};

Counters& local();

inline void count_mul() { ++local().fp_mul; }
inline void count_inv() { ++local().fp_inv; }

inline void reset() { local() = Counters{}; }
inline Counters snapshot() { return local(); }

}  // namespace ss::ops
