#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ss/nat.hpp"

namespace ss {

// Deterministic RNG with labelled splitting. Children derived with the same
// seed and label always produce the same stream, which keeps concurrent and
// serial runs byte-identical. Sampling avoids std::uniform_int_distribution
// on purpose: its output is not pinned down by the standard.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    Rng split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(mix(seed_ ^ h));
    }

    Rng split(std::uint64_t index) const { return Rng(mix(seed_ ^ mix(index + 0x9e37u))); }

    std::uint64_t u64() { return gen_(); }

    bool coin() { return (u64() & 1) != 0; }

    // Uniform in [0, bound) by rejection on fixed-width draws.
    Nat below(const Nat& bound) {
        if (bound <= 0) throw precondition_error("rng: empty range");
        const std::size_t bits = bit_length(bound);
        const std::size_t words = (bits + 63) / 64;
        while (true) {
            Nat r = 0;
            for (std::size_t i = 0; i < words; ++i) {
                r <<= 64;
                r += Nat(u64());
            }
            r >>= words * 64 - bits;
            if (r < bound) return r;
        }
    }

    // Random odd integer with exactly `bits` bits.
    Nat odd_bits(std::size_t bits) {
        if (bits < 2) throw precondition_error("rng: bit length too small");
        Nat r = below(Nat(1) << (bits - 1));
        mpz_setbit(r.get_mpz_t(), bits - 1);
        mpz_setbit(r.get_mpz_t(), 0);
        return r;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace ss
