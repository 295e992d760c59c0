#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ss/testers.hpp"

namespace ss {

struct BenchRecord {
    std::size_t p_bits = 0;
    std::string curve_class;  // "ordinary" or "supersingular"
    Method method = Method::HighOrder;
    std::uint64_t n_curves = 0;
    double mean_time_s = 0.0;
    std::uint64_t mean_field_ops = 0;
    std::uint64_t seed = 0;
};

struct BenchConfig {
    std::vector<std::size_t> bit_sizes;
    std::vector<Method> methods{Method::HighOrder, Method::IsoGr};
    std::vector<std::string> classes{"ordinary", "supersingular"};
    std::uint64_t curves_per_class = 10;
    std::uint64_t seed = 1;
    Nat mc_iters = 2;
    bool serial = false;
    bool with_time = true;
    std::optional<double> epsilon;
    std::optional<double> poonen_c;
};

std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

std::string bench_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_bench_csv(const std::string& csv);

// Random prime with exactly `bits` bits: random odd of that length, then
// next_prime, rejecting results that overflow the length. Primes p = 1 mod
// 12 are rejected too when a supersingular curve must be constructible.
Nat random_prime_bits(std::size_t bits, Rng& rng, bool constructible_supersingular);

}  // namespace ss
