#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ss {

// Arbitrary-precision integer. Non-negative by convention for moduli,
// indices and counts; signed where a trace or difference is meant.
using Nat = mpz_class;

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t bit_length(const Nat& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool test_bit(const Nat& n, std::size_t i) {
    return mpz_tstbit(n.get_mpz_t(), i) != 0;
}

inline Nat pow_mod(const Nat& base, const Nat& exp, const Nat& mod) {
    Nat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Miller-Rabin with at least 40 rounds, plus trial division by small primes.
bool is_prime(const Nat& n);

// Smallest prime strictly greater than n.
Nat next_prime(const Nat& n);

inline Nat binomial(unsigned long n, unsigned long k) {
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Nat& n) { return n.get_str(); }

}  // namespace ss
