#include "ss/nat.hpp"

namespace ss {

namespace {

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                     73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One Miller-Rabin round with the given base; n odd > 3, n - 1 = 2^s * d.
bool mr_round(const Nat& n, const Nat& base, const Nat& d, unsigned s) {
    Nat x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Nat& n) {
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Nat d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    // Fixed base sequence keeps the result reproducible run to run.
    std::uint64_t state = 0x5357a0d1u ^ mpz_fdiv_ui(n.get_mpz_t(), 0xffffffffu);
    for (int round = 0; round < 40; ++round) {
        Nat base = 2 + Nat(splitmix64(state) % 0xffffffffffffULL) % (n - 3);
        if (!mr_round(n, base, d, s)) return false;
    }
    return true;
}

Nat next_prime(const Nat& n) {
    Nat c = n + 1;
    if (c <= 2) return 2;
    if (mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

}  // namespace ss
