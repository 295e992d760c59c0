#include "ss/fp.hpp"

namespace ss {

FpField::FpField(Nat p) : p_(std::move(p)) {
    half_ = (p_ - 1) / 2;
    two_part_d_ = p_ - 1;
    while (mpz_even_p(two_part_d_.get_mpz_t())) {
        two_part_d_ >>= 1;
        ++two_part_s_;
    }
    nonresidue_pow_d_ = pow_mod(find_nqr(p_), two_part_d_, p_);
}

std::shared_ptr<const FpField> FpField::make(Nat p) {
    if (p <= 3) throw precondition_error("FpField: p must exceed 3");
    if (!is_prime(p)) throw precondition_error("FpField: modulus is not prime");
    return std::shared_ptr<const FpField>(new FpField(std::move(p)));
}

Nat FpField::inv(const Nat& a) const {
    if (a == 0) throw precondition_error("FpField: division by zero");
    ops::count_inv();
    Nat r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Nat FpField::pow(Nat base, const Nat& exp) const {
    Nat acc = 1;
    const std::size_t bits = bit_length(exp);
    for (std::size_t i = bits; i-- > 0;) {
        acc = mul(acc, acc);
        if (test_bit(exp, i)) acc = mul(acc, base);
    }
    return acc;
}

int FpField::legendre(const Nat& a) const {
    if (a % p_ == 0) return 0;
    return mpz_legendre(a.get_mpz_t(), p_.get_mpz_t());
}

std::optional<Nat> FpField::sqrt(const Nat& a) const {
    if (a == 0) return Nat(0);
    if (legendre(a) != 1) return std::nullopt;
    // Tonelli-Shanks with precomputed 2-Sylow generator.
    Nat m = two_part_s_;
    Nat c = nonresidue_pow_d_;
    Nat t = pow(a, two_part_d_);
    Nat r = pow(a, (two_part_d_ + 1) / 2);
    while (t != 1) {
        Nat t2 = t;
        unsigned i = 0;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
        }
        Nat b = c;
        for (Nat j = 0; j < m - i - 1; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

Nat find_nqr(const Nat& p) {
    for (Nat z = 2;; ++z) {
        if (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) == -1) return z;
    }
}

}  // namespace ss
