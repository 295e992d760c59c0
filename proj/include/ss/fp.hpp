#pragma once

#include <memory>
#include <optional>

#include "ss/nat.hpp"
#include "ss/opcount.hpp"

namespace ss {

class Rng;

// Context for F_p, p > 3 prime. Field objects are immutable and must outlive
// the elements referring to them.
class FpField {
  public:
    static std::shared_ptr<const FpField> make(Nat p);

    const Nat& p() const { return p_; }
    const Nat& legendre_exp() const { return half_; }  // (p-1)/2

    Nat reduce(Nat v) const {
        Nat r = v % p_;
        if (r < 0) r += p_;
        return r;
    }

    Nat mul(const Nat& a, const Nat& b) const {
        ops::count_mul();
        return a * b % p_;
    }

    Nat add(const Nat& a, const Nat& b) const {
        Nat r = a + b;
        if (r >= p_) r -= p_;
        return r;
    }

    Nat sub(const Nat& a, const Nat& b) const {
        Nat r = a - b;
        if (r < 0) r += p_;
        return r;
    }

    Nat neg(const Nat& a) const { return a == 0 ? Nat(0) : Nat(p_ - a); }

    Nat inv(const Nat& a) const;
    Nat pow(Nat base, const Nat& exp) const;

    // Euler's criterion: 1 for nonzero squares, -1 for non-squares, 0 for 0.
    int legendre(const Nat& a) const;

    std::optional<Nat> sqrt(const Nat& a) const;  // Tonelli-Shanks

  private:
    explicit FpField(Nat p);

    Nat p_;
    Nat half_;        // (p-1)/2
    Nat two_part_d_;  // p-1 = 2^s * d, d odd
    unsigned two_part_s_ = 0;
    Nat nonresidue_pow_d_;  // z^d for the smallest non-residue z
};

// Element of F_p carrying its field context. Arithmetic asserts matching
// moduli only in debug builds; all values are canonical in [0, p).
struct FpElem {
    const FpField* F = nullptr;
    Nat v;

    FpElem() = default;
    FpElem(const FpField* field, Nat value) : F(field), v(field->reduce(std::move(value))) {}

    bool is_zero() const { return v == 0; }

    friend bool operator==(const FpElem& a, const FpElem& b) { return a.v == b.v; }
    friend FpElem operator+(const FpElem& a, const FpElem& b) { return raw(a.F, a.F->add(a.v, b.v)); }
    friend FpElem operator-(const FpElem& a, const FpElem& b) { return raw(a.F, a.F->sub(a.v, b.v)); }
    friend FpElem operator*(const FpElem& a, const FpElem& b) { return raw(a.F, a.F->mul(a.v, b.v)); }
    friend FpElem operator-(const FpElem& a) { return raw(a.F, a.F->neg(a.v)); }

    FpElem inv() const { return raw(F, F->inv(v)); }
    FpElem pow(const Nat& e) const { return raw(F, F->pow(v, e)); }
    std::optional<FpElem> sqrt() const {
        auto r = F->sqrt(v);
        if (!r) return std::nullopt;
        return raw(F, *r);
    }

    static FpElem raw(const FpField* field, Nat canonical) {
        FpElem e;
        e.F = field;
        e.v = std::move(canonical);
        return e;
    }
};

// Smallest quadratic non-residue mod p by increasing trial, so the F_{p^2}
// representation is reproducible across runs.
Nat find_nqr(const Nat& p);

}  // namespace ss
