#pragma once

#include <memory>
#include <optional>

#include "ss/fp.hpp"

namespace ss {

struct FqElem;

// F_{p^2} = F_p[u]/(u^2 - nqr) with nqr the smallest quadratic non-residue
// of F_p. Elements are written c0 + c1*u. Since nqr^((p-1)/2) = -1, the
// p-power Frobenius is simply (c0, c1) -> (c0, -c1).
class FqField {
  public:
    static std::shared_ptr<const FqField> make(Nat p);

    const FpField& fp() const { return *fp_; }
    const Nat& p() const { return p_; }
    const Nat& nqr() const { return nqr_; }
    const Nat& q() const { return q_; }                    // p^2
    const Nat& q_minus_1() const { return q_minus_1_; }
    const Nat& legendre_exp() const { return half_q_; }    // (q-1)/2

    std::shared_ptr<const FpField> fp_shared() const { return fp_; }

    // Canonical non-square of F_q (first found scanning u, u+1, ...).
    FqElem nonsquare() const;

  private:
    explicit FqField(Nat p);

    std::shared_ptr<const FpField> fp_;
    Nat p_;
    Nat nqr_;
    Nat q_;
    Nat q_minus_1_;
    Nat half_q_;

    // Tonelli-Shanks data for F_q: q-1 = 2^s * d with d odd, plus w = z^d
    // for a non-square z of F_q.
    friend struct FqElem;
    Nat two_part_d_;
    unsigned two_part_s_ = 0;
    Nat ns_c0_, ns_c1_;            // the non-square itself
    Nat ns_pow_d_c0_, ns_pow_d_c1_;
};

struct FqElem {
    const FqField* F = nullptr;
    Nat c0, c1;

    FqElem() = default;
    FqElem(const FqField* field, Nat a0, Nat a1)
        : F(field), c0(field->fp().reduce(std::move(a0))), c1(field->fp().reduce(std::move(a1))) {}

    static FqElem zero(const FqField* field) { return raw(field, 0, 0); }
    static FqElem one(const FqField* field) { return raw(field, 1, 0); }
    static FqElem from_int(const FqField* field, const Nat& n) {
        return FqElem(field, n, 0);
    }
    static FqElem gen_u(const FqField* field) { return raw(field, 0, 1); }

    bool is_zero() const { return c0 == 0 && c1 == 0; }
    bool is_one() const { return c0 == 1 && c1 == 0; }
    bool in_prime_field() const { return c1 == 0; }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.c0 == b.c0 && a.c1 == b.c1;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        const FpField& fp = a.F->fp();
        return raw(a.F, fp.add(a.c0, b.c0), fp.add(a.c1, b.c1));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        const FpField& fp = a.F->fp();
        return raw(a.F, fp.sub(a.c0, b.c0), fp.sub(a.c1, b.c1));
    }
    friend FqElem operator-(const FqElem& a) {
        const FpField& fp = a.F->fp();
        return raw(a.F, fp.neg(a.c0), fp.neg(a.c1));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b);

    FqElem square() const;
    FqElem frobenius() const {
        return raw(F, c0, F->fp().neg(c1));
    }
    FpElem norm() const;  // a * a^p = c0^2 - nqr*c1^2, lands in F_p
    FqElem inv() const;
    FqElem pow(const Nat& e) const;

    bool is_square() const;
    std::optional<FqElem> sqrt() const;

    // Ordering used only for canonical choices (e.g. picking the first
    // root); it has no algebraic meaning.
    friend bool lex_less(const FqElem& a, const FqElem& b) {
        if (a.c0 != b.c0) return a.c0 < b.c0;
        return a.c1 < b.c1;
    }

    static FqElem raw(const FqField* field, Nat a0, Nat a1) {
        FqElem e;
        e.F = field;
        e.c0 = std::move(a0);
        e.c1 = std::move(a1);
        return e;
    }
};

}  // namespace ss
