#include "ss/fq.hpp"

namespace ss {

FqElem operator*(const FqElem& a, const FqElem& b) {
    const FpField& fp = a.F->fp();
    // Karatsuba: three generic products plus the non-residue scaling.
    Nat m0 = fp.mul(a.c0, b.c0);
    Nat m1 = fp.mul(a.c1, b.c1);
    Nat m2 = fp.mul(fp.add(a.c0, a.c1), fp.add(b.c0, b.c1));
    Nat cross = fp.sub(fp.sub(m2, m0), m1);
    Nat lo = fp.add(m0, fp.mul(a.F->nqr(), m1));
    return FqElem::raw(a.F, std::move(lo), std::move(cross));
}

FqElem FqElem::square() const {
    const FpField& fp = F->fp();
    Nat m0 = fp.mul(c0, c0);
    Nat m1 = fp.mul(c1, c1);
    Nat cross = fp.mul(c0, c1);
    cross = fp.add(cross, cross);
    Nat lo = fp.add(m0, fp.mul(F->nqr(), m1));
    return raw(F, std::move(lo), std::move(cross));
}

FpElem FqElem::norm() const {
    const FpField& fp = F->fp();
    Nat n = fp.sub(fp.mul(c0, c0), fp.mul(F->nqr(), fp.mul(c1, c1)));
    return FpElem::raw(&fp, std::move(n));
}

FqElem FqElem::inv() const {
    if (is_zero()) throw precondition_error("FqElem: division by zero");
    const FpField& fp = F->fp();
    Nat ninv = fp.inv(norm().v);
    // a^{-1} = conj(a) / norm(a)
    return raw(F, fp.mul(c0, ninv), fp.mul(fp.neg(c1), ninv));
}

FqElem FqElem::pow(const Nat& e) const {
    FqElem acc = one(F);
    const std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        acc = acc.square();
        if (test_bit(e, i)) acc = acc * *this;
    }
    return acc;
}

bool FqElem::is_square() const {
    if (is_zero()) return true;
    // a^((q-1)/2) = norm(a)^((p-1)/2), so one Legendre symbol in F_p decides.
    return F->fp().legendre(norm().v) == 1;
}

std::optional<FqElem> FqElem::sqrt() const {
    if (is_zero()) return zero(F);
    if (!is_square()) return std::nullopt;
    Nat m = F->two_part_s_;
    FqElem c = raw(F, F->ns_pow_d_c0_, F->ns_pow_d_c1_);
    FqElem t = pow(F->two_part_d_);
    FqElem r = pow((F->two_part_d_ + 1) / 2);
    const FqElem one_ = one(F);
    while (!(t == one_)) {
        FqElem t2 = t;
        unsigned i = 0;
        while (!(t2 == one_)) {
            t2 = t2.square();
            ++i;
        }
        FqElem b = c;
        for (Nat j = 0; j < m - i - 1; ++j) b = b.square();
        m = i;
        c = b.square();
        t = t * c;
        r = r * b;
    }
    return r;
}

FqField::FqField(Nat p) : p_(std::move(p)) {
    fp_ = FpField::make(p_);
    nqr_ = find_nqr(p_);
    q_ = p_ * p_;
    q_minus_1_ = q_ - 1;
    half_q_ = q_minus_1_ / 2;

    two_part_d_ = q_minus_1_;
    while (mpz_even_p(two_part_d_.get_mpz_t())) {
        two_part_d_ >>= 1;
        ++two_part_s_;
    }
    // u itself is a non-square exactly when norm(u) = -nqr is a non-residue;
    // otherwise scan u + k.
    FqElem z = FqElem::gen_u(this);
    for (Nat k = 0; z.is_square(); ++k) z = FqElem(this, k + 1, 1);
    ns_c0_ = z.c0;
    ns_c1_ = z.c1;
    FqElem zd = z.pow(two_part_d_);
    ns_pow_d_c0_ = zd.c0;
    ns_pow_d_c1_ = zd.c1;
}

FqElem FqField::nonsquare() const { return FqElem::raw(this, ns_c0_, ns_c1_); }

std::shared_ptr<const FqField> FqField::make(Nat p) {
    return std::shared_ptr<const FqField>(new FqField(std::move(p)));
}

}  // namespace ss
