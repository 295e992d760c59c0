#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ss/fq.hpp"

namespace ss {

class Rng;

// Dense univariate polynomial over F_{p^2}. Coefficient i is the
// coefficient of x^i. Canonical form: no trailing zero coefficients; the
// zero polynomial has an empty list and degree() = -1 (the "minus infinity"
// sentinel).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const FqField* field) : F_(field) {}
    Poly(const FqField* field, std::vector<FqElem> coeffs)
        : F_(field), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const FqField* F) { return Poly(F); }
    static Poly constant(const FqElem& c) {
        Poly p(c.F);
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }
    static Poly constant(const FqField* F, const Nat& n) {
        return constant(FqElem::from_int(F, n));
    }
    static Poly x(const FqField* F) {
        Poly p(F);
        p.c_ = {FqElem::zero(F), FqElem::one(F)};
        return p;
    }
    // x^k with unit coefficient.
    static Poly monomial(const FqField* F, std::size_t k) {
        Poly p(F);
        p.c_.assign(k + 1, FqElem::zero(F));
        p.c_.back() = FqElem::one(F);
        return p;
    }
    static Poly from_ints(const FqField* F, std::initializer_list<long> coeffs);

    const FqField* field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<FqElem>& coeffs() const { return c_; }
    FqElem at(std::size_t i) const {
        return i < c_.size() ? c_[i] : FqElem::zero(F_);
    }
    const FqElem& lc() const { return c_.back(); }

    void set_coeff(std::size_t i, const FqElem& v);

    FqElem eval(const FqElem& x0) const;

    Poly monic() const;
    Poly shifted(std::size_t k) const;  // multiply by x^k
    // Reverse with respect to degree bound n: x^n * p(1/x).
    Poly reversed(std::size_t n) const;
    Poly truncated(std::size_t n) const;  // coefficients below x^n

    friend bool operator==(const Poly& a, const Poly& b);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FqElem& s, const Poly& a);

    void trim();

  private:
    const FqField* F_ = nullptr;
    std::vector<FqElem> c_;
};

// Truncated product: (a*b) mod x^n. Used where only low coefficients matter.
Poly mul_truncated(const Poly& a, const Poly& b, std::size_t n);

// Euclidean division, divisor nonzero: a = q*m + r with deg r < deg m.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& m);
Poly poly_rem(const Poly& a, const Poly& m);
Poly poly_quot(const Poly& a, const Poly& m);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
// g = s*a + t*b with g monic.
struct EgcdResult {
    Poly g, s, t;
};
EgcdResult poly_egcd(const Poly& a, const Poly& b);

// Reduction context for a fixed modulus. The divisor is normalised to be
// monic (remainders are unchanged by scaling the divisor); repeated
// reductions use a precomputed Newton inverse of the reversed modulus, so a
// reduce of a degree < 2n product costs two multiplications instead of a
// quadratic long division.
class ModCtx {
  public:
    explicit ModCtx(Poly modulus);

    const Poly& modulus() const { return m_; }
    int n() const { return n_; }
    const FqField* field() const { return m_.field(); }

    Poly reduce(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly sqr(const Poly& a) const { return reduce(a * a); }
    Poly pow(Poly base, const Nat& e) const;

    // A(G) mod m by Brent-Kung block evaluation; deg A < n, G reduced.
    Poly compose(const Poly& a, const Poly& g) const;

  private:
    Poly m_;        // monic
    int n_ = 0;     // deg m
    Poly rev_inv_;  // rev(m)^{-1} mod x^n
};

// base^e mod m. One-shot convenience around ModCtx.
Poly poly_powmod(const Poly& base, const Nat& e, const Poly& m);

// The r-th cyclotomic polynomial x^{r-1} + ... + 1 for an odd prime r != p.
Poly cyclotomic(const FqField* F, const Nat& r);

}  // namespace ss
