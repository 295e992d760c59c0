#include "ss/poly.hpp"

#include <algorithm>
#include <cassert>

namespace ss {

namespace {
constexpr std::size_t kKaratsubaThreshold = 32;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::set_coeff(std::size_t i, const FqElem& v) {
    if (i >= c_.size()) {
        if (v.is_zero()) return;
        c_.resize(i + 1, FqElem::zero(F_));
    }
    c_[i] = v;
    trim();
}

Poly Poly::from_ints(const FqField* F, std::initializer_list<long> coeffs) {
    std::vector<FqElem> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(FqElem(F, Nat(c), 0));
    return Poly(F, std::move(v));
}

FqElem Poly::eval(const FqElem& x0) const {
    FqElem acc = FqElem::zero(F_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (lc().is_one()) return *this;
    return lc().inv() * *this;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(F_);
    r.c_.assign(k, FqElem::zero(F_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::reversed(std::size_t n) const {
    Poly r(F_);
    r.c_.assign(n + 1, FqElem::zero(F_));
    for (std::size_t i = 0; i < c_.size() && i <= n; ++i) r.c_[n - i] = c_[i];
    r.trim();
    return r;
}

Poly Poly::truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    Poly r(F_);
    r.c_.assign(c_.begin(), c_.begin() + n);
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

Poly operator+(const Poly& a, const Poly& b) {
    const FqField* F = a.F_ ? a.F_ : b.F_;
    Poly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), FqElem::zero(F));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size() && i < b.c_.size())
            r.c_[i] = a.c_[i] + b.c_[i];
        else if (i < a.c_.size())
            r.c_[i] = a.c_[i];
        else
            r.c_[i] = b.c_[i];
    }
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const FqElem& s, const Poly& a) {
    if (s.is_zero()) return Poly::zero(a.F_ ? a.F_ : s.F);
    Poly r = a;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
}

namespace {

using Coeffs = std::vector<FqElem>;

Coeffs school_mul(const FqField* F, const FqElem* a, std::size_t na, const FqElem* b,
                  std::size_t nb) {
    Coeffs out(na + nb - 1, FqElem::zero(F));
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

void add_shifted(const FqField* F, Coeffs& acc, const Coeffs& v, std::size_t shift) {
    if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, FqElem::zero(F));
    for (std::size_t i = 0; i < v.size(); ++i) acc[i + shift] = acc[i + shift] + v[i];
}

Coeffs kara_mul(const FqField* F, const FqElem* a, std::size_t na, const FqElem* b,
                std::size_t nb) {
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) <= kKaratsubaThreshold) return school_mul(F, a, na, b, nb);
    const std::size_t h = (std::max(na, nb) + 1) / 2;
    const std::size_t a0n = std::min(na, h), b0n = std::min(nb, h);
    const std::size_t a1n = na - a0n, b1n = nb - b0n;

    Coeffs p0 = kara_mul(F, a, a0n, b, b0n);
    if (a1n == 0 && b1n == 0) return p0;

    Coeffs p2 = (a1n && b1n) ? kara_mul(F, a + a0n, a1n, b + b0n, b1n) : Coeffs{};

    Coeffs sa(std::max(a0n, a1n), FqElem::zero(F));
    for (std::size_t i = 0; i < a0n; ++i) sa[i] = a[i];
    for (std::size_t i = 0; i < a1n; ++i) sa[i] = sa[i] + a[a0n + i];
    Coeffs sb(std::max(b0n, b1n), FqElem::zero(F));
    for (std::size_t i = 0; i < b0n; ++i) sb[i] = b[i];
    for (std::size_t i = 0; i < b1n; ++i) sb[i] = sb[i] + b[b0n + i];

    Coeffs p1 = kara_mul(F, sa.data(), sa.size(), sb.data(), sb.size());
    // p1 -= p0 + p2
    for (std::size_t i = 0; i < p0.size(); ++i) p1[i] = p1[i] - p0[i];
    for (std::size_t i = 0; i < p2.size(); ++i) p1[i] = p1[i] - p2[i];

    Coeffs out;
    out.reserve(na + nb - 1);
    add_shifted(F, out, p0, 0);
    add_shifted(F, out, p1, h);
    add_shifted(F, out, p2, 2 * h);
    out.resize(na + nb - 1, FqElem::zero(F));
    return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    const FqField* F = a.F_ ? a.F_ : b.F_;
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    Coeffs out = kara_mul(F, a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size());
    return Poly(F, std::move(out));
}

Poly mul_truncated(const Poly& a, const Poly& b, std::size_t n) {
    return (a.truncated(n) * b.truncated(n)).truncated(n);
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& m) {
    if (m.is_zero()) throw precondition_error("poly: division by zero polynomial");
    const FqField* F = m.field();
    if (a.degree() < m.degree()) return {Poly::zero(F), a};
    FqElem linv = m.lc().inv();
    std::vector<FqElem> r(a.coeffs());
    std::vector<FqElem> q(a.degree() - m.degree() + 1, FqElem::zero(F));
    const auto& mc = m.coeffs();
    for (int k = a.degree() - m.degree(); k >= 0; --k) {
        FqElem c = r[k + m.degree()] * linv;
        if (c.is_zero()) continue;
        q[k] = c;
        for (std::size_t i = 0; i < mc.size(); ++i) r[k + i] = r[k + i] - c * mc[i];
    }
    r.resize(m.degree());
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly poly_rem(const Poly& a, const Poly& m) { return poly_divrem(a, m).second; }
Poly poly_quot(const Poly& a, const Poly& m) { return poly_divrem(a, m).first; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

EgcdResult poly_egcd(const Poly& a, const Poly& b) {
    const FqField* F = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero() && !r0.lc().is_one()) {
        FqElem linv = r0.lc().inv();
        r0 = linv * r0;
        s0 = linv * s0;
        t0 = linv * t0;
    }
    return {r0, s0, t0};
}

ModCtx::ModCtx(Poly modulus) : m_(modulus.monic()) {
    if (m_.degree() < 1) throw precondition_error("ModCtx: modulus must have degree >= 1");
    n_ = m_.degree();
    // Newton inverse of rev(m) to precision n: rev(m) has constant term 1.
    const FqField* F = m_.field();
    Poly f = m_.reversed(n_);
    Poly g = Poly::constant(F, 1);
    std::size_t prec = 1;
    const std::size_t target = static_cast<std::size_t>(n_);
    while (prec < target) {
        prec = std::min(2 * prec, target);
        Poly two_minus = Poly::constant(F, 2) - mul_truncated(f, g, prec);
        g = mul_truncated(g, two_minus, prec);
    }
    rev_inv_ = g.truncated(target);
}

Poly ModCtx::reduce(const Poly& a) const {
    const int N = a.degree();
    if (N < n_) return a;
    if (N >= 2 * n_) return poly_rem(a, m_);  // cold path: oversized inputs
    const std::size_t t = static_cast<std::size_t>(N - n_ + 1);
    Poly ra = a.reversed(static_cast<std::size_t>(N));
    Poly qhat = mul_truncated(ra, rev_inv_, t);
    Poly q = qhat.reversed(t - 1);
    Poly r = a - q * m_;
    assert(r.degree() < n_);
    return r;
}

Poly ModCtx::pow(Poly base, const Nat& e) const {
    base = reduce(base);
    Poly acc = Poly::constant(field(), 1);
    for (std::size_t i = bit_length(e); i-- > 0;) {
        acc = sqr(acc);
        if (test_bit(e, i)) acc = mul(acc, base);
    }
    return acc;
}

Poly ModCtx::compose(const Poly& a, const Poly& g) const {
    const FqField* F = field();
    if (a.is_constant()) return a;
    const std::size_t n = static_cast<std::size_t>(a.degree()) + 1;
    std::size_t m = 1;
    while (m * m < n) ++m;
    // Baby steps: powers of g up to g^m.
    std::vector<Poly> pw;
    pw.reserve(m + 1);
    pw.push_back(Poly::constant(F, 1));
    for (std::size_t i = 1; i <= m; ++i) pw.push_back(mul(pw[i - 1], g));
    // Giant steps: Horner over blocks of m coefficients.
    const std::size_t nblocks = (n + m - 1) / m;
    Poly res = Poly::zero(F);
    for (std::size_t blk = nblocks; blk-- > 0;) {
        res = mul(res, pw[m]);
        Poly part = Poly::zero(F);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t idx = blk * m + i;
            if (idx >= n) break;
            FqElem c = a.at(idx);
            if (!c.is_zero()) part = part + c * pw[i];
        }
        res = res + part;
    }
    return reduce(res);
}

Poly poly_powmod(const Poly& base, const Nat& e, const Poly& m) {
    ModCtx ctx(m);
    return ctx.pow(base, e);
}

Poly cyclotomic(const FqField* F, const Nat& r) {
    if (r < 3 || !is_prime(r) || mpz_even_p(r.get_mpz_t()) || r == F->p())
        throw precondition_error("cyclotomic: r must be an odd prime different from p");
    std::vector<FqElem> c(mpz_get_ui(r.get_mpz_t()), FqElem::one(F));
    return Poly(F, std::move(c));
}

}  // namespace ss
