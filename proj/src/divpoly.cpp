#include "ss/divpoly.hpp"

#include <cassert>

namespace ss {

CurveContext::CurveContext(Curve E) : E_(std::move(E)) {
    const FqField* F = E_.field();
    const FqElem& a = E_.a();
    const FqElem& b = E_.b();
    auto n = [F](long v) { return FqElem::from_int(F, v); };

    // F = psi_2^2 = 4(x^3 + ax + b)
    F_ = Poly(F, {n(4) * b, n(4) * a, FqElem::zero(F), n(4)});
    F2_ = F_ * F_;

    const FqElem a2 = a * a, a3 = a2 * a, b2 = b * b, ab = a * b;
    base_[0] = Poly::zero(F);
    base_[1] = Poly::constant(F, 1);
    base_[2] = Poly::constant(F, 1);
    // f_3 = 3x^4 + 6ax^2 + 12bx - a^2
    base_[3] = Poly(F, {-a2, n(12) * b, n(6) * a, FqElem::zero(F), n(3)});
    // f_4 = 2(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3)
    base_[4] = Poly(F, {n(-2) * (n(8) * b2 + a3), n(-8) * ab, n(-10) * a2, n(40) * b, n(10) * a,
                        FqElem::zero(F), n(2)});
    // Doubling recurrences applied at small index.
    const Poly& f3 = base_[3];
    const Poly& f4 = base_[4];
    base_[5] = F2_ * f4 - f3 * f3 * f3;
    const Poly& f5 = base_[5];
    base_[6] = (f5 - f4 * f4) * f3;
    const Poly& f6 = base_[6];
    base_[7] = f5 * f3 * f3 * f3 - F2_ * f4 * f4 * f4;
    const Poly& f7 = base_[7];
    base_[8] = (f6 * f3 * f3 - f5 * f5) * f4;
    base_[9] = F2_ * f6 * f4 * f4 * f4 - f3 * f5 * f5 * f5;
    base_[10] = (f7 * f4 * f4 - f3 * f6 * f6) * f5;
}

Poly CurveContext::base(long i) const {
    if (i >= 0) {
        assert(i <= 10);
        return base_[static_cast<std::size_t>(i)];
    }
    assert(i >= -2);
    return -base_[static_cast<std::size_t>(-i)];
}

namespace {

// The doubling step works in any commutative ring; instantiations below use
// reduced polynomials, plain polynomials and scalars.
struct PolyModRing {
    using Elem = Poly;
    const ModCtx& M;
    Poly F2;

    Elem mul(const Elem& a, const Elem& b) const { return M.mul(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul_F2(const Elem& a) const { return M.mul(a, F2); }
};

struct PolyPlainRing {
    using Elem = Poly;
    Poly F2;

    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul_F2(const Elem& a) const { return a * F2; }
};

struct ScalarRing {
    using Elem = FqElem;
    FqElem F2;

    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul_F2(const Elem& a) const { return a * F2; }
};

// From w[t] = f_{j-3+t} produce v[t] = f_{2j+bit-3+t}. With
// S_i = f_{i-1}f_{i+1} and T_i = f_i^2 (i = j-2 .. j+4):
//   f_{2i}   = T_{i-1}S_{i+1} - T_{i+1}S_{i-1}
//   f_{2i+1} = T_iS_{i+1} - F^2 T_{i+1}S_i   (i odd)
//              F^2 T_iS_{i+1} - T_{i+1}S_i   (i even)
template <class Ring>
std::array<typename Ring::Elem, 9> window_step(const Ring& ring,
                                               const std::array<typename Ring::Elem, 9>& w,
                                               bool j_odd, bool bit) {
    using Elem = typename Ring::Elem;
    std::array<Elem, 7> S, T;
    for (int k = 0; k < 7; ++k) {
        S[k] = ring.mul(w[k], w[k + 2]);
        T[k] = ring.mul(w[k + 1], w[k + 1]);
    }
    std::array<Elem, 9> v;
    const int b = bit ? 1 : 0;
    for (int t = 0; t < 9; ++t) {
        if ((b + t) % 2 == 1) {
            // n = 2j + b - 3 + t even, i = n/2, index of i is (b+t+1)/2
            const int ki = (b + t + 1) / 2;
            v[t] = ring.sub(ring.mul(T[ki - 1], S[ki + 1]), ring.mul(T[ki + 1], S[ki - 1]));
        } else {
            // n odd, i = (n-1)/2, index (b+t)/2; parity of i is j + (b+t)/2 - 2
            const int ki = (b + t) / 2;
            const bool i_odd = (static_cast<int>(j_odd) + ki) % 2 == 1;
            if (i_odd)
                v[t] = ring.sub(ring.mul(T[ki], S[ki + 1]), ring.mul_F2(ring.mul(T[ki + 1], S[ki])));
            else
                v[t] = ring.sub(ring.mul_F2(ring.mul(T[ki], S[ki + 1])), ring.mul(T[ki + 1], S[ki]));
        }
    }
    return v;
}

template <class Ring, class Inject>
std::array<typename Ring::Elem, 9> window_core(const Ring& ring, Inject inject, const Nat& m) {
    using Elem = typename Ring::Elem;
    if (m < 1) throw precondition_error("window: index must be >= 1");
    std::array<Elem, 9> w;
    if (m <= 5) {
        const long c = static_cast<long>(mpz_get_ui(m.get_mpz_t()));
        for (int t = 0; t < 9; ++t) w[static_cast<std::size_t>(t)] = inject(c - 3 + t);
        return w;
    }
    const std::size_t k = bit_length(m) - 1;  // index of top bit
    Nat j;
    std::size_t consumed;
    if (test_bit(m, k - 1)) {
        j = 3;
        consumed = 2;
    } else {
        j = test_bit(m, k - 2) ? 5 : 4;
        consumed = 3;
    }
    const long j0 = static_cast<long>(mpz_get_ui(j.get_mpz_t()));
    for (int t = 0; t < 9; ++t) w[static_cast<std::size_t>(t)] = inject(j0 - 3 + t);
    for (std::size_t i = k + 1 - consumed; i-- > 0;) {
        const bool bit = test_bit(m, i);
        w = window_step(ring, w, test_bit(j, 0), bit);
        j = 2 * j + (bit ? 1 : 0);
    }
    assert(j == m);
    return w;
}

}  // namespace

DivPolyWindow window_at(const CurveContext& ctx, const Nat& m, const Poly& modulus) {
    ModCtx M(modulus);
    PolyModRing ring{M, M.reduce(ctx.F_squared())};
    auto inject = [&](long i) { return M.reduce(ctx.base(i)); };
    auto w = window_core(ring, inject, m);
    return DivPolyWindow{m, std::move(w), M.modulus()};
}

DivPolyWindow window_unreduced(const CurveContext& ctx, const Nat& m) {
    if (m > 512)
        throw precondition_error("window_unreduced: index too large for full expansion");
    PolyPlainRing ring{ctx.F_squared()};
    auto inject = [&](long i) { return ctx.base(i); };
    auto w = window_core(ring, inject, m);
    return DivPolyWindow{m, std::move(w), Poly::zero(ctx.field())};
}

Poly expand_fn(const CurveContext& ctx, const Nat& n) {
    return window_unreduced(ctx, n).center();
}

std::array<FqElem, 9> eval_window_at(const CurveContext& ctx, const Nat& m, const FqElem& x0) {
    ScalarRing ring{ctx.F_squared().eval(x0)};
    auto inject = [&](long i) { return ctx.base(i).eval(x0); };
    return window_core(ring, inject, m);
}

FqElem eval_fn_at(const CurveContext& ctx, const Nat& n, const FqElem& x0) {
    return eval_window_at(ctx, n, x0)[3];
}

FTriple f_triple(const CurveContext& ctx, const Nat& p, const Poly& g) {
    DivPolyWindow w = window_at(ctx, p, g);
    return FTriple{w.at_offset(-1), w.at_offset(0), w.at_offset(1)};
}

std::pair<Poly, Poly> phi_psi2(const CurveContext& ctx, const Nat& s, const Poly& modulus) {
    if (s < 1) throw precondition_error("phi_psi2: s must be >= 1");
    ModCtx M(modulus);
    DivPolyWindow w = window_at(ctx, s, modulus);
    const Poly& fs_prev = w.at_offset(-1);
    const Poly& fs = w.at_offset(0);
    const Poly& fs_next = w.at_offset(1);
    const Poly Fred = M.reduce(ctx.F());
    Poly psi2, cross;
    if (mpz_odd_p(s.get_mpz_t())) {
        psi2 = M.sqr(fs);
        cross = M.mul(M.mul(fs_next, fs_prev), Fred);
    } else {
        psi2 = M.mul(M.sqr(fs), Fred);
        cross = M.mul(fs_next, fs_prev);
    }
    Poly phi = M.reduce(Poly::x(ctx.field()) * psi2) - cross;
    return {std::move(phi), std::move(psi2)};
}

Point mult_by_n(const CurveContext& ctx, const Nat& n, const Point& P) {
    const Curve& E = ctx.curve();
    if (n == 0 || P.infinity) return Point::inf();
    if (n == 1) return P;
    if (mpz_even_p(n.get_mpz_t())) return E.dbl(mult_by_n(ctx, n / 2, P));

    auto w = eval_window_at(ctx, n, P.x);
    const FqElem& fn = w[3];
    if (fn.is_zero()) return Point::inf();  // P is n-torsion
    const FqElem fn2 = fn.square();
    const FqElem Fx = ctx.F().eval(P.x);  // 4y^2 on the curve
    FqElem xnum = P.x * fn2 - w[4] * w[2] * Fx;
    FqElem xq = xnum * fn2.inv();
    FqElem ynum = P.y * (w[5] * w[2].square() - w[1] * w[4].square());
    FqElem yq = ynum * (fn2 * fn).inv();
    return Point::affine(std::move(xq), std::move(yq));
}

}  // namespace ss
