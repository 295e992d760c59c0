#include "ss/polyfactor.hpp"

#include <algorithm>

namespace ss {

Poly frobenius_power(const ModCtx& ctx, const Poly& xq, const Nat& j) {
    Poly res = Poly::x(ctx.field());
    Poly cur = xq;
    const std::size_t bits = bit_length(j);
    for (std::size_t i = 0; i < bits; ++i) {
        if (test_bit(j, i)) res = ctx.compose(res, cur);
        if (i + 1 < bits) cur = ctx.compose(cur, cur);
    }
    return res;
}

Poly norm_map(const ModCtx& ctx, const Poly& xq, const Poly& h, const Nat& d) {
    if (d <= 0) throw precondition_error("norm_map: d must be positive");
    // Invariants while scanning the bits of d from the top:
    //   N = h^{(q^m - 1)/(q - 1)} mod f,  Fx = x^{q^m} mod f.
    Poly N = ctx.reduce(h);
    Poly Fx = xq;
    for (std::size_t i = bit_length(d) - 1; i-- > 0;) {
        N = ctx.mul(N, ctx.compose(N, Fx));  // m -> 2m
        Fx = ctx.compose(Fx, Fx);
        if (test_bit(d, i)) {
            N = ctx.mul(ctx.reduce(h), ctx.compose(N, xq));  // m -> m+1
            Fx = ctx.compose(Fx, xq);
        }
    }
    return N;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw precondition_error("is_irreducible: degree must be >= 1");
    if (f.degree() == 1) return true;
    const Nat n = f.degree();
    ModCtx ctx(f);
    const Poly x = Poly::x(f.field());
    Poly xq = ctx.pow(x, f.field()->q());
    if (!(frobenius_power(ctx, xq, n) == x)) return false;
    std::vector<Nat> primes;
    Nat m = n;
    for (Nat ell = 2; ell * ell <= m; ++ell) {
        if (m % ell != 0) continue;
        primes.push_back(ell);
        while (m % ell == 0) m /= ell;
    }
    if (m > 1) primes.push_back(m);
    for (const Nat& ell : primes) {
        Poly fk = frobenius_power(ctx, xq, n / ell);
        if (poly_gcd(fk - x, ctx.modulus()).degree() > 0) return false;
    }
    return true;
}

namespace {

Poly random_poly_below(const FqField* F, int degree_bound, Rng& rng) {
    std::vector<FqElem> c;
    c.reserve(degree_bound);
    for (int i = 0; i < degree_bound; ++i)
        c.emplace_back(F, rng.below(F->p()), rng.below(F->p()));
    return Poly(F, std::move(c));
}

}  // namespace

Poly factor_equal_degree(const Poly& f, const Nat& d, Rng& rng) {
    if (f.degree() < 1 || d < 1 || Nat(f.degree()) % d != 0)
        throw precondition_error("factor_equal_degree: degree mismatch");
    const FqField* F = f.field();
    Poly work = f.monic();
    ModCtx ctx(work);
    Poly xq = ctx.pow(Poly::x(F), F->q());
    if (!(frobenius_power(ctx, xq, d) == Poly::x(F)))
        throw precondition_error("factor_equal_degree: not a product of degree-d irreducibles");
    const Nat half = (F->q() - 1) / 2;
    int guard = 0;
    while (Nat(work.degree()) > d) {
        if (++guard > 400) throw precondition_error("factor_equal_degree: split did not converge");
        Poly h = random_poly_below(F, work.degree(), rng);
        if (h.is_zero()) continue;
        Poly g = poly_gcd(h, work);
        if (g.degree() <= 0 || g.degree() >= work.degree()) {
            Poly u = norm_map(ctx, xq, h, d);
            Poly w = ctx.pow(u, half);
            g = poly_gcd(w - Poly::constant(F, 1), work);
        }
        if (g.degree() > 0 && g.degree() < work.degree()) {
            Poly other = poly_quot(work, g);
            work = (g.degree() <= other.degree()) ? std::move(g) : std::move(other);
            ctx = ModCtx(work);
            xq = ctx.reduce(poly_rem(xq, ctx.modulus()));
        }
    }
    return work.monic();
}

namespace {

void split_linear(const Poly& f, Rng& rng, std::vector<FqElem>& out) {
    const FqField* F = f.field();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        // monic x + c -> root -c
        out.push_back(-(f.monic().at(0)));
        return;
    }
    const Nat half = (F->q() - 1) / 2;
    while (true) {
        FqElem a(F, rng.below(F->p()), rng.below(F->p()));
        Poly shift = Poly(F, {a, FqElem::one(F)});  // x + a
        Poly w = poly_powmod(shift, half, f);
        Poly g = poly_gcd(w - Poly::constant(F, 1), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_linear(g, rng, out);
            split_linear(poly_quot(f, g), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FqElem, int>> roots_with_multiplicity(const Poly& f, Rng& rng) {
    if (f.is_zero()) throw precondition_error("roots: zero polynomial");
    std::vector<std::pair<FqElem, int>> result;
    if (f.degree() < 1) return result;
    const FqField* F = f.field();
    // Product of the distinct linear factors: gcd(f, x^q - x).
    Poly xq = poly_powmod(Poly::x(F), F->q(), f);
    Poly lin = poly_gcd(xq - Poly::x(F), f);
    std::vector<FqElem> roots;
    split_linear(lin, rng, roots);
    std::sort(roots.begin(), roots.end(),
              [](const FqElem& a, const FqElem& b) { return lex_less(a, b); });
    for (const FqElem& r : roots) {
        Poly lin1 = Poly(F, {-r, FqElem::one(F)});
        Poly rest = f;
        int mult = 0;
        while (true) {
            auto [q, rem] = poly_divrem(rest, lin1);
            if (!rem.is_zero()) break;
            ++mult;
            rest = q;
        }
        result.emplace_back(r, mult);
    }
    return result;
}

QuotElem QuotElem::inv() const {
    auto e = poly_egcd(rep, R->modulus());
    if (e.g.degree() != 0) throw precondition_error("QuotElem: element not invertible");
    // g = s*rep + t*modulus with g = 1 after normalisation
    return raw(R, R->ctx().reduce(e.s));
}

}  // namespace ss
