#include <doctest.h>

#include "ss/polyfactor.hpp"
#include "ss/rng.hpp"

using namespace ss;

namespace {

Poly rand_poly(const FqField* F, int deg, Rng& rng) {
    std::vector<FqElem> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(F, rng.below(F->p()), rng.below(F->p()));
    if (c.back().is_zero()) c.back() = FqElem::one(F);
    return Poly(F, std::move(c));
}

// Independent schoolbook product, the oracle for the Karatsuba path.
Poly naive_mul(const Poly& a, const Poly& b) {
    const FqField* F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<FqElem> out(a.degree() + b.degree() + 1, FqElem::zero(F));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            out[i + j] = out[i + j] + a.at(i) * b.at(j);
    return Poly(F, std::move(out));
}

// Independent modular exponentiation using only long division.
Poly naive_powmod(const Poly& base, const Nat& e, const Poly& m) {
    Poly acc = Poly::constant(m.field(), 1);
    for (std::size_t i = bit_length(e); i-- > 0;) {
        acc = poly_rem(naive_mul(acc, acc), m);
        if (test_bit(e, i)) acc = poly_rem(naive_mul(acc, base), m);
    }
    return acc;
}

// Independent composition: substitute by Horner with plain products.
Poly naive_compose(const Poly& a, const Poly& g, const Poly& m) {
    Poly acc = Poly::zero(m.field());
    for (int i = a.degree(); i >= 0; --i)
        acc = poly_rem(naive_mul(acc, g) + Poly::constant(a.at(i)), m);
    return acc;
}

}  // namespace

TEST_CASE("polynomial ring basics") {
    auto Fq = FqField::make(7);
    const FqField* F = Fq.get();
    Poly xp1 = Poly::from_ints(F, {1, 1});
    Poly xm1 = Poly::from_ints(F, {-1, 1});
    CHECK(xp1 * xm1 == Poly::from_ints(F, {-1, 0, 1}));
    CHECK(poly_rem(Poly::from_ints(F, {0, 0, 1}), Poly::x(F)).is_zero());
    CHECK(poly_gcd(Poly::from_ints(F, {-1, 0, 1}), xm1) == xm1.monic());
    CHECK(Poly::zero(F).degree() == -1);
    CHECK_THROWS_AS(poly_rem(xp1, Poly::zero(F)), precondition_error);
}

TEST_CASE("karatsuba agrees with schoolbook") {
    Rng rng(11);
    auto Fq = FqField::make(101);
    const FqField* F = Fq.get();
    for (int trial = 0; trial < 10; ++trial) {
        Poly a = rand_poly(F, 40 + trial * 23, rng);
        Poly b = rand_poly(F, 35 + trial * 17, rng);
        CHECK(a * b == naive_mul(a, b));
        CHECK(a * b == b * a);
        CHECK(int((a * b).degree()) == a.degree() + b.degree());
    }
    // associativity on a few random triples
    for (int trial = 0; trial < 5; ++trial) {
        Poly a = rand_poly(F, 20, rng), b = rand_poly(F, 30, rng), c = rand_poly(F, 25, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("division invariant a = qm + r") {
    Rng rng(5);
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = rand_poly(F, 3 + int(rng.u64() % 60), rng);
        Poly m = rand_poly(F, 1 + int(rng.u64() % 20), rng);
        auto [q, r] = poly_divrem(a, m);
        CHECK(q * m + r == a);
        CHECK(r.degree() < m.degree());
    }
}

TEST_CASE("fast reduction context agrees with long division") {
    Rng rng(21);
    auto Fq = FqField::make(1009);
    const FqField* F = Fq.get();
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + int(rng.u64() % 40);
        Poly m = rand_poly(F, n, rng);
        ModCtx ctx(m);
        // products of reduced elements (the hot path) and oversized inputs
        Poly a = rand_poly(F, int(rng.u64() % (2 * n)), rng);
        CHECK(ctx.reduce(a) == poly_rem(a, ctx.modulus()));
        Poly big = rand_poly(F, 3 * n + 5, rng);
        CHECK(ctx.reduce(big) == poly_rem(big, ctx.modulus()));
    }
}

TEST_CASE("powmod basics and naive oracle") {
    Rng rng(31);
    auto Fq = FqField::make(7);
    const FqField* F = Fq.get();
    Poly g = rand_poly(F, 6, rng);
    CHECK(poly_powmod(Poly::x(F), 1, g) == poly_rem(Poly::x(F), g));
    // x^{p^2} mod a degree-6 modulus vs an independent naive route
    Poly lhs = poly_powmod(Poly::x(F), F->q(), g);
    Poly rhs = naive_powmod(Poly::x(F), F->q(), g);
    CHECK(lhs == rhs);
    // random bases and exponents
    for (int trial = 0; trial < 10; ++trial) {
        Poly b = rand_poly(F, 5, rng);
        Nat e = rng.below(10000);
        if (e == 0) e = 1;
        CHECK(poly_powmod(b, e, g) == naive_powmod(b, e, g));
    }
}

TEST_CASE("cyclotomic polynomials") {
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    CHECK(cyclotomic(F, 3) == Poly::from_ints(F, {1, 1, 1}));
    CHECK(cyclotomic(F, 5) == Poly::from_ints(F, {1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(cyclotomic(F, 4), precondition_error);
    CHECK_THROWS_AS(cyclotomic(F, 13), precondition_error);
}

TEST_CASE("modular composition agrees with substitution") {
    Rng rng(41);
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + int(rng.u64() % 25);
        Poly m = rand_poly(F, n, rng);
        ModCtx ctx(m);
        Poly a = rand_poly(F, n - 1, rng);
        Poly g = rand_poly(F, n - 1, rng);
        CHECK(ctx.compose(a, ctx.reduce(g)) == naive_compose(a, g, ctx.modulus()));
    }
}

TEST_CASE("frobenius powers via composition") {
    auto Fq = FqField::make(5);
    const FqField* F = Fq.get();
    Rng rng(3);
    Poly m = rand_poly(F, 8, rng);
    ModCtx ctx(m);
    Poly xq = ctx.pow(Poly::x(F), F->q());
    for (unsigned j = 1; j <= 4; ++j) {
        Nat e;
        mpz_pow_ui(e.get_mpz_t(), F->q().get_mpz_t(), j);
        CHECK(frobenius_power(ctx, xq, j) == ctx.pow(Poly::x(F), e));
    }
}

TEST_CASE("equal-degree factorization") {
    Rng rng(17);
    SUBCASE("cube roots of unity in F_25") {
        // 5 = 2 mod 3, so q = 25 = 1 mod 3 and Phi_3 splits into two linear
        // factors whose roots are the primitive cube roots of unity.
        auto Fq = FqField::make(5);
        const FqField* F = Fq.get();
        Poly g = factor_equal_degree(cyclotomic(F, 3), 1, rng);
        CHECK(g.degree() == 1);
        FqElem omega = -g.at(0);
        CHECK(omega * omega + omega + FqElem::one(F) == FqElem::zero(F));
    }
    SUBCASE("split a product of linears") {
        auto Fq = FqField::make(7);
        const FqField* F = Fq.get();
        Poly f = Poly::from_ints(F, {-1, 1}) * Poly::from_ints(F, {-2, 1});
        Poly g = factor_equal_degree(f, 1, rng);
        CHECK(g.degree() == 1);
        bool is1 = g == Poly::from_ints(F, {-1, 1}).monic();
        bool is2 = g == Poly::from_ints(F, {-2, 1}).monic();
        CHECK((is1 || is2));
    }
    SUBCASE("Phi_5 over F_169 splits into two quadratics") {
        // ord(13 mod 5) = ord(3 mod 5) = 4, so q = 169 has order 2 mod 5.
        auto Fq = FqField::make(13);
        const FqField* F = Fq.get();
        Poly phi5 = cyclotomic(F, 5);
        Poly g = factor_equal_degree(phi5, 2, rng);
        CHECK(g.degree() == 2);
        CHECK(poly_rem(phi5, g).is_zero());
        CHECK(is_irreducible(g));
    }
    SUBCASE("degree mismatch is detected") {
        auto Fq = FqField::make(5);
        const FqField* F = Fq.get();
        // x^2 (repeated factor) is not a product of distinct linears
        Poly f = Poly::from_ints(F, {0, 0, 1});
        CHECK_THROWS_AS(factor_equal_degree(f, 2, rng), precondition_error);
    }
}

TEST_CASE("irreducibility") {
    auto Fq = FqField::make(7);
    const FqField* F = Fq.get();
    CHECK(is_irreducible(Poly::from_ints(F, {-1, 1})));
    CHECK_FALSE(is_irreducible(Poly::from_ints(F, {-1, 0, 1})));
    Rng rng(77);
    Poly g = factor_equal_degree(cyclotomic(F, 5), 2, rng);  // ord(49 mod 5) = 2
    CHECK(is_irreducible(g));
}

TEST_CASE("frobenius orbit closes on an irreducible modulus") {
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    Rng rng(8);
    Poly g = factor_equal_degree(cyclotomic(F, 5), 2, rng);
    Poly acc = Poly::x(F);
    for (int i = 0; i < g.degree(); ++i) acc = poly_powmod(acc, F->q(), g);
    CHECK(acc == poly_rem(Poly::x(F), g));
}

TEST_CASE("roots with multiplicity") {
    auto Fq = FqField::make(11);
    const FqField* F = Fq.get();
    Rng rng(10);
    Poly lin1 = Poly::from_ints(F, {-1, 1});
    Poly lin2 = Poly::from_ints(F, {-2, 1});
    Poly f = lin1 * lin1 * lin2;
    auto roots = roots_with_multiplicity(f, rng);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == FqElem::from_int(F, 1));
    CHECK(roots[0].second == 2);
    CHECK(roots[1].first == FqElem::from_int(F, 2));
    CHECK(roots[1].second == 1);

    // an irreducible quadratic has no roots
    Poly irr = Poly::from_ints(F, {int(mpz_get_ui(Nat(F->nqr()).get_mpz_t())) * -1, 0, 1});
    CHECK(roots_with_multiplicity(irr, rng).empty());
}

TEST_CASE("quotient ring elements") {
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    Rng rng(12);
    QuotRing K(factor_equal_degree(cyclotomic(F, 5), 2, rng));
    QuotElem t = QuotElem::indeterminate(&K);
    // K is a field: every nonzero element is invertible and the
    // multiplicative order divides q^d - 1.
    Nat qd;
    mpz_pow_ui(qd.get_mpz_t(), F->q().get_mpz_t(), 2);
    CHECK(t.pow(qd - 1) == QuotElem(&K, Poly::constant(F, 1)));
    for (int i = 0; i < 30; ++i) {
        QuotElem e(&K, rand_poly(F, 1, rng));
        if (e.is_zero()) continue;
        CHECK(e * e.inv() == QuotElem(&K, Poly::constant(F, 1)));
    }
    // the residue of x has multiplicative order exactly 5 here
    CHECK(t.pow(5) == QuotElem(&K, Poly::constant(F, 1)));
    CHECK_FALSE(t.pow(1) == QuotElem(&K, Poly::constant(F, 1)));

    QuotRing reducible(Poly::from_ints(F, {-1, 0, 1}));  // (x-1)(x+1)
    QuotElem bad(&reducible, Poly::from_ints(F, {-1, 1}));
    CHECK_THROWS_AS(bad.inv(), precondition_error);
}

TEST_CASE("extended gcd") {
    Rng rng(14);
    auto Fq = FqField::make(7);
    const FqField* F = Fq.get();
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = rand_poly(F, 1 + int(rng.u64() % 10), rng);
        Poly b = rand_poly(F, 1 + int(rng.u64() % 10), rng);
        auto e = poly_egcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
        CHECK(e.g == poly_gcd(a, b));
    }
}
