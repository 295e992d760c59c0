#include <doctest.h>

#include <set>

#include "ss/fq.hpp"
#include "ss/rng.hpp"

using namespace ss;

namespace {

FqElem rand_fq(const FqField* F, Rng& rng) {
    return FqElem(F, rng.below(F->p()), rng.below(F->p()));
}

// Exhaustive square roots in F_p, the oracle for sqrt and find_nqr.
std::set<unsigned long> roots_of(unsigned long a, unsigned long p) {
    std::set<unsigned long> r;
    for (unsigned long y = 0; y < p; ++y)
        if (y * y % p == a) r.insert(y);
    return r;
}

}  // namespace

TEST_CASE("primality and next_prime") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(Nat("3215031751")));  // strong pseudoprime to small bases
    CHECK(next_prime(13) == 17);
    CHECK(next_prime(2) == 3);
    CHECK(next_prime(1) == 2);
    CHECK(is_prime(next_prime(Nat(1) << 64)));
}

TEST_CASE("F_p basics") {
    auto F7 = FpField::make(7);
    FpElem one(F7.get(), 1);
    CHECK(one.inv().v == 1);
    CHECK(FpElem(F7.get(), 2).pow(6).v == 1);  // Fermat

    // sqrt(2) mod 7: exhaustive roots are {3, 4}
    auto expect = roots_of(2, 7);
    CHECK(expect == std::set<unsigned long>{3, 4});
    auto s = FpElem(F7.get(), 2).sqrt();
    REQUIRE(s.has_value());
    CHECK(expect.count(mpz_get_ui(s->v.get_mpz_t())) == 1);

    CHECK_THROWS_AS(FpElem(F7.get(), 0).inv(), precondition_error);
    CHECK_FALSE(FpElem(F7.get(), 3).sqrt().has_value());  // 3 is a non-residue mod 7

    CHECK_THROWS_AS(FpField::make(3), precondition_error);
    CHECK_THROWS_AS(FpField::make(15), precondition_error);
}

TEST_CASE("find_nqr matches the exhaustive smallest non-residue") {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 101ul}) {
        unsigned long expected = 0;
        for (unsigned long z = 2; z < p; ++z) {
            if (roots_of(z, p).empty()) {
                expected = z;
                break;
            }
        }
        CHECK(find_nqr(Nat(p)) == expected);
    }
    CHECK(find_nqr(7) == 3);
    CHECK(find_nqr(5) == 2);
    CHECK(find_nqr(11) == 2);
}

TEST_CASE("F_q field axioms on random triples") {
    Rng rng(42);
    for (unsigned long p : {5ul, 13ul, 101ul}) {
        auto Fq = FqField::make(p);
        const FqField* F = Fq.get();
        for (int i = 0; i < 1000; ++i) {
            FqElem a = rand_fq(F, rng), b = rand_fq(F, rng), c = rand_fq(F, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inv() == FqElem::one(F));
        }
    }
}

TEST_CASE("frobenius is the p-power map and fixes exactly F_p") {
    Rng rng(7);
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    for (int i = 0; i < 200; ++i) {
        FqElem a = rand_fq(F, rng), b = rand_fq(F, rng);
        CHECK(a.frobenius() == a.pow(F->p()));
        CHECK(a.frobenius().frobenius() == a);
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK((a.frobenius() == a) == a.in_prime_field());
    }
}

TEST_CASE("norm lands in F_p and norm(u) = -nqr") {
    auto Fq = FqField::make(11);
    const FqField* F = Fq.get();
    FqElem u = FqElem::gen_u(F);
    // norm(u) = u * u^p = -u^2 = -nqr
    CHECK(u.norm().v == F->fp().neg(F->nqr()));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        FqElem a = rand_fq(F, rng);
        CHECK(a * a.frobenius() == FqElem::from_int(F, a.norm().v));
    }
}

TEST_CASE("multiplicative group order") {
    Rng rng(9);
    for (unsigned long p : {5ul, 7ul, 19ul}) {
        auto Fq = FqField::make(p);
        const FqField* F = Fq.get();
        for (int i = 0; i < 50; ++i) {
            FqElem a = rand_fq(F, rng);
            if (a.is_zero()) continue;
            CHECK(a.pow(F->q_minus_1()) == FqElem::one(F));
        }
    }
}

TEST_CASE("F_q square roots") {
    Rng rng(18);
    auto Fq = FqField::make(13);
    const FqField* F = Fq.get();
    int squares = 0;
    for (unsigned long c0 = 0; c0 < 13; ++c0)
        for (unsigned long c1 = 0; c1 < 13; ++c1) {
            FqElem a(F, c0, c1);
            auto s = a.sqrt();
            if (a.is_square()) {
                REQUIRE(s.has_value());
                CHECK(s->square() == a);
                ++squares;
            } else {
                CHECK_FALSE(s.has_value());
            }
        }
    // 0 plus half of the 168 nonzero elements
    CHECK(squares == 1 + 168 / 2);
}

TEST_CASE("element serialization basics") {
    auto Fq = FqField::make(7);
    const FqField* F = Fq.get();
    FqElem a(F, 3, 4);
    CHECK(a.c0 == 3);
    CHECK(a.c1 == 4);
    FqElem b(F, 10, 11);  // reduces mod 7
    CHECK(b.c0 == 3);
    CHECK(b.c1 == 4);
    CHECK(a == b);
}
