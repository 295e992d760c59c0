#pragma once

#include <memory>

#include "ss/poly.hpp"
#include "ss/rng.hpp"

namespace ss {

// x^{q^j} mod ctx.modulus(), given xq = x^q already reduced. Uses the fact
// that A(x^{q^b}) = A(x)^{q^b} mod m for A with F_q coefficients, so the
// Frobenius chain is built by modular composition instead of repeated
// exponentiation.
Poly frobenius_power(const ModCtx& ctx, const Poly& xq, const Nat& j);

// h^{(q^d - 1)/(q - 1)} mod m, i.e. the product of the conjugates
// h^{q^i} for i < d, again via composition (constant number per bit of d).
Poly norm_map(const ModCtx& ctx, const Poly& xq, const Poly& h, const Nat& d);

// Rabin's test over F_q.
bool is_irreducible(const Poly& f);

// One monic irreducible degree-d factor of f, where f is squarefree with
// all irreducible factors of degree exactly d (verified via x^{q^d} = x mod
// f before splitting). Cantor-Zassenhaus, randomness from the caller's rng.
Poly factor_equal_degree(const Poly& f, const Nat& d, Rng& rng);

// Roots of f in F_q with multiplicities, sorted canonically.
std::vector<std::pair<FqElem, int>> roots_with_multiplicity(const Poly& f, Rng& rng);

// F_q[x]/(g) for monic irreducible g: a small typed wrapper used where an
// actual field extension element is meant rather than a bare residue.
class QuotRing {
  public:
    explicit QuotRing(Poly g) : ctx_(std::move(g)) {}

    const Poly& modulus() const { return ctx_.modulus(); }
    const ModCtx& ctx() const { return ctx_; }
    const FqField* base() const { return ctx_.field(); }
    int extension_degree() const { return ctx_.n(); }

  private:
    ModCtx ctx_;
};

struct QuotElem {
    const QuotRing* R = nullptr;
    Poly rep;  // degree < deg g

    QuotElem() = default;
    QuotElem(const QuotRing* ring, Poly value) : R(ring), rep(ring->ctx().reduce(value)) {}

    static QuotElem indeterminate(const QuotRing* ring) {
        return QuotElem(ring, Poly::x(ring->base()));
    }

    bool is_zero() const { return rep.is_zero(); }

    friend bool operator==(const QuotElem& a, const QuotElem& b) { return a.rep == b.rep; }
    friend QuotElem operator+(const QuotElem& a, const QuotElem& b) {
        return raw(a.R, a.rep + b.rep);
    }
    friend QuotElem operator-(const QuotElem& a, const QuotElem& b) {
        return raw(a.R, a.rep - b.rep);
    }
    friend QuotElem operator*(const QuotElem& a, const QuotElem& b) {
        return raw(a.R, a.R->ctx().mul(a.rep, b.rep));
    }

    QuotElem inv() const;  // throws when gcd(rep, g) != 1
    QuotElem pow(const Nat& e) const { return raw(R, R->ctx().pow(rep, e)); }

    static QuotElem raw(const QuotRing* ring, Poly reduced) {
        QuotElem e;
        e.R = ring;
        e.rep = std::move(reduced);
        return e;
    }
};

}  // namespace ss
