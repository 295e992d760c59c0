#pragma once

#include <optional>

#include "ss/fq.hpp"
#include "ss/poly.hpp"
#include "ss/rng.hpp"

namespace ss {

struct Point {
    bool infinity = true;
    FqElem x, y;

    static Point inf() { return Point{}; }
    static Point affine(FqElem px, FqElem py) { return Point{false, std::move(px), std::move(py)}; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

// Short Weierstrass curve y^2 = x^3 + ax + b over F_{p^2}, p > 3.
class Curve {
  public:
    Curve(FqElem a, FqElem b);

    const FqField* field() const { return a_.F; }
    const FqElem& a() const { return a_; }
    const FqElem& b() const { return b_; }

    FqElem discriminant() const;  // -16(4a^3 + 27b^2)
    FqElem j_invariant() const;

    bool same_curve(const Curve& o) const { return a_ == o.a_ && b_ == o.b_; }

    bool on_curve(const Point& P) const;
    Point point(FqElem x, FqElem y) const;  // throws when not on the curve

    Point neg(const Point& P) const;
    Point add(const Point& P, const Point& Q) const;
    Point dbl(const Point& P) const { return add(P, P); }
    Point scalar_mul(const Nat& n, const Point& P) const;

    // Uniform over the affine points: x is drawn uniformly, kept when the
    // cubic is a square; two-torsion abscissas are accepted with probability
    // 1/2 so single-preimage x values are not overweighted.
    Point random_point(Rng& rng) const;

    FqElem rhs(const FqElem& x) const;  // x^3 + ax + b

  private:
    FqElem a_, b_;
};

// Standard construction of a curve with the given j-invariant
// (a = 3j(1728-j), b = 2j(1728-j)^2; y^2 = x^3 + 1 for j = 0 and
// y^2 = x^3 + x for j = 1728), or its quadratic twist.
Curve curve_from_j(const FqElem& j, bool twist = false);

// Classical level-2 modular polynomial, specialised in the second variable:
// Phi_2(X, j) as a cubic in X with the hard-coded integer coefficients.
Poly phi2_at(const FqElem& j);
FqElem phi2_eval(const FqElem& x, const FqElem& y);

// One non-backtracking step in the 2-isogeny graph: a root of
// Phi_2(X, j)/(X - j_prev), uniform among roots counted with multiplicity.
// When the quotient quadratic has no rational root the step re-samples from
// all three roots (self-loop allowed). Returns nullopt when Phi_2(X, j) has
// no rational root at all.
std::optional<FqElem> isogeny_step_2(const FqElem& j, const std::optional<FqElem>& j_prev,
                                     Rng& rng);

// Deterministic variant used by graph-walk classification: removes one copy
// of j_prev and takes the canonically-first remaining root, or nullopt when
// no rational forward step exists.
std::optional<FqElem> isogeny_step_2_first(const FqElem& j, const std::optional<FqElem>& j_prev);

// Exhaustive #E(F_{p^2}) by x-enumeration with a squares table. Cost is
// quadratic in q, so the modulus is capped: requires p <= 200.
Nat count_points_exhaustive(const Curve& E);

// Random curve with nonzero discriminant; almost always ordinary.
Curve gen_ordinary(const FqField* F, Rng& rng);

// A supersingular curve over F_{p^2}: start from j = 0 (p = 2 mod 3) or
// j = 1728 (p = 3 mod 4) and take walk_steps non-backtracking steps in the
// 2-isogeny graph. For p = 1 mod 12 falls back to exhaustive search over
// j, permitted only for p <= 200.
Curve gen_supersingular(const FqField* F, Rng& rng,
                        std::optional<Nat> walk_steps = std::nullopt);

inline Nat default_walk_steps(const Nat& p) { return Nat(2 * (bit_length(p) - 1)); }

}  // namespace ss
