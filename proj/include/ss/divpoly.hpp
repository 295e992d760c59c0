#pragma once

#include <array>

#include "ss/curve.hpp"
#include "ss/poly.hpp"

namespace ss {

// Precomputed data for division-polynomial work on one curve: the quantity
// F = psi_2^2 = 4(x^3 + ax + b) and the reduced division polynomials
// f_0 .. f_10 in closed form. f_m equals psi_m for odd m and psi_m / psi_2
// for even m, so everything here is univariate.
class CurveContext {
  public:
    explicit CurveContext(Curve E);

    const Curve& curve() const { return E_; }
    const FqField* field() const { return E_.field(); }
    const Poly& F() const { return F_; }
    const Poly& F_squared() const { return F2_; }

    // f_i for -2 <= i <= 10, with f_{-i} = -f_i.
    Poly base(long i) const;

  private:
    Curve E_;
    Poly F_, F2_;
    std::array<Poly, 11> base_;
};

// Nine consecutive reduced division polynomials f_{m-3} .. f_{m+5} (mod f),
// produced by the doubling recurrences in O(log m) ring multiplications.
struct DivPolyWindow {
    Nat m;
    std::array<Poly, 9> entries;  // entries[t] = f_{m-3+t} mod modulus
    Poly modulus;

    const Poly& at_offset(int off) const { return entries[static_cast<std::size_t>(off + 3)]; }
    const Poly& center() const { return entries[3]; }
};

DivPolyWindow window_at(const CurveContext& ctx, const Nat& m, const Poly& modulus);

// Unreduced expansion, intended for structure checks at small index only:
// deg f_m grows like m^2/2.
DivPolyWindow window_unreduced(const CurveContext& ctx, const Nat& m);
Poly expand_fn(const CurveContext& ctx, const Nat& n);

// Same recurrences run over scalars: f_{m-3}(x0) .. f_{m+5}(x0).
std::array<FqElem, 9> eval_window_at(const CurveContext& ctx, const Nat& m, const FqElem& x0);
FqElem eval_fn_at(const CurveContext& ctx, const Nat& n, const FqElem& x0);

// (f_{p-1}, f_p, f_{p+1}) mod g.
struct FTriple {
    Poly f_prev, f_p, f_next;
};
FTriple f_triple(const CurveContext& ctx, const Nat& p, const Poly& g);

// (phi_s, psi_s^2) mod modulus, with the bivariate psi's eliminated on the
// curve: for odd s, psi_s^2 = f_s^2 and psi_{s+1}psi_{s-1} = f_{s+1}f_{s-1}F
// (the neighbours are even); for even s the two parities swap.
std::pair<Poly, Poly> phi_psi2(const CurveContext& ctx, const Nat& s, const Poly& modulus);

// [n]P through division polynomials: x via phi_n/psi_n^2, y via
// omega_n/psi_n^3 with omega_n = y(f_{n+2}f_{n-1}^2 - f_{n-2}f_{n+1}^2) for
// odd n; even n is split as [2]([n/2]P). Returns infinity when P is
// n-torsion.
Point mult_by_n(const CurveContext& ctx, const Nat& n, const Point& P);

}  // namespace ss
