#include "ss/curve.hpp"

#include <unordered_set>

#include "ss/polyfactor.hpp"

namespace ss {

Curve::Curve(FqElem a, FqElem b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant().is_zero()) throw precondition_error("Curve: singular (zero discriminant)");
}

FqElem Curve::discriminant() const {
    const FqField* F = field();
    FqElem a3 = a_ * a_ * a_;
    FqElem b2 = b_ * b_;
    FqElem d = FqElem::from_int(F, 4) * a3 + FqElem::from_int(F, 27) * b2;
    return -(FqElem::from_int(F, 16) * d);
}

FqElem Curve::j_invariant() const {
    const FqField* F = field();
    FqElem a3 = a_ * a_ * a_;
    FqElem num = FqElem::from_int(F, 4) * a3;
    FqElem den = num + FqElem::from_int(F, 27) * b_ * b_;
    return FqElem::from_int(F, 1728) * num * den.inv();
}

FqElem Curve::rhs(const FqElem& x) const { return x * x * x + a_ * x + b_; }

bool Curve::on_curve(const Point& P) const {
    if (P.infinity) return true;
    return P.y * P.y == rhs(P.x);
}

Point Curve::point(FqElem x, FqElem y) const {
    Point P = Point::affine(std::move(x), std::move(y));
    if (!on_curve(P)) throw precondition_error("Curve: point is not on the curve");
    return P;
}

Point Curve::neg(const Point& P) const {
    if (P.infinity) return P;
    return Point::affine(P.x, -P.y);
}

Point Curve::add(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const FqField* F = field();
    if (P.x == Q.x) {
        if (!(P.y == Q.y) || P.y.is_zero()) return Point::inf();  // vertical line
        // tangent: lambda = (3x^2 + a) / 2y
        FqElem num = FqElem::from_int(F, 3) * P.x * P.x + a_;
        FqElem lam = num * (FqElem::from_int(F, 2) * P.y).inv();
        FqElem x3 = lam * lam - P.x - Q.x;
        FqElem y3 = lam * (P.x - x3) - P.y;
        return Point::affine(std::move(x3), std::move(y3));
    }
    FqElem lam = (Q.y - P.y) * (Q.x - P.x).inv();
    FqElem x3 = lam * lam - P.x - Q.x;
    FqElem y3 = lam * (P.x - x3) - P.y;
    return Point::affine(std::move(x3), std::move(y3));
}

Point Curve::scalar_mul(const Nat& n, const Point& P) const {
    if (n == 0 || P.infinity) return Point::inf();
    Point acc = Point::inf();
    for (std::size_t i = bit_length(n); i-- > 0;) {
        acc = dbl(acc);
        if (test_bit(n, i)) acc = add(acc, P);
    }
    return acc;
}

Point Curve::random_point(Rng& rng) const {
    const FqField* F = field();
    while (true) {
        FqElem x(F, rng.below(F->p()), rng.below(F->p()));
        FqElem w = rhs(x);
        if (!w.is_square()) continue;
        bool flip = rng.coin();
        if (w.is_zero()) {
            if (!flip) continue;  // keep two-torsion at the same weight
            return Point::affine(std::move(x), FqElem::zero(F));
        }
        FqElem y = *w.sqrt();
        return Point::affine(std::move(x), flip ? -y : y);
    }
}

Curve curve_from_j(const FqElem& j, bool twist) {
    const FqField* F = j.F;
    FqElem a, b;
    if (j.is_zero()) {
        a = FqElem::zero(F);
        b = FqElem::one(F);
    } else if (j == FqElem::from_int(F, 1728)) {
        a = FqElem::one(F);
        b = FqElem::zero(F);
    } else {
        FqElem k = FqElem::from_int(F, 1728) - j;
        a = FqElem::from_int(F, 3) * j * k;
        b = FqElem::from_int(F, 2) * j * k * k;
    }
    if (twist) {
        FqElem c = F->nonsquare();
        a = a * c * c;
        b = b * c * c * c;
    }
    return Curve(std::move(a), std::move(b));
}

Poly phi2_at(const FqElem& j) {
    const FqField* F = j.F;
    auto n = [F](const char* s) { return FqElem::from_int(F, Nat(s)); };
    FqElem j2 = j * j;
    FqElem j3 = j2 * j;
    FqElem c2 = -j2 + n("1488") * j - n("162000");
    FqElem c1 = n("1488") * j2 + n("40773375") * j + n("8748000000");
    FqElem c0 = j3 - n("162000") * j2 + n("8748000000") * j - n("157464000000000");
    return Poly(F, {c0, c1, c2, FqElem::one(F)});
}

FqElem phi2_eval(const FqElem& x, const FqElem& y) { return phi2_at(y).eval(x); }

namespace {

std::vector<FqElem> step_candidates(const FqElem& j, const std::optional<FqElem>& j_prev,
                                    Rng& split_rng) {
    const FqField* F = j.F;
    Poly cubic = phi2_at(j);
    if (j_prev) {
        Poly lin = Poly(F, {-*j_prev, FqElem::one(F)});
        auto [q, rem] = poly_divrem(cubic, lin);
        if (rem.is_zero()) {
            std::vector<FqElem> out;
            for (auto& [root, mult] : roots_with_multiplicity(q, split_rng))
                for (int i = 0; i < mult; ++i) out.push_back(root);
            if (!out.empty()) return out;
        }
    }
    std::vector<FqElem> out;
    for (auto& [root, mult] : roots_with_multiplicity(cubic, split_rng))
        for (int i = 0; i < mult; ++i) out.push_back(root);
    return out;
}

}  // namespace

std::optional<FqElem> isogeny_step_2(const FqElem& j, const std::optional<FqElem>& j_prev,
                                     Rng& rng) {
    Rng split_rng = rng.split("phi2-roots");
    std::vector<FqElem> cands = step_candidates(j, j_prev, split_rng);
    if (cands.empty()) return std::nullopt;
    Nat idx = rng.below(Nat(cands.size()));
    return cands[mpz_get_ui(idx.get_mpz_t())];
}

std::optional<FqElem> isogeny_step_2_first(const FqElem& j, const std::optional<FqElem>& j_prev) {
    const FqField* F = j.F;
    Poly cubic = phi2_at(j);
    if (j_prev) {
        Poly lin = Poly(F, {-*j_prev, FqElem::one(F)});
        auto [q, rem] = poly_divrem(cubic, lin);
        if (!rem.is_zero()) return std::nullopt;  // arrived along a non-edge: cannot happen
        cubic = q;
    }
    Rng fixed(0x15061u);
    auto roots = roots_with_multiplicity(cubic, fixed);
    if (roots.empty()) return std::nullopt;
    return roots.front().first;  // canonical (lex-least) root
}

Curve gen_ordinary(const FqField* F, Rng& rng) {
    while (true) {
        FqElem a(F, rng.below(F->p()), rng.below(F->p()));
        FqElem b(F, rng.below(F->p()), rng.below(F->p()));
        FqElem d = FqElem::from_int(F, 4) * a * a * a + FqElem::from_int(F, 27) * b * b;
        if (d.is_zero()) continue;
        return Curve(std::move(a), std::move(b));
    }
}

Nat count_points_exhaustive(const Curve& E) {
    const FqField* F = E.field();
    if (F->p() > 200) throw precondition_error("count_points_exhaustive: p must be <= 200");
    const unsigned long p = mpz_get_ui(F->p().get_mpz_t());
    const unsigned long q = p * p;
    auto idx = [p](const FqElem& e) {
        return mpz_get_ui(e.c0.get_mpz_t()) + p * mpz_get_ui(e.c1.get_mpz_t());
    };
    // chi[i] in {0, 1, 2}: number of y with y^2 = element i. Keyed on p:
    // field construction is deterministic, so equal p means equal tables.
    static thread_local unsigned long cached_p = 0;
    static thread_local std::vector<unsigned char> chi;
    if (cached_p != p) {
        chi.assign(q, 0);
        for (unsigned long c1 = 0; c1 < p; ++c1)
            for (unsigned long c0 = 0; c0 < p; ++c0) {
                FqElem y = FqElem::raw(F, Nat(c0), Nat(c1));
                FqElem s = y.square();
                unsigned long i = idx(s);
                if (chi[i] < 2) chi[i] = (s.is_zero() ? 1 : 2);
            }
        cached_p = p;
    }
    Nat count = 1;  // infinity
    for (unsigned long c1 = 0; c1 < p; ++c1)
        for (unsigned long c0 = 0; c0 < p; ++c0) {
            FqElem x = FqElem::raw(F, Nat(c0), Nat(c1));
            FqElem w = (x.square() + E.a()) * x + E.b();
            count += chi[idx(w)];
        }
    return count;
}

namespace {

bool supersingular_by_count(const FqField* F, const Curve& E) {
    Nat t = F->q() + 1 - count_points_exhaustive(E);
    return t % F->p() == 0;
}

}  // namespace

Curve gen_supersingular(const FqField* F, Rng& rng, std::optional<Nat> walk_steps) {
    const Nat& p = F->p();
    FqElem j0 = FqElem::zero(F);
    if (p % 3 == 2) {
        j0 = FqElem::zero(F);
    } else if (p % 4 == 3) {
        j0 = FqElem::from_int(F, 1728);
    } else {
        // p = 1 mod 12: no congruence construction available here.
        if (p > 200)
            throw precondition_error("gen_supersingular: unsupported prime (p = 1 mod 12 too large)");
        std::vector<FqElem> ss;
        for (Nat c0 = 0; c0 < p; ++c0)
            for (Nat c1 = 0; c1 < p; ++c1) {
                FqElem j = FqElem::raw(F, c0, c1);
                Curve cand = curve_from_j(j);
                if (supersingular_by_count(F, cand)) ss.push_back(j);
            }
        if (ss.empty()) throw precondition_error("gen_supersingular: no supersingular j found");
        j0 = ss[mpz_get_ui(rng.below(Nat(ss.size())).get_mpz_t())];
    }

    Nat steps = walk_steps ? *walk_steps : default_walk_steps(p);
    std::optional<FqElem> prev;
    FqElem cur = j0;
    for (Nat s = 0; s < steps; ++s) {
        auto nxt = isogeny_step_2(cur, prev, rng);
        if (!nxt) throw precondition_error("gen_supersingular: walk left the rational graph");
        prev = cur;
        cur = *nxt;
    }
    return curve_from_j(cur);
}

}  // namespace ss
