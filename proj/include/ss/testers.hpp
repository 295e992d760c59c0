#pragma once

#include <optional>
#include <vector>

#include "ss/curve.hpp"
#include "ss/divpoly.hpp"
#include "ss/polyfactor.hpp"
#include "ss/verdict.hpp"

namespace ss {

// Exhaustive point count plus the trace criterion t = 0 mod p. The
// authoritative reference for every other method at desk scale; p <= 200.
struct OracleResult {
    Nat count;
    Nat trace;  // p^2 + 1 - count, signed value held in Nat's mpz
    Verdict verdict;
};
OracleResult oracle_brute_force(const Curve& E);

// Hasse-invariant baseline: supersingular iff the coefficient of x^{p-1}
// in (x^3 + ax + b)^{(p-1)/2} vanishes. Exponential in log p; p <= 10^5.
Verdict naive_coeff_test(const Curve& E);

// Random points killed by p-1 or p+1. One-sided: a failure certifies
// ordinary; iters passes give error at most (1/p)^iters.
Verdict monte_carlo_test(const Curve& E, const Nat& iters, Rng& rng);

// Identity test for the p-th division polynomial at a random evaluation
// point; both constant values +1 and -1 are accepted, and j = 0 / 1728 are
// settled by the congruence criteria first.
Verdict sz_pit_test(const Curve& E, Rng& rng);

// Trace congruences modulo small-prime division polynomials. Since the
// per-prime identity only sees x-coordinates it determines t = +-2p mod r
// with a free sign for each r, so the product of the odd moduli must exceed
// 4p^2 (not 4p) before t^2 = 4p^2 is forced. r = 2 is handled via rational
// two-torsion, and r = p is skipped.
Verdict schoof_like_test(const Curve& E);

// The binomial order bound C(N, K) with N = floor(floor(r/2)^{1-eps/3} -
// r^{eps/3}) and K = floor(floor(r/2)^{2eps}); 0 when N is non-positive or
// smaller than K. Exact integer arithmetic once N and K are fixed.
Nat binom_bound(const Nat& r, double epsilon);

struct HighOrderParams {
    Nat r;
    double epsilon = 0.0;
    Nat d;  // (r-1)/2 = order of q mod r
    bool heuristic_poonen = false;
    double poonen_c = 0.0;
    // Optional cached irreducible factor of the r-th cyclotomic polynomial;
    // it depends only on (p, r, seed), so sweeps reuse it across curves.
    std::optional<Poly> factor_g;
};

// Smallest prime r (never p itself) such that p generates (Z/rZ)* and the
// binomial bound reaches 2p + 2; epsilon is grid-searched over
// {0.05, ..., 0.95} unless pinned by the caller. With poonen_c set the
// binomial constraint is skipped and r >= 1/(2c) is used instead
// (heuristic mode; resulting verdicts are flagged conjectural).
HighOrderParams select_r(const Nat& p, std::optional<double> epsilon = std::nullopt,
                         std::optional<double> poonen_c = std::nullopt);

// High-order-point test: congruence shortcut for j = 0 / 1728, a random
// division-polynomial evaluation as prefilter, then the two identities
//   f_p = e (mod g), e in {+1, -1}
//   f_{p-1} f_{p+1} F = x - x^{p^2} (mod g)
// for an irreducible factor g of the r-th cyclotomic polynomial.
Verdict high_order_test(const Curve& E, std::optional<HighOrderParams> params, Rng& rng);

// Graph-walk baseline: if Phi_2(X, j) does not split completely, ordinary;
// otherwise three non-backtracking walks of length floor(log2 p) + 1, and
// any dead end certifies ordinary.
Verdict isogr_baseline_test(const Curve& E);

struct CrossCheckReport {
    std::vector<Verdict> verdicts;
    std::optional<Method> authority;
    std::vector<Method> disagreements;

    bool agreement() const { return disagreements.empty(); }
};

struct CrossCheckOptions {
    Nat mc_iters = 2;
    std::optional<HighOrderParams> high_order_params;
};

// Runs the requested methods and flags disagreements against the most
// authoritative one present (oracle, then deterministic testers, then
// probabilistic ones). Disagreement is reported data, not an error.
CrossCheckReport cross_check(const Curve& E, const std::vector<Method>& methods, Rng& rng,
                             const CrossCheckOptions& opts = {});

}  // namespace ss
