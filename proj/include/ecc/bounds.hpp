#pragma once

#include <optional>

#include "ecc/volumes.hpp"

namespace ecc {

enum class BoundMethod { hamming, plotkin, elias };

struct BoundResult {
    Rat value;  // upper bound on code size, exact rational
    BoundMethod method = BoundMethod::hamming;
    std::optional<unsigned long> witness_r;  // Elias radius used
    bool applicable = false;
};

// If alpha = 2t+1 - (1 - 1/q) n > 0, code size <= (2t+1) / alpha.
BoundResult plotkin_bound(unsigned q, unsigned long n, unsigned long t);

// A_q(n,d) <= theta*n*d / (r^2 - 2*theta*n*r + theta*n*d) * q^n / V_q(n,r),
// valid when r <= theta*n and the denominator is positive (theta = 1 - 1/q).
BoundResult elias_bound_at_r(unsigned q, unsigned long n, unsigned long d, unsigned long r);

// Minimizes the Elias bound over all valid integer r in [0, floor(theta*n)].
// Also reports the fixed-schedule radius r = t + alpha (alpha = 7 for
// 10 sqrt(n) < t < n^(4/5), alpha = ceil(sqrt(n log n)) above) when that
// schedule applies, for comparison against the optimum.
struct EliasBestResult {
    BoundResult best;
    std::optional<unsigned long> heuristic_r;
    std::optional<Rat> heuristic_value;
};
EliasBestResult elias_bound_best(unsigned q, unsigned long n, unsigned long d);

// log2 of the count bound q^(n A): exactly n*A*log2(q) when q is a power of
// two, otherwise n*A times a rational over-approximation of log2(q) accurate
// to 2^-32 and rounded up.
Rat code_count_log2_upper(unsigned q, unsigned long n, const Nat& A);

enum class Regime { A, B, C };

struct RegimeConstants {
    Rat C_q;                    // boundary constant for the B/C split
    std::optional<Rat> c_q;     // lower constant; defaults to C_q
};

struct RegimeResult {
    Regime regime = Regime::A;
    bool in_gap = false;  // t between the c_q and C_q boundaries
};

// Classifies (q, n, t):
//   A: t <= 10 sqrt(n)                          (exact: t^2 <= 100 n)
//   B: 10 sqrt(n) < t <= theta n - C_q sqrt(n ln n)
//   C: above.
// The sqrt(n ln n) comparison uses a rational upper bracket on ln n.
RegimeResult classify_regime(unsigned q, unsigned long n, unsigned long t,
                             const RegimeConstants& constants);

}  // namespace ecc
