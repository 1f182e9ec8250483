#pragma once

#include "ecc/errors.hpp"
#include "ecc/numeric.hpp"

namespace ecc {

// Outcome of an exact inequality/identity check: both sides are carried so
// that a failure (always an implementation bug, never a lemma failure) is
// diagnosable.
struct CheckResult {
    bool holds = false;
    Rat lhs;
    Rat rhs;
};

// V_q(n, r) = sum_{i=0}^{r} binom(n, i) (q-1)^i, computed by incremental
// term updates so large n stays O(r) big-int operations.
Nat ball_volume(unsigned q, unsigned long n, unsigned long r);

// H_q(n, t) = q^n / V_q(n, t), exact.
Rat hamming_bound(unsigned q, unsigned long n, unsigned long t);

// V_q(n, t) / q^n = P(Bin(n, 1 - 1/q) <= t), exact; the reciprocal of the
// Hamming bound.
Rat tail_probability(unsigned q, unsigned long n, unsigned long t);

// Minimal t with hamming_bound(q, n, t) <= B, or n if no smaller t works.
unsigned long threshold_radius(unsigned q, unsigned long n, const Rat& B);

// V_q(n-i, t-i) <= (t / ((q-1) n))^i * V_q(n, t), for 1 <= i <= t.
CheckResult check_volume_decay(unsigned q, unsigned long n, unsigned long t, unsigned long i);

// V_q(n, t+a) >= ((q-1)n / (t+a))^a * ((n-a+1-t) / (n-a+1))^a * V_q(n, t),
// for 1 <= a <= t and t+a <= n.
CheckResult check_volume_growth(unsigned q, unsigned long n, unsigned long t, unsigned long alpha);

}  // namespace ecc
