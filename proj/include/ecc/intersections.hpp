#pragma once

#include "ecc/volumes.hpp"
#include "ecc/word.hpp"

namespace ecc {

// W_q(n, t, k): volume of the intersection of two radius-t balls whose
// centers are distance k apart.  Closed form:
//   W = sum_{r=0}^{k} sum_{s=0}^{k-r} binom(k,r) binom(k-r,s) (q-2)^(k-r-s)
//         * V_q(n-k, t - max{k-r, k-s}),
// with V_q(m, negative) = 0 and the 0^0 = 1 convention so q = 2 degenerates
// to the r + s = k terms only.
Nat intersection_volume(const CodeParams& params, unsigned k);

// W_q(n, t, 1) = q * V_q(n-1, t-1); requires t >= 1.
CheckResult check_identity_k1(const CodeParams& params);

// W_q(n, t, k+1) <= W_q(n, t, k) for 0 <= k <= t.
CheckResult check_monotone(const CodeParams& params, unsigned k);

// The full decay chain for k >= 0, 2k+2 <= n:
//   W(2k+2) <= W(2k+1) <= 2 (q^2 t / ((q-1) n))^k W(1)
//           <= 2 (q^2 t / ((q-1) n))^(k+1) V_q(n, t).
struct DecayChainResult {
    bool holds = false;
    Nat w_2k2;
    Nat w_2k1;
    Rat mid;    // 2 (q^2 t / ((q-1)n))^k W(1)
    Rat outer;  // 2 (q^2 t / ((q-1)n))^(k+1) V_q(n,t)
};
DecayChainResult check_decay(const CodeParams& params, unsigned k);

}  // namespace ecc
