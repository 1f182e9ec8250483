#include "ecc/intersections.hpp"

#include <algorithm>

namespace ecc {

Nat intersection_volume(const CodeParams& params, unsigned k) {
    params.validate();
    if (k > params.n) throw InputError("intersection_volume: k > n");
    const unsigned q = params.q;
    const unsigned n = params.n;
    const unsigned t = params.t;

    Nat total = 0;
    for (unsigned r = 0; r <= k; ++r) {
        for (unsigned s = 0; s + r <= k; ++s) {
            unsigned shift = std::max(k - r, k - s);
            if (shift > t) continue;  // V_q(m, negative) = 0
            // nat_pow(0, 0) = 1, so the q = 2 case keeps only r + s = k.
            Nat term = binomial(k, r) * binomial(k - r, s) * nat_pow(static_cast<unsigned long>(q - 2), k - r - s);
            // a radius beyond the residual dimension covers the whole subspace
            unsigned radius = std::min(t - shift, n - k);
            total += term * ball_volume(q, n - k, radius);
        }
    }
    return total;
}

CheckResult check_identity_k1(const CodeParams& params) {
    params.validate();
    if (params.t < 1) throw InputError("check_identity_k1: t must be >= 1");
    CheckResult res;
    res.lhs = Rat(intersection_volume(params, 1));
    res.rhs = Rat(params.q) * Rat(ball_volume(params.q, params.n - 1, params.t - 1));
    res.holds = res.lhs == res.rhs;
    return res;
}

CheckResult check_monotone(const CodeParams& params, unsigned k) {
    params.validate();
    if (k > params.t) throw InputError("check_monotone: lemma range is 0 <= k <= t");
    if (k + 1 > params.n) throw InputError("check_monotone: k + 1 > n");
    CheckResult res;
    res.lhs = Rat(intersection_volume(params, k + 1));
    res.rhs = Rat(intersection_volume(params, k));
    res.holds = res.lhs <= res.rhs;
    return res;
}

DecayChainResult check_decay(const CodeParams& params, unsigned k) {
    params.validate();
    if (2 * k + 2 > params.n) throw InputError("check_decay: 2k + 2 > n");
    DecayChainResult res;
    res.w_2k2 = intersection_volume(params, 2 * k + 2);
    res.w_2k1 = intersection_volume(params, 2 * k + 1);
    Rat ratio = make_rat(Nat(params.q) * Nat(params.q) * Nat(params.t),
                         Nat(params.q - 1) * Nat(params.n));
    res.mid = Rat(2) * rat_pow(ratio, k) * Rat(intersection_volume(params, 1));
    res.outer = Rat(2) * rat_pow(ratio, k + 1) * Rat(ball_volume(params.q, params.n, params.t));
    res.holds = Rat(res.w_2k2) <= Rat(res.w_2k1) && Rat(res.w_2k1) <= res.mid && res.mid <= res.outer;
    return res;
}

}  // namespace ecc
