#include "ecc/volumes.hpp"

namespace ecc {

Nat ball_volume(unsigned q, unsigned long n, unsigned long r) {
    if (q < 2) throw InputError("ball_volume: q must be >= 2");
    if (r > n) throw InputError("ball_volume: r > n");
    // term_i = binom(n, i) (q-1)^i, updated as
    // term_{i+1} = term_i * (n - i) / (i + 1) * (q - 1).
    Nat total = 1;
    Nat term = 1;
    for (unsigned long i = 0; i < r; ++i) {
        term *= n - i;
        term /= i + 1;
        term *= q - 1;
        total += term;
    }
    return total;
}

Rat hamming_bound(unsigned q, unsigned long n, unsigned long t) {
    Nat qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    return make_rat(qn, ball_volume(q, n, t));
}

Rat tail_probability(unsigned q, unsigned long n, unsigned long t) {
    Nat qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    return make_rat(ball_volume(q, n, t), qn);
}

unsigned long threshold_radius(unsigned q, unsigned long n, const Rat& B) {
    if (B < 1) throw InputError("threshold_radius: B < 1 (H_q >= 1 always)");
    Nat qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    // H(t) <= B  <=>  q^n <= B * V(t).  V is built incrementally, same
    // recurrence as ball_volume.
    Nat total = 1;
    Nat term = 1;
    for (unsigned long t = 0; t <= n; ++t) {
        if (Rat(qn) <= B * Rat(total)) return t;
        if (t < n) {
            term *= n - t;
            term /= t + 1;
            term *= q - 1;
            total += term;
        }
    }
    return n;
}

CheckResult check_volume_decay(unsigned q, unsigned long n, unsigned long t, unsigned long i) {
    if (i < 1 || i > t) throw InputError("check_volume_decay: need 1 <= i <= t");
    if (t > n) throw InputError("check_volume_decay: t > n");
    CheckResult res;
    res.lhs = Rat(ball_volume(q, n - i, t - i));
    Rat ratio = make_rat(Nat(t), Nat(q - 1) * Nat(n));
    res.rhs = rat_pow(ratio, i) * Rat(ball_volume(q, n, t));
    res.holds = res.lhs <= res.rhs;
    return res;
}

CheckResult check_volume_growth(unsigned q, unsigned long n, unsigned long t, unsigned long alpha) {
    if (alpha < 1 || alpha > t) throw InputError("check_volume_growth: need 1 <= alpha <= t");
    if (t + alpha > n) throw InputError("check_volume_growth: t + alpha > n");
    CheckResult res;
    res.lhs = Rat(ball_volume(q, n, t + alpha));
    Rat base = make_rat(Nat(q - 1) * Nat(n), Nat(t + alpha)) *
               make_rat(Nat(n - alpha + 1 - t), Nat(n - alpha + 1));
    res.rhs = rat_pow(base, alpha) * Rat(ball_volume(q, n, t));
    res.holds = res.lhs >= res.rhs;
    return res;
}

}  // namespace ecc
