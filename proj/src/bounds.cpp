#include "ecc/bounds.hpp"

#include <cmath>

namespace ecc {

BoundResult plotkin_bound(unsigned q, unsigned long n, unsigned long t) {
    if (q < 2) throw InputError("plotkin_bound: q must be >= 2");
    BoundResult res;
    res.method = BoundMethod::plotkin;
    Rat theta = make_rat(Nat(q - 1), Nat(static_cast<unsigned long>(q)));
    Rat alpha = Rat(Nat(2 * t + 1)) - theta * Rat(Nat(n));
    res.applicable = alpha > 0;
    if (res.applicable) res.value = Rat(Nat(2 * t + 1)) / alpha;
    return res;
}

BoundResult elias_bound_at_r(unsigned q, unsigned long n, unsigned long d, unsigned long r) {
    if (q < 2) throw InputError("elias_bound_at_r: q must be >= 2");
    if (r > n) throw InputError("elias_bound_at_r: r > n");
    BoundResult res;
    res.method = BoundMethod::elias;
    res.witness_r = r;
    Rat theta = make_rat(Nat(q - 1), Nat(static_cast<unsigned long>(q)));
    Rat theta_nd = theta * Rat(Nat(n)) * Rat(Nat(d));
    Rat denom = Rat(Nat(r)) * Rat(Nat(r)) - 2 * theta * Rat(Nat(n)) * Rat(Nat(r)) + theta_nd;
    res.applicable = Rat(Nat(r)) <= theta * Rat(Nat(n)) && denom > 0;
    if (res.applicable)
        res.value = (theta_nd / denom) * hamming_bound(q, n, r);
    return res;
}

EliasBestResult elias_bound_best(unsigned q, unsigned long n, unsigned long d) {
    if (n < 1 || d < 1 || d > n) throw InputError("elias_bound_best: need 1 <= d <= n");
    EliasBestResult out;
    unsigned long r_max = (static_cast<unsigned long>(q - 1) * n) / q;  // floor(theta n)
    bool have = false;
    for (unsigned long r = 0; r <= r_max; ++r) {
        BoundResult b = elias_bound_at_r(q, n, d, r);
        if (!b.applicable) continue;
        if (!have || b.value < out.best.value) {
            out.best = b;
            have = true;
        }
    }
    // r = 0 always yields the trivial bound q^n, so a valid radius exists
    if (!have) throw std::logic_error("elias_bound_best: no valid radius");

    // the fixed schedule: only defined for odd d = 2t+1 with t > 10 sqrt(n)
    if (d % 2 == 1 && d >= 3) {
        unsigned long t = (d - 1) / 2;
        Nat t_sq = Nat(t) * Nat(t);
        bool above_10sqrt = t_sq > 100 * Nat(n);                        // t > 10 sqrt(n)
        bool below_n45 = nat_pow(Nat(t), 5) < nat_pow(Nat(n), 4);      // t < n^(4/5)
        if (above_10sqrt) {
            unsigned long alpha =
                below_n45
                    ? 7
                    : static_cast<unsigned long>(
                          std::ceil(std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)))));
            unsigned long r = t + alpha;
            if (r <= n) {
                BoundResult b = elias_bound_at_r(q, n, d, r);
                if (b.applicable) {
                    out.heuristic_r = r;
                    out.heuristic_value = b.value;
                }
            }
        }
    }
    return out;
}

Rat code_count_log2_upper(unsigned q, unsigned long n, const Nat& A) {
    if (A < 0) throw InputError("code_count_log2_upper: A must be >= 0");
    Nat nA = Nat(n) * A;
    if ((q & (q - 1)) == 0) {
        unsigned long k = 0;
        for (unsigned v = q; v > 1; v >>= 1) ++k;
        return Rat(nA * Nat(k));
    }
    // rational over-approximation of log2(q): ceil on a 2^-32 grid with a
    // one-ulp safety step, so the result is always an upper bound
    long double l = std::log2l(static_cast<long double>(q));
    Nat num = Nat(static_cast<unsigned long>(std::ceill(l * 4294967296.0L))) + 1;
    return Rat(nA) * make_rat(num, Nat(std::uint64_t(1) << 32));
}

namespace {

// Rational upper bracket on ln(n), margin 2^-30.
Rat ln_upper(unsigned long n) {
    long double l = std::logl(static_cast<long double>(n));
    Nat num = Nat(static_cast<unsigned long>(std::ceill(l * 1073741824.0L))) + 1;
    return make_rat(num, Nat(std::uint64_t(1) << 30));
}

}  // namespace

RegimeResult classify_regime(unsigned q, unsigned long n, unsigned long t,
                             const RegimeConstants& constants) {
    if (constants.C_q <= 0) throw InputError("classify_regime: C_q must be positive");
    Rat c_q = constants.c_q.value_or(constants.C_q);
    if (c_q <= 0 || c_q > constants.C_q)
        throw InputError("classify_regime: need 0 < c_q <= C_q");

    RegimeResult res;
    if (Nat(t) * Nat(t) <= 100 * Nat(n)) {
        res.regime = Regime::A;
        return res;
    }

    Rat theta = make_rat(Nat(q - 1), Nat(static_cast<unsigned long>(q)));
    Rat slack = theta * Rat(Nat(n)) - Rat(Nat(t));  // theta n - t
    Rat ln_n = ln_upper(n);
    // t <= theta n - C sqrt(n ln n)  <=>  C^2 n ln n <= (theta n - t)^2 with slack >= 0
    auto below_boundary = [&](const Rat& c) {
        return slack >= 0 && c * c * Rat(Nat(n)) * ln_n <= slack * slack;
    };
    if (below_boundary(constants.C_q)) {
        res.regime = Regime::B;
    } else {
        res.regime = Regime::C;
        // between the two boundaries the classification is a proof artifact
        res.in_gap = below_boundary(c_q);
    }
    return res;
}

}  // namespace ecc
