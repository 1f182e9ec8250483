#pragma once

#include <map>
#include <vector>

#include "ecc/volumes.hpp"
#include "ecc/word.hpp"

namespace ecc {

// Exact double-counting identity over all of [q]^n:
//   sum_{k=1}^{2t} W_q(n,t,k) |E_k| = sum_x binom(|K_x|, 2)
// where K_x = { a in S : d(x, a) <= t }.  Holds for every S.
CheckResult double_counting_check(const std::vector<Word>& S, const CodeParams& params,
                                  std::uint64_t budget = std::uint64_t(1) << 20);

// Both non-asymptotic inequalities with the explicit constants 10 and 20:
//   sum_k W |E_k| >= |S|^2 V^2 / (10 q^n)   and   |E| >= n |S|^2 / (20 t H).
// Precondition (not a lemma failure when violated): |S| >= 2 H_q(n,t).
struct SupersatInequalities {
    bool holds = false;
    CheckResult weighted_sum;  // lhs = sum_k W |E_k|, rhs = |S|^2 V^2 / (10 q^n)
    CheckResult edge_count;    // lhs = |E|, rhs = n |S|^2 / (20 t H)
};
SupersatInequalities lemma41_check(const std::vector<Word>& S, const CodeParams& params);

// The S1/S2 split driving the degree-versus-independent-set analysis:
//   S1 = { v : deg_k(v) <= eps * n^(ceil(k/2)/2) for k = 1..20 }, decided by
//        the exact squared comparison deg_k(v)^2 <= eps^2 * n^(ceil(k/2));
//   S2 = { v : sum_{k=1}^{20} deg_k(v) >= ln(n) / eps }, with the threshold
//        evaluated in double precision (natural log; degree sums exact).
std::pair<std::vector<Word>, std::vector<Word>> classify_S1_S2(const std::vector<Word>& S,
                                                               const CodeParams& params,
                                                               const Rat& epsilon);

// Greedy maximal subset X of S with pairwise distance > t, built in the given
// vertex order.  Maximality gives the covering property: every element of S
// lies within distance t of some element of X.
std::vector<Word> greedy_distance_packing(const std::vector<Word>& S, unsigned t);

// One-stop exact report over a set S.
struct SupersatReport {
    CodeParams params;
    Nat set_size;
    Nat edge_total;
    std::map<unsigned, Nat> edges_by_distance;
    bool inequalities_applicable = false;  // |S| >= 2 H_q(n,t)
    SupersatInequalities inequalities;     // filled when applicable
    Nat max_degree;
    Nat s1_size;
    Nat s2_size;
    Nat packing_size;
    // observables for the asymptotic statements (never asserted):
    Rat maxdeg_observable;  // Delta(G[S]) * H / (n^(3/2) |S|), with n^(3/2) rounded up
    Rat s1_observable;      // |S1| / H
};
SupersatReport supersaturation_report(const std::vector<Word>& S, const CodeParams& params,
                                      const Rat& epsilon);

}  // namespace ecc
