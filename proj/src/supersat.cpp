#include "ecc/supersat.hpp"

#include <cmath>

#include "ecc/hamming.hpp"
#include "ecc/intersections.hpp"

namespace ecc {

CheckResult double_counting_check(const std::vector<Word>& S, const CodeParams& params,
                                  std::uint64_t budget) {
    params.validate();
    CheckResult res;

    Nat weighted = 0;
    auto edge_counts = edge_counts_by_distance(S, params);
    for (const auto& [k, ek] : edge_counts) weighted += intersection_volume(params, k) * ek;
    res.lhs = Rat(weighted);

    Nat pair_sum = 0;
    for (const Nat& kx : covering_counts(S, params, budget)) pair_sum += kx * (kx - 1) / 2;
    res.rhs = Rat(pair_sum);

    res.holds = res.lhs == res.rhs;
    return res;
}

SupersatInequalities lemma41_check(const std::vector<Word>& S, const CodeParams& params) {
    params.validate();
    if (params.t < 1) throw InputError("lemma41_check: t must be >= 1");
    Nat size(static_cast<unsigned long>(S.size()));
    Rat H = hamming_bound(params.q, params.n, params.t);
    if (Rat(size) < 2 * H) throw InputError("lemma41_check: precondition |S| >= 2 H_q(n,t) violated");

    SupersatInequalities res;
    Nat qn = params.space_size();
    Nat V = ball_volume(params.q, params.n, params.t);

    auto edge_counts = edge_counts_by_distance(S, params);
    Nat weighted = 0;
    Nat edge_total = 0;
    for (const auto& [k, ek] : edge_counts) {
        weighted += intersection_volume(params, k) * ek;
        edge_total += ek;
    }

    res.weighted_sum.lhs = Rat(weighted);
    res.weighted_sum.rhs = make_rat(size * size * V * V, 10 * qn);
    res.weighted_sum.holds = res.weighted_sum.lhs >= res.weighted_sum.rhs;

    res.edge_count.lhs = Rat(edge_total);
    res.edge_count.rhs = make_rat(Nat(params.n) * size * size, Nat(1)) / (Rat(20) * Rat(params.t) * H);
    res.edge_count.holds = res.edge_count.lhs >= res.edge_count.rhs;

    res.holds = res.weighted_sum.holds && res.edge_count.holds;
    return res;
}

std::pair<std::vector<Word>, std::vector<Word>> classify_S1_S2(const std::vector<Word>& S,
                                                               const CodeParams& params,
                                                               const Rat& epsilon) {
    params.validate();
    if (epsilon <= 0) throw InputError("classify_S1_S2: epsilon must be positive");
    if (params.n < 2) throw InputError("classify_S1_S2: n must be >= 2");

    const unsigned k_max = std::min(20u, params.n);
    Rat eps_sq = epsilon * epsilon;
    const double log_threshold = std::log(static_cast<double>(params.n)) / epsilon.get_d();

    std::vector<Word> s1, s2;
    for (const Word& v : S) {
        bool in_s1 = true;
        Nat deg_sum = 0;
        for (unsigned k = 1; k <= k_max; ++k) {
            Nat dk = degree_by_distance(S, v, k);
            deg_sum += dk;
            // deg_k(v) <= eps n^(ceil(k/2)/2), squared to stay exact
            if (Rat(dk * dk) > eps_sq * Rat(nat_pow(static_cast<unsigned long>(params.n), (k + 1) / 2)))
                in_s1 = false;
        }
        if (in_s1) s1.push_back(v);
        if (deg_sum.get_d() >= log_threshold) s2.push_back(v);
    }
    return {std::move(s1), std::move(s2)};
}

std::vector<Word> greedy_distance_packing(const std::vector<Word>& S, unsigned t) {
    std::vector<Word> packing;
    for (const Word& w : S) {
        bool far = true;
        for (const Word& x : packing)
            if (hamming_distance(w, x) <= t) {
                far = false;
                break;
            }
        if (far) packing.push_back(w);
    }
    return packing;
}

SupersatReport supersaturation_report(const std::vector<Word>& S, const CodeParams& params,
                                      const Rat& epsilon) {
    params.validate();
    SupersatReport rep;
    rep.params = params;
    rep.set_size = Nat(static_cast<unsigned long>(S.size()));

    rep.edges_by_distance = edge_counts_by_distance(S, params);
    rep.edge_total = 0;
    for (const auto& [k, ek] : rep.edges_by_distance) rep.edge_total += ek;

    rep.max_degree = 0;
    for (const Word& v : S) {
        Nat deg = 0;
        for (const Word& u : S) {
            unsigned d = hamming_distance(u, v);
            if (d >= 1 && d <= 2 * params.t) ++deg;
        }
        if (deg > rep.max_degree) rep.max_degree = deg;
    }

    Rat H = hamming_bound(params.q, params.n, params.t);
    rep.inequalities_applicable = params.t >= 1 && !S.empty() && Rat(rep.set_size) >= 2 * H;
    if (rep.inequalities_applicable) rep.inequalities = lemma41_check(S, params);

    auto [s1, s2] = classify_S1_S2(S, params, epsilon);
    rep.s1_size = Nat(static_cast<unsigned long>(s1.size()));
    rep.s2_size = Nat(static_cast<unsigned long>(s2.size()));
    rep.packing_size = Nat(static_cast<unsigned long>(greedy_distance_packing(S, params.t).size()));

    if (!S.empty()) {
        // ceil(n^(3/2)) = ceil(sqrt(n^3)); rounding up keeps the observable a
        // deterministic exact rational
        Nat n_cubed = nat_pow(static_cast<unsigned long>(params.n), 3);
        Nat n32;
        mpz_sqrt(n32.get_mpz_t(), n_cubed.get_mpz_t());
        if (n32 * n32 < n_cubed) ++n32;
        rep.maxdeg_observable = Rat(rep.max_degree) * H / (Rat(n32) * Rat(rep.set_size));
    }
    rep.s1_observable = Rat(rep.s1_size) / H;
    return rep;
}

}  // namespace ecc
