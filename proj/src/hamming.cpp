#include "ecc/hamming.hpp"

#include <algorithm>

namespace ecc {

Nat ball_intersection_bruteforce(const CodeParams& params, unsigned k, std::uint64_t budget) {
    params.validate();
    if (k > params.n) throw InputError("ball_intersection_bruteforce: k > n");
    std::vector<std::uint8_t> u_digits(params.n, 0);
    std::vector<std::uint8_t> w_digits(params.n, 0);
    std::fill(w_digits.begin(), w_digits.begin() + k, std::uint8_t(1));
    Word u(params.q, u_digits);
    Word w(params.q, w_digits);

    Nat count = 0;
    for (const Word& x : all_words(params.q, params.n, budget))
        if (hamming_distance(x, u) <= params.t && hamming_distance(x, w) <= params.t) ++count;
    return count;
}

std::map<unsigned, Nat> edge_counts_by_distance(const std::vector<Word>& S, const CodeParams& params) {
    params.validate();
    std::map<unsigned, Nat> counts;
    for (unsigned k = 1; k <= 2 * params.t; ++k) counts[k] = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            unsigned d = hamming_distance(S[i], S[j]);
            if (d >= 1 && d <= 2 * params.t) ++counts[d];
        }
    return counts;
}

Nat degree_by_distance(const std::vector<Word>& S, const Word& v, unsigned k) {
    if (std::find(S.begin(), S.end(), v) == S.end())
        throw InputError("degree_by_distance: v is not a member of S");
    Nat deg = 0;
    for (const Word& u : S)
        if (hamming_distance(u, v) == k) ++deg;
    return deg;
}

std::vector<Nat> covering_counts(const std::vector<Word>& S, const CodeParams& params,
                                 std::uint64_t budget) {
    params.validate();
    std::vector<Word> space = all_words(params.q, params.n, budget);
    std::vector<Nat> counts(space.size(), Nat(0));
    for (std::size_t i = 0; i < space.size(); ++i)
        for (const Word& a : S)
            if (hamming_distance(space[i], a) <= params.t) ++counts[i];
    return counts;
}

}  // namespace ecc
