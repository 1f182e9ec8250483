#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ecc/word.hpp"

namespace ecc {

// |B_q(u, t) ∩ B_q(w, t)| for the canonical centers u = 0^n and
// w = 1^k 0^(n-k), by scanning all q^n words.  The symmetry group of [q]^n
// acts transitively on pairs at distance k, so these centers lose nothing.
Nat ball_intersection_bruteforce(const CodeParams& params, unsigned k,
                                 std::uint64_t budget = std::uint64_t(1) << 20);

// k -> |E_k| for k = 1..2t: unordered pairs of S at distance exactly k.
std::map<unsigned, Nat> edge_counts_by_distance(const std::vector<Word>& S, const CodeParams& params);

// deg_k(v) = |{u in S : d(u, v) = k}|.  v must be a member of S.
Nat degree_by_distance(const std::vector<Word>& S, const Word& v, unsigned k);

// |K_x| = |{a in S : d(x, a) <= t}| for every x in [q]^n, indexed by rank.
std::vector<Nat> covering_counts(const std::vector<Word>& S, const CodeParams& params,
                                 std::uint64_t budget = std::uint64_t(1) << 20);

}  // namespace ecc
