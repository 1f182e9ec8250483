#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ecc/graph.hpp"
#include "ecc/numeric.hpp"

namespace ecc {

struct CountBudget {
    std::size_t naive_limit = 22;    // max |V| for the 2^|V| subset scan
    std::size_t branch_limit = 512;  // max |V| for the branching counter
};

// Exact i(G) (independent sets, including the empty set) via the recurrence
// i(G) = i(G - v) + i(G - N[v]) branching on a maximum-degree vertex, with
// connected-component factorization and memoization on component vertex sets.
Nat count_independent_sets(const AdjGraph& g, const CountBudget& budget = {},
                           std::size_t* node_visits = nullptr);
Nat count_independent_sets(const AdjGraph& g, const VertexSet& sub, const CountBudget& budget = {},
                           std::size_t* node_visits = nullptr);

// Independent route: plain scan over all 2^|V| subsets.  Oracle for the
// branching counter; refuses |V| > budget.naive_limit.
Nat count_independent_sets_naive(const AdjGraph& g, const CountBudget& budget = {});

// Second independent route for regression freezing: branches on the
// lowest-order vertex (no degree heuristic, no memoization across branches)
// until every component fits the naive scan.
Nat count_independent_sets_hybrid(const AdjGraph& g, const CountBudget& budget = {});

struct MaxIndependentSet {
    std::size_t size = 0;
    VertexSet witness;
    std::size_t node_visits = 0;
};

// Exact maximum independent set (branch and bound on the complement clique
// problem with greedy clique-cover bounds).  The witness is returned and is
// guaranteed independent of the claimed size.
MaxIndependentSet max_independent_set(const AdjGraph& g, const CountBudget& budget = {});

// Yields every independent set exactly once (including the empty set), in
// lexicographic vertex order.  Throws ResourceError past max_sets.
void enumerate_independent_sets(const AdjGraph& g, const std::function<void(const VertexSet&)>& sink,
                                std::uint64_t max_sets = std::uint64_t(1) << 24);
std::vector<VertexSet> enumerate_independent_sets(const AdjGraph& g,
                                                  std::uint64_t max_sets = std::uint64_t(1) << 24);

// Full census of t-error-correcting codes within the vertex set of G.
struct CensusResult {
    CodeParams params;
    Nat vertex_count;
    Nat independent_set_count;  // i(G), includes the empty set
    Nat max_independent_size;   // A_q(n, 2t+1) when G = G_{q,n,t}
    double wall_time_seconds = 0.0;
    std::size_t node_visits = 0;
};

CensusResult census(const DistanceGraph& g, const CountBudget& budget = {});

}  // namespace ecc
