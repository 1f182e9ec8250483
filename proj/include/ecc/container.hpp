#pragma once

#include <utility>
#include <vector>

#include "ecc/indep.hpp"

namespace ecc {

// Early-stopping rule: terminate once i(G_{i-1}) <= threshold.
struct StopRule {
    Nat threshold = 1;
    CountBudget count_budget;

    void validate() const {
        if (threshold < 1) throw InputError("StopRule: threshold must be >= 1");
    }
};

enum class StopReason { early_stop, exhausted };

// One run of the container algorithm on a fixed graph and vertex order.
struct ContainerRecord {
    VertexSet fingerprint;  // P, always independent and a subset of the input I
    VertexSet container;    // P ∪ f(P)
    VertexSet residual;     // f(P) = V(G_{i-1}) at termination
    StopReason stop_reason = StopReason::early_stop;
    std::vector<std::pair<std::size_t, std::size_t>> removed_per_step;  // (vertex, removed count)
    Nat threshold_used;
};

// The modified greedy container algorithm with early stopping: repeatedly
// count i of the residual graph; below threshold, stop with f(P) = residual
// vertices; otherwise delete the maximum-degree vertex (earliest in the
// vertex order on ties), adding it to P and deleting its whole closed
// neighborhood when it belongs to I.  f(P) depends on P alone for a fixed
// graph, order, and stop rule.
ContainerRecord run_container_algorithm(const AdjGraph& g, const VertexSet& independent_set,
                                        const StopRule& stop);

struct ContainerFamily {
    std::vector<VertexSet> containers;  // deduplicated { P ∪ f(P) }
    Nat max_fingerprint_size;           // max |P| over all runs
};

// { P ∪ f(P) } over the supplied independent sets, deduplicated.
ContainerFamily build_container_family(const AdjGraph& g, const StopRule& stop,
                                       const std::vector<VertexSet>& independent_sets);
// Same, enumerating all independent sets of g first (tiny graphs only).
ContainerFamily build_container_family(const AdjGraph& g, const StopRule& stop,
                                       std::uint64_t enum_budget = std::uint64_t(1) << 24);

struct AuditReport {
    bool coverage = false;     // every independent set inside some container
    Nat family_size;           // |F|
    Nat max_container_isets;   // max over S in F of i(G[S])
    Nat max_fingerprint_size;  // copied from the family build
    Nat total_isets;           // sum over S in F of i(G[S]); upper bound on i(G)
};

// Audits a container family against an exhaustive independent-set list.
AuditReport audit_family(const AdjGraph& g, const ContainerFamily& family,
                         const std::vector<VertexSet>& independent_sets,
                         const CountBudget& budget = {});

}  // namespace ecc
