#include "ecc/indep.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "ecc/errors.hpp"

namespace ecc {

namespace {

using Block = VertexSet::block_type;

std::vector<Block> to_blocks(const VertexSet& s) {
    std::vector<Block> blocks(s.num_blocks());
    boost::to_block_range(s, blocks.begin());
    return blocks;
}

struct BlockHash {
    std::size_t operator()(const std::vector<Block>& blocks) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Block b : blocks) {
            h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Connected components of the subgraph induced on `avail`.
std::vector<VertexSet> components(const AdjGraph& g, const VertexSet& avail) {
    std::vector<VertexSet> comps;
    VertexSet remaining = avail;
    while (remaining.any()) {
        VertexSet comp(g.size());
        VertexSet frontier(g.size());
        frontier.set(remaining.find_first());
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(g.size());
            for (std::size_t v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
                next |= g.neighbors(v);
            next &= remaining;
            next -= comp;
            frontier = std::move(next);
        }
        remaining -= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Maximum-degree vertex within `sub`, ties broken by lowest vertex order.
std::size_t pivot_max_degree(const AdjGraph& g, const VertexSet& sub) {
    std::size_t best = sub.find_first();
    std::size_t best_deg = g.degree_in(best, sub);
    for (std::size_t v = sub.find_next(best); v != VertexSet::npos; v = sub.find_next(v)) {
        std::size_t d = g.degree_in(v, sub);
        if (d > best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

class BranchingCounter {
  public:
    BranchingCounter(const AdjGraph& g, const CountBudget& budget) : g_(g), budget_(budget) {}

    Nat count(const VertexSet& avail) {
        ++visits_;
        if (avail.none()) return 1;
        Nat product = 1;
        for (const VertexSet& comp : components(g_, avail)) product *= count_component(comp);
        return product;
    }

    std::size_t visits() const { return visits_; }

  private:
    Nat count_component(const VertexSet& comp) {
        if (comp.count() == 1) return 2;
        auto key = to_blocks(comp);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::size_t v = pivot_max_degree(g_, comp);
        VertexSet without_v = comp;
        without_v.reset(v);
        VertexSet without_closed = without_v - g_.neighbors(v);
        Nat result = count(without_v) + count(without_closed);
        memo_.emplace(std::move(key), result);
        return result;
    }

    const AdjGraph& g_;
    CountBudget budget_;
    std::size_t visits_ = 0;
    std::unordered_map<std::vector<Block>, Nat, BlockHash> memo_;
};

// Local adjacency masks for a <= 64 vertex set; used by the naive scans.
std::vector<std::uint64_t> local_masks(const AdjGraph& g, const std::vector<std::size_t>& verts) {
    std::vector<std::uint64_t> masks(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (i != j && g.adjacent(verts[i], verts[j])) masks[i] |= std::uint64_t(1) << j;
    return masks;
}

Nat naive_scan(const AdjGraph& g, const std::vector<std::size_t>& verts) {
    auto masks = local_masks(g, verts);
    std::uint64_t total = 0;
    const std::uint64_t limit = std::uint64_t(1) << verts.size();
    for (std::uint64_t subset = 0; subset < limit; ++subset) {
        bool ok = true;
        for (std::uint64_t rest = subset; rest;) {
            unsigned i = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            if (masks[i] & subset) {
                ok = false;
                break;
            }
        }
        if (ok) ++total;
    }
    return Nat(static_cast<unsigned long>(total));
}

std::vector<std::size_t> set_to_list(const VertexSet& s) {
    std::vector<std::size_t> verts;
    for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) verts.push_back(v);
    return verts;
}

Nat hybrid_count(const AdjGraph& g, const VertexSet& avail, const CountBudget& budget) {
    if (avail.none()) return 1;
    Nat product = 1;
    for (const VertexSet& comp : components(g, avail)) {
        if (comp.count() <= budget.naive_limit) {
            product *= naive_scan(g, set_to_list(comp));
        } else {
            // branch on the lowest-order vertex, no heuristics
            std::size_t v = comp.find_first();
            VertexSet without_v = comp;
            without_v.reset(v);
            VertexSet without_closed = without_v - g.neighbors(v);
            product *= hybrid_count(g, without_v, budget) + hybrid_count(g, without_closed, budget);
        }
    }
    return product;
}

}  // namespace

Nat count_independent_sets(const AdjGraph& g, const VertexSet& sub, const CountBudget& budget,
                           std::size_t* node_visits) {
    if (sub.count() > budget.branch_limit)
        throw ResourceError("count_independent_sets: vertex count exceeds branching budget");
    BranchingCounter counter(g, budget);
    Nat result = counter.count(sub);
    if (node_visits) *node_visits = counter.visits();
    return result;
}

Nat count_independent_sets(const AdjGraph& g, const CountBudget& budget, std::size_t* node_visits) {
    return count_independent_sets(g, g.full_set(), budget, node_visits);
}

Nat count_independent_sets_naive(const AdjGraph& g, const CountBudget& budget) {
    if (g.size() > budget.naive_limit)
        throw ResourceError("count_independent_sets_naive: vertex count exceeds naive budget");
    std::vector<std::size_t> verts(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) verts[v] = v;
    return naive_scan(g, verts);
}

Nat count_independent_sets_hybrid(const AdjGraph& g, const CountBudget& budget) {
    if (g.size() > budget.branch_limit)
        throw ResourceError("count_independent_sets_hybrid: vertex count exceeds branching budget");
    return hybrid_count(g, g.full_set(), budget);
}

namespace {

// Exact maximum independent set: branch and bound where the upper bound is a
// greedy clique cover of the candidate set (cliques in G are color classes of
// the complement).
class MisSolver {
  public:
    explicit MisSolver(const AdjGraph& g) : g_(g), best_(g.size()), current_(g.size()) {}

    MaxIndependentSet solve() {
        // greedy incumbent in vertex order; on Hamming graphs this is the
        // lexicode and is often already optimal
        VertexSet greedy(g_.size());
        for (std::size_t v = 0; v < g_.size(); ++v)
            if ((g_.neighbors(v) & greedy).none()) greedy.set(v);
        best_ = greedy;

        VertexSet all = g_.full_set();
        expand(all);

        MaxIndependentSet out;
        out.size = best_.count();
        out.witness = best_;
        out.node_visits = visits_;
        return out;
    }

  private:
    // Greedy clique cover of `cand`: repeatedly grow a clique from the
    // lowest remaining vertex.  bound[i] = number of cliques needed to cover
    // the first i+1 vertices of `order`; branching in reverse order makes the
    // bound monotone along the loop.
    void cover_order(const VertexSet& cand, std::vector<std::size_t>& order,
                     std::vector<std::size_t>& bound) {
        order.clear();
        bound.clear();
        VertexSet remaining = cand;
        std::size_t cliques = 0;
        while (remaining.any()) {
            ++cliques;
            VertexSet clique_cand = remaining;
            while (clique_cand.any()) {
                std::size_t v = clique_cand.find_first();
                order.push_back(v);
                bound.push_back(cliques);
                remaining.reset(v);
                clique_cand &= g_.neighbors(v);  // members must be pairwise adjacent
            }
        }
    }

    void expand(VertexSet& cand) {
        ++visits_;
        std::vector<std::size_t> order, bound;
        cover_order(cand, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.count() + bound[idx] <= best_.count()) return;
            std::size_t v = order[idx];
            current_.set(v);
            VertexSet next = cand - g_.neighbors(v);
            next.reset(v);
            if (current_.count() + next.count() > best_.count()) {
                if (next.none()) {
                    if (current_.count() > best_.count()) best_ = current_;
                } else {
                    expand(next);
                }
            }
            current_.reset(v);
            cand.reset(v);
        }
    }

    const AdjGraph& g_;
    VertexSet best_;
    VertexSet current_;
    std::size_t visits_ = 0;
};

}  // namespace

MaxIndependentSet max_independent_set(const AdjGraph& g, const CountBudget& budget) {
    if (g.size() > budget.branch_limit)
        throw ResourceError("max_independent_set: vertex count exceeds branching budget");
    if (g.size() == 0) return {};
    return MisSolver(g).solve();
}

namespace {

void enumerate_rec(const AdjGraph& g, VertexSet& chosen, const VertexSet& allowed, std::size_t from,
                   const std::function<void(const VertexSet&)>& sink, std::uint64_t& emitted,
                   std::uint64_t max_sets) {
    if (emitted++ >= max_sets) throw ResourceError("enumerate_independent_sets: stream budget exceeded");
    sink(chosen);
    std::size_t v = (from == 0) ? allowed.find_first() : allowed.find_next(from - 1);
    for (; v != VertexSet::npos; v = allowed.find_next(v)) {
        VertexSet next_allowed = allowed - g.neighbors(v);
        chosen.set(v);
        enumerate_rec(g, chosen, next_allowed, v + 1, sink, emitted, max_sets);
        chosen.reset(v);
    }
}

}  // namespace

void enumerate_independent_sets(const AdjGraph& g, const std::function<void(const VertexSet&)>& sink,
                                std::uint64_t max_sets) {
    VertexSet chosen(g.size());
    VertexSet allowed = g.full_set();
    std::uint64_t emitted = 0;
    enumerate_rec(g, chosen, allowed, 0, sink, emitted, max_sets);
}

std::vector<VertexSet> enumerate_independent_sets(const AdjGraph& g, std::uint64_t max_sets) {
    std::vector<VertexSet> out;
    enumerate_independent_sets(
        g, [&](const VertexSet& s) { out.push_back(s); }, max_sets);
    return out;
}

CensusResult census(const DistanceGraph& dg, const CountBudget& budget) {
    auto start = std::chrono::steady_clock::now();
    const AdjGraph& g = dg.graph();
    CensusResult res;
    res.params = dg.params();
    res.vertex_count = Nat(static_cast<unsigned long>(dg.size()));
    std::size_t visits = 0;
    res.independent_set_count = count_independent_sets(g, budget, &visits);
    MaxIndependentSet mis = max_independent_set(g, budget);
    res.max_independent_size = Nat(static_cast<unsigned long>(mis.size));
    res.node_visits = visits + mis.node_visits;
    res.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace ecc
