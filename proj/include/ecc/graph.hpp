#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

#include "ecc/word.hpp"

namespace ecc {

using VertexSet = boost::dynamic_bitset<>;

// Plain undirected graph over vertex ids 0..n-1 with bitset adjacency rows.
// The id order is the fixed vertex order used by the container algorithm.
class AdjGraph {
  public:
    explicit AdjGraph(std::size_t n) : adj_(n, VertexSet(n)) {}

    std::size_t size() const { return adj_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) return;
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }

    std::size_t degree(std::size_t v) const { return adj_[v].count(); }
    std::size_t degree_in(std::size_t v, const VertexSet& sub) const { return (adj_[v] & sub).count(); }

    VertexSet full_set() const {
        VertexSet s(size());
        s.set();
        return s;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (std::size_t v = 0; v < size(); ++v) d = std::max(d, degree(v));
        return d;
    }

    // True if no two set vertices are adjacent.
    bool is_independent(const VertexSet& s) const {
        for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
            if ((adj_[v] & s).any()) return false;
        return true;
    }

  private:
    std::vector<VertexSet> adj_;
};

// The induced graph G_{q,n,t}[S]: vertices are words (in a fixed order, rank
// order by default) and edges join pairs at Hamming distance in [1, 2t].
class DistanceGraph {
  public:
    // Explicit adjacency bitsets are built when |S| <= explicit_limit;
    // above that only the vertex list is kept and adjacency is answered by
    // computing distances on demand.
    DistanceGraph(CodeParams params, std::vector<Word> vertices, std::size_t explicit_limit = 1 << 16);

    // G_{q,n,t} on all of [q]^n in rank order.
    static DistanceGraph full_space(const CodeParams& params, std::uint64_t budget = std::uint64_t(1) << 20);

    const CodeParams& params() const { return params_; }
    std::size_t size() const { return vertices_.size(); }
    const Word& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Word>& vertices() const { return vertices_; }

    bool adjacent(std::size_t i, std::size_t j) const;

    bool has_explicit_adjacency() const { return static_cast<bool>(adj_); }
    // Requires explicit adjacency.
    const AdjGraph& graph() const;

  private:
    CodeParams params_;
    std::vector<Word> vertices_;
    std::unique_ptr<AdjGraph> adj_;
};

}  // namespace ecc
