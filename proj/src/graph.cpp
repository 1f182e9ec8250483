#include "ecc/graph.hpp"

#include <memory>

namespace ecc {

DistanceGraph::DistanceGraph(CodeParams params, std::vector<Word> vertices, std::size_t explicit_limit)
    : params_(params), vertices_(std::move(vertices)) {
    params_.validate();
    for (const Word& w : vertices_)
        if (w.size() != params_.n || w.q() != params_.q)
            throw InputError("DistanceGraph: vertex does not live in [q]^n");
    if (vertices_.size() <= explicit_limit) {
        adj_ = std::make_unique<AdjGraph>(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
                unsigned d = hamming_distance(vertices_[i], vertices_[j]);
                if (d >= 1 && d <= 2 * params_.t) adj_->add_edge(i, j);
            }
    }
}

DistanceGraph DistanceGraph::full_space(const CodeParams& params, std::uint64_t budget) {
    return DistanceGraph(params, all_words(params.q, params.n, budget));
}

bool DistanceGraph::adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    if (adj_) return adj_->adjacent(i, j);
    unsigned d = hamming_distance(vertices_[i], vertices_[j]);
    return d >= 1 && d <= 2 * params_.t;
}

const AdjGraph& DistanceGraph::graph() const {
    if (!adj_) throw ResourceError("DistanceGraph: no explicit adjacency at this size");
    return *adj_;
}

}  // namespace ecc
