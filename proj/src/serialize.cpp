#include "ecc/serialize.hpp"

#include <algorithm>

namespace ecc {

json to_json(const CodeParams& p) { return json{{"q", p.q}, {"n", p.n}, {"t", p.t}}; }

json word_set_to_json(const std::vector<Word>& words) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(words.size());
    for (const Word& w : words) ranks.push_back(w.rank());
    std::sort(ranks.begin(), ranks.end());
    return json(ranks);
}

json to_json(const CheckResult& r) {
    return json{{"holds", r.holds}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}};
}

json to_json(const CensusResult& r) {
    return json{
        {"params", to_json(r.params)},
        {"vertex_count", to_string(r.vertex_count)},
        {"independent_set_count", to_string(r.independent_set_count)},
        {"max_independent_size", to_string(r.max_independent_size)},
        {"wall_time_seconds", r.wall_time_seconds},
        {"node_visits", r.node_visits},
    };
}

json to_json(const BoundResult& r) {
    json j{{"applicable", r.applicable}};
    switch (r.method) {
        case BoundMethod::hamming: j["method"] = "hamming"; break;
        case BoundMethod::plotkin: j["method"] = "plotkin"; break;
        case BoundMethod::elias: j["method"] = "elias"; break;
    }
    if (r.applicable) j["value"] = to_string(r.value);
    if (r.witness_r) j["witness_r"] = *r.witness_r;
    return j;
}

json to_json(const AuditReport& r) {
    return json{
        {"coverage", r.coverage},
        {"family_size", to_string(r.family_size)},
        {"max_container_isets", to_string(r.max_container_isets)},
        {"max_fingerprint_size", to_string(r.max_fingerprint_size)},
        {"total_isets", to_string(r.total_isets)},
    };
}

json to_json(const SupersatReport& r) {
    json edges = json::object();
    for (const auto& [k, ek] : r.edges_by_distance) edges[std::to_string(k)] = to_string(ek);
    json j{
        {"params", to_json(r.params)},
        {"set_size", to_string(r.set_size)},
        {"edge_total", to_string(r.edge_total)},
        {"edges_by_distance", edges},
        {"max_degree", to_string(r.max_degree)},
        {"s1_size", to_string(r.s1_size)},
        {"s2_size", to_string(r.s2_size)},
        {"packing_size", to_string(r.packing_size)},
        {"maxdeg_observable", to_string(r.maxdeg_observable)},
        {"s1_observable", to_string(r.s1_observable)},
        {"inequalities_applicable", r.inequalities_applicable},
    };
    if (r.inequalities_applicable) {
        j["weighted_sum"] = to_json(r.inequalities.weighted_sum);
        j["edge_count"] = to_json(r.inequalities.edge_count);
    }
    return j;
}

namespace {

json vertex_set_to_json(const VertexSet& s) {
    std::vector<std::size_t> ids;
    for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) ids.push_back(v);
    return json(ids);
}

}  // namespace

json to_json(const ContainerRecord& r, const AdjGraph&) {
    json steps = json::array();
    for (const auto& [v, removed] : r.removed_per_step) steps.push_back(json{{"vertex", v}, {"removed", removed}});
    return json{
        {"fingerprint", vertex_set_to_json(r.fingerprint)},
        {"container", vertex_set_to_json(r.container)},
        {"stop_reason", r.stop_reason == StopReason::early_stop ? "early_stop" : "exhausted"},
        {"threshold_used", to_string(r.threshold_used)},
        {"removed_per_step", steps},
    };
}

}  // namespace ecc
