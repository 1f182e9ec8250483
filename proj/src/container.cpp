#include "ecc/container.hpp"

#include <map>

namespace ecc {

ContainerRecord run_container_algorithm(const AdjGraph& g, const VertexSet& independent_set,
                                        const StopRule& stop) {
    stop.validate();
    if (independent_set.size() != g.size())
        throw InputError("run_container_algorithm: vertex set size mismatch");
    if (!g.is_independent(independent_set))
        throw InputError("run_container_algorithm: I is not independent");

    ContainerRecord rec;
    rec.threshold_used = stop.threshold;
    rec.fingerprint = VertexSet(g.size());

    VertexSet avail = g.full_set();
    for (;;) {
        Nat residual_count = count_independent_sets(g, avail, stop.count_budget);
        if (residual_count <= stop.threshold) {
            rec.residual = avail;
            rec.stop_reason = avail.any() ? StopReason::early_stop : StopReason::exhausted;
            break;
        }
        std::size_t u = avail.find_first();
        std::size_t best_deg = g.degree_in(u, avail);
        for (std::size_t v = avail.find_next(u); v != VertexSet::npos; v = avail.find_next(v)) {
            std::size_t d = g.degree_in(v, avail);
            if (d > best_deg) {  // ties keep the earliest vertex
                u = v;
                best_deg = d;
            }
        }
        std::size_t removed;
        if (independent_set.test(u)) {
            rec.fingerprint.set(u);
            VertexSet closed = g.neighbors(u);
            closed.set(u);
            removed = (closed & avail).count();
            avail -= closed;
        } else {
            removed = 1;
            avail.reset(u);
        }
        rec.removed_per_step.emplace_back(u, removed);
    }
    rec.container = rec.fingerprint | rec.residual;
    return rec;
}

ContainerFamily build_container_family(const AdjGraph& g, const StopRule& stop,
                                       const std::vector<VertexSet>& independent_sets) {
    std::map<std::vector<VertexSet::block_type>, VertexSet> dedup;
    std::size_t max_fp = 0;
    for (const VertexSet& iset : independent_sets) {
        ContainerRecord rec = run_container_algorithm(g, iset, stop);
        if (!iset.is_subset_of(rec.container))
            throw std::logic_error("build_container_family: I escaped its container");
        max_fp = std::max(max_fp, rec.fingerprint.count());
        std::vector<VertexSet::block_type> key(rec.container.num_blocks());
        boost::to_block_range(rec.container, key.begin());
        dedup.emplace(std::move(key), rec.container);
    }
    ContainerFamily fam;
    fam.max_fingerprint_size = Nat(static_cast<unsigned long>(max_fp));
    for (auto& [key, c] : dedup) fam.containers.push_back(c);
    return fam;
}

ContainerFamily build_container_family(const AdjGraph& g, const StopRule& stop,
                                       std::uint64_t enum_budget) {
    return build_container_family(g, stop, enumerate_independent_sets(g, enum_budget));
}

AuditReport audit_family(const AdjGraph& g, const ContainerFamily& family,
                         const std::vector<VertexSet>& independent_sets, const CountBudget& budget) {
    AuditReport report;
    report.family_size = Nat(static_cast<unsigned long>(family.containers.size()));
    report.max_fingerprint_size = family.max_fingerprint_size;

    report.coverage = true;
    for (const VertexSet& iset : independent_sets) {
        bool covered = false;
        for (const VertexSet& c : family.containers)
            if (iset.is_subset_of(c)) {
                covered = true;
                break;
            }
        if (!covered) {
            report.coverage = false;
            break;
        }
    }

    report.max_container_isets = 0;
    report.total_isets = 0;
    for (const VertexSet& c : family.containers) {
        Nat i_c = count_independent_sets(g, c, budget);
        report.total_isets += i_c;
        if (i_c > report.max_container_isets) report.max_container_isets = i_c;
    }
    return report;
}

}  // namespace ecc
