#include "hilbpieri/dag.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

#include <omp.h>

namespace hilb {

std::size_t WeightedDag::index_of(const Partition& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument(p.to_string() + " is not a node of the DAG rooted at " + root().to_string());
    return it->second;
}

Coef WeightedDag::weight(const Partition& from, const Partition& to) const
{
    if (!contains(from) || !contains(to))
        return 0;
    const auto f = index_of(from), t = index_of(to);
    for (const auto& e : edges_)
        if (e.from == f && e.to == t)
            return e.weight;
    return 0;
}

std::vector<std::size_t> WeightedDag::out_edges(std::size_t node) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < edges_.size(); ++k)
        if (edges_[k].from == node)
            out.push_back(k);
    return out;
}

WeightedDag build_dag(const Partition& m, std::size_t i)
{
    if (!is_anchor(m, i))
        throw std::invalid_argument("build_dag: row " + std::to_string(i) + " is not an anchor of " + m.to_string());

    // Collect the reachable node set with its edges first; order afterwards.
    std::map<Partition, std::vector<std::pair<Partition, Coef>>> adjacency;
    std::vector<std::pair<Partition, Coef>> root_out;
    for (std::size_t j = 1; j <= m.size(); ++j)
        for (const auto& lam : sigma_set_anchored(m, j, i))
            root_out.emplace_back(lam, first_deg_coefficient(m, i, lam));

    std::vector<Partition> frontier;
    for (const auto& [lam, w] : root_out)
        frontier.push_back(lam);
    while (!frontier.empty()) {
        Partition lam = std::move(frontier.back());
        frontier.pop_back();
        if (adjacency.contains(lam))
            continue;
        auto& out = adjacency[lam];
        for (std::size_t k = 1; k <= lam.size(); ++k) {
            for (const auto& smaller : sigma_set(lam, k)) {
                out.emplace_back(smaller, count_assemblies(lam, smaller));
                if (!adjacency.contains(smaller))
                    frontier.push_back(smaller);
            }
        }
    }

    WeightedDag dag;
    dag.anchor_ = i;
    dag.nodes_.push_back(m);
    std::vector<Partition> rest;
    for (const auto& [lam, out] : adjacency)
        rest.push_back(lam);
    // Edges strictly lower the sum, so decreasing sum is a topological order.
    std::sort(rest.begin(), rest.end(), [](const Partition& x, const Partition& y) {
        return x.sum() != y.sum() ? x.sum() > y.sum() : y < x;
    });
    dag.nodes_.insert(dag.nodes_.end(), rest.begin(), rest.end());
    for (std::size_t k = 0; k < dag.nodes_.size(); ++k)
        dag.index_.emplace(dag.nodes_[k], k);

    for (const auto& [lam, w] : root_out)
        dag.edges_.push_back({0, dag.index_.at(lam), w});
    for (std::size_t k = 1; k < dag.nodes_.size(); ++k)
        for (const auto& [smaller, w] : adjacency.at(dag.nodes_[k]))
            dag.edges_.push_back({k, dag.index_.at(smaller), w});
    return dag;
}

std::vector<Coef> path_weight_sums(const WeightedDag& dag)
{
    const auto& nodes = dag.nodes();
    std::vector<std::vector<const DagEdge*>> incoming(nodes.size());
    for (const auto& e : dag.edges())
        incoming[e.to].push_back(&e);

    std::vector<Coef> sums(nodes.size(), 0);
    for (std::size_t v = 1; v < nodes.size(); ++v) {
        Coef total = 0;
        for (const DagEdge* e : incoming[v]) {
            // Extending a path by one edge flips its sign.
            const Coef via = e->from == 0 ? e->weight : checked_mul(checked_neg(sums[e->from]), e->weight);
            total = checked_add(total, via);
        }
        sums[v] = total;
    }
    return sums;
}

Coef path_weight_sum(const WeightedDag& dag, const Partition& lam)
{
    const auto idx = dag.index_of(lam);
    return path_weight_sums(dag)[idx];
}

ConjectureReport check_conjecture(const Partition& m, std::size_t i)
{
    const WeightedDag dag = build_dag(m, i);
    std::set<Partition> allowed;
    for (int x = 0; x <= m.row(i); ++x) {
        auto parts = m.vec();
        parts[i - 1] -= x;
        allowed.insert(Partition::sort_desc(std::move(parts)));
    }

    const auto sums = path_weight_sums(dag);
    ConjectureReport report;
    report.m = m;
    report.i = i;
    for (std::size_t v = 1; v < dag.nodes().size(); ++v) {
        const auto& lam = dag.nodes()[v];
        if (allowed.contains(lam)) {
            report.allowed.push_back({lam, sums[v]});
        } else {
            report.excluded.push_back({lam, sums[v]});
            if (sums[v] != 0)
                report.pass = false;
        }
    }
    return report;
}

std::vector<std::pair<Partition, std::size_t>> conjecture_cases(int max_weight)
{
    if (max_weight < 0)
        throw std::invalid_argument("conjecture_cases: negative weight");
    const auto max_len = static_cast<std::size_t>(std::max(max_weight, 1));
    std::vector<std::pair<Partition, std::size_t>> out;
    for (int w = 0; w <= max_weight; ++w) {
        for (const auto& p : partitions_of(w)) {
            for (std::size_t r = std::max<std::size_t>(p.size(), 1); r <= max_len; ++r) {
                auto parts = p.vec();
                parts.resize(r, 0);
                const Partition m(std::move(parts));
                for (std::size_t i = 1; i <= r; ++i)
                    if (is_anchor(m, i))
                        out.emplace_back(m, i);
            }
        }
    }
    return out;
}

std::vector<ConjectureReport> conjecture_sweep_serial(int max_weight)
{
    std::vector<ConjectureReport> out;
    for (const auto& [m, i] : conjecture_cases(max_weight))
        out.push_back(check_conjecture(m, i));
    return out;
}

std::vector<ConjectureReport> conjecture_sweep(int max_weight, int threads)
{
    const auto cases = conjecture_cases(max_weight);
    std::vector<ConjectureReport> out(cases.size());
    const auto count = static_cast<std::ptrdiff_t>(cases.size());
    const int workers = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            const auto& [m, i] = cases[static_cast<std::size_t>(k)];
            out[static_cast<std::size_t>(k)] = check_conjecture(m, i);
        } catch (...) {
#pragma omp critical(hilb_dag_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

}  // namespace hilb
