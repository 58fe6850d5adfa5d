#pragma once

#include <map>
#include <vector>

#include "hilbpieri/checked.hpp"
#include "hilbpieri/partition.hpp"

namespace hilb {

struct DagEdge {
    std::size_t from;
    std::size_t to;
    Coef weight;
};

/// Degeneration graph of Theta^{P,m}_{L,i}. The root is m; its out-edges go
/// to the anchored subtraction sets with first-degeneration multiplicities,
/// every other node lam points to each member of sigma_set(lam, k), k >= 1,
/// weighted by count_assemblies. All nodes keep the length of m.
class WeightedDag {
public:
    const Partition& root() const { return nodes_.front(); }
    std::size_t anchor() const { return anchor_; }

    /// Nodes in a topological order (root first, sums non-increasing).
    const std::vector<Partition>& nodes() const { return nodes_; }
    const std::vector<DagEdge>& edges() const { return edges_; }

    bool contains(const Partition& p) const { return index_.contains(p); }
    std::size_t index_of(const Partition& p) const;
    /// Weight of the edge from -> to, zero if absent.
    Coef weight(const Partition& from, const Partition& to) const;

    std::vector<std::size_t> out_edges(std::size_t node) const;

private:
    friend WeightedDag build_dag(const Partition& m, std::size_t i);

    std::size_t anchor_ = 0;
    std::vector<Partition> nodes_;
    std::vector<DagEdge> edges_;
    std::map<Partition, std::size_t> index_;
};

WeightedDag build_dag(const Partition& m, std::size_t i);

/// Sum over root -> lam paths of (-1)^{n+1} * product of edge weights, n the
/// path length. Memoized dynamic programming in topological order.
Coef path_weight_sum(const WeightedDag& dag, const Partition& lam);

/// path_weight_sum for every non-root node, indexed like dag.nodes() (root entry 0).
std::vector<Coef> path_weight_sums(const WeightedDag& dag);

struct NodeSum {
    Partition lam;
    Coef sum;
    friend bool operator==(const NodeSum&, const NodeSum&) = default;
};

/// Allowed nodes come from m by lowering row i by 0 <= x <= m_i. The check
/// passes when every other node has a zero path sum.
struct ConjectureReport {
    Partition m;
    std::size_t i = 0;
    std::vector<NodeSum> allowed;
    std::vector<NodeSum> excluded;
    bool pass = true;
    friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

ConjectureReport check_conjecture(const Partition& m, std::size_t i);

/// Every (m, i) with sum(m) <= max_weight, length 1 <= r <= max(max_weight, 1)
/// (trailing zeros included) and i an anchor of m.
std::vector<std::pair<Partition, std::size_t>> conjecture_cases(int max_weight);

std::vector<ConjectureReport> conjecture_sweep_serial(int max_weight);
/// OpenMP sweep; output order matches conjecture_cases.
std::vector<ConjectureReport> conjecture_sweep(int max_weight, int threads = 0);

}  // namespace hilb
