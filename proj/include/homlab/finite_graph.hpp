#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace homlab {

/// Explicit finite graph on vertices {0..order-1}: symmetric, irreflexive.
class FiniteGraph {
public:
    FiniteGraph() = default;
    explicit FiniteGraph(int order) : order_(order), adj_(static_cast<std::size_t>(order) * order, false) {}
    FiniteGraph(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return order_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u) * order_ + v];
    }

    void add_edge(int u, int v);

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    /// Upper-triangle bitmask, pair (i,j), i<j, in lexicographic order.
    /// Requires order <= 11 (55 bits).
    std::uint64_t triangle_mask() const;
    static FiniteGraph from_triangle_mask(int order, std::uint64_t mask);

    /// Relabels by the permutation; perm[i] = new index of old vertex i.
    FiniteGraph relabeled(const std::vector<int>& perm) const;

    /// Minimal adjacency-matrix relabeling over all permutations.
    /// Exhaustive; order capped at 10.
    FiniteGraph canonical_form() const;

    /// Graph on the same vertices with edges complemented.
    FiniteGraph complemented() const;

    std::string to_dot(const std::string& name = "g") const;

    bool operator==(const FiniteGraph& other) const {
        return order_ == other.order_ && adj_ == other.adj_;
    }

    static FiniteGraph complete(int order);
    static FiniteGraph edgeless(int order);
    static FiniteGraph path(int order);
    static FiniteGraph cycle(int order);

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::vector<bool> adj_;
};

/// All graphs of the given order up to isomorphism, each in canonical form,
/// sorted by (edge count, triangle mask). Order capped at 6.
std::vector<FiniteGraph> canonical_graphs_of_order(int order);

}  // namespace homlab
