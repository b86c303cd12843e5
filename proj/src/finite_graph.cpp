#include <homlab/finite_graph.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homlab {

FiniteGraph::FiniteGraph(int order, const std::vector<std::pair<int, int>>& edges)
    : FiniteGraph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void FiniteGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                std::to_string(order_));
}

void FiniteGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u) * order_ + v] = true;
    adj_[static_cast<std::size_t>(v) * order_ + u] = true;
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t FiniteGraph::edge_count() const {
    std::size_t n = 0;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adjacent(u, v)) ++n;
    return n;
}

std::vector<int> FiniteGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < order_; ++u)
        if (u != v && adjacent(u, v)) out.push_back(u);
    return out;
}

int FiniteGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::uint64_t FiniteGraph::triangle_mask() const {
    if (order_ > 11) throw std::invalid_argument("triangle_mask: order capped at 11");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j, ++bit)
            if (adjacent(i, j)) mask |= std::uint64_t(1) << bit;
    return mask;
}

FiniteGraph FiniteGraph::from_triangle_mask(int order, std::uint64_t mask) {
    FiniteGraph g(order);
    int bit = 0;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j, ++bit)
            if (mask >> bit & 1) g.add_edge(i, j);
    return g;
}

FiniteGraph FiniteGraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != order_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    FiniteGraph g(order_);
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adjacent(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

FiniteGraph FiniteGraph::canonical_form() const {
    if (order_ > 10)
        throw std::invalid_argument("canonical_form: exhaustive relabeling capped at order 10");
    if (order_ <= 1) return *this;
    std::vector<int> perm(order_);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = triangle_mask();
    FiniteGraph best_graph = *this;
    while (std::next_permutation(perm.begin(), perm.end())) {
        FiniteGraph candidate = relabeled(perm);
        std::uint64_t mask = candidate.triangle_mask();
        if (mask < best) {
            best = mask;
            best_graph = candidate;
        }
    }
    return best_graph;
}

FiniteGraph FiniteGraph::complemented() const {
    FiniteGraph g(order_);
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

std::string FiniteGraph::to_dot(const std::string& name) const {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < order_; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

FiniteGraph FiniteGraph::complete(int order) {
    FiniteGraph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
    return g;
}

FiniteGraph FiniteGraph::edgeless(int order) { return FiniteGraph(order); }

FiniteGraph FiniteGraph::path(int order) {
    FiniteGraph g(order);
    for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
    return g;
}

FiniteGraph FiniteGraph::cycle(int order) {
    if (order < 3) throw std::invalid_argument("cycle needs order >= 3");
    FiniteGraph g = path(order);
    g.add_edge(order - 1, 0);
    return g;
}

std::vector<FiniteGraph> canonical_graphs_of_order(int order) {
    if (order < 1 || order > 6)
        throw std::invalid_argument("canonical_graphs_of_order: order must be in [1,6]");
    int pairs = order * (order - 1) / 2;

    // Pair-index remap table per permutation, so canonicalization is a pure
    // bit shuffle on the triangle mask.
    auto pair_index = [order](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * order - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<std::vector<int>> remaps;
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> remap(pairs);
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j)
                remap[pair_index(i, j)] = pair_index(perm[i], perm[j]);
        remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::uint64_t total = std::uint64_t(1) << pairs;
    std::vector<std::uint64_t> canon(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
        std::uint64_t best = ~std::uint64_t(0);
        for (const auto& remap : remaps) {
            std::uint64_t permuted = 0;
            for (int b = 0; b < pairs; ++b)
                if (mask >> b & 1) permuted |= std::uint64_t(1) << remap[b];
            best = std::min(best, permuted);
        }
        canon[mask] = best;
    }

    std::map<std::uint64_t, FiniteGraph> seen;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (canon[mask] == mask) seen.emplace(mask, FiniteGraph::from_triangle_mask(order, mask));

    std::vector<FiniteGraph> out;
    out.reserve(seen.size());
    for (auto& [mask, g] : seen) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const FiniteGraph& a, const FiniteGraph& b) {
        auto ka = std::make_pair(a.edge_count(), a.triangle_mask());
        auto kb = std::make_pair(b.edge_count(), b.triangle_mask());
        return ka < kb;
    });
    return out;
}

}  // namespace homlab
