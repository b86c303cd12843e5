#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <homlab/finite_graph.hpp>
#include <homlab/graph_spec.hpp>
#include <homlab/vertex.hpp>

namespace homlab {

/// Lazy adjacency oracle on natural-number vertices. Adjacency is a pure
/// deterministic function of (spec, u, v): symmetric, irreflexive, and
/// identical across re-constructions from the same spec. Immutable after
/// construction; safe to query from many threads.
class CountableGraph {
public:
    explicit CountableGraph(GraphSpec spec) : spec_(std::move(spec)) {}

    static std::shared_ptr<const CountableGraph> make(const GraphSpec& spec) {
        return std::make_shared<const CountableGraph>(spec);
    }
    static std::shared_ptr<const CountableGraph> make(std::string_view text) {
        return make(GraphSpec::parse(text));
    }

    bool adjacent(const Vertex& u, const Vertex& v) const;

    const GraphSpec& spec() const { return spec_; }

    std::shared_ptr<const CountableGraph> complement() const {
        return make(GraphSpec::complement_of(spec_));
    }

private:
    GraphSpec spec_;
};

using OracleRef = std::shared_ptr<const CountableGraph>;

/// make_oracle(spec): the public constructor named by the artifact's surface.
inline OracleRef make_oracle(const GraphSpec& spec) { return CountableGraph::make(spec); }
inline OracleRef make_oracle(std::string_view text) { return CountableGraph::make(text); }

inline OracleRef complement_oracle(const OracleRef& g) { return g->complement(); }

struct InducedSubgraph {
    FiniteGraph graph;
    std::vector<Vertex> labels;  // labels[i] = ambient vertex of local index i
};

/// Induced substructure on an ordered list of distinct vertices.
InducedSubgraph induced_subgraph(const CountableGraph& g, std::span<const Vertex> vertices);
InducedSubgraph induced_prefix(const CountableGraph& g, std::uint64_t n);

/// DOT rendering of the induced prefix {0..n-1}.
std::string dot_prefix(const CountableGraph& g, std::uint64_t n);

}  // namespace homlab
