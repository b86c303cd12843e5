#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include <homlab/oracle.hpp>
#include <homlab/vertex.hpp>

namespace homlab {

/// Either flavor of graph a local morphism can point at. Detached handles
/// (parsed from JSON without context) answer no adjacency queries.
class GraphRef {
public:
    GraphRef() = default;
    GraphRef(std::shared_ptr<const CountableGraph> oracle) : oracle_(std::move(oracle)) {}
    GraphRef(std::shared_ptr<const FiniteGraph> finite) : finite_(std::move(finite)) {}
    static GraphRef of(const FiniteGraph& g) {
        return GraphRef(std::make_shared<const FiniteGraph>(g));
    }

    bool attached() const { return oracle_ != nullptr || finite_ != nullptr; }
    bool is_finite() const { return finite_ != nullptr; }
    const FiniteGraph* finite() const { return finite_.get(); }
    const CountableGraph* oracle() const { return oracle_.get(); }

    /// Throws std::out_of_range for vertices outside a finite graph.
    bool adjacent(const Vertex& u, const Vertex& v) const;
    bool contains(const Vertex& v) const;

    nlohmann::ordered_json to_json() const;

private:
    std::shared_ptr<const CountableGraph> oracle_;
    std::shared_ptr<const FiniteGraph> finite_;
};

enum class MorphismKind { NotHomomorphism = 0, Homomorphism = 1, Monomorphism = 2, Embedding = 3 };

const char* to_string(MorphismKind k);

/// Finite partial map between graphs: ordered distinct domain, image of the
/// same length (repeats allowed; monomorphisms are the injective case).
struct LocalMorphism {
    GraphRef source;
    GraphRef target;
    std::vector<Vertex> domain;
    std::vector<Vertex> image;

    LocalMorphism() = default;
    LocalMorphism(GraphRef src, GraphRef tgt, std::vector<Vertex> dom, std::vector<Vertex> img);

    std::size_t size() const { return domain.size(); }
    bool defined_at(const Vertex& v) const;
    const Vertex& operator()(const Vertex& v) const;  // throws if undefined

    bool injective() const;
    bool same_mapping(const LocalMorphism& other) const;

    static LocalMorphism identity_on(GraphRef g, std::vector<Vertex> dom);

    nlohmann::ordered_json to_json() const;
    /// Graphs come back detached unless the src/tgt field carries a spec.
    static LocalMorphism from_json(const nlohmann::json& j);
};

/// Edge preservation, injectivity, and edge reflection, in the ladder
/// not-homomorphism < homomorphism < monomorphism < embedding.
MorphismKind classify_map(const LocalMorphism& f);

/// Commuting-square test: f composed with eA equals eB composed with af,
/// pointwise on dom(eA). eA and eB must classify as embeddings.
bool is_manifestation(const LocalMorphism& f, const LocalMorphism& af, const LocalMorphism& eA,
                      const LocalMorphism& eB);

LocalMorphism compose(const LocalMorphism& g, const LocalMorphism& f);
LocalMorphism restrict(const LocalMorphism& f, std::span<const Vertex> sub_domain);
LocalMorphism inverse_of(const LocalMorphism& f);  // requires injectivity

/// The canonical monomorphism m: least nonedge onto the least edge, both in
/// lexicographic pair order among vertices below the horizon. Absent when
/// either side is missing below the horizon.
std::optional<LocalMorphism> canonical_m(const OracleRef& g, std::uint64_t horizon);

}  // namespace homlab
