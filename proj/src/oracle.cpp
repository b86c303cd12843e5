#include <homlab/oracle.hpp>

#include <set>
#include <stdexcept>

namespace homlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Platform-independent digest of a vertex value.
std::uint64_t vertex_digest(const Vertex& v) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    if (v == 0) return splitmix64(h);
    std::size_t words = 0;
    std::vector<std::uint64_t> buf((mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64);
    mpz_export(buf.data(), &words, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
    for (std::size_t i = 0; i < words; ++i) h = splitmix64(h ^ buf[i]);
    return h;
}

bool gnp_adjacent(double p, std::uint64_t seed, const Vertex& lo, const Vertex& hi) {
    std::uint64_t h = splitmix64(seed ^ 0x8f1bbcdcbfa53e0bULL);
    h = splitmix64(h ^ vertex_digest(lo));
    h = splitmix64(h ^ vertex_digest(hi));
    // Top 53 bits as a uniform draw in [0,1).
    double draw = static_cast<double>(h >> 11) * 0x1.0p-53;
    return draw < p;
}

bool spec_adjacent(const GraphSpec& spec, const Vertex& u, const Vertex& v) {
    // Callers guarantee u != v.
    switch (spec.kind()) {
        case GraphSpec::Kind::Empty:
            return false;
        case GraphSpec::Kind::Complete:
            return true;
        case GraphSpec::Kind::Rado: {
            // BIT predicate: for u < v, u ~ v iff bit u of v is 1.
            const Vertex& lo = (u < v) ? u : v;
            const Vertex& hi = (u < v) ? v : u;
            if (!fits_u64(lo)) return false;  // hi would need >= 2^64 bits to reach that position
            std::uint64_t pos = to_u64(lo);
            if (mpz_sizeinbase(hi.get_mpz_t(), 2) <= pos) return false;
            return mpz_tstbit(hi.get_mpz_t(), pos) != 0;
        }
        case GraphSpec::Kind::Gnp: {
            const Vertex& lo = (u < v) ? u : v;
            const Vertex& hi = (u < v) ? v : u;
            return gnp_adjacent(spec.p(), spec.seed(), lo, hi);
        }
        case GraphSpec::Kind::Cliques: {
            Vertex bu = u / spec.block_size();
            Vertex bv = v / spec.block_size();
            return bu == bv;
        }
        case GraphSpec::Kind::Complement:
            return !spec_adjacent(spec.child(0), u, v);
        case GraphSpec::Kind::Union: {
            bool ueven = mpz_even_p(u.get_mpz_t()) != 0;
            bool veven = mpz_even_p(v.get_mpz_t()) != 0;
            if (ueven != veven) return false;
            return spec_adjacent(spec.child(ueven ? 0 : 1), u / 2, v / 2);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

bool CountableGraph::adjacent(const Vertex& u, const Vertex& v) const {
    if (u < 0 || v < 0) throw std::invalid_argument("vertices are naturals");
    if (u == v) return false;
    return spec_adjacent(spec_, u, v);
}

InducedSubgraph induced_subgraph(const CountableGraph& g, std::span<const Vertex> vertices) {
    std::set<Vertex> seen;
    for (const Vertex& v : vertices)
        if (!seen.insert(v).second)
            throw std::invalid_argument("induced_subgraph: duplicate vertex " + v.get_str());
    int n = static_cast<int>(vertices.size());
    FiniteGraph graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(vertices[i], vertices[j])) graph.add_edge(i, j);
    return InducedSubgraph{std::move(graph), {vertices.begin(), vertices.end()}};
}

InducedSubgraph induced_prefix(const CountableGraph& g, std::uint64_t n) {
    std::vector<Vertex> vertices;
    vertices.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) vertices.push_back(vtx(i));
    return induced_subgraph(g, vertices);
}

std::string dot_prefix(const CountableGraph& g, std::uint64_t n) {
    return induced_prefix(g, n).graph.to_dot("prefix");
}

}  // namespace homlab
