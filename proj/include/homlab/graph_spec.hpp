#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homlab {

/// Error thrown by GraphSpec::parse, carrying the byte offset of the
/// offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// Textual generator expression:
///   rado | empty | complete | gnp(p=<float>,seed=<u64>) | cliques(<uint>)
///   | complement(<spec>) | union(<spec>,<spec>)
class GraphSpec {
public:
    enum class Kind { Rado, Empty, Complete, Gnp, Cliques, Complement, Union };

    static GraphSpec rado() { return GraphSpec(Kind::Rado); }
    static GraphSpec empty() { return GraphSpec(Kind::Empty); }
    static GraphSpec complete() { return GraphSpec(Kind::Complete); }
    static GraphSpec gnp(double p, std::uint64_t seed);
    static GraphSpec cliques(std::uint64_t k);
    static GraphSpec complement_of(GraphSpec inner);
    static GraphSpec union_of(GraphSpec left, GraphSpec right);

    /// Parses the grammar above; throws ParseError with position on bad input.
    static GraphSpec parse(std::string_view text);

    /// Canonical rendering; parse(print(s)) == s.
    std::string print() const;

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t block_size() const { return k_; }
    const GraphSpec& child(std::size_t i) const { return children_.at(i); }

    bool operator==(const GraphSpec& other) const;

private:
    explicit GraphSpec(Kind k) : kind_(k) {}

    Kind kind_;
    double p_ = 0.0;
    std::uint64_t seed_ = 0;
    std::uint64_t k_ = 0;
    std::vector<GraphSpec> children_;
};

}  // namespace homlab
