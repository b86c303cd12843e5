#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <homlab/oracle.hpp>
#include <homlab/vertex.hpp>

namespace homlab {

enum class ExecMode { Serial, Parallel };

struct FindResult {
    std::optional<Vertex> vertex;
    std::uint64_t examined = 0;  // candidates evaluated by the route taken
};

/// Least v < horizon with v not in `avoid` and v adjacent to every target.
/// Dispatches to a structure-aware route when the generator admits one
/// (closed forms for empty/complete/cliques, bit arithmetic for rado,
/// recursion through complement/union) and falls back to a linear scan.
FindResult least_cone(const CountableGraph& g, std::span<const Vertex> targets,
                      std::span<const Vertex> avoid, const Vertex& horizon,
                      ExecMode mode = ExecMode::Parallel);

/// Least v < horizon with v not in `avoid`, v not a target, and v adjacent
/// to no target.
FindResult least_cocone(const CountableGraph& g, std::span<const Vertex> targets,
                        std::span<const Vertex> avoid, const Vertex& horizon,
                        ExecMode mode = ExecMode::Parallel);

/// Reference lanes: plain linear scans with no structural shortcuts, kept
/// for testing the planner against. Serial mode is a single loop; parallel
/// mode scans block-synchronously with OpenMP and returns the identical
/// least witness.
FindResult least_cone_scan(const CountableGraph& g, std::span<const Vertex> targets,
                           std::span<const Vertex> avoid, const Vertex& horizon,
                           ExecMode mode = ExecMode::Serial);
FindResult least_cocone_scan(const CountableGraph& g, std::span<const Vertex> targets,
                             std::span<const Vertex> avoid, const Vertex& horizon,
                             ExecMode mode = ExecMode::Serial);

}  // namespace homlab
