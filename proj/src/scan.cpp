#include <homlab/scan.hpp>

#include <omp.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homlab {

namespace {

// Positions above this would make single witnesses larger than ~2 MB.
constexpr std::uint64_t kMaxBitPosition = std::uint64_t(1) << 24;

struct SortedSet {
    std::vector<Vertex> values;
    explicit SortedSet(std::span<const Vertex> in) : values(in.begin(), in.end()) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    }
    bool contains(const Vertex& v) const {
        return std::binary_search(values.begin(), values.end(), v);
    }
    std::size_t size() const { return values.size(); }
};

bool cone_pred(const CountableGraph& g, const Vertex& v, std::span<const Vertex> targets) {
    for (const Vertex& t : targets)
        if (!g.adjacent(v, t)) return false;
    return true;
}

bool cocone_pred(const CountableGraph& g, const Vertex& v, std::span<const Vertex> targets) {
    for (const Vertex& t : targets) {
        if (v == t) return false;
        if (g.adjacent(v, t)) return false;
    }
    return true;
}

template <typename Pred>
FindResult scan_loop(const Vertex& horizon, const SortedSet& avoid, Pred&& pred, ExecMode mode) {
    // Parallel lane handles u64-range horizons; anything bigger falls back
    // to the serial big-integer loop.
    if (mode == ExecMode::Parallel && fits_u64(horizon) && omp_get_max_threads() > 1) {
        std::uint64_t h = to_u64(horizon);
        constexpr std::uint64_t kBlock = 1 << 14;
        for (std::uint64_t lo = 0; lo < h; lo += kBlock) {
            std::uint64_t hi = std::min(h, lo + kBlock);
            std::uint64_t best = ~std::uint64_t(0);
#pragma omp parallel for schedule(static) reduction(min : best)
            for (std::int64_t i = static_cast<std::int64_t>(lo); i < static_cast<std::int64_t>(hi); ++i) {
                Vertex v = vtx(static_cast<std::uint64_t>(i));
                if (!avoid.contains(v) && pred(v))
                    best = std::min(best, static_cast<std::uint64_t>(i));
            }
            if (best != ~std::uint64_t(0)) return {vtx(best), best + 1};
        }
        return {std::nullopt, h};
    }
    Vertex v = 0;
    std::uint64_t examined = 0;
    while (v < horizon) {
        if (!avoid.contains(v) && pred(v)) {
            if (fits_u64(v)) examined = to_u64(v) + 1;
            return {v, examined};
        }
        ++v;
        if (examined != ~std::uint64_t(0)) ++examined;
    }
    return {std::nullopt, examined};
}

// ---------------------------------------------------------------------------
// Structure-aware routes. Each returns nullopt when the generator admits no
// closed form (gnp anywhere on the relevant path), in which case the caller
// falls back to the linear scan.

struct Query {
    bool cone;  // false: cocone
    std::span<const Vertex> targets;
    const SortedSet& avoid;
    const Vertex& horizon;
    const CountableGraph& oracle;  // full oracle, used for final validation
};

std::optional<FindResult> route(const GraphSpec& spec, bool cone,
                                const std::vector<Vertex>& targets, const SortedSet& avoid,
                                const Vertex& horizon, const CountableGraph& oracle);

/// Least v < horizon outside `skip` and `avoid`, counting from 0.
FindResult least_free(const SortedSet& avoid, const std::vector<Vertex>& skip,
                      const Vertex& horizon) {
    Vertex v = 0;
    std::uint64_t examined = 0;
    while (v < horizon) {
        ++examined;
        if (!avoid.contains(v) && std::find(skip.begin(), skip.end(), v) == skip.end())
            return {v, examined};
        ++v;
    }
    return {std::nullopt, examined};
}

std::optional<FindResult> route_rado_cone(const std::vector<Vertex>& targets,
                                          const SortedSet& avoid, const Vertex& horizon,
                                          const CountableGraph& oracle) {
    std::uint64_t examined = 0;
    // Candidates below max(targets): v must be a bit position of every larger
    // target, so the union of bit positions is a complete candidate set.
    std::set<std::uint64_t> positions;
    for (const Vertex& t : targets)
        for (std::uint64_t p : bit_positions(t)) positions.insert(p);
    for (std::uint64_t p : positions) {
        Vertex v = vtx(p);
        if (v >= horizon) break;
        ++examined;
        if (avoid.contains(v)) continue;
        if (std::find(targets.begin(), targets.end(), v) != targets.end()) continue;
        if (cone_pred(oracle, v, targets)) return FindResult{v, examined};
    }
    // Candidates above max(targets): bits must cover every target value.
    for (const Vertex& t : targets) {
        if (!fits_u64(t) || to_u64(t) > kMaxBitPosition)
            return FindResult{std::nullopt, examined};  // witness would not be representable
    }
    Vertex base = 0;
    std::set<std::uint64_t> tpos;
    for (const Vertex& t : targets) {
        mpz_setbit(base.get_mpz_t(), to_u64(t));
        tpos.insert(to_u64(t));
    }
    std::vector<std::uint64_t> free_pos;
    for (std::uint64_t q = 0; free_pos.size() < 64; ++q)
        if (!tpos.count(q)) free_pos.push_back(q);
    for (std::uint64_t m = 0;; ++m) {
        Vertex v = base;
        for (int b = 0; b < 64; ++b)
            if (m >> b & 1) mpz_setbit(v.get_mpz_t(), free_pos[b]);
        if (v >= horizon) return FindResult{std::nullopt, examined};
        ++examined;
        if (!avoid.contains(v)) return FindResult{v, examined};
        if (m > avoid.size() + 2)
            throw std::logic_error("rado cone enumeration failed to clear the avoid set");
    }
}

std::optional<FindResult> route_rado_cocone(const std::vector<Vertex>& targets,
                                            const SortedSet& avoid, const Vertex& horizon,
                                            const CountableGraph& oracle) {
    // v may use no bit position equal to a target value; enumerate such
    // numbers in increasing order and validate the rest against the oracle.
    std::set<std::uint64_t> banned;
    for (const Vertex& t : targets)
        if (fits_u64(t)) banned.insert(to_u64(t));
    std::vector<std::uint64_t> free_pos;
    {
        std::uint64_t q = 0;
        while (free_pos.size() < 64) {
            if (!banned.count(q)) free_pos.push_back(q);
            ++q;
        }
    }
    std::uint64_t rejections_allowed = avoid.size() + targets.size() + 2;
    for (const Vertex& t : targets) rejections_allowed += mpz_popcount(t.get_mpz_t());
    std::uint64_t examined = 0;
    for (std::uint64_t m = 0; m <= rejections_allowed + 1; ++m) {
        Vertex v = 0;
        for (int b = 0; b < 64; ++b)
            if (m >> b & 1) mpz_setbit(v.get_mpz_t(), free_pos[b]);
        if (v >= horizon) return FindResult{std::nullopt, examined};
        ++examined;
        if (avoid.contains(v)) continue;
        if (cocone_pred(oracle, v, targets)) return FindResult{v, examined};
    }
    throw std::logic_error("rado cocone enumeration exceeded its rejection bound");
}

std::optional<FindResult> route_cliques(std::uint64_t k, bool cone,
                                        const std::vector<Vertex>& targets, const SortedSet& avoid,
                                        const Vertex& horizon) {
    if (cone) {
        Vertex block = targets.front() / k;
        for (const Vertex& t : targets)
            if (t / k != block) return FindResult{std::nullopt, 0};
        std::uint64_t examined = 0;
        for (std::uint64_t i = 0; i < k; ++i) {
            Vertex v = block * k + i;
            if (v >= horizon) break;
            ++examined;
            if (avoid.contains(v)) continue;
            if (std::find(targets.begin(), targets.end(), v) != targets.end()) continue;
            return FindResult{v, examined};
        }
        return FindResult{std::nullopt, examined};
    }
    std::set<Vertex> blocked;
    for (const Vertex& t : targets) blocked.insert(t / k);
    std::uint64_t examined = 0;
    Vertex block = 0;
    while (true) {
        if (block * k >= horizon) return FindResult{std::nullopt, examined};
        if (!blocked.count(block)) {
            for (std::uint64_t i = 0; i < k; ++i) {
                Vertex v = block * k + i;
                if (v >= horizon) return FindResult{std::nullopt, examined};
                ++examined;
                if (!avoid.contains(v)) return FindResult{v, examined};
            }
        }
        ++block;
    }
}

std::optional<FindResult> route_union(const GraphSpec& spec, bool cone,
                                      const std::vector<Vertex>& targets, const SortedSet& avoid,
                                      const Vertex& horizon, const CountableGraph& oracle) {
    std::vector<Vertex> even_targets, odd_targets;
    for (const Vertex& t : targets)
        (mpz_even_p(t.get_mpz_t()) ? even_targets : odd_targets).push_back(t / 2);
    std::vector<Vertex> even_avoid, odd_avoid;
    for (const Vertex& a : avoid.values)
        (mpz_even_p(a.get_mpz_t()) ? even_avoid : odd_avoid).push_back(a / 2);
    Vertex even_horizon = (horizon + 1) / 2;
    Vertex odd_horizon = horizon / 2;

    auto side = [&](int which, const std::vector<Vertex>& t,
                    const std::vector<Vertex>& a, const Vertex& h) -> std::optional<FindResult> {
        SortedSet avoid_half(a);
        return route(spec.child(which), cone, t, avoid_half, h, oracle);
    };

    if (cone && !targets.empty()) {
        if (!even_targets.empty() && !odd_targets.empty())
            return FindResult{std::nullopt, 0};  // no vertex sees both parities
        if (!even_targets.empty()) {
            auto r = side(0, even_targets, even_avoid, even_horizon);
            if (!r) return std::nullopt;
            if (r->vertex) r->vertex = *r->vertex * 2;
            return r;
        }
        auto r = side(1, odd_targets, odd_avoid, odd_horizon);
        if (!r) return std::nullopt;
        if (r->vertex) r->vertex = *r->vertex * 2 + 1;
        return r;
    }

    // Either a cocone, or a cone over the empty set: both sides contribute.
    auto left = side(0, cone ? std::vector<Vertex>{} : even_targets, even_avoid, even_horizon);
    if (!left) return std::nullopt;
    auto right = side(1, cone ? std::vector<Vertex>{} : odd_targets, odd_avoid, odd_horizon);
    if (!right) return std::nullopt;
    FindResult out{std::nullopt, left->examined + right->examined};
    if (left->vertex) out.vertex = *left->vertex * 2;
    if (right->vertex) {
        Vertex v = *right->vertex * 2 + 1;
        if (!out.vertex || v < *out.vertex) out.vertex = v;
    }
    return out;
}

std::optional<FindResult> route(const GraphSpec& spec, bool cone,
                                const std::vector<Vertex>& targets, const SortedSet& avoid,
                                const Vertex& horizon, const CountableGraph& oracle) {
    if (targets.empty() && spec.kind() != GraphSpec::Kind::Union &&
        spec.kind() != GraphSpec::Kind::Complement)
        return least_free(avoid, {}, horizon);
    switch (spec.kind()) {
        case GraphSpec::Kind::Empty:
            if (cone) return FindResult{std::nullopt, 0};
            return least_free(avoid, targets, horizon);
        case GraphSpec::Kind::Complete:
            if (cone) return least_free(avoid, targets, horizon);
            return FindResult{std::nullopt, 0};
        case GraphSpec::Kind::Cliques:
            return route_cliques(spec.block_size(), cone, targets, avoid, horizon);
        case GraphSpec::Kind::Rado:
            return cone ? route_rado_cone(targets, avoid, horizon, oracle)
                        : route_rado_cocone(targets, avoid, horizon, oracle);
        case GraphSpec::Kind::Complement: {
            CountableGraph inner(spec.child(0));
            return route(spec.child(0), !cone, targets, avoid, horizon, inner);
        }
        case GraphSpec::Kind::Union:
            return route_union(spec, cone, targets, avoid, horizon, oracle);
        case GraphSpec::Kind::Gnp:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

FindResult least_cone_scan(const CountableGraph& g, std::span<const Vertex> targets,
                           std::span<const Vertex> avoid, const Vertex& horizon, ExecMode mode) {
    SortedSet avoid_set(avoid);
    std::vector<Vertex> tset(targets.begin(), targets.end());
    return scan_loop(horizon, avoid_set,
                     [&](const Vertex& v) { return cone_pred(g, v, tset); }, mode);
}

FindResult least_cocone_scan(const CountableGraph& g, std::span<const Vertex> targets,
                             std::span<const Vertex> avoid, const Vertex& horizon, ExecMode mode) {
    SortedSet avoid_set(avoid);
    std::vector<Vertex> tset(targets.begin(), targets.end());
    return scan_loop(horizon, avoid_set,
                     [&](const Vertex& v) { return cocone_pred(g, v, tset); }, mode);
}

FindResult least_cone(const CountableGraph& g, std::span<const Vertex> targets,
                      std::span<const Vertex> avoid, const Vertex& horizon, ExecMode mode) {
    SortedSet avoid_set(avoid);
    std::vector<Vertex> tset(targets.begin(), targets.end());
    if (auto structured = route(g.spec(), true, tset, avoid_set, horizon, g)) return *structured;
    return least_cone_scan(g, targets, avoid, horizon, mode);
}

FindResult least_cocone(const CountableGraph& g, std::span<const Vertex> targets,
                        std::span<const Vertex> avoid, const Vertex& horizon, ExecMode mode) {
    SortedSet avoid_set(avoid);
    std::vector<Vertex> tset(targets.begin(), targets.end());
    if (auto structured = route(g.spec(), false, tset, avoid_set, horizon, g)) return *structured;
    return least_cocone_scan(g, targets, avoid, horizon, mode);
}

}  // namespace homlab
