#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperchess/search.hpp"

namespace hyperchess {

// One concrete axiom violation found by verify_metric. `c` is only used by
// triangle witnesses (the midpoint); it is empty for the other kinds.
struct MetricWitness {
    std::string kind; // "identity" | "symmetry" | "triangle" | "infinite"
    Vertex a;
    Vertex b;
    Vertex c;
};

struct MetricCheckReport {
    std::string metric;
    int n = 0;
    int k = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t identity_violations = 0;
    std::uint64_t symmetry_violations = 0;
    std::uint64_t triangle_violations = 0;
    std::uint64_t infinite_pairs = 0;
    std::vector<MetricWitness> witnesses; // capped per kind, deterministic order
    bool verdict = false;                 // true iff a finite metric
};

struct VerifyOptions {
    std::uint64_t max_vertices = 1296; // refuse larger boards
    std::size_t witness_cap = 8;       // per violation kind
};

namespace metrics {

// Additive constant of the composite pawn distance; defined for n >= 2.
int pawn_metric_constant(int n);

// Composite bishop distance: 0 on the diagonal, the diagonal-graph distance
// inside a color class, and 2^k across color classes. `literal` selects the
// variant of the underlying diagonal rule. Requires n >= 2, k >= 2.
Dist bishop_metric_distance(const Board& board, const Vertex& a, const Vertex& b,
                            bool literal = false, const SearchOptions& opts = SearchOptions{});

// Composite pawn distance: 0 on the diagonal, otherwise the additive
// constant plus the smaller of the free-queen and knight distances.
// Requires k >= 2.
Dist pawn_metric_distance(const Board& board, const Vertex& a, const Vertex& b,
                          const SearchOptions& opts = SearchOptions{});

// Radius/diameter of the composite pawn distance. Requires n >= 2, k >= 2.
RadiusDiameterReport pawn_metric_radius_diameter(const Board& board,
                                                 const SearchOptions& opts = SearchOptions{});

// Fewest moves for a promoting pawn to travel from `a` to `b`: advance as
// the given forward pawn, then continue as the promotion queen or as a
// knight after reaching the last rank. Requires k >= 2.
Dist pawn_trip_moves(const Board& board, Piece pawn_variant, Piece promotion_queen,
                     const Vertex& a, const Vertex& b,
                     const SearchOptions& opts = SearchOptions{});

// Exhaustive metric-axiom check of a distance table. `metric_id` is a piece
// id (undirected rules only), "bishop-metric", or "pawn-metric".
MetricCheckReport verify_metric(const std::string& metric_id, const Board& board,
                                const SearchOptions& opts = SearchOptions{},
                                const VerifyOptions& vopts = VerifyOptions{});

} // namespace metrics
} // namespace hyperchess
