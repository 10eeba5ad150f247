#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperchess/lattice.hpp"
#include "hyperchess/pieces.hpp"

namespace hyperchess {

inline constexpr std::uint64_t kDefaultMemoryBudget = 512ull << 20; // bytes

struct SearchOptions {
    bool use_symmetry = true;
    int threads = 1;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
    PieceOptions piece_options{};
};

// Full single-source distance table, indexed by vertex ordinal.
struct DistanceField {
    Board board;
    Piece piece;
    Ordinal source;
    std::vector<Dist> values;
};

struct RadiusDiameterReport {
    std::string piece; // rule or metric identifier
    int n = 0;
    int k = 0;
    Dist radius = 0;
    Dist diameter = 0;
    Vertex center_witness;                    // realizes the radius
    std::pair<Vertex, Vertex> peripheral_pair; // realizes the diameter
    std::uint64_t sources_examined = 0;
    std::optional<SymmetryClass> symmetry_used;
    double elapsed_ms = 0.0;
};

struct ConnectivityReport {
    std::string piece;
    int n = 0;
    int k = 0;
    bool connected = false;              // directed rules: strong connectivity
    std::uint64_t unreachable_count = 0; // from the lexicographically least vertex
};

namespace search {

DistanceField bfs_distances(Piece piece, const Board& board, const Vertex& source,
                            const SearchOptions& opts = {});

// Shortest move count a -> b; kUnreachable when no move sequence exists.
Dist distance(Piece piece, const Board& board, const Vertex& a, const Vertex& b,
              const SearchOptions& opts = {});

// All vertices within t moves of the source, the source included,
// ascending ordinal order.
std::vector<Vertex> reach_set(Piece piece, const Board& board, const Vertex& source, int t,
                              const SearchOptions& opts = {});

// Max distance from v; kUnreachable when any vertex is unreachable.
Dist eccentricity(Piece piece, const Board& board, const Vertex& v,
                  const SearchOptions& opts = {});

// Exact radius/diameter with optional symmetry-reduced source set; witnesses
// are lexicographically least among optima. Directed rules are rejected.
RadiusDiameterReport radius_diameter(Piece piece, const Board& board,
                                     const SearchOptions& opts = {});

ConnectivityReport connectivity(Piece piece, const Board& board, const SearchOptions& opts = {});

} // namespace search
} // namespace hyperchess
