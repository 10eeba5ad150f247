#pragma once

#include <cstdint>
#include <vector>

#include "hyperchess/errors.hpp"

namespace hyperchess {

using Coord = std::int32_t;
using Vertex = std::vector<Coord>;   // k coordinates, each in [0, n-1]
using Ordinal = std::uint64_t;       // index into the n^k vertex enumeration
using Dist = std::uint16_t;

// Sentinel for "no move sequence exists"; distinct from every finite value.
inline constexpr Dist kUnreachable = 0xFFFF;

// The board C(n,k) = {0..n-1}^k.
struct Board {
    int n = 0;
    int k = 0;
    std::uint64_t vertex_count = 0;

    Board(int n_, int k_);
};

// Dark iff the coordinate sum is even.
enum class Color : std::uint8_t { Dark = 0, Light = 1 };

// Symmetry groups used to shrink the set of BFS source vertices:
//   Full          - all axis permutations and per-axis reflections x -> n-1-x.
//   FirstTwoSplit - permutations within axes {1,2} and within {3..k}, all
//                   reflections (axes 1,2 are distinguished by the rule).
//   PawnForward   - axis 2 fixed entirely; Full behavior on the other axes.
enum class SymmetryClass : std::uint8_t { Full = 0, FirstTwoSplit = 1, PawnForward = 2 };

namespace lattice {

// Throws InvalidArgumentError unless v has k coordinates, each in [0, n-1].
void check_vertex(const Board& board, const Vertex& v);

// Bijection between vertices and [0, n^k-1]; axis 1 is least significant:
// index = sum_j x_j * n^(j-1).
Ordinal vertex_index(const Board& board, const Vertex& v);
Vertex index_vertex(const Board& board, Ordinal ordinal);

Color color_of(const Board& board, const Vertex& v);

// Strict lexicographic comparison on coordinates (axis 1 first).
bool lex_less(const Vertex& a, const Vertex& b);

// Orbit representative under the given symmetry class: fold each movable
// coordinate to min(x, n-1-x), then sort each permutable axis group
// ascending. Idempotent; constant on orbits; the representative is the
// lexicographically least element of its orbit.
Vertex canonicalize(const Board& board, const Vertex& v, SymmetryClass sym);

// Exactly one representative per orbit, in ascending lexicographic order.
std::vector<Vertex> canonical_vertices(const Board& board, SymmetryClass sym);

// Number of Full-symmetry orbits: binomial(floor((n-1)/2)+k, k).
std::uint64_t canonical_count(int n, int k);

} // namespace lattice
} // namespace hyperchess
