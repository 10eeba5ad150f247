#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperchess/lattice.hpp"

namespace hyperchess {

// Enumeration order is part of the binary dump format; do not reorder.
enum class Piece : std::uint8_t {
    King = 0,
    Knight,
    RookBar,
    RookStar,
    RookMillennium,
    BishopBar,
    BishopMillennium,
    BishopTilde,
    QueenBar,
    QueenMillennium,
    QueenTilde,
    PawnBarForward,
    PawnMillenniumForward,
};

inline constexpr int kPieceCount = 13;

struct PieceOptions {
    // The default bishop-tilde rule keeps only moves with c*m even (m axes
    // moved by magnitude c), which preserves the vertex coloring. Setting
    // this drops the filter and allows every equal-magnitude multi-axis move.
    bool bishop_tilde_literal = false;
};

namespace pieces {

// Stable lowercase kebab-case identifier ("king", "rook-bar", ...).
std::string_view id(Piece piece);
std::optional<Piece> from_id(std::string_view id);

// All thirteen pieces, in enumeration (dump-format) order.
const std::vector<Piece>& all();

// True for the forward-only pawn rules.
bool directed(Piece piece);

// Symmetry group under which the rule's neighbor structure is invariant.
SymmetryClass symmetry_of(Piece piece);

// Membership test on the move delta; O(k), no enumeration.
bool is_move(Piece piece, const Board& board, const Vertex& from, const Vertex& to,
             const PieceOptions& opts = {});

// One-move targets, source excluded, ascending ordinal order.
std::vector<Vertex> neighbors(Piece piece, const Board& board, const Vertex& from,
                              const PieceOptions& opts = {});

// Generator used by the search kernels; appends target ordinals in
// unspecified order (no duplicates, source never included).
void append_neighbor_ordinals(Piece piece, const Board& board, const Vertex& from,
                              std::vector<Ordinal>& out, const PieceOptions& opts = {});

// Sources that can reach `to` in one move (reverse edges; for undirected
// rules this equals the neighbor set).
void append_predecessor_ordinals(Piece piece, const Board& board, const Vertex& to,
                                 std::vector<Ordinal>& out, const PieceOptions& opts = {});

} // namespace pieces
} // namespace hyperchess
