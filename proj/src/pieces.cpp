#include "hyperchess/pieces.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace hyperchess {
namespace pieces {

namespace {

struct IdEntry {
    Piece piece;
    std::string_view id;
};

constexpr std::array<IdEntry, kPieceCount> kIds = {{
    {Piece::King, "king"},
    {Piece::Knight, "knight"},
    {Piece::RookBar, "rook-bar"},
    {Piece::RookStar, "rook-star"},
    {Piece::RookMillennium, "rook-millennium"},
    {Piece::BishopBar, "bishop-bar"},
    {Piece::BishopMillennium, "bishop-millennium"},
    {Piece::BishopTilde, "bishop-tilde"},
    {Piece::QueenBar, "queen-bar"},
    {Piece::QueenMillennium, "queen-millennium"},
    {Piece::QueenTilde, "queen-tilde"},
    {Piece::PawnBarForward, "pawn-bar"},
    {Piece::PawnMillenniumForward, "pawn-millennium"},
}};

void require_pawn_board(const Board& board) {
    if (board.k < 2)
        throw InvalidArgumentError("pawn rules need a forward axis: k >= 2 required, got k=" +
                                   std::to_string(board.k));
}

// Shared acceptance test for all rules whose moves are "each axis shifts by
// 0 or +-c": m axes moved, f0/f1 flag movement on axes 1 and 2.
bool accept_c_family(Piece piece, bool literal, int k, int c, int m, bool f0, bool f1) {
    const bool rook_star = m >= 1 && m <= k - 1;
    const bool rook_millennium = rook_star && !(m == 2 && f0 && f1);
    switch (piece) {
    case Piece::RookStar:
        return rook_star;
    case Piece::RookMillennium:
        return rook_millennium;
    case Piece::BishopBar:
        return m == k;
    case Piece::BishopMillennium:
        return f0 && f1;
    case Piece::BishopTilde:
        return m >= 2 && (literal || (c * m) % 2 == 0);
    case Piece::QueenBar:
        return m == k || m == 1;
    case Piece::QueenMillennium:
        return (f0 && f1) || rook_millennium;
    case Piece::QueenTilde:
        return (m >= 2 && (literal || (c * m) % 2 == 0)) || m == 1;
    default:
        return false;
    }
}

// Targets of the c-family rules. Every emitted vector has all nonzero
// displacement magnitudes equal to some c >= 1, so each target is produced
// for exactly one c and exactly once within it: no duplicates.
void gen_c_family(Piece piece, bool literal, const Board& board, const Vertex& v,
                  std::vector<Ordinal>& out) {
    const int k = board.k;
    const Coord hi = static_cast<Coord>(board.n - 1);

    Coord max_c = 0;
    for (Coord x : v) max_c = std::max(max_c, std::max(x, static_cast<Coord>(hi - x)));

    std::vector<Ordinal> stride(static_cast<std::size_t>(k));
    Ordinal s = 1;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = s;
        s *= static_cast<Ordinal>(board.n);
    }
    const Ordinal base = lattice::vertex_index(board, v);

    for (Coord c = 1; c <= max_c; ++c) {
        auto rec = [&](auto&& self, int axis, Ordinal acc, int m, bool f0, bool f1) -> void {
            if (axis == k) {
                if (m > 0 && accept_c_family(piece, literal, k, c, m, f0, f1))
                    out.push_back(acc);
                return;
            }
            const Coord x = v[static_cast<std::size_t>(axis)];
            const Ordinal str = stride[static_cast<std::size_t>(axis)];
            self(self, axis + 1, acc, m, f0, f1); // stay
            if (x - c >= 0)
                self(self, axis + 1, acc - static_cast<Ordinal>(c) * str, m + 1,
                     f0 || axis == 0, f1 || axis == 1);
            if (x + c <= hi)
                self(self, axis + 1, acc + static_cast<Ordinal>(c) * str, m + 1,
                     f0 || axis == 0, f1 || axis == 1);
        };
        rec(rec, 0, base, 0, false, false);
    }
}

void gen_king(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    const int k = board.k;
    const Coord hi = static_cast<Coord>(board.n - 1);
    std::vector<Ordinal> stride(static_cast<std::size_t>(k));
    Ordinal s = 1;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = s;
        s *= static_cast<Ordinal>(board.n);
    }
    const Ordinal base = lattice::vertex_index(board, v);

    auto rec = [&](auto&& self, int axis, Ordinal acc, bool moved) -> void {
        if (axis == k) {
            if (moved) out.push_back(acc);
            return;
        }
        const Coord x = v[static_cast<std::size_t>(axis)];
        const Ordinal str = stride[static_cast<std::size_t>(axis)];
        self(self, axis + 1, acc, moved);
        if (x - 1 >= 0) self(self, axis + 1, acc - str, true);
        if (x + 1 <= hi) self(self, axis + 1, acc + str, true);
    };
    rec(rec, 0, base, false);
}

void gen_knight(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    const int k = board.k;
    const Coord hi = static_cast<Coord>(board.n - 1);
    std::vector<Ordinal> stride(static_cast<std::size_t>(k));
    Ordinal s = 1;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = s;
        s *= static_cast<Ordinal>(board.n);
    }
    const Ordinal base = lattice::vertex_index(board, v);

    for (int i = 0; i < k; ++i) {
        for (int two = -2; two <= 2; two += 4) {
            const Coord xi = v[static_cast<std::size_t>(i)] + static_cast<Coord>(two);
            if (xi < 0 || xi > hi) continue;
            const Ordinal mid = base + (static_cast<Ordinal>(two) * stride[static_cast<std::size_t>(i)]);
            for (int j = 0; j < k; ++j) {
                if (j == i) continue;
                for (int one = -1; one <= 1; one += 2) {
                    const Coord xj = v[static_cast<std::size_t>(j)] + static_cast<Coord>(one);
                    if (xj < 0 || xj > hi) continue;
                    out.push_back(mid + static_cast<Ordinal>(one) * stride[static_cast<std::size_t>(j)]);
                }
            }
        }
    }
}

void gen_rook_bar(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    const Ordinal base = lattice::vertex_index(board, v);
    Ordinal stride = 1;
    for (int j = 0; j < board.k; ++j) {
        const Coord x = v[static_cast<std::size_t>(j)];
        for (Coord t = 0; t < static_cast<Coord>(board.n); ++t) {
            if (t == x) continue;
            out.push_back(base + (static_cast<Ordinal>(t) - static_cast<Ordinal>(x)) * stride);
        }
        stride *= static_cast<Ordinal>(board.n);
    }
}

void gen_pawn_bar(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    require_pawn_board(board);
    const Coord rank = v[1];
    const Ordinal stride = static_cast<Ordinal>(board.n);
    const Ordinal base = lattice::vertex_index(board, v);
    if (rank + 1 <= board.n - 1) out.push_back(base + stride);
    if (rank == 0 && 2 <= board.n - 1) out.push_back(base + 2 * stride);
}

// Forward families of the composite pawn: axis 1 fixed; the remaining axes
// all advance by 0 or +1 (always), or all by 0 or +2 (from rank 0 only).
void gen_pawn_millennium(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    require_pawn_board(board);
    const int k = board.k;
    const Coord hi = static_cast<Coord>(board.n - 1);
    std::vector<Ordinal> stride(static_cast<std::size_t>(k));
    Ordinal s = 1;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = s;
        s *= static_cast<Ordinal>(board.n);
    }
    const Ordinal base = lattice::vertex_index(board, v);

    auto family = [&](Coord step) {
        auto rec = [&](auto&& self, int axis, Ordinal acc, bool moved) -> void {
            if (axis == k) {
                if (moved) out.push_back(acc);
                return;
            }
            self(self, axis + 1, acc, moved);
            if (v[static_cast<std::size_t>(axis)] + step <= hi)
                self(self, axis + 1, acc + static_cast<Ordinal>(step) * stride[static_cast<std::size_t>(axis)], true);
        };
        rec(rec, 1, base, false);
    };

    family(1);
    if (v[1] == 0) family(2);
}

void gen_pawn_bar_predecessors(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    require_pawn_board(board);
    const Coord rank = v[1];
    const Ordinal stride = static_cast<Ordinal>(board.n);
    const Ordinal base = lattice::vertex_index(board, v);
    if (rank >= 1) out.push_back(base - stride);
    if (rank == 2) out.push_back(base - 2 * stride);
}

void gen_pawn_millennium_predecessors(const Board& board, const Vertex& v, std::vector<Ordinal>& out) {
    require_pawn_board(board);
    const int k = board.k;
    std::vector<Ordinal> stride(static_cast<std::size_t>(k));
    Ordinal s = 1;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = s;
        s *= static_cast<Ordinal>(board.n);
    }
    const Ordinal base = lattice::vertex_index(board, v);

    // u = v - delta with delta in the {0,step} family; the step-2 family
    // additionally requires the source rank u[1] to be 0.
    auto family = [&](Coord step, bool fix_axis1) {
        auto rec = [&](auto&& self, int axis, Ordinal acc, bool moved) -> void {
            if (axis == k) {
                if (moved) out.push_back(acc);
                return;
            }
            if (axis == 1 && fix_axis1) {
                // delta on the rank axis already decided by the caller
                self(self, axis + 1, acc, moved);
                return;
            }
            self(self, axis + 1, acc, moved);
            if (v[static_cast<std::size_t>(axis)] - step >= 0)
                self(self, axis + 1, acc - static_cast<Ordinal>(step) * stride[static_cast<std::size_t>(axis)], true);
        };
        rec(rec, 1, base, false);
    };

    family(1, false);
    if (v[1] == 0) {
        family(2, true); // rank delta 0, source already on rank 0
    } else if (v[1] == 2) {
        // rank delta forced to 2 so the source rank is 0; other axes free
        const Ordinal acc = base - 2 * stride[1];
        auto rec = [&](auto&& self, int axis, Ordinal a) -> void {
            if (axis == k) {
                out.push_back(a);
                return;
            }
            if (axis == 1) {
                self(self, axis + 1, a);
                return;
            }
            self(self, axis + 1, a);
            if (v[static_cast<std::size_t>(axis)] - 2 >= 0)
                self(self, axis + 1, a - 2 * stride[static_cast<std::size_t>(axis)]);
        };
        rec(rec, 1, acc);
    }
}

} // namespace

std::string_view id(Piece piece) {
    return kIds[static_cast<std::size_t>(piece)].id;
}

std::optional<Piece> from_id(std::string_view id) {
    for (const auto& entry : kIds)
        if (entry.id == id) return entry.piece;
    return std::nullopt;
}

const std::vector<Piece>& all() {
    static const std::vector<Piece> pieces = [] {
        std::vector<Piece> v;
        for (const auto& entry : kIds) v.push_back(entry.piece);
        return v;
    }();
    return pieces;
}

bool directed(Piece piece) {
    return piece == Piece::PawnBarForward || piece == Piece::PawnMillenniumForward;
}

SymmetryClass symmetry_of(Piece piece) {
    switch (piece) {
    case Piece::RookMillennium:
    case Piece::BishopMillennium:
    case Piece::QueenMillennium:
        return SymmetryClass::FirstTwoSplit;
    case Piece::PawnBarForward:
    case Piece::PawnMillenniumForward:
        return SymmetryClass::PawnForward;
    default:
        return SymmetryClass::Full;
    }
}

bool is_move(Piece piece, const Board& board, const Vertex& from, const Vertex& to,
             const PieceOptions& opts) {
    lattice::check_vertex(board, from);
    lattice::check_vertex(board, to);
    if (directed(piece)) require_pawn_board(board);
    if (from == to) return false;

    const int k = board.k;
    int m = 0;          // axes with nonzero delta
    Coord c = 0;        // max |delta|
    bool uniform = true; // every nonzero |delta| equals the max
    for (int j = 0; j < k; ++j) {
        const Coord d = std::abs(to[static_cast<std::size_t>(j)] - from[static_cast<std::size_t>(j)]);
        if (d == 0) continue;
        ++m;
        if (c == 0) c = d;
        else if (d != c) {
            if (d > c) c = d;
            uniform = false;
        }
    }
    const bool f0 = k >= 1 && to[0] != from[0];
    const bool f1 = k >= 2 && to[1] != from[1];

    switch (piece) {
    case Piece::King: {
        for (int j = 0; j < k; ++j)
            if (std::abs(to[static_cast<std::size_t>(j)] - from[static_cast<std::size_t>(j)]) > 1) return false;
        return true;
    }
    case Piece::Knight: {
        int twos = 0, ones = 0;
        for (int j = 0; j < k; ++j) {
            const Coord d = std::abs(to[static_cast<std::size_t>(j)] - from[static_cast<std::size_t>(j)]);
            if (d == 2) ++twos;
            else if (d == 1) ++ones;
            else if (d != 0) return false;
        }
        return twos == 1 && ones == 1;
    }
    case Piece::RookBar:
        return m == 1;
    case Piece::RookStar:
    case Piece::RookMillennium:
    case Piece::BishopBar:
    case Piece::BishopMillennium:
    case Piece::BishopTilde:
    case Piece::QueenBar:
    case Piece::QueenMillennium:
    case Piece::QueenTilde:
        return uniform && accept_c_family(piece, opts.bishop_tilde_literal, k, c, m, f0, f1);
    case Piece::PawnBarForward: {
        for (int j = 0; j < k; ++j)
            if (j != 1 && to[static_cast<std::size_t>(j)] != from[static_cast<std::size_t>(j)]) return false;
        const Coord d = to[1] - from[1];
        return d == 1 || (d == 2 && from[1] == 0);
    }
    case Piece::PawnMillenniumForward: {
        if (f0) return false;
        bool all01 = true, all02 = true;
        for (int j = 1; j < k; ++j) {
            const Coord d = to[static_cast<std::size_t>(j)] - from[static_cast<std::size_t>(j)];
            if (d != 0 && d != 1) all01 = false;
            if (d != 0 && d != 2) all02 = false;
            if (d < 0) return false;
        }
        if (all01) return true;
        return all02 && from[1] == 0;
    }
    }
    return false;
}

void append_neighbor_ordinals(Piece piece, const Board& board, const Vertex& from,
                              std::vector<Ordinal>& out, const PieceOptions& opts) {
    lattice::check_vertex(board, from);
    switch (piece) {
    case Piece::King:
        gen_king(board, from, out);
        break;
    case Piece::Knight:
        gen_knight(board, from, out);
        break;
    case Piece::RookBar:
        gen_rook_bar(board, from, out);
        break;
    case Piece::RookStar:
    case Piece::RookMillennium:
    case Piece::BishopBar:
    case Piece::BishopMillennium:
    case Piece::BishopTilde:
    case Piece::QueenBar:
    case Piece::QueenMillennium:
    case Piece::QueenTilde:
        gen_c_family(piece, opts.bishop_tilde_literal, board, from, out);
        break;
    case Piece::PawnBarForward:
        gen_pawn_bar(board, from, out);
        break;
    case Piece::PawnMillenniumForward:
        gen_pawn_millennium(board, from, out);
        break;
    }
}

void append_predecessor_ordinals(Piece piece, const Board& board, const Vertex& to,
                                 std::vector<Ordinal>& out, const PieceOptions& opts) {
    switch (piece) {
    case Piece::PawnBarForward:
        lattice::check_vertex(board, to);
        gen_pawn_bar_predecessors(board, to, out);
        break;
    case Piece::PawnMillenniumForward:
        lattice::check_vertex(board, to);
        gen_pawn_millennium_predecessors(board, to, out);
        break;
    default:
        append_neighbor_ordinals(piece, board, to, out, opts);
        break;
    }
}

std::vector<Vertex> neighbors(Piece piece, const Board& board, const Vertex& from,
                              const PieceOptions& opts) {
    std::vector<Ordinal> ords;
    append_neighbor_ordinals(piece, board, from, ords, opts);
    std::sort(ords.begin(), ords.end());
    std::vector<Vertex> result;
    result.reserve(ords.size());
    for (Ordinal o : ords) result.push_back(lattice::index_vertex(board, o));
    return result;
}

} // namespace pieces
} // namespace hyperchess
