#include "hyperchess/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "search_internal.hpp"

namespace hyperchess {
namespace metrics {

namespace {

using detail::BfsScratch;
using detail::bfs_fill;
using detail::check_distance_storage;
using detail::field_bytes;
using detail::require_budget;

Dist add_saturating(Dist a, Dist b) {
    if (a == kUnreachable || b == kUnreachable) return kUnreachable;
    const std::uint32_t sum = static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(b);
    return sum >= kUnreachable ? static_cast<Dist>(kUnreachable - 1) : static_cast<Dist>(sum);
}

Dist min_unreachable_aware(Dist a, Dist b) {
    if (a == kUnreachable) return b;
    if (b == kUnreachable) return a;
    return std::min(a, b);
}

void require_pawn_metric_board(const Board& board) {
    if (board.k < 2)
        throw InvalidArgumentError("the pawn metric requires k >= 2 (a forward axis must exist)");
}

void require_bishop_metric_board(const Board& board) {
    if (board.n < 2 || board.k < 2)
        throw InvalidArgumentError("the bishop metric requires n >= 2 and k >= 2");
    if (board.k > 15)
        throw ComputationInfeasibleError(
            "the cross-color distance 2^k overflows 16-bit storage for k > 15");
}

Dist cross_color_distance(const Board& board) {
    return static_cast<Dist>(1u << board.k);
}

// Combined pawn-distance row out of the free-queen and knight fields.
void combine_pawn_row(const Board& board, Ordinal source, int constant,
                      const std::vector<Dist>& queen, const std::vector<Dist>& knight,
                      std::vector<Dist>& out) {
    const Dist c = static_cast<Dist>(constant);
    for (Ordinal b = 0; b < board.vertex_count; ++b) {
        if (b == source) {
            out[b] = 0;
            continue;
        }
        out[b] = add_saturating(c, min_unreachable_aware(queen[b], knight[b]));
    }
}

} // namespace

int pawn_metric_constant(int n) {
    if (n < 2) throw InvalidArgumentError("the pawn metric constant is defined for n >= 2");
    switch (n) {
        case 2: return 1;
        case 3: return 3;
        case 4: return 7; // n - 2 plus the knight diameter 5, not the n >= 5 pattern
        default: return (n - 2) + (2 * n + 2) / 3;
    }
}

Dist bishop_metric_distance(const Board& board, const Vertex& a, const Vertex& b, bool literal,
                            const SearchOptions& opts) {
    require_bishop_metric_board(board);
    lattice::check_vertex(board, a);
    lattice::check_vertex(board, b);
    if (a == b) return 0;
    if (lattice::color_of(board, a) != lattice::color_of(board, b))
        return cross_color_distance(board);

    check_distance_storage(board);
    require_budget(field_bytes(board), opts.memory_budget, "distance field");
    PieceOptions popts;
    popts.bishop_tilde_literal = literal;
    const Ordinal src = lattice::vertex_index(board, a);
    const Ordinal dst = lattice::vertex_index(board, b);
    BfsScratch scratch(board);
    bfs_fill(Piece::BishopTilde, board, popts, src, scratch, nullptr, dst);
    return scratch.dist[dst];
}

Dist pawn_metric_distance(const Board& board, const Vertex& a, const Vertex& b,
                          const SearchOptions& opts) {
    require_pawn_metric_board(board);
    lattice::check_vertex(board, a);
    lattice::check_vertex(board, b);
    if (a == b) return 0;

    const int constant = pawn_metric_constant(board.n);
    const Dist dq = search::distance(Piece::QueenTilde, board, a, b, opts);
    const Dist dn = search::distance(Piece::Knight, board, a, b, opts);
    return add_saturating(static_cast<Dist>(constant), min_unreachable_aware(dq, dn));
}

RadiusDiameterReport pawn_metric_radius_diameter(const Board& board, const SearchOptions& opts) {
    require_pawn_metric_board(board);
    if (board.n < 2)
        throw InvalidArgumentError("the pawn metric radius/diameter requires n >= 2");
    check_distance_storage(board);
    const auto start = std::chrono::steady_clock::now();

    const std::vector<Ordinal> sources =
        detail::sweep_sources(board, opts.use_symmetry, SymmetryClass::Full);
    const int constant = pawn_metric_constant(board.n);

    require_budget(3 * field_bytes(board), opts.memory_budget, "pawn metric sweep");
    int threads = detail::clamp_threads(opts.threads, sources.size());
    while (threads > 1 &&
           static_cast<std::uint64_t>(threads) * 3 * field_bytes(board) > opts.memory_budget)
        --threads;

    std::vector<detail::EccResult> per_source(sources.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        BfsScratch queen(board);
        BfsScratch knight(board);
        std::vector<Dist> combined(board.vertex_count);
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= sources.size()) break;
            bfs_fill(Piece::QueenTilde, board, opts.piece_options, sources[i], queen, nullptr);
            bfs_fill(Piece::Knight, board, opts.piece_options, sources[i], knight, nullptr);
            combine_pawn_row(board, sources[i], constant, queen.dist, knight.dist, combined);
            per_source[i] = detail::scan_eccentricity(board, combined);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RadiusDiameterReport report = detail::reduce_report(
        board, "pawn-metric", sources, per_source,
        opts.use_symmetry ? std::optional<SymmetryClass>(SymmetryClass::Full) : std::nullopt);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Dist pawn_trip_moves(const Board& board, Piece pawn_variant, Piece promotion_queen,
                     const Vertex& a, const Vertex& b, const SearchOptions& opts) {
    if (pawn_variant != Piece::PawnBarForward && pawn_variant != Piece::PawnMillenniumForward)
        throw InvalidArgumentError("pawn_variant must be a forward pawn rule");
    if (promotion_queen != Piece::QueenMillennium && promotion_queen != Piece::QueenTilde)
        throw InvalidArgumentError("promotion_queen must be queen-millennium or queen-tilde");
    if (board.k < 2)
        throw InvalidArgumentError("pawn trips require k >= 2 (a forward axis must exist)");
    lattice::check_vertex(board, a);
    lattice::check_vertex(board, b);
    if (a == b) return 0;

    check_distance_storage(board);
    require_budget(3 * field_bytes(board), opts.memory_budget, "pawn trip state space");

    // States are (phase, square): an unpromoted pawn, or a promoted queen or
    // knight. Reaching the last forward rank promotes on arrival, to both
    // promotion choices at the same cost.
    constexpr int kPawn = 0, kQueen = 1, kKnight = 2;
    const std::uint64_t count = board.vertex_count;
    const Ordinal target = lattice::vertex_index(board, b);
    const Ordinal source = lattice::vertex_index(board, a);
    const auto rank_of = [&](Ordinal o) {
        return static_cast<int>((o / static_cast<Ordinal>(board.n)) % static_cast<Ordinal>(board.n));
    };
    const int last_rank = board.n - 1;

    std::vector<Dist> dist(3 * count, kUnreachable);
    std::vector<std::uint64_t> frontier, next;
    if (rank_of(source) == last_rank) {
        dist[kQueen * count + source] = 0;
        dist[kKnight * count + source] = 0;
        frontier.push_back(kQueen * count + source);
        frontier.push_back(kKnight * count + source);
    } else {
        dist[kPawn * count + source] = 0;
        frontier.push_back(kPawn * count + source);
    }

    Vertex v(static_cast<std::size_t>(board.k));
    std::vector<Ordinal> moves;
    Dist level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint64_t state : frontier) {
            const int phase = static_cast<int>(state / count);
            const Ordinal at = state % count;
            detail::decode(board, at, v);
            moves.clear();
            const Piece rule = phase == kPawn     ? pawn_variant
                               : phase == kQueen ? promotion_queen
                                                 : Piece::Knight;
            pieces::append_neighbor_ordinals(rule, board, v, moves, opts.piece_options);
            for (Ordinal w : moves) {
                if (phase == kPawn && rank_of(w) == last_rank) {
                    // Promotion: the arrival square is entered as either piece.
                    for (int p : {kQueen, kKnight}) {
                        const std::uint64_t s = static_cast<std::uint64_t>(p) * count + w;
                        if (dist[s] == kUnreachable) {
                            dist[s] = level;
                            if (w == target) return level;
                            next.push_back(s);
                        }
                    }
                } else {
                    const std::uint64_t s = static_cast<std::uint64_t>(phase) * count + w;
                    if (dist[s] == kUnreachable) {
                        dist[s] = level;
                        if (w == target) return level;
                        next.push_back(s);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    return kUnreachable;
}

namespace {

enum class TableKind { PieceGraph, Bishop, Pawn };

// Fills row `a` of the V x V distance matrix for the chosen table.
struct RowFiller {
    const Board& board;
    TableKind kind;
    Piece piece;
    PieceOptions piece_options;
    int constant = 0; // pawn metric only
    BfsScratch primary;
    BfsScratch secondary;

    RowFiller(const Board& b, TableKind kd, Piece p, const PieceOptions& po, int c)
        : board(b), kind(kd), piece(p), piece_options(po), constant(c), primary(b), secondary(b) {}

    void fill(Ordinal a, Dist* row) {
        switch (kind) {
            case TableKind::PieceGraph:
                bfs_fill(piece, board, piece_options, a, primary, nullptr);
                std::copy(primary.dist.begin(), primary.dist.end(), row);
                break;
            case TableKind::Bishop: {
                bfs_fill(Piece::BishopTilde, board, piece_options, a, primary, nullptr);
                const Vertex av = lattice::index_vertex(board, a);
                const Color ac = lattice::color_of(board, av);
                const Dist cross = cross_color_distance(board);
                Vertex bv(static_cast<std::size_t>(board.k));
                for (Ordinal b = 0; b < board.vertex_count; ++b) {
                    if (b == a) {
                        row[b] = 0;
                        continue;
                    }
                    detail::decode(board, b, bv);
                    row[b] = lattice::color_of(board, bv) == ac ? primary.dist[b] : cross;
                }
                break;
            }
            case TableKind::Pawn: {
                bfs_fill(Piece::QueenTilde, board, piece_options, a, primary, nullptr);
                bfs_fill(Piece::Knight, board, piece_options, a, secondary, nullptr);
                const Dist c = static_cast<Dist>(constant);
                for (Ordinal b = 0; b < board.vertex_count; ++b) {
                    row[b] = b == a ? 0
                                    : add_saturating(c, min_unreachable_aware(primary.dist[b],
                                                                              secondary.dist[b]));
                }
                break;
            }
        }
    }
};

struct WitnessBucket {
    std::uint64_t total = 0;
    std::vector<MetricWitness> capped;

    void add(std::size_t cap, const char* kind, const Vertex& a, const Vertex& b,
             const Vertex& c = {}) {
        ++total;
        if (capped.size() < cap) capped.push_back(MetricWitness{kind, a, b, c});
    }
};

} // namespace

MetricCheckReport verify_metric(const std::string& metric_id, const Board& board,
                                const SearchOptions& opts, const VerifyOptions& vopts) {
    TableKind kind;
    Piece piece = Piece::King;
    if (auto p = pieces::from_id(metric_id)) {
        if (pieces::directed(*p))
            throw UnsupportedPieceError("'" + metric_id +
                                        "' is a directed rule; its distance table is not "
                                        "symmetric, so the metric check rejects it");
        kind = TableKind::PieceGraph;
        piece = *p;
    } else if (metric_id == "bishop-metric") {
        require_bishop_metric_board(board);
        kind = TableKind::Bishop;
    } else if (metric_id == "pawn-metric") {
        require_pawn_metric_board(board);
        kind = TableKind::Pawn;
    } else {
        throw InvalidArgumentError("unknown metric id '" + metric_id + "'");
    }

    if (board.vertex_count > vopts.max_vertices)
        throw ComputationInfeasibleError(
            "board has " + std::to_string(board.vertex_count) +
            " vertices, above the metric check cap of " + std::to_string(vopts.max_vertices));
    check_distance_storage(board);

    const std::uint64_t count = board.vertex_count;
    const int constant =
        kind == TableKind::Pawn && board.n >= 2 ? pawn_metric_constant(board.n) : 0;
    int threads = detail::clamp_threads(opts.threads, count);
    require_budget(2 * count * count +
                       static_cast<std::uint64_t>(threads) * 3 * field_bytes(board),
                   opts.memory_budget, "metric check matrix");

    std::vector<Dist> matrix(count * count);
    {
        std::atomic<std::uint64_t> cursor{0};
        auto worker = [&] {
            RowFiller filler(board, kind, piece, opts.piece_options, constant);
            while (true) {
                const std::uint64_t a = cursor.fetch_add(1);
                if (a >= count) break;
                filler.fill(a, matrix.data() + a * count);
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    MetricCheckReport report;
    report.metric = metric_id;
    report.n = board.n;
    report.k = board.k;
    report.vertex_count = count;

    const std::size_t cap = vopts.witness_cap;
    WitnessBucket identity, symmetry, triangle, infinite;
    Vertex va(static_cast<std::size_t>(board.k)), vb(static_cast<std::size_t>(board.k));

    // Identity and finiteness (ordered pairs), symmetry (unordered pairs).
    for (Ordinal a = 0; a < count; ++a) {
        detail::decode(board, a, va);
        for (Ordinal b = 0; b < count; ++b) {
            const Dist d = matrix[a * count + b];
            if (a == b) {
                if (d != 0) identity.add(cap, "identity", va, va);
                continue;
            }
            detail::decode(board, b, vb);
            if (d == 0) identity.add(cap, "identity", va, vb);
            if (d == kUnreachable) infinite.add(cap, "infinite", va, vb);
            if (a < b && d != matrix[b * count + a]) symmetry.add(cap, "symmetry", va, vb);
        }
    }

    // Triangle inequality over ordered triples, parallel over the first
    // endpoint with a deterministic merge.
    {
        std::vector<WitnessBucket> per_row(count);
        std::atomic<std::uint64_t> cursor{0};
        auto worker = [&] {
            Vertex wa(static_cast<std::size_t>(board.k)), wb(static_cast<std::size_t>(board.k)),
                wc(static_cast<std::size_t>(board.k));
            while (true) {
                const std::uint64_t a = cursor.fetch_add(1);
                if (a >= count) break;
                WitnessBucket& bucket = per_row[a];
                const Dist* row_a = matrix.data() + a * count;
                for (Ordinal mid = 0; mid < count; ++mid) {
                    const Dist leg1 = row_a[mid];
                    const Dist* row_mid = matrix.data() + mid * count;
                    for (Ordinal c = 0; c < count; ++c) {
                        const Dist lhs = row_a[c];
                        const Dist rhs = add_saturating(leg1, row_mid[c]);
                        const bool violated =
                            rhs == kUnreachable ? false : (lhs == kUnreachable || lhs > rhs);
                        if (violated) {
                            detail::decode(board, a, wa);
                            detail::decode(board, mid, wb);
                            detail::decode(board, c, wc);
                            bucket.add(cap, "triangle", wa, wb, wc);
                        }
                    }
                }
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (const WitnessBucket& bucket : per_row) {
            triangle.total += bucket.total;
            for (const MetricWitness& w : bucket.capped)
                if (triangle.capped.size() < cap) triangle.capped.push_back(w);
        }
    }

    report.identity_violations = identity.total;
    report.symmetry_violations = symmetry.total;
    report.triangle_violations = triangle.total;
    report.infinite_pairs = infinite.total;
    for (WitnessBucket* bucket : {&identity, &symmetry, &triangle, &infinite})
        report.witnesses.insert(report.witnesses.end(), bucket->capped.begin(),
                                bucket->capped.end());
    report.verdict = identity.total == 0 && symmetry.total == 0 && triangle.total == 0 &&
                     infinite.total == 0;
    return report;
}

} // namespace metrics
} // namespace hyperchess
