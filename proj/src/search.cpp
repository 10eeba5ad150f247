#include "hyperchess/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "search_internal.hpp"

namespace hyperchess {
namespace search {

using detail::BfsScratch;
using detail::bfs_fill;
using detail::check_distance_storage;
using detail::field_bytes;
using detail::require_budget;

DistanceField bfs_distances(Piece piece, const Board& board, const Vertex& source,
                            const SearchOptions& opts) {
    check_distance_storage(board);
    require_budget(field_bytes(board), opts.memory_budget, "distance field");
    const Ordinal src = lattice::vertex_index(board, source);
    BfsScratch scratch(board);
    bfs_fill(piece, board, opts.piece_options, src, scratch, nullptr);
    return DistanceField{board, piece, src, std::move(scratch.dist)};
}

Dist distance(Piece piece, const Board& board, const Vertex& a, const Vertex& b,
              const SearchOptions& opts) {
    check_distance_storage(board);
    require_budget(field_bytes(board), opts.memory_budget, "distance field");
    const Ordinal src = lattice::vertex_index(board, a);
    const Ordinal dst = lattice::vertex_index(board, b);
    BfsScratch scratch(board);
    bfs_fill(piece, board, opts.piece_options, src, scratch, nullptr, dst);
    return scratch.dist[dst];
}

std::vector<Vertex> reach_set(Piece piece, const Board& board, const Vertex& source, int t,
                              const SearchOptions& opts) {
    if (t < 0) throw InvalidArgumentError("reach_set requires t >= 0");
    check_distance_storage(board);
    require_budget(field_bytes(board), opts.memory_budget, "distance field");
    const Ordinal src = lattice::vertex_index(board, source);
    BfsScratch scratch(board);
    const Dist depth = static_cast<Dist>(std::min<long long>(t, kUnreachable - 1));
    bfs_fill(piece, board, opts.piece_options, src, scratch, nullptr, std::nullopt, depth);
    std::vector<Vertex> out;
    for (Ordinal o = 0; o < board.vertex_count; ++o)
        if (scratch.dist[o] != kUnreachable) out.push_back(lattice::index_vertex(board, o));
    return out;
}

Dist eccentricity(Piece piece, const Board& board, const Vertex& v, const SearchOptions& opts) {
    check_distance_storage(board);
    require_budget(field_bytes(board), opts.memory_budget, "distance field");
    const Ordinal src = lattice::vertex_index(board, v);
    BfsScratch scratch(board);
    bfs_fill(piece, board, opts.piece_options, src, scratch, nullptr);
    return detail::scan_eccentricity(board, scratch.dist).ecc;
}

RadiusDiameterReport radius_diameter(Piece piece, const Board& board, const SearchOptions& opts) {
    if (pieces::directed(piece))
        throw UnsupportedPieceError("radius/diameter is undefined for the directed rule '" +
                                    std::string(pieces::id(piece)) + "'");
    check_distance_storage(board);
    const auto start = std::chrono::steady_clock::now();

    const SymmetryClass sym = pieces::symmetry_of(piece);
    const std::vector<Ordinal> sources = detail::sweep_sources(board, opts.use_symmetry, sym);

    require_budget(field_bytes(board), opts.memory_budget, "distance field");
    int threads = detail::clamp_threads(opts.threads, sources.size());
    while (threads > 1 && static_cast<std::uint64_t>(threads) * field_bytes(board) > opts.memory_budget)
        --threads;

    std::optional<detail::Csr> csr;
    if (sources.size() >= 4 && board.vertex_count >= 64) {
        const std::uint64_t used = static_cast<std::uint64_t>(threads) * field_bytes(board);
        if (used < opts.memory_budget)
            csr = detail::try_build_csr(piece, board, opts.piece_options, opts.memory_budget - used,
                                        threads);
    }

    std::vector<detail::EccResult> per_source(sources.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        BfsScratch scratch(board);
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= sources.size()) break;
            bfs_fill(piece, board, opts.piece_options, sources[i], scratch, csr ? &*csr : nullptr);
            per_source[i] = detail::scan_eccentricity(board, scratch.dist);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RadiusDiameterReport report =
        detail::reduce_report(board, std::string(pieces::id(piece)), sources, per_source,
                              opts.use_symmetry ? std::optional<SymmetryClass>(sym) : std::nullopt);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

ConnectivityReport connectivity(Piece piece, const Board& board, const SearchOptions& opts) {
    check_distance_storage(board);
    require_budget(field_bytes(board), opts.memory_budget, "distance field");

    ConnectivityReport report;
    report.piece = std::string(pieces::id(piece));
    report.n = board.n;
    report.k = board.k;

    BfsScratch scratch(board);
    bfs_fill(piece, board, opts.piece_options, 0, scratch, nullptr);
    std::uint64_t reached = 0;
    for (Dist d : scratch.dist)
        if (d != kUnreachable) ++reached;
    report.unreachable_count = board.vertex_count - reached;

    if (!pieces::directed(piece)) {
        report.connected = reached == board.vertex_count;
        return report;
    }

    // Directed: strong connectivity via a reverse sweep from the same root.
    std::vector<Dist>& rdist = scratch.dist;
    std::fill(rdist.begin(), rdist.end(), kUnreachable);
    rdist[0] = 0;
    std::vector<Ordinal> frontier{0}, next;
    std::uint64_t rreached = 1;
    Vertex v(static_cast<std::size_t>(board.k));
    std::vector<Ordinal> preds;
    Dist level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Ordinal u : frontier) {
            preds.clear();
            detail::decode(board, u, v);
            pieces::append_predecessor_ordinals(piece, board, v, preds, opts.piece_options);
            for (Ordinal w : preds) {
                if (rdist[w] == kUnreachable) {
                    rdist[w] = level;
                    ++rreached;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    report.connected = reached == board.vertex_count && rreached == board.vertex_count;
    return report;
}

} // namespace search
} // namespace hyperchess
