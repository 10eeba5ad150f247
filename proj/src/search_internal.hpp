#pragma once

// Shared BFS plumbing for search.cpp and metrics.cpp. Not installed.

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hyperchess/search.hpp"

namespace hyperchess {
namespace detail {

// 16-bit distance storage: refuse boards whose distances could not be told
// apart from the sentinel (generous 2*n*k headroom over every rule's
// diameter).
inline void check_distance_storage(const Board& board) {
    if (2ull * static_cast<std::uint64_t>(board.n) * static_cast<std::uint64_t>(board.k) >=
        static_cast<std::uint64_t>(kUnreachable))
        throw ComputationInfeasibleError(
            "distances on n=" + std::to_string(board.n) + " k=" + std::to_string(board.k) +
            " may overflow 16-bit storage (2*n*k must stay below 65535)");
}

inline std::uint64_t field_bytes(const Board& board) {
    return board.vertex_count * sizeof(Dist);
}

inline void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what) {
    if (needed > budget)
        throw ComputationInfeasibleError(what + " needs " + std::to_string(needed) +
                                         " bytes, memory budget is " + std::to_string(budget));
}

inline void decode(const Board& board, Ordinal ordinal, Vertex& v) {
    for (int j = 0; j < board.k; ++j) {
        v[static_cast<std::size_t>(j)] = static_cast<Coord>(ordinal % static_cast<Ordinal>(board.n));
        ordinal /= static_cast<Ordinal>(board.n);
    }
}

inline int clamp_threads(int threads, std::uint64_t jobs) {
    if (threads < 1) throw InvalidArgumentError("threads must be >= 1");
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, 4 * hw);
    if (jobs < static_cast<std::uint64_t>(threads))
        threads = static_cast<int>(std::max<std::uint64_t>(jobs, 1));
    return threads;
}

inline void parallel_over_range(std::uint64_t count, int threads,
                                const std::function<void(std::uint64_t, std::uint64_t)>& body) {
    if (threads <= 1 || count < 2) {
        body(0, count);
        return;
    }
    const std::uint64_t chunk =
        (count + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        if (lo >= count) break;
        const std::uint64_t hi = std::min(count, lo + chunk);
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// Adjacency in compressed sparse row form; built once per (piece, board)
// when many sources share it and the budget allows.
struct Csr {
    std::vector<std::uint64_t> offsets;
    std::vector<std::uint32_t> targets;
};

inline std::optional<Csr> try_build_csr(Piece piece, const Board& board, const PieceOptions& opts,
                                        std::uint64_t budget_left, int threads) {
    const std::uint64_t count = board.vertex_count;
    if (count > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
    const std::uint64_t offsets_bytes = (count + 1) * sizeof(std::uint64_t);
    if (offsets_bytes > budget_left) return std::nullopt;

    Csr csr;
    csr.offsets.assign(count + 1, 0);

    parallel_over_range(count, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        Vertex v(static_cast<std::size_t>(board.k));
        std::vector<Ordinal> scratch;
        for (std::uint64_t o = lo; o < hi; ++o) {
            scratch.clear();
            decode(board, o, v);
            pieces::append_neighbor_ordinals(piece, board, v, scratch, opts);
            csr.offsets[o + 1] = scratch.size();
        }
    });
    for (std::uint64_t o = 0; o < count; ++o) csr.offsets[o + 1] += csr.offsets[o];

    const std::uint64_t edges = csr.offsets[count];
    if (offsets_bytes + edges * sizeof(std::uint32_t) > budget_left) return std::nullopt;
    csr.targets.resize(edges);

    parallel_over_range(count, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        Vertex v(static_cast<std::size_t>(board.k));
        std::vector<Ordinal> scratch;
        for (std::uint64_t o = lo; o < hi; ++o) {
            scratch.clear();
            decode(board, o, v);
            pieces::append_neighbor_ordinals(piece, board, v, scratch, opts);
            std::uint64_t at = csr.offsets[o];
            for (Ordinal w : scratch) csr.targets[at++] = static_cast<std::uint32_t>(w);
        }
    });
    return csr;
}

// Scratch buffers reused across BFS runs by one worker.
struct BfsScratch {
    std::vector<Dist> dist;
    std::vector<Ordinal> frontier;
    std::vector<Ordinal> next;
    std::vector<Ordinal> neighbors;
    Vertex v;

    explicit BfsScratch(const Board& board)
        : dist(board.vertex_count, kUnreachable), v(static_cast<std::size_t>(board.k)) {}
};

// Fills scratch.dist from the source. Stops early once `until` (if any) is
// settled or `max_depth` levels are expanded. Uses CSR adjacency when given,
// otherwise generates neighbors on the fly.
inline void bfs_fill(Piece piece, const Board& board, const PieceOptions& opts, Ordinal source,
                     BfsScratch& scratch, const Csr* csr,
                     std::optional<Ordinal> until = std::nullopt, Dist max_depth = kUnreachable) {
    std::fill(scratch.dist.begin(), scratch.dist.end(), kUnreachable);
    scratch.dist[source] = 0;
    scratch.frontier.clear();
    scratch.frontier.push_back(source);
    if (until && *until == source) return;

    Dist level = 0;
    while (!scratch.frontier.empty() && level < max_depth) {
        ++level;
        scratch.next.clear();
        for (Ordinal u : scratch.frontier) {
            if (csr) {
                const std::uint64_t end = csr->offsets[u + 1];
                for (std::uint64_t i = csr->offsets[u]; i < end; ++i) {
                    const Ordinal w = csr->targets[i];
                    if (scratch.dist[w] == kUnreachable) {
                        scratch.dist[w] = level;
                        if (until && *until == w) return;
                        scratch.next.push_back(w);
                    }
                }
            } else {
                scratch.neighbors.clear();
                decode(board, u, scratch.v);
                pieces::append_neighbor_ordinals(piece, board, scratch.v, scratch.neighbors, opts);
                for (Ordinal w : scratch.neighbors) {
                    if (scratch.dist[w] == kUnreachable) {
                        scratch.dist[w] = level;
                        if (until && *until == w) return;
                        scratch.next.push_back(w);
                    }
                }
            }
        }
        scratch.frontier.swap(scratch.next);
    }
}

// Eccentricity of a filled distance table plus its witness: the
// lexicographically least vertex at maximum distance (or the least
// unreachable vertex when one exists).
struct EccResult {
    Dist ecc = 0;
    Ordinal witness = 0;
};

inline EccResult scan_eccentricity(const Board& board, const std::vector<Dist>& dist) {
    Dist max_d = 0;
    bool has_unreachable = false;
    for (Dist d : dist) {
        if (d == kUnreachable) has_unreachable = true;
        else if (d > max_d) max_d = d;
    }
    const Dist target = has_unreachable ? kUnreachable : max_d;

    Vertex best(static_cast<std::size_t>(board.k));
    Vertex cand(static_cast<std::size_t>(board.k));
    bool found = false;
    Ordinal witness = 0;
    for (Ordinal o = 0; o < dist.size(); ++o) {
        if (dist[o] != target) continue;
        decode(board, o, cand);
        if (!found || lattice::lex_less(cand, best)) {
            best = cand;
            witness = o;
            found = true;
        }
    }
    return {target, witness};
}

// Deterministic min/max reduction over per-source eccentricities with
// lexicographic tie-breaks; shared by the graph and pawn-metric reports.
inline RadiusDiameterReport reduce_report(const Board& board, const std::string& piece_label,
                                          const std::vector<Ordinal>& sources,
                                          const std::vector<EccResult>& per_source,
                                          std::optional<SymmetryClass> symmetry_used) {
    RadiusDiameterReport report;
    report.piece = piece_label;
    report.n = board.n;
    report.k = board.k;
    report.sources_examined = sources.size();
    report.symmetry_used = symmetry_used;

    Vertex best_center, best_peri, cand;
    Dist radius = 0, diameter = 0;
    std::size_t peri_index = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        cand = lattice::index_vertex(board, sources[i]);
        const Dist e = per_source[i].ecc;
        if (i == 0 || e < radius || (e == radius && lattice::lex_less(cand, best_center))) {
            radius = e;
            best_center = cand;
        }
        if (i == 0 || e > diameter || (e == diameter && lattice::lex_less(cand, best_peri))) {
            diameter = e;
            best_peri = cand;
            peri_index = i;
        }
    }
    report.radius = radius;
    report.diameter = diameter;
    report.center_witness = best_center;
    report.peripheral_pair = {best_peri,
                              lattice::index_vertex(board, per_source[peri_index].witness)};
    return report;
}

// Source ordinals for a radius/diameter sweep: canonical representatives
// under `sym` when reducing, every vertex otherwise.
inline std::vector<Ordinal> sweep_sources(const Board& board, bool use_symmetry, SymmetryClass sym) {
    std::vector<Ordinal> sources;
    if (use_symmetry) {
        for (const Vertex& v : lattice::canonical_vertices(board, sym))
            sources.push_back(lattice::vertex_index(board, v));
    } else {
        sources.resize(board.vertex_count);
        for (Ordinal o = 0; o < board.vertex_count; ++o) sources[o] = o;
    }
    return sources;
}

} // namespace detail
} // namespace hyperchess
