#include <doctest.h>

#include <algorithm>

#include "hyperchess/bounds.hpp"
#include "hyperchess/metrics.hpp"

using namespace hyperchess;

TEST_SUITE("metrics") {

TEST_CASE("pawn metric constant") {
    CHECK(metrics::pawn_metric_constant(2) == 1);
    CHECK(metrics::pawn_metric_constant(3) == 3);
    CHECK(metrics::pawn_metric_constant(4) == 7);
    CHECK(metrics::pawn_metric_constant(5) == 7);
    CHECK(metrics::pawn_metric_constant(6) == 8);
    CHECK(metrics::pawn_metric_constant(7) == 10);
    CHECK(metrics::pawn_metric_constant(8) == 12);
    CHECK(metrics::pawn_metric_constant(20) == 32);
    CHECK_THROWS_AS(metrics::pawn_metric_constant(1), InvalidArgumentError);
}

TEST_CASE("bishop metric distances") {
    const Board b42(4, 2);
    CHECK(metrics::bishop_metric_distance(b42, {0, 0}, {0, 0}) == 0);
    CHECK(metrics::bishop_metric_distance(b42, {0, 0}, {2, 0}) == 2);
    CHECK(metrics::bishop_metric_distance(b42, {0, 0}, {1, 1}) == 1);
    // Opposite colors always cost 2^k.
    CHECK(metrics::bishop_metric_distance(b42, {0, 0}, {1, 0}) == 4);
    CHECK(metrics::bishop_metric_distance(Board(4, 3), {0, 0, 0}, {1, 0, 0}) == 8);
    CHECK(metrics::bishop_metric_distance(Board(3, 2), {0, 0}, {2, 0}) == 2);

    CHECK_THROWS_AS(metrics::bishop_metric_distance(Board(4, 1), {0}, {1}),
                    InvalidArgumentError);
    CHECK_THROWS_AS(metrics::bishop_metric_distance(Board(1, 2), {0, 0}, {0, 0}),
                    InvalidArgumentError);

    // Same-color legs never need more than k diagonal moves.
    for (const Board& b : {Board(3, 2), Board(4, 2), Board(5, 2), Board(3, 3), Board(4, 3),
                           Board(5, 3), Board(3, 4), Board(4, 4)}) {
        for (Ordinal ao = 0; ao < b.vertex_count; ++ao)
            for (Ordinal bo = 0; bo < b.vertex_count; ++bo) {
                const Vertex a = lattice::index_vertex(b, ao);
                const Vertex z = lattice::index_vertex(b, bo);
                const Dist d = metrics::bishop_metric_distance(b, a, z);
                if (lattice::color_of(b, a) == lattice::color_of(b, z))
                    CHECK(d <= b.k);
                else
                    CHECK(d == (Dist{1} << b.k));
            }
    }
}

TEST_CASE("pawn metric distances") {
    CHECK(metrics::pawn_metric_distance(Board(5, 3), {0, 0, 0}, {0, 0, 0}) == 0);
    CHECK(metrics::pawn_metric_distance(Board(5, 3), {0, 0, 0}, {4, 2, 1}) == 10);
    CHECK(metrics::pawn_metric_distance(Board(3, 2), {0, 0}, {1, 2}) == 4);
    // Constant 12 plus a two-move tilde-queen leg, e.g. (3,3,3) -> (6,0,3)
    // -> (7,0,2); the knight needs four moves for this pair, so the queen
    // leg wins.
    CHECK(metrics::pawn_metric_distance(Board(8, 3), {3, 3, 3}, {7, 0, 2}) == 14);
    CHECK(search::distance(Piece::QueenTilde, Board(8, 3), {3, 3, 3}, {7, 0, 2}) == 2);
    CHECK(search::distance(Piece::Knight, Board(8, 3), {3, 3, 3}, {7, 0, 2}) == 4);

    // Symmetric even though the underlying trips are directed.
    const Board b(4, 2);
    for (Ordinal ao = 0; ao < b.vertex_count; ++ao)
        for (Ordinal bo = 0; bo < b.vertex_count; ++bo) {
            const Vertex a = lattice::index_vertex(b, ao);
            const Vertex z = lattice::index_vertex(b, bo);
            CHECK(metrics::pawn_metric_distance(b, a, z) ==
                  metrics::pawn_metric_distance(b, z, a));
        }

    CHECK_THROWS_AS(metrics::pawn_metric_distance(Board(4, 1), {0}, {1}),
                    InvalidArgumentError);
}

TEST_CASE("pawn metric radius and diameter") {
    struct Fixture {
        int n, k;
        Dist radius, diameter;
    };
    const Fixture fixtures[] = {
        {3, 2, 4, 4}, {4, 2, 8, 9}, {5, 2, 8, 9}, {5, 3, 9, 10}, {8, 3, 15, 15}};
    for (const Fixture& f : fixtures) {
        const auto report = metrics::pawn_metric_radius_diameter(Board(f.n, f.k));
        CHECK(report.piece == "pawn-metric");
        CHECK(report.radius == f.radius);
        CHECK(report.diameter == f.diameter);
        CHECK(report.n == f.n);
        CHECK(report.k == f.k);
    }

    SearchOptions plain;
    plain.use_symmetry = false;
    const auto sym = metrics::pawn_metric_radius_diameter(Board(5, 2));
    const auto nosym = metrics::pawn_metric_radius_diameter(Board(5, 2), plain);
    CHECK(sym.radius == nosym.radius);
    CHECK(sym.diameter == nosym.diameter);
    CHECK(sym.center_witness == nosym.center_witness);
    CHECK(sym.peripheral_pair == nosym.peripheral_pair);
    CHECK(sym.sources_examined < nosym.sources_examined);

    CHECK_THROWS_AS(metrics::pawn_metric_radius_diameter(Board(4, 1)), InvalidArgumentError);
    CHECK_THROWS_AS(metrics::pawn_metric_radius_diameter(Board(1, 2)), InvalidArgumentError);
}

TEST_CASE("diameter of the pawn metric follows the knight closed form") {
    // d = (n-2) + knight diameter + 2 on two-axis boards; the radius obeys
    // the same formula from n=6 up but undershoots it at n=5.
    for (int n = 4; n <= 8; ++n) {
        const auto report = metrics::pawn_metric_radius_diameter(Board(n, 2));
        const Dist formula =
            static_cast<Dist>((n - 2) + bounds::barker_knight_diameter(n) + 2);
        CHECK(report.diameter == formula);
        if (n >= 6)
            CHECK(report.radius == formula);
        else if (n == 5)
            CHECK(report.radius == formula - 1);
    }
}

TEST_CASE("pawn trip move counts") {
    const Board b32(3, 2);
    auto trip32 = [&](const Vertex& a, const Vertex& z) {
        return metrics::pawn_trip_moves(b32, Piece::PawnBarForward, Piece::QueenTilde, a, z);
    };
    // From the home corner every square is at most two moves away...
    Dist worst = 0;
    for (Ordinal o = 0; o < b32.vertex_count; ++o)
        worst = std::max(worst, trip32({0, 0}, lattice::index_vertex(b32, o)));
    CHECK(worst == 2);
    CHECK(trip32({0, 0}, {0, 1}) == 1);
    CHECK(trip32({0, 0}, {0, 2}) == 1);
    CHECK(trip32({0, 0}, {0, 0}) == 0);
    // ... and moving "backwards" costs a promotion first.
    CHECK(trip32({0, 1}, {0, 0}) == 2);

    const Board b33(3, 3);
    auto trip33 = [&](const Vertex& a, const Vertex& z) {
        return metrics::pawn_trip_moves(b33, Piece::PawnBarForward, Piece::QueenTilde, a, z);
    };
    worst = 0;
    for (Ordinal o = 0; o < b33.vertex_count; ++o)
        worst = std::max(worst, trip33({0, 0, 0}, lattice::index_vertex(b33, o)));
    CHECK(worst == 3);
    worst = 0;
    for (Ordinal o = 0; o < b33.vertex_count; ++o)
        worst = std::max(worst, trip33({1, 2, 1}, lattice::index_vertex(b33, o)));
    CHECK(worst == 2);

    // A source already on the last rank starts promoted: one tilde-queen move.
    CHECK(metrics::pawn_trip_moves(b32, Piece::PawnBarForward, Piece::QueenTilde, {0, 2},
                                   {2, 0}) == 1);

    // Invalid role combinations are rejected.
    CHECK_THROWS_AS(metrics::pawn_trip_moves(b32, Piece::King, Piece::QueenTilde, {0, 0},
                                             {1, 1}),
                    InvalidArgumentError);
    CHECK_THROWS_AS(metrics::pawn_trip_moves(b32, Piece::PawnBarForward, Piece::Knight,
                                             {0, 0}, {1, 1}),
                    InvalidArgumentError);
    CHECK_THROWS_AS(metrics::pawn_trip_moves(Board(3, 1), Piece::PawnBarForward,
                                             Piece::QueenTilde, {0}, {1}),
                    InvalidArgumentError);
}

TEST_CASE("pawn trips agree for both queens on two-axis boards") {
    for (int n = 3; n <= 5; ++n) {
        const Board b(n, 2);
        for (Ordinal ao = 0; ao < b.vertex_count; ++ao)
            for (Ordinal bo = 0; bo < b.vertex_count; ++bo) {
                const Vertex a = lattice::index_vertex(b, ao);
                const Vertex z = lattice::index_vertex(b, bo);
                const Dist tilde = metrics::pawn_trip_moves(b, Piece::PawnBarForward,
                                                            Piece::QueenTilde, a, z);
                CHECK(tilde == metrics::pawn_trip_moves(b, Piece::PawnBarForward,
                                                        Piece::QueenMillennium, a, z));
                CHECK(metrics::pawn_trip_moves(b, Piece::PawnMillenniumForward,
                                               Piece::QueenTilde, a, z) == tilde);
            }
    }
}

TEST_CASE("metric verification verdicts") {
    const auto king = metrics::verify_metric("king", Board(4, 2));
    CHECK(king.verdict);
    CHECK(king.metric == "king");
    CHECK(king.vertex_count == 16);
    CHECK(king.identity_violations == 0);
    CHECK(king.symmetry_violations == 0);
    CHECK(king.triangle_violations == 0);
    CHECK(king.infinite_pairs == 0);
    CHECK(king.witnesses.empty());

    CHECK(metrics::verify_metric("rook-bar", Board(4, 3)).verdict);
    CHECK(metrics::verify_metric("queen-tilde", Board(4, 3)).verdict);
    CHECK(metrics::verify_metric("knight", Board(4, 2)).verdict);
    CHECK(metrics::verify_metric("bishop-metric", Board(4, 3)).verdict);
    CHECK(metrics::verify_metric("bishop-metric", Board(5, 2)).verdict);
    CHECK(metrics::verify_metric("pawn-metric", Board(5, 2)).verdict);
    CHECK(metrics::verify_metric("pawn-metric", Board(4, 3)).verdict);

    // The knight cannot reach the center of a 3-wide board: infinite pairs,
    // each witness involving the isolated center.
    const auto knight32 = metrics::verify_metric("knight", Board(3, 2));
    CHECK(!knight32.verdict);
    CHECK(knight32.infinite_pairs == 16);
    CHECK(knight32.identity_violations == 0);
    CHECK(knight32.symmetry_violations == 0);
    CHECK(knight32.triangle_violations == 0);
    CHECK(knight32.witnesses.size() == 8);
    for (const auto& w : knight32.witnesses) {
        CHECK(w.kind == "infinite");
        CHECK((w.a == Vertex{1, 1} || w.b == Vertex{1, 1}));
    }
    CHECK(!metrics::verify_metric("knight", Board(3, 3)).verdict);
    // A board with no knight moves at all is all infinite pairs.
    const auto knight24 = metrics::verify_metric("knight", Board(2, 4));
    CHECK(!knight24.verdict);
    CHECK(knight24.infinite_pairs == 16ull * 15ull);

    CHECK_THROWS_AS(metrics::verify_metric("pawn-bar", Board(4, 2)), UnsupportedPieceError);
    CHECK_THROWS_AS(metrics::verify_metric("pawn-millennium", Board(4, 2)),
                    UnsupportedPieceError);
    CHECK_THROWS_AS(metrics::verify_metric("no-such-metric", Board(4, 2)),
                    InvalidArgumentError);

    VerifyOptions small;
    small.max_vertices = 10;
    CHECK_THROWS_AS(metrics::verify_metric("king", Board(6, 2), SearchOptions{}, small),
                    ComputationInfeasibleError);
}

TEST_CASE("metric verification respects the witness cap") {
    VerifyOptions one;
    one.witness_cap = 1;
    const auto report = metrics::verify_metric("knight", Board(3, 2), SearchOptions{}, one);
    CHECK(report.infinite_pairs == 16);
    CHECK(report.witnesses.size() == 1);
    // Deterministic: the first infinite pair in row-major order is
    // (0,0) vs the center.
    CHECK(report.witnesses[0].a == Vertex{0, 0});
    CHECK(report.witnesses[0].b == Vertex{1, 1});
}

TEST_CASE("verification is thread-count independent") {
    SearchOptions four;
    four.threads = 4;
    const auto lhs = metrics::verify_metric("pawn-metric", Board(4, 2));
    const auto rhs = metrics::verify_metric("pawn-metric", Board(4, 2), four);
    CHECK(lhs.verdict == rhs.verdict);
    CHECK(lhs.witnesses.size() == rhs.witnesses.size());

    const auto a = metrics::verify_metric("knight", Board(3, 2));
    const auto b = metrics::verify_metric("knight", Board(3, 2), four);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i].kind == b.witnesses[i].kind);
        CHECK(a.witnesses[i].a == b.witnesses[i].a);
        CHECK(a.witnesses[i].b == b.witnesses[i].b);
    }
}

} // TEST_SUITE
