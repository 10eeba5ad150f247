#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hyperchess/cli.hpp"
#include "hyperchess/field_io.hpp"
#include "subprocess.hpp"

using namespace hyperchess;
using json = nlohmann::ordered_json;
using testutil::contains;
using testutil::run_cli;

TEST_SUITE("cli") {

TEST_CASE("report serialization round-trips through json") {
    const auto report = search::radius_diameter(Piece::Knight, Board(4, 2));
    const json parsed = json::parse(cli::emit_report(report, "json"));

    CHECK(parsed["piece"] == "knight");
    CHECK(parsed["n"] == 4);
    CHECK(parsed["k"] == 2);
    CHECK(parsed["radius"] == 4);
    CHECK(parsed["diameter"] == 5);
    CHECK(parsed["center_witness"] == json::array({0, 1}));
    CHECK(parsed["peripheral_pair"] ==
          json::array({json::array({0, 0}), json::array({0, 3})}));
    CHECK(parsed["sources_examined"] == 3);
    CHECK(parsed["elapsed_ms"].is_number());
    CHECK(parsed.size() == 9);

    const json untimed = json::parse(cli::emit_report(report, "json", false));
    CHECK(!untimed.contains("elapsed_ms"));
    CHECK(untimed.size() == 8);

    // Field order is part of the format.
    const std::vector<std::string> expected_keys{
        "piece",           "n",
        "k",               "radius",
        "diameter",        "center_witness",
        "peripheral_pair", "sources_examined"};
    std::size_t i = 0;
    for (auto it = untimed.begin(); it != untimed.end(); ++it, ++i)
        CHECK(it.key() == expected_keys[i]);
}

TEST_CASE("report serialization in csv and text") {
    const auto report = search::radius_diameter(Piece::Knight, Board(4, 2));
    CHECK(cli::emit_report(report, "csv", false) ==
          "piece,n,k,radius,diameter,center_witness,peripheral_pair,sources_examined\n"
          "knight,4,2,4,5,0 1,0 0|0 3,3\n");
    const std::string timed = cli::emit_report(report, "csv", true);
    CHECK(contains(timed, ",sources_examined,elapsed_ms\n"));

    CHECK(cli::emit_report(report, "text", false) ==
          "piece: knight\n"
          "n: 4\n"
          "k: 2\n"
          "radius: 4\n"
          "diameter: 5\n"
          "center_witness: 0,1\n"
          "peripheral_pair: 0,0 -> 0,3\n"
          "sources_examined: 3\n");

    CHECK_THROWS_AS(cli::emit_report(report, "xml"), InvalidArgumentError);
}

TEST_CASE("report serialization of unreachable values") {
    // A move rule with no edges at all: radius and diameter are undefined.
    const auto report = search::radius_diameter(Piece::RookStar, Board(3, 1));
    const json parsed = json::parse(cli::emit_report(report, "json", false));
    CHECK(parsed["radius"].is_null());
    CHECK(parsed["diameter"].is_null());

    const std::string csv = cli::emit_report(report, "csv", false);
    CHECK(contains(csv, "rook-star,3,1,,,"));
    const std::string text = cli::emit_report(report, "text", false);
    CHECK(contains(text, "radius: unreachable\n"));
    CHECK(contains(text, "diameter: unreachable\n"));
}

TEST_CASE("scalar subcommands print bare values") {
    auto r = run_cli("distance --piece rook-bar --n 4 --k 3 --from 0,0,0 --to 1,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3\n");

    r = run_cli("distance --piece knight --n 3 --k 2 --from 0,0 --to 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "unreachable\n");

    r = run_cli("distance --piece bishop-metric --n 4 --k 2 --from 0,0 --to 1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4\n");

    r = run_cli("distance --piece pawn-metric --n 8 --k 3 --from 3,3,3 --to 7,0,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "14\n");

    r = run_cli("eccentricity --piece knight --n 5 --k 3 --from 0,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "5\n");

    r = run_cli("pawn-trip --n 3 --k 2 --from 0,0 --to 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");

    r = run_cli("pawn-metric --n 5 --k 3 --from 0,0,0 --to 4,2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "10\n");
}

TEST_CASE("radius-diameter subcommand") {
    auto r = run_cli("radius-diameter --piece queen-tilde --n 8 --k 3 --format json");
    CHECK(r.exit_code == 0);
    const json parsed = json::parse(r.output);
    CHECK(parsed["radius"] == 3);
    CHECK(parsed["diameter"] == 3);
    CHECK(parsed["piece"] == "queen-tilde");

    r = run_cli("radius-diameter --piece king --n 4 --k 2 --format csv --no-timing");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "piece,n,k,radius,diameter,center_witness,peripheral_pair,sources_examined\n"
          "king,4,2,2,3,1 1,0 0|0 3,3\n");

    // The composite pawn metric is a first-class piece argument here.
    r = run_cli("pawn-metric --n 5 --k 2 --format csv --no-timing");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "piece,n,k,radius,diameter,center_witness,peripheral_pair,sources_examined\n"
          "pawn-metric,5,2,8,9,2 2,0 0|1 3,6\n");
    r = run_cli("radius-diameter --piece pawn-metric --n 5 --k 2 --format csv --no-timing");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pawn-metric,5,2,8,9,2 2,0 0|1 3,6"));
}

TEST_CASE("output is byte-identical across thread counts") {
    for (const std::string format : {"json", "csv", "text"}) {
        const std::string base = "radius-diameter --piece queen-millennium --n 5 --k 3 "
                                 "--no-timing --format " +
                                 format;
        const auto one = run_cli(base + " --threads 1");
        const auto eight = run_cli(base + " --threads 8");
        CHECK(one.exit_code == 0);
        CHECK(eight.exit_code == 0);
        CHECK(one.output == eight.output);
    }
}

TEST_CASE("symmetry toggle changes the sweep, not the answer") {
    const std::string base =
        "radius-diameter --piece queen-millennium --n 5 --k 3 --no-timing --format json";
    const auto sym = run_cli(base);
    const auto plain = run_cli(base + " --no-symmetry");
    const json a = json::parse(sym.output);
    const json b = json::parse(plain.output);
    CHECK(a["radius"] == b["radius"]);
    CHECK(a["diameter"] == b["diameter"]);
    CHECK(a["center_witness"] == b["center_witness"]);
    CHECK(a["peripheral_pair"] == b["peripheral_pair"]);
    CHECK(a["sources_examined"] == 18);
    CHECK(b["sources_examined"] == 125);
}

TEST_CASE("check tables and exit codes") {
    auto r = run_cli("table --id eq54 --n-max 10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS"));
    CHECK(!contains(r.output, "FAIL"));

    // The second millennium-queen table disagrees with the searched value
    // at n=2, so checking it is a designed failure.
    r = run_cli("table --id eq55 --n-max 8");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "FAIL"));

    r = run_cli("table --id eq7 --n-max 12 --format csv");
    CHECK(r.exit_code == 0);

    r = run_cli("table --id knight-bounds --n-max 6 --format json");
    CHECK(r.exit_code == 0);
    const json parsed = json::parse(r.output);
    for (const auto& row : parsed["rows"]) {
        CHECK(row["status"] == "PASS");
        CHECK(row["relation"] == "ge");
    }

    r = run_cli("table --id eq99 --n-max 8");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verification subcommand surfaces verdicts") {
    auto r = run_cli("verify-metric --metric king --n 4 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verdict: pass"));

    r = run_cli("verify-metric --metric knight --n 3 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verdict: fail"));
    CHECK(contains(r.output, "infinite_pairs: 16"));
    CHECK(contains(r.output, "witness: infinite 0,0 1,1"));

    r = run_cli("verify-metric --metric knight --n 3 --k 2 --format json");
    CHECK(r.exit_code == 0);
    const json parsed = json::parse(r.output);
    CHECK(parsed["verdict"] == false);
    CHECK(parsed["witnesses"].size() == 8);
    CHECK(parsed["witnesses"][0]["kind"] == "infinite");

    r = run_cli("verify-metric --metric pawn-bar --n 4 --k 2");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "directed"));

    r = run_cli("verify-metric --metric king --n 7 --k 4");
    CHECK(r.exit_code == 2); // 2401 vertices > default 1296 cap
    r = run_cli("verify-metric --metric king --n 7 --k 4 --max-vertices 3000");
    CHECK(r.exit_code == 0);
}

TEST_CASE("connectivity and bounds subcommands") {
    auto r = run_cli("connectivity --piece knight --n 3 --k 2 --format json");
    CHECK(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(parsed["connected"] == false);
    CHECK(parsed["unreachable_count"] == 1);

    r = run_cli("connectivity --piece king --n 4 --k 3 --format json");
    CHECK(r.exit_code == 0);
    parsed = json::parse(r.output);
    CHECK(parsed["connected"] == true);
    CHECK(parsed["unreachable_count"] == 0);

    r = run_cli("bounds --piece knight --n 8 --k 2 --format json");
    CHECK(r.exit_code == 0);
    parsed = json::parse(r.output);
    REQUIRE(parsed["rows"].size() == 4);
    CHECK(parsed["rows"][0]["quantity"] == "radius");
    CHECK(parsed["rows"][0]["value"].is_null());
    CHECK(parsed["rows"][0]["provenance"] == "open");
    CHECK(parsed["rows"][1]["value"] == 6);
    CHECK(parsed["rows"][1]["provenance"] == "eq7");
    CHECK(parsed["rows"][2]["value"] == 3);
    CHECK(parsed["rows"][3]["value"] == 6);

    r = run_cli("bounds --piece knight --n 8 --k 2");
    CHECK(contains(r.output, "radius known: open"));
    CHECK(contains(r.output, "diameter known: 6 (eq7)"));
    CHECK(contains(r.output, "radius lower-bound: 3 (lower-bound)"));
}

TEST_CASE("n* sweep subcommand") {
    auto r = run_cli("nstar --piece queen-millennium --k 2 --n-max 8 --format csv --no-timing");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "queen-millennium,2,8,true,3,3"));

    r = run_cli("nstar --piece queen-tilde --k 3 --n-max 8 --format json");
    CHECK(r.exit_code == 0);
    const json parsed = json::parse(r.output);
    CHECK(parsed["found"] == true);
    CHECK(parsed["n_star"] == 5);

    // Sweep cut short by the memory budget: partial result, exit 2.
    r = run_cli("nstar --piece queen-tilde --k 3 --n-max 8 --memory-budget 100");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "n = 4"));
}

TEST_CASE("distance-field dumps") {
    const std::string path = "/tmp/hyperchess_test_dump.hcdf";
    std::remove(path.c_str());
    auto r = run_cli("dump-field --piece king --n 4 --k 2 --from 0,0 --out " + path);
    CHECK(r.exit_code == 0);

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    const DistanceField field = field_io::read(in);
    CHECK(field.board.n == 4);
    CHECK(field.board.k == 2);
    CHECK(field.piece == Piece::King);
    CHECK(field.values ==
          search::bfs_distances(Piece::King, Board(4, 2), {0, 0}).values);
    std::remove(path.c_str());

    r = run_cli("dump-field --piece king --n 4 --k 2 --from 0,0 --out /nonexistent/x.hcdf");
    CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("distance --piece wizard --n 4 --k 2 --from 0,0 --to 1,1").exit_code == 1);
    CHECK(run_cli("distance --piece king --n 4 --k 2 --from 0,0").exit_code == 1);
    CHECK(run_cli("distance --piece king --n 4 --k 2 --from 0,9 --to 1,1").exit_code == 1);
    CHECK(run_cli("distance --piece king --n 4 --k 2 --from 0,x --to 1,1").exit_code == 1);
    CHECK(run_cli("radius-diameter --piece pawn-bar --n 4 --k 2").exit_code == 1);
    CHECK(run_cli("radius-diameter --piece king --n 4 --k 2 --format xml").exit_code == 1);
    CHECK(run_cli("pawn-metric --n 4 --k 2 --from 0,0").exit_code == 1);
    CHECK(run_cli("pawn-trip --n 3 --k 2 --from 0,0 --to 1,1 --pawn-variant king")
              .exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("radius-diameter --help").exit_code == 0);
}

TEST_CASE("infeasible computations exit with code 2") {
    CHECK(run_cli("radius-diameter --piece king --n 4 --k 3 --memory-budget 16").exit_code ==
          2);
    CHECK(run_cli("distance --piece king --n 40000 --k 1 --from 0 --to 1").exit_code == 2);
}

TEST_CASE("memory budget environment variable") {
    auto r = run_cli("radius-diameter --piece king --n 4 --k 3",
                     "HYPERCHESS_MEM_BUDGET=100");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "memory budget is 100"));

    // The command-line flag wins over the environment.
    r = run_cli("radius-diameter --piece king --n 4 --k 3 --memory-budget 1048576",
                "HYPERCHESS_MEM_BUDGET=100");
    CHECK(r.exit_code == 0);

    r = run_cli("radius-diameter --piece king --n 4 --k 3", "HYPERCHESS_MEM_BUDGET=abc");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "HYPERCHESS_MEM_BUDGET"));
}

TEST_CASE("tilde bishop variant flag reaches the move rule") {
    // The default rule preserves the coloring, so an odd-parity target is
    // unreachable; the literal variant admits it in one move.
    auto strictly = run_cli("distance --piece bishop-tilde --n 4 --k 3 --from 0,0,0 --to 1,1,1");
    auto literal = run_cli(
        "distance --piece bishop-tilde --n 4 --k 3 --from 0,0,0 --to 1,1,1 --bishop-tilde-literal");
    CHECK(strictly.exit_code == 0);
    CHECK(literal.exit_code == 0);
    CHECK(strictly.output == "unreachable\n");
    CHECK(literal.output == "1\n");
}

} // TEST_SUITE
