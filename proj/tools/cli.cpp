#include "hyperchess/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperchess/bounds.hpp"
#include "hyperchess/errors.hpp"
#include "hyperchess/field_io.hpp"
#include "hyperchess/metrics.hpp"

namespace hyperchess {
namespace cli {

namespace {

using nlohmann::ordered_json;

std::string vertex_commas(const Vertex& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string vertex_spaces(const Vertex& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string dist_text(Dist d) {
    return d == kUnreachable ? "unreachable" : std::to_string(d);
}

std::string dist_csv(Dist d) {
    return d == kUnreachable ? "" : std::to_string(d);
}

ordered_json dist_json(Dist d) {
    if (d == kUnreachable) return nullptr;
    return d;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

Vertex parse_vertex(const std::string& text, const Board& board) {
    Vertex v;
    std::size_t at = 0;
    while (at <= text.size()) {
        const std::size_t comma = std::min(text.find(',', at), text.size());
        int value = 0;
        const char* first = text.data() + at;
        const char* last = text.data() + comma;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last)
            throw InvalidArgumentError("bad vertex '" + text +
                                       "': expected comma-separated decimal coordinates");
        v.push_back(value);
        if (comma == text.size()) break;
        at = comma + 1;
    }
    lattice::check_vertex(board, v);
    return v;
}

Piece parse_piece(const std::string& id) {
    if (auto p = pieces::from_id(id)) return *p;
    throw InvalidArgumentError("unknown piece id '" + id + "'");
}

const char* quantity_name(Quantity q) {
    return q == Quantity::Radius ? "radius" : "diameter";
}

struct Config {
    std::string format = "text";
    int threads = 1;
    bool no_symmetry = false;
    bool literal = false;
    bool no_timing = false;
    std::uint64_t memory_budget = kDefaultMemoryBudget;

    std::string piece;
    std::string metric;
    std::string table_id;
    std::string out_path;
    std::string from_text;
    std::string to_text;
    std::string pawn_variant = "pawn-bar";
    std::string promotion_queen = "queen-tilde";
    int n = 0;
    int k = 0;
    int t = 0;
    int n_max = 8;
    std::uint64_t max_vertices = 1296;
};

// Vertex rendering for Record fields: JSON array, space-joined CSV cell,
// or the comma tuple form used everywhere else in text.
ordered_json vertex_field(const std::string& format, const Vertex& v) {
    if (format == "json") return ordered_json(v);
    if (format == "csv") return vertex_spaces(v);
    return vertex_commas(v);
}

SearchOptions make_search_options(const Config& cfg) {
    SearchOptions opts;
    opts.use_symmetry = !cfg.no_symmetry;
    opts.threads = cfg.threads;
    opts.memory_budget = cfg.memory_budget;
    opts.piece_options.bishop_tilde_literal = cfg.literal;
    return opts;
}

std::uint64_t env_memory_budget() {
    const char* raw = std::getenv("HYPERCHESS_MEM_BUDGET");
    if (!raw || !*raw) return kDefaultMemoryBudget;
    std::uint64_t value = 0;
    const char* last = raw + std::string_view(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, last, value);
    if (ec != std::errc{} || ptr != last || value == 0)
        throw InvalidArgumentError("HYPERCHESS_MEM_BUDGET must be a positive byte count");
    return value;
}

// A flat key/value record rendered as text lines, a JSON object, or one CSV
// row; shared by every subcommand that reports a single result.
struct Record {
    std::vector<std::pair<std::string, ordered_json>> fields;

    void add(const std::string& key, ordered_json value) {
        fields.emplace_back(key, std::move(value));
    }

    std::string to_text() const {
        std::string out;
        for (const auto& [key, value] : fields) {
            out += key;
            out += ": ";
            if (value.is_string()) out += value.get<std::string>();
            else if (value.is_null()) out += "unreachable";
            else if (value.is_boolean()) out += value.get<bool>() ? "true" : "false";
            else out += value.dump();
            out += '\n';
        }
        return out;
    }

    std::string to_csv() const {
        std::string header, row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) {
                header += ',';
                row += ',';
            }
            header += fields[i].first;
            const ordered_json& value = fields[i].second;
            if (value.is_string()) row += csv_field(value.get<std::string>());
            else if (value.is_null()) row += "";
            else if (value.is_boolean()) row += value.get<bool>() ? "true" : "false";
            else row += value.dump();
        }
        return header + "\n" + row + "\n";
    }

    std::string render(const std::string& format) const {
        if (format == "json") {
            ordered_json j = ordered_json::object();
            for (const auto& [key, value] : fields) j[key] = value;
            return j.dump(2) + "\n";
        }
        if (format == "csv") return to_csv();
        return to_text();
    }
};

void print(const std::string& rendered) {
    std::cout << rendered;
}

// ---- subcommand bodies ----

void run_distance(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    const Vertex from = parse_vertex(cfg.from_text, board);
    const Vertex to = parse_vertex(cfg.to_text, board);

    Dist d;
    if (cfg.piece == "bishop-metric")
        d = metrics::bishop_metric_distance(board, from, to, cfg.literal, opts);
    else if (cfg.piece == "pawn-metric")
        d = metrics::pawn_metric_distance(board, from, to, opts);
    else
        d = search::distance(parse_piece(cfg.piece), board, from, to, opts);

    if (cfg.format == "text") {
        print(dist_text(d) + "\n");
        return;
    }
    Record rec;
    rec.add("piece", cfg.piece);
    rec.add("n", cfg.n);
    rec.add("k", cfg.k);
    rec.add("from", vertex_field(cfg.format, from));
    rec.add("to", vertex_field(cfg.format, to));
    rec.add("distance", dist_json(d));
    print(rec.render(cfg.format));
}

void run_eccentricity(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    const Vertex from = parse_vertex(cfg.from_text, board);
    const Dist e = search::eccentricity(parse_piece(cfg.piece), board, from, opts);

    if (cfg.format == "text") {
        print(dist_text(e) + "\n");
        return;
    }
    Record rec;
    rec.add("piece", cfg.piece);
    rec.add("n", cfg.n);
    rec.add("k", cfg.k);
    rec.add("from", vertex_field(cfg.format, from));
    rec.add("eccentricity", dist_json(e));
    print(rec.render(cfg.format));
}

void run_reach(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    const Vertex from = parse_vertex(cfg.from_text, board);
    const std::vector<Vertex> set =
        search::reach_set(parse_piece(cfg.piece), board, from, cfg.t, opts);

    if (cfg.format == "json") {
        ordered_json j;
        j["piece"] = cfg.piece;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["from"] = from;
        j["t"] = cfg.t;
        j["count"] = set.size();
        j["vertices"] = set;
        print(j.dump(2) + "\n");
        return;
    }
    std::string out;
    if (cfg.format == "csv") {
        out += "vertex\n";
        for (const Vertex& v : set) out += vertex_spaces(v) + "\n";
    } else {
        for (const Vertex& v : set) out += vertex_commas(v) + "\n";
    }
    print(out);
}

void run_radius_diameter(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    RadiusDiameterReport report;
    if (cfg.piece == "pawn-metric")
        report = metrics::pawn_metric_radius_diameter(board, opts);
    else
        report = search::radius_diameter(parse_piece(cfg.piece), board, opts);
    print(emit_report(report, cfg.format, !cfg.no_timing));
}

void run_connectivity(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const ConnectivityReport report =
        search::connectivity(parse_piece(cfg.piece), board, make_search_options(cfg));
    Record rec;
    rec.add("piece", report.piece);
    rec.add("n", report.n);
    rec.add("k", report.k);
    rec.add("connected", report.connected);
    rec.add("unreachable_count", report.unreachable_count);
    print(rec.render(cfg.format));
}

void run_verify_metric(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    VerifyOptions vopts;
    vopts.max_vertices = cfg.max_vertices;
    const MetricCheckReport report =
        metrics::verify_metric(cfg.metric, board, make_search_options(cfg), vopts);

    if (cfg.format == "json") {
        ordered_json j;
        j["metric"] = report.metric;
        j["n"] = report.n;
        j["k"] = report.k;
        j["vertex_count"] = report.vertex_count;
        j["identity_violations"] = report.identity_violations;
        j["symmetry_violations"] = report.symmetry_violations;
        j["triangle_violations"] = report.triangle_violations;
        j["infinite_pairs"] = report.infinite_pairs;
        j["verdict"] = report.verdict;
        ordered_json witnesses = ordered_json::array();
        for (const MetricWitness& w : report.witnesses) {
            ordered_json entry;
            entry["kind"] = w.kind;
            entry["a"] = w.a;
            entry["b"] = w.b;
            if (!w.c.empty()) entry["c"] = w.c;
            witnesses.push_back(std::move(entry));
        }
        j["witnesses"] = std::move(witnesses);
        print(j.dump(2) + "\n");
        return;
    }

    Record rec;
    rec.add("metric", report.metric);
    rec.add("n", report.n);
    rec.add("k", report.k);
    rec.add("vertex_count", report.vertex_count);
    rec.add("identity_violations", report.identity_violations);
    rec.add("symmetry_violations", report.symmetry_violations);
    rec.add("triangle_violations", report.triangle_violations);
    rec.add("infinite_pairs", report.infinite_pairs);
    rec.add("verdict", std::string(report.verdict ? "pass" : "fail"));
    std::string out = rec.render(cfg.format);
    if (cfg.format == "text") {
        for (const MetricWitness& w : report.witnesses) {
            out += "witness: " + w.kind + " " + vertex_commas(w.a) + " " + vertex_commas(w.b);
            if (!w.c.empty()) out += " via " + vertex_commas(w.c);
            out += '\n';
        }
    }
    print(out);
}

void run_pawn_metric(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    const bool has_from = !cfg.from_text.empty();
    const bool has_to = !cfg.to_text.empty();
    if (has_from != has_to)
        throw InvalidArgumentError("--from and --to must be given together");

    if (!has_from) {
        print(emit_report(metrics::pawn_metric_radius_diameter(board, opts), cfg.format,
                          !cfg.no_timing));
        return;
    }
    const Vertex from = parse_vertex(cfg.from_text, board);
    const Vertex to = parse_vertex(cfg.to_text, board);
    const Dist d = metrics::pawn_metric_distance(board, from, to, opts);
    if (cfg.format == "text") {
        print(dist_text(d) + "\n");
        return;
    }
    Record rec;
    rec.add("piece", std::string("pawn-metric"));
    rec.add("n", cfg.n);
    rec.add("k", cfg.k);
    rec.add("from", vertex_field(cfg.format, from));
    rec.add("to", vertex_field(cfg.format, to));
    rec.add("distance", dist_json(d));
    print(rec.render(cfg.format));
}

void run_pawn_trip(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    const Vertex from = parse_vertex(cfg.from_text, board);
    const Vertex to = parse_vertex(cfg.to_text, board);
    const Piece pawn = parse_piece(cfg.pawn_variant);
    const Piece queen = parse_piece(cfg.promotion_queen);
    const Dist moves = metrics::pawn_trip_moves(board, pawn, queen, from, to, opts);

    if (cfg.format == "text") {
        print(dist_text(moves) + "\n");
        return;
    }
    Record rec;
    rec.add("pawn_variant", cfg.pawn_variant);
    rec.add("promotion_queen", cfg.promotion_queen);
    rec.add("n", cfg.n);
    rec.add("k", cfg.k);
    rec.add("from", vertex_field(cfg.format, from));
    rec.add("to", vertex_field(cfg.format, to));
    rec.add("moves", dist_json(moves));
    print(rec.render(cfg.format));
}

void run_bounds(const Config& cfg) {
    // Validate the id and the board dimensions up front.
    if (!pieces::from_id(cfg.piece) && cfg.piece != "bishop-metric" && cfg.piece != "pawn-metric")
        throw InvalidArgumentError("unknown piece or metric id '" + cfg.piece + "'");
    const Board board(cfg.n, cfg.k);
    (void)board;

    struct Row {
        std::string quantity, kind;
        std::optional<Dist> value;
        std::string provenance, note;
    };
    std::vector<Row> rows;
    for (Quantity q : {Quantity::Radius, Quantity::Diameter}) {
        const auto kv = bounds::known_value(cfg.piece, cfg.n, cfg.k, q);
        if (kv)
            rows.push_back({quantity_name(q), "known", kv->value, kv->provenance, kv->note});
        else
            rows.push_back({quantity_name(q), "known", std::nullopt, "open", ""});
    }
    if (cfg.piece == "knight" && cfg.n >= 4 && cfg.k >= 2) {
        rows.push_back({"radius", "lower-bound", bounds::knight_radius_lower(cfg.n, cfg.k),
                        "lower-bound", ""});
        rows.push_back({"diameter", "lower-bound", bounds::knight_diameter_lower(cfg.n, cfg.k),
                        "lower-bound", ""});
    }

    if (cfg.format == "json") {
        ordered_json j;
        j["piece"] = cfg.piece;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        ordered_json out_rows = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json entry;
            entry["quantity"] = r.quantity;
            entry["kind"] = r.kind;
            entry["value"] = r.value ? dist_json(*r.value) : ordered_json(nullptr);
            entry["provenance"] = r.provenance;
            entry["note"] = r.note;
            out_rows.push_back(std::move(entry));
        }
        j["rows"] = std::move(out_rows);
        print(j.dump(2) + "\n");
        return;
    }
    std::string out;
    if (cfg.format == "csv") {
        out += "piece,n,k,quantity,kind,value,provenance,note\n";
        for (const Row& r : rows) {
            out += csv_field(cfg.piece) + "," + std::to_string(cfg.n) + "," +
                   std::to_string(cfg.k) + "," + r.quantity + "," + r.kind + "," +
                   (r.value ? dist_csv(*r.value) : "") + "," + csv_field(r.provenance) + "," +
                   csv_field(r.note) + "\n";
        }
    } else {
        out += "piece: " + cfg.piece + "\nn: " + std::to_string(cfg.n) +
               "\nk: " + std::to_string(cfg.k) + "\n";
        for (const Row& r : rows) {
            out += r.quantity + " " + r.kind + ": ";
            out += r.value ? dist_text(*r.value) : "open";
            if (r.provenance != "open" && !r.provenance.empty())
                out += " (" + r.provenance + ")";
            if (!r.note.empty()) out += " -- " + r.note;
            out += '\n';
        }
    }
    print(out);
}

int run_table(const Config& cfg) {
    const std::vector<TableRow> rows = bounds::table_rows(cfg.table_id, cfg.n_max);
    const SearchOptions opts = make_search_options(cfg);

    struct Outcome {
        const TableRow* row;
        Dist computed;
        bool pass;
    };
    std::vector<Outcome> outcomes;
    std::size_t failures = 0;
    for (const TableRow& row : rows) {
        const RadiusDiameterReport report =
            search::radius_diameter(parse_piece(row.piece), Board(row.n, row.k), opts);
        const Dist computed =
            row.quantity == Quantity::Radius ? report.radius : report.diameter;
        bool pass;
        if (row.relation == "ge")
            pass = computed != kUnreachable && computed >= row.expected;
        else
            pass = computed == row.expected;
        if (!pass) ++failures;
        outcomes.push_back({&row, computed, pass});
    }

    if (cfg.format == "json") {
        ordered_json j;
        j["table"] = cfg.table_id;
        j["n_max"] = cfg.n_max;
        ordered_json out_rows = ordered_json::array();
        for (const Outcome& oc : outcomes) {
            ordered_json entry;
            entry["piece"] = oc.row->piece;
            entry["n"] = oc.row->n;
            entry["k"] = oc.row->k;
            entry["quantity"] = quantity_name(oc.row->quantity);
            entry["relation"] = oc.row->relation;
            entry["expected"] = dist_json(oc.row->expected);
            entry["computed"] = dist_json(oc.computed);
            entry["status"] = oc.pass ? "PASS" : "FAIL";
            entry["provenance"] = oc.row->provenance;
            entry["note"] = oc.row->note;
            out_rows.push_back(std::move(entry));
        }
        j["rows"] = std::move(out_rows);
        j["failures"] = failures;
        print(j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::string out = "table,piece,n,k,quantity,relation,expected,computed,status,provenance,note\n";
        for (const Outcome& oc : outcomes) {
            out += csv_field(cfg.table_id) + "," + csv_field(oc.row->piece) + "," +
                   std::to_string(oc.row->n) + "," + std::to_string(oc.row->k) + "," +
                   quantity_name(oc.row->quantity) + "," + oc.row->relation + "," +
                   dist_csv(oc.row->expected) + "," + dist_csv(oc.computed) + "," +
                   (oc.pass ? "PASS" : "FAIL") + "," + csv_field(oc.row->provenance) + "," +
                   csv_field(oc.row->note) + "\n";
        }
        print(out);
    } else {
        std::string out;
        for (const Outcome& oc : outcomes) {
            out += std::string(oc.pass ? "PASS" : "FAIL") + " " + cfg.table_id + " " +
                   oc.row->piece + " n=" + std::to_string(oc.row->n) +
                   " k=" + std::to_string(oc.row->k) + " " + quantity_name(oc.row->quantity) +
                   (oc.row->relation == "ge" ? " >= " : " == ") + dist_text(oc.row->expected) +
                   " computed " + dist_text(oc.computed);
            if (!oc.row->note.empty()) out += " -- " + oc.row->note;
            out += '\n';
        }
        out += "table " + cfg.table_id + ": " + std::to_string(outcomes.size()) + " rows, " +
               std::to_string(failures) + " failures\n";
        print(out);
    }
    return failures == 0 ? 0 : 3;
}

void run_nstar(const Config& cfg) {
    const Piece piece = parse_piece(cfg.piece);
    const NStarResult result =
        bounds::queen_nstar_search(piece, cfg.k, cfg.n_max, make_search_options(cfg));
    ordered_json n_star(nullptr);
    if (result.found) n_star = result.n_star;
    else if (cfg.format == "text") n_star = "not-found";
    Record rec;
    rec.add("piece", result.piece);
    rec.add("k", result.k);
    rec.add("n_max", result.n_max);
    rec.add("found", result.found);
    rec.add("n_star", n_star);
    rec.add("last_completed_n", result.last_completed_n);
    print(rec.render(cfg.format));
}

void run_dump_field(const Config& cfg) {
    const Board board(cfg.n, cfg.k);
    const SearchOptions opts = make_search_options(cfg);
    const Vertex from = parse_vertex(cfg.from_text, board);
    const DistanceField field =
        search::bfs_distances(parse_piece(cfg.piece), board, from, opts);

    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw DumpFormatError("cannot open '" + cfg.out_path + "' for writing");
    field_io::write(field, out);
    out.close();
    if (!out) throw DumpFormatError("failed writing '" + cfg.out_path + "'");

    Record rec;
    rec.add("piece", cfg.piece);
    rec.add("n", cfg.n);
    rec.add("k", cfg.k);
    rec.add("from", vertex_field(cfg.format, from));
    rec.add("out", cfg.out_path);
    rec.add("vertex_count", board.vertex_count);
    print(rec.render(cfg.format));
}

} // namespace

std::string emit_report(const RadiusDiameterReport& report, const std::string& format,
                        bool include_timing) {
    if (format == "json") {
        ordered_json j;
        j["piece"] = report.piece;
        j["n"] = report.n;
        j["k"] = report.k;
        j["radius"] = dist_json(report.radius);
        j["diameter"] = dist_json(report.diameter);
        j["center_witness"] = report.center_witness;
        j["peripheral_pair"] =
            ordered_json::array({report.peripheral_pair.first, report.peripheral_pair.second});
        j["sources_examined"] = report.sources_examined;
        if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string header = "piece,n,k,radius,diameter,center_witness,peripheral_pair,sources_examined";
        std::string row = csv_field(report.piece) + "," + std::to_string(report.n) + "," +
                          std::to_string(report.k) + "," + dist_csv(report.radius) + "," +
                          dist_csv(report.diameter) + "," +
                          vertex_spaces(report.center_witness) + "," +
                          vertex_spaces(report.peripheral_pair.first) + "|" +
                          vertex_spaces(report.peripheral_pair.second) + "," +
                          std::to_string(report.sources_examined);
        if (include_timing) {
            header += ",elapsed_ms";
            row += "," + format_ms(report.elapsed_ms);
        }
        return header + "\n" + row + "\n";
    }
    if (format == "text") {
        std::string out;
        out += "piece: " + report.piece + "\n";
        out += "n: " + std::to_string(report.n) + "\n";
        out += "k: " + std::to_string(report.k) + "\n";
        out += "radius: " + dist_text(report.radius) + "\n";
        out += "diameter: " + dist_text(report.diameter) + "\n";
        out += "center_witness: " + vertex_commas(report.center_witness) + "\n";
        out += "peripheral_pair: " + vertex_commas(report.peripheral_pair.first) + " -> " +
               vertex_commas(report.peripheral_pair.second) + "\n";
        out += "sources_examined: " + std::to_string(report.sources_examined) + "\n";
        if (include_timing) out += "elapsed_ms: " + format_ms(report.elapsed_ms) + "\n";
        return out;
    }
    throw InvalidArgumentError("unknown format '" + format + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"hyperchess: exact distances, radii, and diameters for k-dimensional "
                 "chess pieces on the lattice {0..n-1}^k"};
    Config cfg;
    int exit_code = 0;

    try {
        cfg.memory_budget = env_memory_budget();

        app.require_subcommand(1);
        app.add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        app.add_option("--threads", cfg.threads, "Worker threads")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app.add_flag("--no-symmetry", cfg.no_symmetry,
                     "Sweep every vertex instead of canonical representatives");
        app.add_flag("--bishop-tilde-literal", cfg.literal,
                     "Use the literal diagonal rule (no parity filter)");
        app.add_option("--memory-budget", cfg.memory_budget,
                       "Memory budget in bytes (overrides HYPERCHESS_MEM_BUDGET)")
            ->check(CLI::PositiveNumber);
        app.add_flag("--no-timing", cfg.no_timing, "Omit elapsed_ms from reports");

        const auto add_board = [&](CLI::App* sub) {
            sub->add_option("--n", cfg.n, "Side length")->required();
            sub->add_option("--k", cfg.k, "Dimension")->required();
        };

        CLI::App* distance = app.add_subcommand(
            "distance", "Fewest moves between two vertices (piece id, bishop-metric, or "
                        "pawn-metric)");
        distance->fallthrough();
        distance->add_option("--piece", cfg.piece)->required();
        add_board(distance);
        distance->add_option("--from", cfg.from_text)->required();
        distance->add_option("--to", cfg.to_text)->required();
        distance->callback([&] { run_distance(cfg); });

        CLI::App* reach = app.add_subcommand("reach", "Vertices reachable in at most t moves");
        reach->fallthrough();
        reach->add_option("--piece", cfg.piece)->required();
        add_board(reach);
        reach->add_option("--from", cfg.from_text)->required();
        reach->add_option("--t", cfg.t)->required()->check(CLI::NonNegativeNumber);
        reach->callback([&] { run_reach(cfg); });

        CLI::App* ecc = app.add_subcommand("eccentricity", "Greatest distance from one vertex");
        ecc->fallthrough();
        ecc->add_option("--piece", cfg.piece)->required();
        add_board(ecc);
        ecc->add_option("--from", cfg.from_text)->required();
        ecc->callback([&] { run_eccentricity(cfg); });

        CLI::App* rd = app.add_subcommand(
            "radius-diameter", "Radius, diameter, and witnesses (piece id or pawn-metric)");
        rd->fallthrough();
        rd->add_option("--piece", cfg.piece)->required();
        add_board(rd);
        rd->callback([&] { run_radius_diameter(cfg); });

        CLI::App* conn = app.add_subcommand("connectivity", "Reachability census from the origin");
        conn->fallthrough();
        conn->add_option("--piece", cfg.piece)->required();
        add_board(conn);
        conn->callback([&] { run_connectivity(cfg); });

        CLI::App* verify = app.add_subcommand(
            "verify-metric", "Exhaustively check the metric axioms on a small board");
        verify->fallthrough();
        verify->add_option("--metric", cfg.metric, "Piece id, bishop-metric, or pawn-metric")
            ->required();
        add_board(verify);
        verify->add_option("--max-vertices", cfg.max_vertices)->check(CLI::PositiveNumber);
        verify->callback([&] { run_verify_metric(cfg); });

        CLI::App* pmetric = app.add_subcommand(
            "pawn-metric", "Composite pawn distance (with --from/--to) or radius/diameter");
        pmetric->fallthrough();
        add_board(pmetric);
        pmetric->add_option("--from", cfg.from_text);
        pmetric->add_option("--to", cfg.to_text);
        pmetric->callback([&] { run_pawn_metric(cfg); });

        CLI::App* trip = app.add_subcommand(
            "pawn-trip", "Fewest pawn moves with promotion between two vertices");
        trip->fallthrough();
        add_board(trip);
        trip->add_option("--from", cfg.from_text)->required();
        trip->add_option("--to", cfg.to_text)->required();
        trip->add_option("--pawn-variant", cfg.pawn_variant)
            ->check(CLI::IsMember({"pawn-bar", "pawn-millennium"}))
            ->capture_default_str();
        trip->add_option("--promotion-queen", cfg.promotion_queen)
            ->check(CLI::IsMember({"queen-millennium", "queen-tilde"}))
            ->capture_default_str();
        trip->callback([&] { run_pawn_trip(cfg); });

        CLI::App* bnd = app.add_subcommand(
            "bounds", "Vouched values and knight lower bounds for (piece, n, k)");
        bnd->fallthrough();
        bnd->add_option("--piece", cfg.piece)->required();
        add_board(bnd);
        bnd->callback([&] { run_bounds(cfg); });

        CLI::App* table = app.add_subcommand(
            "table", "Recompute a published value table and compare row by row");
        table->fallthrough();
        table->add_option("--id", cfg.table_id)->required();
        table->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber)
            ->capture_default_str();
        table->callback([&] { exit_code = run_table(cfg); });

        CLI::App* nstar = app.add_subcommand(
            "nstar", "Least n where a queen variant's diameter reaches k");
        nstar->fallthrough();
        nstar->add_option("--piece", cfg.piece)->required();
        nstar->add_option("--k", cfg.k)->required();
        nstar->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber)
            ->capture_default_str();
        nstar->callback([&] { run_nstar(cfg); });

        CLI::App* dump = app.add_subcommand(
            "dump-field", "Write one source's distance field as a binary dump");
        dump->fallthrough();
        dump->add_option("--piece", cfg.piece)->required();
        add_board(dump);
        dump->add_option("--from", cfg.from_text)->required();
        dump->add_option("--out", cfg.out_path)->required();
        dump->callback([&] { run_dump_field(cfg); });

        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const UnsupportedPieceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PartialResultError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace cli
} // namespace hyperchess
