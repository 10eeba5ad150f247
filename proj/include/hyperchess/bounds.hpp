#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperchess/search.hpp"

namespace hyperchess {

enum class Quantity : std::uint8_t { Radius = 0, Diameter = 1 };

// A radius or diameter value the library vouches for without running a
// search. `value` may be kUnreachable for disconnected move graphs.
struct KnownValue {
    std::string piece; // piece id, "bishop-metric", or "pawn-metric"
    int n = 0;
    int k = 0;
    Quantity quantity = Quantity::Diameter;
    Dist value = 0;
    std::string provenance; // "eq7", "eq12", ..., "closed-form", "recurrence", "reported"
    std::string note;       // caveat, empty when none applies
};

// One row of a check table: an expected value plus the relation the
// computed value must satisfy ("eq" exact, "ge" computed >= expected).
struct TableRow {
    std::string piece;
    int n = 0;
    int k = 0;
    Quantity quantity = Quantity::Diameter;
    std::string relation; // "eq" | "ge"
    Dist expected = 0;
    std::string provenance;
    std::string note;
};

struct NStarResult {
    std::string piece;
    int k = 0;
    int n_max = 0;
    bool found = false;
    int n_star = 0; // least n with diameter(n) == k, valid when found
    int last_completed_n = 0;
};

namespace bounds {

// Knight diameter on a two-dimensional n x n board, n >= 4: table values
// through n = 8, then the order-4 linear recurrence.
Dist barker_knight_diameter(int n);

// Knight lower bounds on k-dimensional boards, n >= 4 and k >= 2.
Dist knight_diameter_lower(int n, int k);
Dist knight_radius_lower(int n, int k);

// Vouched radius/diameter for (piece, n, k), or nullopt when open/unsettled.
std::optional<KnownValue> known_value(const std::string& piece, int n, int k, Quantity quantity);

// Ids accepted by table_rows, in presentation order.
const std::vector<std::string>& table_ids();

// Expected-value rows of the named check table for 1 <= n <= n_max.
std::vector<TableRow> table_rows(const std::string& table_id, int n_max);

// Least n <= n_max where the queen variant's diameter equals k. Throws
// PartialResultError when a board in the sweep is infeasible.
NStarResult queen_nstar_search(Piece queen_variant, int k, int n_max,
                               const SearchOptions& opts = SearchOptions{});

} // namespace bounds
} // namespace hyperchess
