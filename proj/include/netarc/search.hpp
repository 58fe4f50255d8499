#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netarc/nets.hpp"

namespace netarc {

struct Budget {
    uint64_t max_nodes = 1'000'000'000;
    uint64_t max_millis = 600'000;
};

enum class SearchMode { decide, enumerate_orbits };
enum class SearchStatus { found, exhausted_none, budget_exceeded };

std::string to_string(SearchStatus s);

// Does the plane over this field hold an r-net with an oval or hyperoval?
struct SearchTask {
    FieldPtr field;
    uint32_t r = 0;
    ArcKind kind = ArcKind::oval;
    SearchMode mode = SearchMode::decide;
    Budget budget{};
};

struct SearchWitness {
    NetSpec net;
    PointSet points;
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<SearchWitness> witness;
    uint64_t nodes = 0;
    uint64_t millis = 0;
    std::optional<uint64_t> orbit_count;
};

struct BudgetExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Backtracking over slope sets containing {0,1,inf} and point sets containing
// (0,0),(1,1), in canonical ascending order; complete for existence because
// the collineation group can move any witness into that position.
SearchResult exists_arc(const SearchTask& task);

// All degrees r for which an r-net with oval (resp. hyperoval) exists.
std::set<uint32_t> table_O_d(const FieldPtr& f, const Budget& budget = {});
std::set<uint32_t> table_H_d(const FieldPtr& f, const Budget& budget = {});

// Number of affine-equivalence classes among all witnesses of a cell.
uint64_t count_orbits(const FieldPtr& f, uint32_t r, ArcKind kind,
                      const Budget& budget = {});

// The (q=13, r=9, hyperoval) cell under a tenfold budget.
SearchResult resolve_open_cell(const Budget& base = {});

struct NonexistenceCell {
    uint64_t q;
    uint32_t r;
    ArcKind kind;
    SearchStatus status;
    bool parity_skip;
    uint64_t nodes;
    uint64_t millis;
};

// The targeted empty cells: degree q-2 hyperovals for q <= 11 plus a row of
// oval cells; every entry must come back exhausted-none.
std::vector<NonexistenceCell> verify_nonexistence_suite(const Budget& budget = {});
bool all_nonexistent(const std::vector<NonexistenceCell>& cells);

// Plain-definition reference search with no normalization and no pruning
// beyond the arc conditions themselves; exists to certify the reduced search
// at small q.
SearchResult brute_force_exists(const FieldPtr& f, uint32_t r, ArcKind kind);

}  // namespace netarc
