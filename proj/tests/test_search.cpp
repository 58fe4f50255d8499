#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "netarc/search.hpp"

using namespace netarc;

namespace {

SearchResult run_cell(uint64_t q, uint32_t r, ArcKind kind,
                      SearchMode mode = SearchMode::decide, Budget b = {}) {
    return exists_arc({Field::from_order(q), r, kind, mode, b});
}

bool cell_found(uint64_t q, uint32_t r, ArcKind kind) {
    SearchResult res = run_cell(q, r, kind);
    REQUIRE(res.status != SearchStatus::budget_exceeded);
    return res.status == SearchStatus::found;
}

// roots of a polynomial given by ascending integer coefficients
bool has_root(const FieldPtr& f, const std::vector<int64_t>& coeffs) {
    return !poly_roots(Poly::from_ints(f, coeffs)).empty();
}

}  // namespace

TEST_CASE("malformed search tasks are rejected") {
    auto f = Field::from_order(5);
    CHECK_THROWS_AS(exists_arc({nullptr, 3, ArcKind::oval, SearchMode::decide, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_arc({f, 2, ArcKind::oval, SearchMode::decide, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_arc({f, 7, ArcKind::oval, SearchMode::decide, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_arc({f, 4, ArcKind::hyperoval, SearchMode::decide, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_arc({f, 3, ArcKind::arc, SearchMode::decide, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_arc({f, 3, ArcKind::not_arc, SearchMode::decide, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        exists_arc({Field::make(2, 10), 3, ArcKind::oval, SearchMode::decide, {}}),
        std::invalid_argument);
}

TEST_CASE("pruned search agrees with the unpruned reference on small planes") {
    for (uint64_t q : {2, 3, 4, 5}) {
        auto f = Field::from_order(q);
        for (uint32_t r = 3; r <= q + 1; ++r) {
            for (ArcKind kind : {ArcKind::oval, ArcKind::hyperoval}) {
                if (kind == ArcKind::hyperoval && r % 2 == 0) continue;
                CAPTURE(q);
                CAPTURE(r);
                SearchResult fast = exists_arc({f, r, kind, SearchMode::decide, {}});
                SearchResult slow = brute_force_exists(f, r, kind);
                CHECK(fast.status == slow.status);
                if (slow.status == SearchStatus::found) {
                    REQUIRE(slow.witness.has_value());
                    CHECK(is_arc(slow.witness->points, slow.witness->net).kind == kind);
                }
            }
        }
    }
    // one plane beyond the required range
    CHECK(exists_arc({Field::make(7, 1), 5, ArcKind::oval, SearchMode::decide, {}})
              .status == brute_force_exists(Field::make(7, 1), 5, ArcKind::oval).status);
    CHECK(exists_arc({Field::make(7, 1), 5, ArcKind::hyperoval, SearchMode::decide, {}})
              .status ==
          brute_force_exists(Field::make(7, 1), 5, ArcKind::hyperoval).status);
}

TEST_CASE("oval degree tables match the known pattern") {
    using S = std::set<uint32_t>;
    CHECK(table_O_d(Field::from_order(2)) == S{3});
    CHECK(table_O_d(Field::from_order(3)) == S{3, 4});
    CHECK(table_O_d(Field::from_order(4)) == S{3, 4, 5});
    CHECK(table_O_d(Field::from_order(5)) == S{3, 4, 5, 6});
    CHECK(table_O_d(Field::from_order(7)) == S{3, 4, 6, 7, 8});
    CHECK(table_O_d(Field::from_order(8)) == S{3, 4, 7, 8, 9});
    CHECK(table_O_d(Field::from_order(9)) == S{3, 4, 5, 8, 9, 10});
}

TEST_CASE("hyperoval degree tables match the known pattern") {
    using S = std::set<uint32_t>;
    CHECK(table_H_d(Field::from_order(2)) == S{3});
    CHECK(table_H_d(Field::from_order(3)) == S{});
    CHECK(table_H_d(Field::from_order(4)) == S{3, 5});
    CHECK(table_H_d(Field::from_order(5)) == S{});
    CHECK(table_H_d(Field::from_order(7)) == S{});
    CHECK(table_H_d(Field::from_order(8)) == S{3, 7, 9});
    CHECK(table_H_d(Field::from_order(9)) == S{});
    CHECK(table_H_d(Field::from_order(11)) == S{});
}

TEST_CASE("found witnesses verify and sit in the canonical position") {
    struct Cell {
        uint64_t q;
        uint32_t r;
        ArcKind kind;
    };
    for (Cell c : {Cell{8, 7, ArcKind::hyperoval}, Cell{9, 5, ArcKind::oval},
                   Cell{16, 7, ArcKind::hyperoval}, Cell{13, 6, ArcKind::oval}}) {
        CAPTURE(c.q);
        CAPTURE(c.r);
        SearchResult res = run_cell(c.q, c.r, c.kind);
        REQUIRE(res.status == SearchStatus::found);
        REQUIRE(res.witness.has_value());
        const auto& w = *res.witness;
        auto f = w.net.field();
        CHECK(w.net.r() == c.r);
        CHECK(w.points.size() == (c.kind == ArcKind::hyperoval ? c.r + 1 : c.r));
        CHECK(is_arc(w.points, w.net).kind == c.kind);
        CHECK(w.net.contains(Slope::finite(f->zero())));
        CHECK(w.net.contains(Slope::finite(f->one())));
        CHECK(w.net.contains(Slope::infinity(f)));
        CHECK(w.points.contains({f->zero(), f->zero()}));
        CHECK(w.points.contains({f->one(), f->one()}));
    }
}

TEST_CASE("repeated searches return identical results") {
    SearchResult a = run_cell(9, 7, ArcKind::hyperoval);
    SearchResult b = run_cell(9, 7, ArcKind::hyperoval);
    CHECK(a.status == SearchStatus::exhausted_none);
    CHECK(a.nodes == b.nodes);

    SearchResult c = run_cell(8, 7, ArcKind::hyperoval);
    SearchResult d = run_cell(8, 7, ArcKind::hyperoval);
    REQUIRE(c.witness.has_value());
    REQUIRE(d.witness.has_value());
    CHECK(c.witness->points == d.witness->points);
    CHECK(c.witness->net == d.witness->net);
    CHECK(c.nodes == d.nodes);
}

TEST_CASE("degree five ovals exist exactly where x^2+x-1 has a root") {
    for (uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        auto f = Field::from_order(q);
        CHECK(cell_found(q, 5, ArcKind::oval) == has_root(f, {-1, 1, 1}));
    }
}

TEST_CASE("degree five hyperovals exist exactly over fields containing GF(4)") {
    for (uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        auto f = Field::from_order(q);
        bool contains_gf4 = f->p() == 2 && f->k() % 2 == 0;
        CHECK(cell_found(q, 5, ArcKind::hyperoval) == contains_gf4);
    }
}

TEST_CASE("degree seven hyperovals exist exactly in characteristic two past GF(4)") {
    for (uint64_t q : {7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        auto f = Field::from_order(q);
        CHECK(cell_found(q, 7, ArcKind::hyperoval) == (f->p() == 2 && q >= 8));
    }
}

TEST_CASE("degree six ovals exist exactly outside characteristics 2,3 or past GF(4)") {
    for (uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        auto f = Field::from_order(q);
        bool expected = (f->p() != 2 && f->p() != 3) ||
                        (f->p() == 2 && f->k() % 2 == 0 && q > 4);
        CHECK(cell_found(q, 6, ArcKind::oval) == expected);
    }
}

TEST_CASE("degree seven ovals exist exactly with x^3-x^2-2x+1 roots or a GF(8) subfield") {
    for (uint64_t q : {7, 8, 9, 11, 13}) {
        CAPTURE(q);
        auto f = Field::from_order(q);
        bool expected =
            (f->p() == 2 && f->k() % 3 == 0) || has_root(f, {1, -2, -1, 1});
        CHECK(cell_found(q, 7, ArcKind::oval) == expected);
    }
}

TEST_CASE("a hyperoval of degree q is impossible and skips the search") {
    for (uint64_t q : {5, 7, 9, 11, 13}) {
        CAPTURE(q);
        SearchResult res = run_cell(q, static_cast<uint32_t>(q), ArcKind::hyperoval);
        CHECK(res.status == SearchStatus::exhausted_none);
        CHECK(res.nodes == 0);
        SearchResult en = run_cell(q, static_cast<uint32_t>(q), ArcKind::hyperoval,
                                   SearchMode::enumerate_orbits);
        REQUIRE(en.orbit_count.has_value());
        CHECK(*en.orbit_count == 0);
    }
}

TEST_CASE("exhausted budgets surface instead of wrong answers") {
    SearchResult res = run_cell(11, 9, ArcKind::oval, SearchMode::decide,
                                Budget{0, 600'000});
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(res.nodes <= 16384);
    CHECK_FALSE(res.witness.has_value());

    SearchResult timed = run_cell(11, 9, ArcKind::oval, SearchMode::decide,
                                  Budget{1'000'000'000, 0});
    CHECK(timed.status == SearchStatus::budget_exceeded);

    CHECK_THROWS_AS(table_O_d(Field::from_order(9), Budget{0, 600'000}),
                    BudgetExceeded);
    CHECK_THROWS_AS(count_orbits(Field::from_order(11), 9, ArcKind::oval,
                                 Budget{0, 600'000}),
                    BudgetExceeded);
}

TEST_CASE("orbit enumeration counts inequivalent witnesses") {
    CHECK(count_orbits(Field::from_order(11), 5, ArcKind::oval) == 1);
    CHECK(count_orbits(Field::from_order(4), 5, ArcKind::hyperoval) == 1);
    CHECK(count_orbits(Field::from_order(8), 7, ArcKind::hyperoval) == 2);
    // every 4-point arc maps onto the unit quad, one class only
    CHECK(count_orbits(Field::from_order(8), 3, ArcKind::hyperoval) == 1);
    CHECK(count_orbits(Field::from_order(7), 5, ArcKind::oval) == 0);

    SearchResult en = run_cell(8, 7, ArcKind::hyperoval, SearchMode::enumerate_orbits);
    CHECK(en.status == SearchStatus::found);
    REQUIRE(en.witness.has_value());
    CHECK(is_arc(en.witness->points, en.witness->net).kind == ArcKind::hyperoval);
}

TEST_CASE("nonexistence suite covers the classical empty cells") {
    auto cells = verify_nonexistence_suite();
    REQUIRE(cells.size() == 9);
    CHECK(all_nonexistent(cells));
    uint32_t parity_cells = 0;
    for (const auto& c : cells) {
        CAPTURE(c.q);
        CAPTURE(c.r);
        CHECK(c.status == SearchStatus::exhausted_none);
        CHECK(c.millis < 600'000);
        if (c.parity_skip) {
            ++parity_cells;
            CHECK(c.q == 8);
            CHECK(c.r == 6);
            CHECK(c.kind == ArcKind::hyperoval);
            CHECK(c.nodes == 0);
        } else {
            CHECK(c.nodes > 0);
        }
    }
    CHECK(parity_cells == 1);
}

TEST_CASE("open cell resolver scales the budget tenfold") {
    SearchResult res = resolve_open_cell(Budget{1'000, 1'000});
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(res.nodes <= 16384);  // stopped at the first checkpoint past 10*1000
}

TEST_CASE("the degree 9 hyperoval question over GF(13) closes as nonexistent") {
    SearchResult res = resolve_open_cell();
    CHECK(res.status == SearchStatus::exhausted_none);
    CHECK(res.nodes == 47'543'579);  // deterministic exhaustion count
}

TEST_CASE("degree 13 hyperoval cells below the open one are all empty") {
    for (uint32_t r : {3, 5, 7}) {
        CAPTURE(r);
        CHECK(run_cell(13, r, ArcKind::hyperoval).status ==
              SearchStatus::exhausted_none);
    }
}

TEST_CASE("reference search and table helpers enforce their limits") {
    CHECK_THROWS_AS(brute_force_exists(Field::from_order(9), 3, ArcKind::oval),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_exists(Field::from_order(4), 4, ArcKind::hyperoval),
                    std::invalid_argument);
    CHECK_THROWS_AS(table_O_d(Field::from_order(13)), std::invalid_argument);
    CHECK_THROWS_AS(table_H_d(Field::from_order(16)), std::invalid_argument);
    CHECK_THROWS_AS(count_orbits(Field::from_order(13), 5, ArcKind::oval),
                    std::invalid_argument);
}
