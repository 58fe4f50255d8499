#include "netarc/suite.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "netarc/constructions.hpp"

namespace netarc {

namespace {

const std::vector<uint64_t> kPrimePowers32 = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                              16, 17, 19, 23, 25, 27, 29, 31, 32};

CriterionResult run(int id, const std::string& name,
                    const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    try {
        auto [ok, detail] = body();
        res.pass = ok;
        res.detail = detail;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    return res;
}

std::string set_str(const std::set<uint32_t>& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (uint32_t r : s) {
        os << (first ? "" : ",") << r;
        first = false;
    }
    os << '}';
    return os.str();
}

std::pair<bool, std::string> oval_tables() {
    const std::map<uint64_t, std::set<uint32_t>> expected = {
        {2, {3}},
        {3, {3, 4}},
        {4, {3, 4, 5}},
        {5, {3, 4, 5, 6}},
        {7, {3, 4, 6, 7, 8}},
        {8, {3, 4, 7, 8, 9}},
        {9, {3, 4, 5, 8, 9, 10}}};
    size_t cells = 0;
    for (const auto& [q, want] : expected) {
        std::set<uint32_t> got = table_O_d(Field::from_order(q));
        if (got != want)
            return {false, "q=" + std::to_string(q) + " got " + set_str(got) +
                               " want " + set_str(want)};
        cells += q - 1;
    }
    return {true, std::to_string(cells) + " cells over 7 fields match"};
}

std::pair<bool, std::string> hyperoval_tables() {
    const std::map<uint64_t, std::set<uint32_t>> expected = {
        {2, {3}}, {3, {}}, {4, {3, 5}}, {5, {}},
        {7, {}},  {8, {3, 7, 9}},       {9, {}},  {11, {}}};
    for (const auto& [q, want] : expected) {
        std::set<uint32_t> got = table_H_d(Field::from_order(q));
        if (got != want)
            return {false, "q=" + std::to_string(q) + " got " + set_str(got) +
                               " want " + set_str(want)};
    }
    return {true, "8 fields match"};
}

std::pair<bool, std::string> construction_battery() {
    size_t total = 0;
    std::map<std::string, size_t> by_name;
    std::map<uint64_t, std::set<std::string>> conic_lines;
    for (uint64_t q : kPrimePowers32) {
        auto f = Field::from_order(q);
        for (const Construction& c : constructions_for(f)) {
            ArcKind got = is_arc(c.points, c.net).kind;
            if (got != c.expected_kind)
                return {false, c.name + " over q=" + std::to_string(q) + " gave " +
                                   to_string(got) + " not " +
                                   to_string(c.expected_kind)};
            ++total;
            ++by_name[c.name];
            if (c.name == "conic_oval")
                for (const auto& [k, v] : c.params)
                    if (k == "line") conic_lines[q].insert(v);
        }
    }
    // the grids the battery must have visited
    for (const char* name :
         {"subgroup_hyperoval", "conic_oval", "conic_hyperoval",
          "root_of_unity_oval", "standard_5net_oval", "standard_5net_hyperoval",
          "oval_6net", "oval_7net", "gf8_quadfree_hyperoval", "small_degree_sets"})
        if (!by_name.count(name))
            return {false, std::string("family never instantiated: ") + name};
    for (uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16})
        if (conic_lines[q].size() != 3)
            return {false,
                    "conic line types incomplete at q=" + std::to_string(q)};
    if (by_name["subgroup_hyperoval"] != 10)
        return {false, "subgroup grid wrong size"};
    return {true, std::to_string(total) + " constructions over " +
                      std::to_string(kPrimePowers32.size()) + " fields verified"};
}

std::pair<bool, std::string> orbit_counts() {
    uint64_t a = count_orbits(Field::from_order(11), 5, ArcKind::oval);
    uint64_t b = count_orbits(Field::from_order(4), 5, ArcKind::hyperoval);
    if (a != 1)
        return {false, "GF(11) degree-5 ovals: " + std::to_string(a) + " orbits"};
    if (b != 1)
        return {false, "GF(4) degree-5 hyperovals: " + std::to_string(b) + " orbits"};
    return {true, "single orbit in both cells"};
}

std::pair<bool, std::string> inequivalent_pair() {
    auto f = Field::from_order(8);
    Construction sub = subgroup_hyperoval(f, 3);
    Construction qf = gf8_quadfree_hyperoval();
    if (equivalent(sub.points, qf.points).has_value())
        return {false, "claimed equivalent"};
    size_t quads_sub = find_quads(sub.points, NetSpec::full_plane(f)).size();
    size_t quads_qf = find_quads(qf.points, NetSpec::full_plane(qf.net.field())).size();
    if (quads_sub == 0) return {false, "subgroup hyperoval shows no quads"};
    if (quads_qf != 0)
        return {false, "quad-free hyperoval shows " + std::to_string(quads_qf)};
    return {true, "inequivalent; quads " + std::to_string(quads_sub) + " vs 0"};
}

bool cell_found(uint64_t q, uint32_t r, ArcKind kind) {
    SearchResult res =
        exists_arc({Field::from_order(q), r, kind, SearchMode::decide, {}});
    if (res.status == SearchStatus::budget_exceeded)
        throw BudgetExceeded("budget exceeded at q=" + std::to_string(q) +
                             " r=" + std::to_string(r));
    return res.status == SearchStatus::found;
}

bool has_root(const FieldPtr& f, const std::vector<int64_t>& coeffs) {
    return !poly_roots(Poly::from_ints(f, coeffs)).empty();
}

std::pair<bool, std::string> oracle_equivalences() {
    for (uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
        auto f = Field::from_order(q);
        if (cell_found(q, 5, ArcKind::oval) != has_root(f, {-1, 1, 1}))
            return {false, "degree-5 oval rule breaks at q=" + std::to_string(q)};
    }
    for (uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
        auto f = Field::from_order(q);
        bool gf4 = f->p() == 2 && f->k() % 2 == 0;
        if (cell_found(q, 5, ArcKind::hyperoval) != gf4)
            return {false, "degree-5 hyperoval rule breaks at q=" + std::to_string(q)};
    }
    for (uint64_t q : {7, 8, 9, 11, 13, 16}) {
        auto f = Field::from_order(q);
        if (cell_found(q, 7, ArcKind::hyperoval) != (f->p() == 2 && q >= 8))
            return {false, "degree-7 hyperoval rule breaks at q=" + std::to_string(q)};
    }
    for (uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
        auto f = Field::from_order(q);
        bool want = (f->p() != 2 && f->p() != 3) ||
                    (f->p() == 2 && f->k() % 2 == 0 && q > 4);
        if (cell_found(q, 6, ArcKind::oval) != want)
            return {false, "degree-6 oval rule breaks at q=" + std::to_string(q)};
    }
    for (uint64_t q : {7, 8, 9, 11, 13}) {
        auto f = Field::from_order(q);
        bool want = (f->p() == 2 && f->k() % 3 == 0) || has_root(f, {1, -2, -1, 1});
        if (cell_found(q, 7, ArcKind::oval) != want)
            return {false, "degree-7 oval rule breaks at q=" + std::to_string(q)};
    }
    return {true, "all five equivalences hold on their ranges"};
}

std::pair<bool, std::string> empty_cells() {
    auto cells = verify_nonexistence_suite();
    for (const auto& c : cells)
        if (c.status != SearchStatus::exhausted_none)
            return {false, "q=" + std::to_string(c.q) + " r=" + std::to_string(c.r) +
                               " " + to_string(c.kind) + ": " + to_string(c.status)};
    uint64_t nodes = 0;
    for (const auto& c : cells) nodes += c.nodes;
    return {true, std::to_string(cells.size()) + " cells exhausted, " +
                      std::to_string(nodes) + " nodes"};
}

std::pair<bool, std::string> reference_agreement() {
    size_t cells = 0;
    for (uint64_t q : {2, 3, 4, 5}) {
        auto f = Field::from_order(q);
        for (uint32_t r = 3; r <= q + 1; ++r) {
            for (ArcKind kind : {ArcKind::oval, ArcKind::hyperoval}) {
                if (kind == ArcKind::hyperoval && r % 2 == 0) continue;
                SearchStatus fast =
                    exists_arc({f, r, kind, SearchMode::decide, {}}).status;
                SearchStatus slow = brute_force_exists(f, r, kind).status;
                if (fast != slow)
                    return {false, "q=" + std::to_string(q) + " r=" +
                                       std::to_string(r) + " " + to_string(kind) +
                                       ": " + to_string(fast) + " vs " +
                                       to_string(slow)};
                ++cells;
            }
        }
    }
    return {true, std::to_string(cells) + " cells agree with the reference search"};
}

std::pair<bool, std::string> boundary_cells() {
    SearchResult open = resolve_open_cell();
    if (open.status == SearchStatus::budget_exceeded)
        return {false, "r=9 cell did not terminate in the extended budget"};
    SearchResult high = exists_arc(
        {Field::make(13, 1), 11, ArcKind::hyperoval, SearchMode::decide, {}});
    if (high.status != SearchStatus::exhausted_none)
        return {false, "r=11 cell: " + to_string(high.status)};
    return {true, "r=9 " + to_string(open.status) + ", r=11 exhausted-none"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_battery() {
    return {
        run(1, "oval-degree-tables", oval_tables),
        run(2, "hyperoval-degree-tables", hyperoval_tables),
        run(3, "construction-battery", construction_battery),
        run(4, "five-net-orbit-counts", orbit_counts),
        run(5, "inequivalent-hyperoval-pair", inequivalent_pair),
        run(6, "existence-oracle-equivalences", oracle_equivalences),
        run(7, "empty-cell-scan", empty_cells),
        run(8, "reference-search-agreement", reference_agreement),
        run(9, "boundary-cells-gf13", boundary_cells),
    };
}

bool all_pass(const std::vector<CriterionResult>& rows) {
    for (const CriterionResult& r : rows)
        if (!r.pass) return false;
    return true;
}

}  // namespace netarc
