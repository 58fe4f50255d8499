#include "netarc/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "netarc/constructions.hpp"

namespace netarc {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t ms_since(Clock::time_point t0) {
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
            .count());
}

// Backtracking state over one field. Point codes are pc = x*q + y; the two
// anchor points are pc 0 = (0,0) and pc q+1 = (1,1). Class indices are the
// finite slopes by code, with q standing for the vertical class.
struct Kernel {
    FieldPtr f;
    uint32_t q;
    uint32_t r;
    bool hyper;
    uint32_t target;
    uint32_t cap;   // most secants any net class may ever hold
    uint32_t need;  // secants a finished class must hold (odd r), or r/2
    SearchMode mode;
    Budget budget;
    Clock::time_point t0;

    uint64_t nodes = 0;
    bool over = false;
    bool found = false;

    std::vector<uint16_t> line_id;  // pc*(q+1)+c -> line index within class c
    std::vector<uint8_t> in_net;
    std::vector<uint8_t> cnt;  // c*q+line -> points placed on that line
    std::vector<uint16_t> secants;
    std::vector<uint16_t> singles;
    std::vector<uint32_t> net_classes;
    std::vector<uint32_t> chosen;

    std::vector<uint32_t> witness_slopes;  // finite codes, without 0/1
    std::vector<uint32_t> witness_pts;
    std::vector<std::vector<uint32_t>> all_pts;

    Kernel(FieldPtr field, uint32_t rr, bool hy, SearchMode m, Budget b)
        : f(std::move(field)),
          q(static_cast<uint32_t>(f->q())),
          r(rr),
          hyper(hy),
          target(hy ? rr + 1 : rr),
          cap(hy ? (rr + 1) / 2 : rr / 2),
          need(hyper ? (rr + 1) / 2 : (rr % 2 ? (rr - 1) / 2 : rr / 2)),
          mode(m),
          budget(b),
          t0(Clock::now()) {
        line_id.resize(static_cast<size_t>(q) * q * (q + 1));
        for (uint32_t pc = 0; pc < q * q; ++pc) {
            uint64_t x = pc / q, y = pc % q;
            uint16_t* row = &line_id[static_cast<size_t>(pc) * (q + 1)];
            for (uint32_t m2 = 0; m2 < q; ++m2)
                row[m2] = static_cast<uint16_t>(f->sub(y, f->mul(m2, x)));
            row[q] = static_cast<uint16_t>(x);
        }
        in_net.assign(q + 1, 0);
        cnt.assign(static_cast<size_t>(q + 1) * q, 0);
        secants.assign(q + 1, 0);
        singles.assign(q + 1, 0);
    }

    bool tick() {
        if ((nodes & 8191) == 0 &&
            (nodes > budget.max_nodes || ms_since(t0) > budget.max_millis))
            over = true;
        return !over;
    }

    // a line of a net class may carry two points, any other line only one
    bool place(uint32_t pc) {
        const uint16_t* ids = &line_id[static_cast<size_t>(pc) * (q + 1)];
        for (uint32_t c = 0; c <= q; ++c) {
            uint8_t k = cnt[static_cast<size_t>(c) * q + ids[c]];
            if (in_net[c]) {
                if (k == 2) return false;
                if (k == 1 && secants[c] == cap) return false;
            } else if (k) {
                return false;
            }
        }
        for (uint32_t c = 0; c <= q; ++c) {
            uint8_t& k = cnt[static_cast<size_t>(c) * q + ids[c]];
            if (in_net[c]) {
                if (k == 0) {
                    ++singles[c];
                } else {
                    --singles[c];
                    ++secants[c];
                }
            }
            ++k;
        }
        chosen.push_back(pc);
        return true;
    }

    void unplace() {
        uint32_t pc = chosen.back();
        chosen.pop_back();
        const uint16_t* ids = &line_id[static_cast<size_t>(pc) * (q + 1)];
        for (uint32_t c = 0; c <= q; ++c) {
            uint8_t& k = cnt[static_cast<size_t>(c) * q + ids[c]];
            --k;
            if (in_net[c]) {
                if (k == 0) {
                    --singles[c];
                } else {
                    ++singles[c];
                    --secants[c];
                }
            }
        }
    }

    // Each future point can convert at most one tangent per class into a
    // secant; two future points can open a fresh secant. A finished
    // hyperoval leaves no tangents anywhere, a finished odd-degree oval
    // leaves exactly one per class, and an even-degree oval must still be
    // able to fill r/2 classes completely.
    bool feasible() {
        uint32_t t = target - static_cast<uint32_t>(chosen.size());
        if (hyper || (r % 2)) {
            uint32_t allowed = hyper ? 0 : 1;
            for (uint32_t c : net_classes) {
                uint32_t s = singles[c];
                if (s > t + allowed) return false;
                uint32_t conv = std::min(t, s);
                if (secants[c] + conv + (t - conv) / 2 < need) return false;
            }
            return true;
        }
        uint32_t full_ok = 0;
        for (uint32_t c : net_classes) {
            uint32_t conv = std::min(t, static_cast<uint32_t>(singles[c]));
            uint32_t reach = secants[c] + conv + (t - conv) / 2;
            if (std::min(cap, reach) >= need) ++full_ok;
        }
        return full_ok >= r / 2;
    }

    // true means stop the sweep: either a decide-mode witness or the budget
    bool dfs(uint32_t start) {
        if (chosen.size() == target) {
            if (mode == SearchMode::decide) {
                found = true;
                witness_pts = chosen;
                return true;
            }
            all_pts.push_back(chosen);
            return false;
        }
        uint32_t needed = target - static_cast<uint32_t>(chosen.size());
        for (uint32_t pc = start; pc < q * q; ++pc) {
            uint32_t avail = q * q - pc - (pc <= q + 1 ? 1 : 0);
            if (avail < needed) return false;
            if (pc == q + 1) continue;
            ++nodes;
            if (!tick()) return true;
            if (!place(pc)) continue;
            if (feasible() && dfs(pc + 1)) return true;
            unplace();
        }
        return false;
    }

    void run() {
        uint32_t m = q - 2;
        uint32_t k = r - 3;
        if (k > m) return;
        std::vector<uint32_t> idx(k);
        for (uint32_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::fill(in_net.begin(), in_net.end(), 0);
            in_net[0] = in_net[1] = in_net[q] = 1;
            for (uint32_t i : idx) in_net[2 + i] = 1;
            net_classes.clear();
            for (uint32_t c = 0; c <= q; ++c)
                if (in_net[c]) net_classes.push_back(c);
            std::fill(cnt.begin(), cnt.end(), 0);
            std::fill(secants.begin(), secants.end(), 0);
            std::fill(singles.begin(), singles.end(), 0);
            chosen.clear();
            place(0);
            place(q + 1);
            size_t before = all_pts.size();
            bool stop = feasible() && dfs(1);
            if (mode == SearchMode::enumerate_orbits && before == 0 &&
                !all_pts.empty()) {
                witness_slopes.clear();
                for (uint32_t i : idx) witness_slopes.push_back(2 + i);
                witness_pts = all_pts.front();
            }
            if (stop) {
                if (found) {
                    witness_slopes.clear();
                    for (uint32_t i : idx) witness_slopes.push_back(2 + i);
                }
                return;
            }
            int32_t i = static_cast<int32_t>(k) - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) return;
            ++idx[i];
            for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
};

PointSet pcs_to_points(const FieldPtr& f, const std::vector<uint32_t>& pcs) {
    uint64_t q = f->q();
    std::vector<Point> pts;
    for (uint32_t pc : pcs) pts.push_back({f->element(pc / q), f->element(pc % q)});
    return PointSet(std::move(pts));
}

NetSpec codes_to_net(const FieldPtr& f, const std::vector<uint32_t>& extra) {
    std::vector<Slope> slopes = {Slope::finite(f->zero()), Slope::finite(f->one()),
                                 Slope::infinity(f)};
    for (uint32_t c : extra) slopes.push_back(Slope::finite(f->element(c)));
    return NetSpec(f, std::move(slopes));
}

uint64_t merge_orbits(const FieldPtr& f,
                      const std::vector<std::vector<uint32_t>>& sets) {
    std::set<std::vector<uint32_t>> uniq(sets.begin(), sets.end());
    NetSpec full = NetSpec::full_plane(f);
    std::map<size_t, std::vector<PointSet>> reps;  // keyed by quad count
    uint64_t classes = 0;
    for (const auto& pcs : uniq) {
        PointSet s = pcs_to_points(f, pcs);
        auto& bucket = reps[find_quads(s, full).size()];
        bool matched = false;
        for (const auto& rep : bucket)
            if (equivalent(s, rep).has_value()) {
                matched = true;
                break;
            }
        if (!matched) {
            bucket.push_back(s);
            ++classes;
        }
    }
    return classes;
}

void validate(const SearchTask& task) {
    if (!task.field) throw std::invalid_argument("search: null field");
    if (task.kind != ArcKind::oval && task.kind != ArcKind::hyperoval)
        throw std::invalid_argument("search: kind must be oval or hyperoval");
    if (task.r < 3 || task.r > task.field->q() + 1)
        throw std::invalid_argument("search: need 3 <= r <= q+1");
    if (task.kind == ArcKind::hyperoval && task.r % 2 == 0)
        throw std::invalid_argument("search: hyperoval degree must be odd");
    if (task.field->q() > 256)
        throw std::invalid_argument("search: exhaustive search capped at q <= 256");
}

}  // namespace

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_none: return "exhausted-none";
        case SearchStatus::budget_exceeded: return "budget-exceeded";
    }
    throw std::logic_error("to_string: bad SearchStatus");
}

SearchResult exists_arc(const SearchTask& task) {
    validate(task);
    const FieldPtr& f = task.field;
    bool hyper = task.kind == ArcKind::hyperoval;
    SearchResult res;

    // with one class outside the net, its q lines cannot host q+1 points
    if (hyper && task.r == f->q()) {
        res.status = SearchStatus::exhausted_none;
        if (task.mode == SearchMode::enumerate_orbits) res.orbit_count = 0;
        return res;
    }

    Kernel kern(f, task.r, hyper, task.mode, task.budget);
    kern.run();
    res.nodes = kern.nodes;
    res.millis = ms_since(kern.t0);
    if (kern.over) {
        res.status = SearchStatus::budget_exceeded;
        return res;
    }
    bool hit = task.mode == SearchMode::decide ? kern.found : !kern.all_pts.empty();
    if (hit) {
        res.status = SearchStatus::found;
        SearchWitness w{codes_to_net(f, kern.witness_slopes),
                        pcs_to_points(f, kern.witness_pts)};
        if (is_arc(w.points, w.net).kind != task.kind)
            throw std::logic_error("search: witness failed re-verification");
        res.witness = w;
    } else {
        res.status = SearchStatus::exhausted_none;
    }
    if (task.mode == SearchMode::enumerate_orbits)
        res.orbit_count = merge_orbits(f, kern.all_pts);
    return res;
}

std::set<uint32_t> table_O_d(const FieldPtr& f, const Budget& budget) {
    if (!f || f->q() > 11)
        throw std::invalid_argument("table_O_d: full oval tables stop at q = 11");
    std::set<uint32_t> out;
    for (uint32_t r = 3; r <= f->q() + 1; ++r) {
        SearchResult res =
            exists_arc({f, r, ArcKind::oval, SearchMode::decide, budget});
        if (res.status == SearchStatus::budget_exceeded)
            throw BudgetExceeded("table_O_d: budget exceeded at r=" +
                                 std::to_string(r) + " over " + f->descriptor());
        if (res.status == SearchStatus::found) out.insert(r);
    }
    for (const auto& c : constructions_for(f))
        if (c.expected_kind == ArcKind::oval && !out.count(c.net.r()))
            throw std::logic_error("table_O_d: search missed the constructed cell r=" +
                                   std::to_string(c.net.r()));
    return out;
}

std::set<uint32_t> table_H_d(const FieldPtr& f, const Budget& budget) {
    if (!f || f->q() > 13)
        throw std::invalid_argument("table_H_d: full hyperoval tables stop at q = 13");
    std::set<uint32_t> out;
    for (uint32_t r = 3; r <= f->q() + 1; r += 2) {
        SearchResult res =
            exists_arc({f, r, ArcKind::hyperoval, SearchMode::decide, budget});
        if (res.status == SearchStatus::budget_exceeded)
            throw BudgetExceeded("table_H_d: budget exceeded at r=" +
                                 std::to_string(r) + " over " + f->descriptor());
        if (res.status == SearchStatus::found) out.insert(r);
    }
    for (const auto& c : constructions_for(f))
        if (c.expected_kind == ArcKind::hyperoval && !out.count(c.net.r()))
            throw std::logic_error("table_H_d: search missed the constructed cell r=" +
                                   std::to_string(c.net.r()));
    return out;
}

uint64_t count_orbits(const FieldPtr& f, uint32_t r, ArcKind kind,
                      const Budget& budget) {
    if (!f || f->q() > 11)
        throw std::invalid_argument("count_orbits: orbit enumeration stops at q = 11");
    SearchResult res = exists_arc({f, r, kind, SearchMode::enumerate_orbits, budget});
    if (res.status == SearchStatus::budget_exceeded)
        throw BudgetExceeded("count_orbits: budget exceeded");
    return *res.orbit_count;
}

SearchResult resolve_open_cell(const Budget& base) {
    Budget wide{base.max_nodes * 10, base.max_millis * 10};
    return exists_arc(
        {Field::make(13, 1), 9, ArcKind::hyperoval, SearchMode::decide, wide});
}

std::vector<NonexistenceCell> verify_nonexistence_suite(const Budget& budget) {
    struct Cell {
        uint64_t q;
        uint32_t r;
        ArcKind kind;
    };
    const std::vector<Cell> cells = {
        {7, 5, ArcKind::oval},       {8, 6, ArcKind::oval},
        {9, 7, ArcKind::oval},       {11, 9, ArcKind::oval},
        {5, 3, ArcKind::hyperoval},  {7, 5, ArcKind::hyperoval},
        {8, 6, ArcKind::hyperoval},  {9, 7, ArcKind::hyperoval},
        {11, 9, ArcKind::hyperoval},
    };
    std::vector<NonexistenceCell> out;
    for (const Cell& c : cells) {
        if (c.kind == ArcKind::hyperoval && c.r % 2 == 0) {
            out.push_back({c.q, c.r, c.kind, SearchStatus::exhausted_none, true, 0, 0});
            continue;
        }
        SearchResult res = exists_arc({Field::from_order(c.q), c.r, c.kind,
                                       SearchMode::decide, budget});
        out.push_back(
            {c.q, c.r, c.kind, res.status, false, res.nodes, res.millis});
    }
    return out;
}

bool all_nonexistent(const std::vector<NonexistenceCell>& cells) {
    for (const auto& c : cells)
        if (c.status != SearchStatus::exhausted_none) return false;
    return true;
}

}  // namespace netarc
