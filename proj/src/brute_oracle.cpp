// Reference search that leans only on the public geometry operations: no
// occupancy tables, no anchoring, no pruning beyond legality of the partial
// set. Deliberately separate from the production kernel so the two can
// disagree loudly in tests.
#include <chrono>

#include "netarc/search.hpp"

namespace netarc {

namespace {

using Clock = std::chrono::steady_clock;

bool legal_extension(const std::vector<Point>& cur, const Point& p,
                     const NetSpec& net) {
    for (size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] == p) return false;
        if (!net.contains(slope_of(cur[i], p))) return false;
        for (size_t j = i + 1; j < cur.size(); ++j)
            if (collinear(cur[i], cur[j], p)) return false;
    }
    return true;
}

bool extend(const std::vector<Point>& plane, size_t start,
            std::vector<Point>& cur, size_t target, const NetSpec& net,
            uint64_t& nodes, const ArcKind want) {
    if (cur.size() == target) return is_arc(PointSet(cur), net).kind == want;
    for (size_t i = start; i < plane.size(); ++i) {
        ++nodes;
        if (!legal_extension(cur, plane[i], net)) continue;
        cur.push_back(plane[i]);
        if (extend(plane, i + 1, cur, target, net, nodes, want)) return true;
        cur.pop_back();
    }
    return false;
}

}  // namespace

SearchResult brute_force_exists(const FieldPtr& f, uint32_t r, ArcKind kind) {
    if (!f || f->q() > 8)
        throw std::invalid_argument("brute_force_exists: reference search stops at q = 8");
    if (kind != ArcKind::oval && kind != ArcKind::hyperoval)
        throw std::invalid_argument("brute_force_exists: kind must be oval or hyperoval");
    if (r < 3 || r > f->q() + 1)
        throw std::invalid_argument("brute_force_exists: need 3 <= r <= q+1");
    if (kind == ArcKind::hyperoval && r % 2 == 0)
        throw std::invalid_argument("brute_force_exists: hyperoval degree must be odd");

    auto t0 = Clock::now();
    uint32_t q = static_cast<uint32_t>(f->q());
    size_t target = kind == ArcKind::hyperoval ? r + 1 : r;

    std::vector<Slope> classes;
    for (uint32_t c = 0; c < q; ++c) classes.push_back(Slope::finite(f->element(c)));
    classes.push_back(Slope::infinity(f));

    std::vector<Point> plane;
    for (uint32_t x = 0; x < q; ++x)
        for (uint32_t y = 0; y < q; ++y) plane.push_back({f->element(x), f->element(y)});

    SearchResult res;
    uint64_t nodes = 0;
    std::vector<uint32_t> idx(r);
    for (uint32_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        std::vector<Slope> pick;
        for (uint32_t i : idx) pick.push_back(classes[i]);
        NetSpec net(f, pick);
        std::vector<Point> cur;
        if (extend(plane, 0, cur, target, net, nodes, kind)) {
            res.status = SearchStatus::found;
            res.witness = SearchWitness{net, PointSet(cur)};
            break;
        }
        int32_t i = static_cast<int32_t>(r) - 1;
        while (i >= 0 && idx[i] == q + 1 - r + static_cast<uint32_t>(i)) --i;
        if (i < 0) {
            res.status = SearchStatus::exhausted_none;
            break;
        }
        ++idx[i];
        for (uint32_t j = static_cast<uint32_t>(i) + 1; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    res.nodes = nodes;
    res.millis = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
            .count());
    return res;
}

}  // namespace netarc
