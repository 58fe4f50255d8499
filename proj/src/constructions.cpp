#include "netarc/constructions.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace netarc {

namespace {

Construction finish(std::string name,
                    std::vector<std::pair<std::string, std::string>> params,
                    NetSpec net, PointSet points, ArcKind expected) {
    ArcReport rep = is_arc(points, net);
    if (rep.kind != expected)
        throw std::logic_error("construction " + name + " produced " +
                               to_string(rep.kind) + " instead of " +
                               to_string(expected));
    return Construction{std::move(name), std::move(params), std::move(net),
                        std::move(points), expected};
}

Slope fin(const FE& m) { return Slope::finite(m); }

std::vector<Slope> all_but(const FieldPtr& f, const std::vector<Slope>& excluded) {
    std::vector<Slope> out;
    for (uint64_t c = 0; c < f->q(); ++c) {
        Slope s = fin(f->element(c));
        if (std::find(excluded.begin(), excluded.end(), s) == excluded.end())
            out.push_back(s);
    }
    Slope inf = Slope::infinity(f);
    if (std::find(excluded.begin(), excluded.end(), inf) == excluded.end())
        out.push_back(inf);
    return out;
}

struct PPoint {
    FE x, y, z;
};

FE trace(const FE& a) {
    FE t = a;
    FE cur = a;
    for (uint32_t i = 1; i < a.field()->k(); ++i) {
        cur = cur.frobenius(1);
        t = t + cur;
    }
    return t;
}

// number of points of the conic y = x^2 on the line y = mx + b
int conic_line_points(const FE& m, const FE& b) {
    const FieldPtr& f = m.field();
    if (f->p() == 2) {
        if (m.is_zero()) return 1;
        return trace(b / (m * m)).is_zero() ? 2 : 0;
    }
    FE four = f->from_int(4);
    FE disc = m * m + four * b;
    if (disc.is_zero()) return 1;
    return disc.pow((f->q() - 1) / 2).is_one() ? 2 : 0;
}

FE det3(const FE m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// invertible matrix whose last row is the given line: the induced projectivity
// carries the line onto the ideal line
std::array<std::array<FE, 3>, 3> line_to_ideal(const FE& a, const FE& b, const FE& c) {
    const FieldPtr& f = a.field();
    FE zero = f->zero(), one = f->one();
    FE basis[3][3] = {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
        FE m[3][3] = {{basis[pr[0]][0], basis[pr[0]][1], basis[pr[0]][2]},
                      {basis[pr[1]][0], basis[pr[1]][1], basis[pr[1]][2]},
                      {a, b, c}};
        if (!det3(m).is_zero())
            return {{{m[0][0], m[0][1], m[0][2]},
                     {m[1][0], m[1][1], m[1][2]},
                     {m[2][0], m[2][1], m[2][2]}}};
    }
    throw std::logic_error("degenerate line coefficients");
}

PPoint apply3(const std::array<std::array<FE, 3>, 3>& t, const PPoint& p) {
    return {t[0][0] * p.x + t[0][1] * p.y + t[0][2] * p.z,
            t[1][0] * p.x + t[1][1] * p.y + t[1][2] * p.z,
            t[2][0] * p.x + t[2][1] * p.y + t[2][2] * p.z};
}

std::vector<PPoint> conic_points(const FieldPtr& f) {
    std::vector<PPoint> pts;
    for (uint64_t c = 0; c < f->q(); ++c) {
        FE t = f->element(c);
        pts.push_back({t, t * t, f->one()});
    }
    pts.push_back({f->zero(), f->one(), f->zero()});
    return pts;
}

// first line y = mx + b, ordered by (m, b) codes, meeting the conic in no
// point; with require_nonzero_m also avoiding the ideal point <1,0,0>
std::pair<FE, FE> first_exterior_line(const FieldPtr& f, bool require_nonzero_m) {
    for (uint64_t mc = 0; mc < f->q(); ++mc) {
        FE m = f->element(mc);
        if (require_nonzero_m && m.is_zero()) continue;
        for (uint64_t bc = 0; bc < f->q(); ++bc) {
            FE b = f->element(bc);
            if (conic_line_points(m, b) == 0) return {m, b};
        }
    }
    throw std::logic_error("no exterior line to the conic");
}

uint64_t need_int(const std::map<std::string, std::string>& params,
                  const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing parameter: " + key);
    size_t used = 0;
    uint64_t v = std::stoull(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("bad integer parameter: " + key);
    return v;
}

std::string need_str(const std::map<std::string, std::string>& params,
                     const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing parameter: " + key);
    return it->second;
}

std::vector<uint32_t> distinct_prime_divisors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// c = z + 1/z for z of exact multiplicative order r, detected through the
// recurrence alone: c_j = 2 exactly when z^j = 1
bool order_r_candidate(const FE& c, uint32_t r,
                       const std::vector<uint32_t>& prime_divs,
                       std::vector<FE>* seq_out) {
    const FieldPtr& f = c.field();
    FE two = f->from_int(2);
    std::vector<FE> seq(r + 1, f->zero());
    seq[0] = two;
    if (r >= 1) seq[1] = c;
    for (uint32_t j = 2; j <= r; ++j) seq[j] = c * seq[j - 1] - seq[j - 2];
    if (!(seq[r] == two)) return false;
    for (uint32_t p : prime_divs)
        if (seq[r / p] == two) return false;
    if (seq_out) *seq_out = std::move(seq);
    return true;
}

}  // namespace

Construction subgroup_hyperoval(const FieldPtr& f, uint32_t k) {
    if (f->p() != 2)
        throw std::invalid_argument("subgroup_hyperoval: needs characteristic 2");
    if (k < 2)
        throw std::invalid_argument("subgroup_hyperoval: k < 2 gives a degenerate net");
    if (k > f->k())
        throw std::invalid_argument("subgroup_hyperoval: 2^k exceeds the field order");
    uint64_t n = 1ull << k;
    std::vector<Point> pts;
    std::vector<Slope> slopes;
    for (uint64_t c = 0; c < n; ++c) {
        FE x = f->element(c);
        pts.push_back({x, x * x});
        if (c) slopes.push_back(fin(x));
    }
    return finish("subgroup_hyperoval", {{"k", std::to_string(k)}},
                  NetSpec(f, std::move(slopes)), PointSet(std::move(pts)),
                  ArcKind::hyperoval);
}

Construction conic_oval(const FieldPtr& f, LineType type) {
    FE zero = f->zero(), one = f->one();
    FE la = zero, lb = zero, lc = zero;
    std::string tname;
    switch (type) {
        case LineType::secant:
            if (f->q() < 4)
                throw std::invalid_argument("conic_oval: secant needs q >= 4");
            la = one;
            lb = -one;
            lc = zero;
            tname = "secant";
            break;
        case LineType::tangent:
            if (f->q() < 3)
                throw std::invalid_argument("conic_oval: tangent needs q >= 3");
            la = zero;
            lb = one;
            lc = zero;
            tname = "tangent";
            break;
        case LineType::exterior: {
            auto [m, b] = first_exterior_line(f, false);
            la = m;
            lb = -one;
            lc = b;
            tname = "exterior";
            break;
        }
    }
    auto t = line_to_ideal(la, lb, lc);
    std::vector<Point> pts;
    std::vector<Slope> excluded;
    for (const PPoint& p : conic_points(f)) {
        PPoint im = apply3(t, p);
        if (im.z.is_zero())
            excluded.push_back(im.x.is_zero() ? Slope::infinity(f)
                                              : fin(im.y / im.x));
        else
            pts.push_back({im.x / im.z, im.y / im.z});
    }
    return finish("conic_oval", {{"line", tname}}, NetSpec(f, all_but(f, excluded)),
                  PointSet(std::move(pts)), ArcKind::oval);
}

Construction conic_hyperoval(const FieldPtr& f) {
    if (f->p() != 2)
        throw std::invalid_argument("conic_hyperoval: needs characteristic 2");
    if (f->q() < 4)
        throw std::invalid_argument("conic_hyperoval: needs q >= 4");
    auto [m, b] = first_exterior_line(f, true);
    auto t = line_to_ideal(m, -f->one(), b);
    std::vector<PPoint> hpts = conic_points(f);
    hpts.push_back({f->one(), f->zero(), f->zero()});
    std::vector<Point> pts;
    for (const PPoint& p : hpts) {
        PPoint im = apply3(t, p);
        if (im.z.is_zero())
            throw std::logic_error("conic_hyperoval: chosen line meets the set");
        pts.push_back({im.x / im.z, im.y / im.z});
    }
    return finish("conic_hyperoval", {}, NetSpec(f, all_but(f, {})),
                  PointSet(std::move(pts)), ArcKind::hyperoval);
}

Construction root_of_unity_oval(const FieldPtr& f, uint32_t r) {
    if (r < 3) throw std::invalid_argument("root_of_unity_oval: r < 3");
    auto prime_divs = distinct_prime_divisors(r);
    std::vector<FE> seq;
    bool found = false;
    FE c = f->zero();
    for (uint64_t cc = 0; cc < f->q() && !found; ++cc) {
        c = f->element(cc);
        found = order_r_candidate(c, r, prime_divs, &seq);
    }
    if (!found)
        throw std::invalid_argument(
            "root_of_unity_oval: no element z + 1/z of order " + std::to_string(r) +
            " over " + f->descriptor());
    std::vector<Point> pts;
    FE s = f->one();
    for (uint32_t k = 1; k <= r; ++k) {
        pts.push_back({seq[k], s});
        s = s + seq[k];
    }
    PointSet ps(std::move(pts));
    NetSpec net(f, required_slopes(ps));
    if (net.r() != r)
        throw std::logic_error("root_of_unity_oval: slope count mismatch");
    return finish("root_of_unity_oval",
                  {{"r", std::to_string(r)}, {"c", c.str()}}, std::move(net),
                  std::move(ps), ArcKind::oval);
}

Construction standard_5net_oval(const FieldPtr& f) {
    auto roots = poly_roots(Poly::from_ints(f, {-1, 1, 1}));
    if (roots.empty())
        throw std::invalid_argument("standard_5net_oval: x^2+x-1 has no root in " +
                                    f->descriptor());
    FE b = roots.front();
    FE one = f->one(), zero = f->zero();
    PointSet pts({{one, one}, {one, zero}, {zero, zero}, {zero, b}, {b + one, b}});
    NetSpec net(f, {fin(zero), fin(one), Slope::infinity(f), fin(one - b), fin(-b)});
    return finish("standard_5net_oval", {{"b", b.str()}}, std::move(net),
                  std::move(pts), ArcKind::oval);
}

Construction standard_5net_hyperoval(const FieldPtr& f) {
    if (f->p() != 2 || f->k() % 2 != 0)
        throw std::invalid_argument(
            "standard_5net_hyperoval: needs a GF(4) subfield");
    auto roots = poly_roots(Poly::from_ints(f, {-1, 1, 1}));
    if (roots.empty())
        throw std::logic_error("standard_5net_hyperoval: missing cube roots");
    FE b = roots.front();
    FE one = f->one(), zero = f->zero();
    PointSet pts({{one, one},
                  {one, zero},
                  {zero, zero},
                  {zero, b},
                  {b + one, b},
                  {b + one, one}});
    NetSpec net(f, {fin(zero), fin(one), Slope::infinity(f), fin(one - b), fin(-b)});
    return finish("standard_5net_hyperoval", {{"b", b.str()}}, std::move(net),
                  std::move(pts), ArcKind::hyperoval);
}

Construction oval_7net(const FieldPtr& f) {
    auto roots = poly_roots(Poly::from_ints(f, {1, -2, -1, 1}));
    if (roots.empty())
        throw std::invalid_argument("oval_7net: x^3-x^2-2x+1 has no root in " +
                                    f->descriptor());
    FE b = roots.front();
    FE one = f->one(), zero = f->zero();
    PointSet pts({{zero, zero},
                  {one, zero},
                  {zero, -one},
                  {one, b - one},
                  {one - b, -one},
                  {b * b - b, b - one},
                  {one - b, b - b * b}});
    NetSpec net(f, {fin(one), fin(zero), fin(b), fin(b - one), Slope::infinity(f),
                    fin(b.inv()), fin((b - one).inv())});
    return finish("oval_7net", {{"b", b.str()}}, std::move(net), std::move(pts),
                  ArcKind::oval);
}

Construction oval_6net(const FieldPtr& f) {
    FE one = f->one(), zero = f->zero();
    if (f->p() != 2 && f->p() != 3) {
        FE two = f->from_int(2);
        PointSet pts({{zero, zero},
                      {one, zero},
                      {zero, one},
                      {two, one},
                      {one, two},
                      {two, two}});
        NetSpec net(f, {fin(zero), fin(one), Slope::infinity(f), fin(two.inv()),
                        fin(two), fin(-one)});
        return finish("oval_6net", {}, std::move(net), std::move(pts), ArcKind::oval);
    }
    if (f->p() != 2 || f->k() % 2 != 0 || f->q() == 4)
        throw std::invalid_argument(
            "oval_6net: needs characteristic away from 2 and 3, or a proper "
            "GF(4) subfield");
    Construction h = standard_5net_hyperoval(f);
    std::vector<Slope> slopes = h.net.slopes();
    for (uint64_t c = 0;; ++c) {
        Slope s = fin(f->element(c));
        if (!h.net.contains(s)) {
            slopes.push_back(s);
            break;
        }
    }
    return finish("oval_6net", {}, NetSpec(f, std::move(slopes)),
                  std::move(h.points), ArcKind::oval);
}

Construction gf8_quadfree_hyperoval() {
    auto f = Field::make(2, 3);
    FE b = f->element(2);
    FE ib = b.inv();
    FE one = f->one(), zero = f->zero();
    PointSet pts({{zero, zero},
                  {one, one},
                  {zero, ib},
                  {ib, zero},
                  {one, b},
                  {b, one},
                  {b, ib},
                  {ib, b}});
    NetSpec net(f, {fin(one), Slope::infinity(f), fin(zero), fin(b), fin(ib),
                    fin(ib * ib), fin(b * b)});
    return finish("gf8_quadfree_hyperoval", {}, std::move(net), std::move(pts),
                  ArcKind::hyperoval);
}

Construction small_degree_sets(const FieldPtr& f, SmallKind which) {
    FE one = f->one(), zero = f->zero();
    switch (which) {
        case SmallKind::oval3: {
            PointSet pts({{zero, zero}, {one, zero}, {zero, one}});
            NetSpec net(f, {fin(zero), fin(-one), Slope::infinity(f)});
            return finish("small_degree_sets", {{"which", "3-oval"}}, std::move(net),
                          std::move(pts), ArcKind::oval);
        }
        case SmallKind::oval4: {
            if (f->q() == 2)
                throw std::invalid_argument(
                    "small_degree_sets: no 4-net oval over GF(2)");
            PointSet pts({{zero, zero}, {one, zero}, {one, one}, {zero, one}});
            std::vector<Slope> slopes = {fin(zero), fin(one), fin(-one),
                                         Slope::infinity(f)};
            if (f->p() == 2) {
                // the diagonals merge in characteristic 2: borrow one more class
                slopes = {fin(zero), fin(one), fin(f->element(2)),
                          Slope::infinity(f)};
            }
            return finish("small_degree_sets", {{"which", "4-oval"}},
                          NetSpec(f, std::move(slopes)), std::move(pts),
                          ArcKind::oval);
        }
        case SmallKind::hyperoval3: {
            if (f->p() != 2)
                throw std::invalid_argument(
                    "small_degree_sets: 3-net hyperovals need characteristic 2");
            PointSet pts({{zero, zero}, {one, zero}, {one, one}, {zero, one}});
            NetSpec net(f, {fin(zero), fin(one), Slope::infinity(f)});
            return finish("small_degree_sets", {{"which", "3-hyperoval"}},
                          std::move(net), std::move(pts), ArcKind::hyperoval);
        }
    }
    throw std::logic_error("small_degree_sets: bad kind");
}

std::vector<std::string> construction_names() {
    return {"subgroup_hyperoval",     "conic_oval",
            "conic_hyperoval",        "root_of_unity_oval",
            "standard_5net_oval",     "standard_5net_hyperoval",
            "oval_7net",              "oval_6net",
            "gf8_quadfree_hyperoval", "small_degree_sets"};
}

Construction make_construction(const std::string& name, const FieldPtr& f,
                               const std::map<std::string, std::string>& params) {
    if (name == "subgroup_hyperoval")
        return subgroup_hyperoval(f, static_cast<uint32_t>(need_int(params, "k")));
    if (name == "conic_oval") {
        std::string line = need_str(params, "line");
        if (line == "secant") return conic_oval(f, LineType::secant);
        if (line == "tangent") return conic_oval(f, LineType::tangent);
        if (line == "exterior") return conic_oval(f, LineType::exterior);
        throw std::invalid_argument("conic_oval: line must be secant, tangent or "
                                    "exterior");
    }
    if (name == "conic_hyperoval") return conic_hyperoval(f);
    if (name == "root_of_unity_oval")
        return root_of_unity_oval(f, static_cast<uint32_t>(need_int(params, "r")));
    if (name == "standard_5net_oval") return standard_5net_oval(f);
    if (name == "standard_5net_hyperoval") return standard_5net_hyperoval(f);
    if (name == "oval_7net") return oval_7net(f);
    if (name == "oval_6net") return oval_6net(f);
    if (name == "gf8_quadfree_hyperoval") return gf8_quadfree_hyperoval();
    if (name == "small_degree_sets") {
        std::string which = need_str(params, "which");
        if (which == "3-oval") return small_degree_sets(f, SmallKind::oval3);
        if (which == "4-oval") return small_degree_sets(f, SmallKind::oval4);
        if (which == "3-hyperoval")
            return small_degree_sets(f, SmallKind::hyperoval3);
        throw std::invalid_argument(
            "small_degree_sets: which must be 3-oval, 4-oval or 3-hyperoval");
    }
    throw std::invalid_argument("unknown construction: " + name);
}

std::vector<Construction> constructions_for(const FieldPtr& f) {
    std::vector<Construction> out;
    auto add = [&out](Construction c) { out.push_back(std::move(c)); };
    add(small_degree_sets(f, SmallKind::oval3));
    if (f->q() > 2) add(small_degree_sets(f, SmallKind::oval4));
    if (f->p() == 2) add(small_degree_sets(f, SmallKind::hyperoval3));
    if (f->q() >= 4) add(conic_oval(f, LineType::secant));
    if (f->q() >= 3) add(conic_oval(f, LineType::tangent));
    add(conic_oval(f, LineType::exterior));
    if (f->p() == 2 && f->q() >= 4) add(conic_hyperoval(f));
    if (f->p() == 2)
        for (uint32_t k = 2; k <= f->k(); ++k) add(subgroup_hyperoval(f, k));
    for (uint32_t r = 3; r <= f->q() + 1; ++r) {
        auto divs = distinct_prime_divisors(r);
        for (uint64_t cc = 0; cc < f->q(); ++cc)
            if (order_r_candidate(f->element(cc), r, divs, nullptr)) {
                add(root_of_unity_oval(f, r));
                break;
            }
    }
    if (!poly_roots(Poly::from_ints(f, {-1, 1, 1})).empty())
        add(standard_5net_oval(f));
    if (f->p() == 2 && f->k() % 2 == 0) add(standard_5net_hyperoval(f));
    if (f->p() > 3 || (f->p() == 2 && f->k() % 2 == 0 && f->q() > 4))
        add(oval_6net(f));
    if (!poly_roots(Poly::from_ints(f, {1, -2, -1, 1})).empty()) add(oval_7net(f));
    if (f->same(*Field::make(2, 3))) add(gf8_quadfree_hyperoval());
    return out;
}

}  // namespace netarc
