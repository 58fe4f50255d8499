#include "netarc/nets.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace netarc {

namespace {

void need_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
    if (a.get() != b.get())
        throw std::invalid_argument(std::string(where) + ": field mismatch");
}

}  // namespace

NetSpec::NetSpec(FieldPtr field, std::vector<Slope> slopes)
    : field_(std::move(field)), slopes_(std::move(slopes)) {
    if (!field_) throw std::invalid_argument("NetSpec: null field");
    for (const auto& s : slopes_)
        need_same_field(s.field(), field_, "NetSpec");
    std::sort(slopes_.begin(), slopes_.end());
    for (size_t i = 1; i < slopes_.size(); ++i)
        if (slopes_[i - 1] == slopes_[i])
            throw std::invalid_argument("NetSpec: duplicate slope " + slopes_[i].str());
    if (slopes_.size() < 3)
        throw std::invalid_argument("NetSpec: a net needs at least 3 parallel classes");
    if (slopes_.size() > field_->q() + 1)
        throw std::invalid_argument("NetSpec: more classes than the plane has");
}

bool NetSpec::contains(const Slope& s) const {
    return std::binary_search(slopes_.begin(), slopes_.end(), s);
}

size_t NetSpec::index_of(const Slope& s) const {
    auto it = std::lower_bound(slopes_.begin(), slopes_.end(), s);
    if (it == slopes_.end() || !(*it == s))
        throw std::invalid_argument("NetSpec: slope " + s.str() + " not in net");
    return static_cast<size_t>(it - slopes_.begin());
}

bool NetSpec::operator==(const NetSpec& o) const {
    return field_->same(*o.field_) && slopes_ == o.slopes_;
}

std::string NetSpec::str() const {
    std::ostringstream os;
    os << field_->descriptor() << " net {";
    for (size_t i = 0; i < slopes_.size(); ++i)
        os << (i ? "," : "") << slopes_[i].str();
    os << "}";
    return os.str();
}

NetSpec NetSpec::full_plane(const FieldPtr& f) {
    std::vector<Slope> s;
    for (uint64_t c = 0; c < f->q(); ++c) s.push_back(Slope::finite(f->element(c)));
    s.push_back(Slope::infinity(f));
    return NetSpec(f, std::move(s));
}

std::string to_string(ArcKind k) {
    switch (k) {
        case ArcKind::not_arc: return "not-arc";
        case ArcKind::arc: return "arc";
        case ArcKind::oval: return "oval";
        case ArcKind::hyperoval: return "hyperoval";
    }
    throw std::logic_error("to_string: bad ArcKind");
}

ArcReport is_arc(const PointSet& s, const NetSpec& net) {
    need_same_field(s.field(), net.field(), "is_arc");
    size_t n = s.size();
    if (n < 2) throw std::invalid_argument("is_arc: need at least 2 points");

    ArcReport rep;
    for (size_t i = 0; i + 2 < n; ++i)
        for (size_t j = i + 1; j + 1 < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (collinear(s[i], s[j], s[k])) {
                    rep.kind = ArcKind::not_arc;
                    rep.witness = {s[i], s[j], s[k]};
                    return rep;
                }
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Slope m = slope_of(s[i], s[j]);
            if (!net.contains(m)) {
                rep.kind = ArcKind::not_arc;
                rep.witness = {s[i], s[j]};
                rep.missing_slope = m;
                return rep;
            }
        }

    std::vector<uint32_t> counts(net.r(), 0);
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            ++counts[net.index_of(slope_of(s[i], s[j]))];
    for (size_t c = 0; c < counts.size(); ++c)
        rep.secant_profile.emplace_back(net.slopes()[c], counts[c]);

    if (n == net.r())
        rep.kind = ArcKind::oval;
    else if (n == net.r() + 1)
        rep.kind = ArcKind::hyperoval;
    else
        rep.kind = ArcKind::arc;
    return rep;
}

std::vector<Slope> required_slopes(const PointSet& s) {
    size_t n = s.size();
    for (size_t i = 0; i + 2 < n; ++i)
        for (size_t j = i + 1; j + 1 < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (collinear(s[i], s[j], s[k]))
                    throw std::invalid_argument(
                        "required_slopes: collinear triple " + s[i].str() + " " +
                        s[j].str() + " " + s[k].str());
    std::vector<Slope> out;
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = i + 1; j < n; ++j) out.push_back(slope_of(s[i], s[j]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Slope& a, const Slope& b) { return a == b; }),
              out.end());
    return out;
}

bool secant_count_check(const PointSet& s, const NetSpec& net) {
    ArcReport rep = is_arc(s, net);
    if (rep.kind != ArcKind::oval)
        throw std::invalid_argument("secant_count_check: not an oval of this net");
    uint32_t r = net.r();
    if (r % 2) {
        for (const auto& [m, c] : rep.secant_profile)
            if (c != (r - 1) / 2) return false;
        return true;
    }
    uint32_t full = 0;
    for (const auto& [m, c] : rep.secant_profile)
        if (c == r / 2) ++full;
    return full >= r / 2;
}

std::vector<PointSet> find_quads(const PointSet& s, const NetSpec& net) {
    need_same_field(s.field(), net.field(), "find_quads");
    size_t n = s.size();
    std::vector<PointSet> out;
    static const int M[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (size_t a = 0; a + 3 < n; ++a)
        for (size_t b = a + 1; b + 2 < n; ++b)
            for (size_t c = b + 1; c + 1 < n; ++c)
                for (size_t d = c + 1; d < n; ++d) {
                    const Point q[4] = {s[a], s[b], s[c], s[d]};
                    int matched = 0;
                    for (const auto& m : M) {
                        Slope s1 = slope_of(q[m[0]], q[m[1]]);
                        Slope s2 = slope_of(q[m[2]], q[m[3]]);
                        if (!(s1 == s2) || !net.contains(s1)) continue;
                        if (line_through(q[m[0]], s1) == line_through(q[m[2]], s2))
                            continue;
                        ++matched;
                    }
                    if (matched >= 2)
                        out.push_back(PointSet({q[0], q[1], q[2], q[3]}));
                }
    return out;
}

bool hyperoval_parity_guard(const NetSpec& net) { return net.r() % 2 == 1; }

NetSpec apply_net(const Collineation& c, const NetSpec& net) {
    std::vector<Slope> s;
    for (const auto& m : net.slopes()) s.push_back(c.slope_image(m));
    return NetSpec(net.field(), std::move(s));
}

}  // namespace netarc
