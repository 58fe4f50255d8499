#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netarc/geometry.hpp"

namespace netarc {

// An r-net held by the Desarguesian affine plane over GF(q): the lines of r
// of the q+1 parallel classes, named by their slopes.
class NetSpec {
  public:
    NetSpec(FieldPtr field, std::vector<Slope> slopes);

    const FieldPtr& field() const { return field_; }
    uint32_t r() const { return static_cast<uint32_t>(slopes_.size()); }
    const std::vector<Slope>& slopes() const { return slopes_; }
    bool contains(const Slope& s) const;
    // position of s in slopes(); throws std::invalid_argument if absent
    size_t index_of(const Slope& s) const;
    bool operator==(const NetSpec& o) const;
    std::string str() const;

    static NetSpec full_plane(const FieldPtr& f);

  private:
    FieldPtr field_;
    std::vector<Slope> slopes_;
};

enum class ArcKind { not_arc, arc, oval, hyperoval };

std::string to_string(ArcKind k);

struct ArcReport {
    ArcKind kind = ArcKind::not_arc;
    // on failure: a collinear triple, else a pair joined outside the net
    // (collinear triples are searched first, in canonical point order)
    std::vector<Point> witness;
    std::optional<Slope> missing_slope;
    // one entry per net class, ascending: number of secant lines in it
    std::vector<std::pair<Slope, uint32_t>> secant_profile;

    bool is_arc() const { return kind != ArcKind::not_arc; }
};

// Checks whether every pair of points is joined by a line of the net meeting
// the set in exactly those two points. Sizes r and r+1 upgrade arc to oval
// and hyperoval.
ArcReport is_arc(const PointSet& s, const NetSpec& net);

// Secant slopes of a set with no three points collinear: the smallest net in
// which the set is an arc. Throws on a collinear triple.
std::vector<Slope> required_slopes(const PointSet& s);

// Secant distribution test for ovals: with r even, at least r/2 classes carry
// exactly r/2 secants; with r odd, every class carries (r-1)/2.
bool secant_count_check(const PointSet& s, const NetSpec& net);

// All 4-subsets for which two or more classes of the net contain two secants
// of the subset.
std::vector<PointSet> find_quads(const PointSet& s, const NetSpec& net);

// Hyperovals pair up the points along every class, so their net degree is odd.
bool hyperoval_parity_guard(const NetSpec& net);

// The net whose classes are the images of the given net's classes.
NetSpec apply_net(const Collineation& c, const NetSpec& net);

}  // namespace netarc
