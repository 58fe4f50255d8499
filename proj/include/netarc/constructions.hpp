#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netarc/nets.hpp"

namespace netarc {

// A named oval or hyperoval recipe together with the net it lives in. Every
// factory re-verifies the arc property before returning.
struct Construction {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    NetSpec net;
    PointSet points;
    ArcKind expected_kind;
};

// {(x, x^2) : x in S} for S the span of the first k basis monomials; a
// (2^k - 1)-net hyperoval closed under addition.
Construction subgroup_hyperoval(const FieldPtr& f, uint32_t k);

enum class LineType { secant, tangent, exterior };

// Conic y = x^2 re-coordinatized so that a secant, tangent or exterior line
// becomes the ideal line: an oval of degree q-1, q or q+1.
Construction conic_oval(const FieldPtr& f, LineType type);

// Even q: the conic plus its nucleus and ideal point, moved into the affine
// chart of an exterior line; a (q+1)-net hyperoval with q+2 points.
Construction conic_hyperoval(const FieldPtr& f);

// Oval from an element c = z + 1/z with z a primitive r-th root of unity,
// via the Chebyshev-style recurrence c_j = c*c_{j-1} - c_{j-2}.
Construction root_of_unity_oval(const FieldPtr& f, uint32_t r);

// O_b = {(1,1),(1,0),(0,0),(0,b),(b+1,b)} for b the least root of x^2+x-1;
// the canonical 5-net oval.
Construction standard_5net_oval(const FieldPtr& f);

// H_b = O_b plus (b+1,1); needs a GF(4) subfield.
Construction standard_5net_hyperoval(const FieldPtr& f);

// 7-net oval from the least root of x^3 - x^2 - 2x + 1.
Construction oval_7net(const FieldPtr& f);

// 6-net oval: a fixed 6-point set away from characteristics 2 and 3, or H_b
// with one extra parallel class when GF(4) is a proper subfield.
Construction oval_6net(const FieldPtr& f);

// The 8-point 7-net hyperoval over GF(8) without any quads.
Construction gf8_quadfree_hyperoval();

enum class SmallKind { oval3, oval4, hyperoval3 };

// Triangle and unit-quad arcs of degree 3 and 4.
Construction small_degree_sets(const FieldPtr& f, SmallKind which);

// All factory names accepted by make_construction.
std::vector<std::string> construction_names();

// Dispatch by name with string parameters ("k", "r", "line", "which").
Construction make_construction(const std::string& name, const FieldPtr& f,
                               const std::map<std::string, std::string>& params);

// Every construction that applies to this field, over its full parameter
// range.
std::vector<Construction> constructions_for(const FieldPtr& f);

}  // namespace netarc
