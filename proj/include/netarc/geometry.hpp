#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netarc/gf.hpp"

namespace netarc {

/// Point of the affine plane over GF(q).
struct Point {
    FE x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    /// Lexicographic on (x, y) codes; the canonical point order everywhere.
    bool operator<(const Point& o) const {
        if (x.code() != o.x.code()) return x.code() < o.x.code();
        return y.code() < o.y.code();
    }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// Direction of a parallel class: an element of GF(q) or the vertical class.
class Slope {
public:
    static Slope finite(FE m);
    static Slope infinity(FieldPtr field);

    bool is_infinity() const { return inf_; }
    const FE& m() const;           // throws on the vertical class
    const FieldPtr& field() const { return field_; }

    bool operator==(const Slope& o) const;
    bool operator!=(const Slope& o) const { return !(*this == o); }
    /// Finite slopes ascending by code, the vertical class last.
    bool operator<(const Slope& o) const;
    /// Integer code, or "inf".
    std::string str() const;

private:
    Slope(FieldPtr field, bool inf, FE m) : field_(std::move(field)), inf_(inf), m_(m) {}
    FieldPtr field_;
    bool inf_;
    FE m_;
};

/// Affine line, either x = c or y = m x + b.
struct Line {
    bool vertical;
    FE a;  // c for vertical lines, m otherwise
    FE b;  // unused for vertical lines

    bool contains(const Point& P) const;
    Slope slope() const;
    bool operator==(const Line& o) const;
};

/// Slope of the line joining two distinct points.
Slope slope_of(const Point& P, const Point& Q);
/// The unique line through P in the parallel class s.
Line line_through(const Point& P, const Slope& s);
/// Whether three pairwise distinct points lie on a common line.
bool collinear(const Point& P, const Point& Q, const Point& R);

/// Ordered canonical point set: ascending, duplicate-free, one field.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts);

    const FieldPtr& field() const { return field_; }
    size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](size_t i) const { return pts_[i]; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    bool contains(const Point& P) const;

    bool operator==(const PointSet& o) const { return pts_ == o.pts_; }
    bool operator!=(const PointSet& o) const { return !(*this == o); }
    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Point> pts_;
};

/// Affine semilinear collineation.  Acts as P -> M P^(p^i) + t with
/// M = [[a, b], [c, d]], t = (e, f): the Frobenius power is applied first,
/// then the linear part, then the translation.
class Collineation {
public:
    Collineation(FE a, FE b, FE c, FE d, FE e, FE f, uint32_t frob_power);
    static Collineation identity(const FieldPtr& field);
    static Collineation translation(const FE& e, const FE& f);

    const FieldPtr& field() const { return field_; }
    FE a() const { return a_; }
    FE b() const { return b_; }
    FE c() const { return c_; }
    FE d() const { return d_; }
    FE e() const { return e_; }
    FE f() const { return f_; }
    uint32_t frob_power() const { return frob_; }

    Point apply(const Point& P) const;
    PointSet apply(const PointSet& S) const;
    Slope slope_image(const Slope& s) const;

    Collineation inverse() const;
    std::string str() const;

private:
    FieldPtr field_;
    FE a_, b_, c_, d_, e_, f_;
    uint32_t frob_;
};

/// Composition: apply `first`, then `second`.
Collineation compose(const Collineation& second, const Collineation& first);

/// The linear collineation taking A -> (0,0), B -> (1,1) and the parallel
/// classes m0, m1, minf to slopes 0, 1, inf.  Requires slope_of(A,B) = m1
/// and pairwise distinct classes.
Collineation frame_collineation(const Point& A, const Point& B, const Slope& m0,
                                const Slope& m1, const Slope& minf);

/// The linear collineation taking the ordered quad (A,B,C,E) - with
/// AB parallel to CE, AE parallel to BC, no three collinear - to the unit
/// quad (0,0), (1,0), (1,1), (0,1).
Collineation quad_collineation(const Point& A, const Point& B, const Point& C,
                               const Point& E);

/// A collineation with (S)phi = T if one exists.  Decides by anchoring an
/// ordered non-collinear triple of S on every ordered non-collinear triple
/// of T across all Frobenius powers; complete because the affine group is
/// sharply transitive on triangles.
std::optional<Collineation> equivalent(const PointSet& S, const PointSet& T);

/// Same decision by sweeping the full collineation group; cross-check only,
/// guarded to q <= 11.
std::optional<Collineation> equivalent_exhaustive(const PointSet& S, const PointSet& T);

}  // namespace netarc
