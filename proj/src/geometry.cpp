#include "netarc/geometry.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace netarc {

namespace {

const FieldPtr& need_field(const FieldPtr& f) {
    if (!f) throw std::logic_error("uninitialized field");
    return f;
}

void need_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!need_field(a)->same(*need_field(b)))
        throw std::invalid_argument("objects from different fields");
}

// Direction vector of a parallel class.
std::pair<FE, FE> direction(const Slope& s) {
    const auto& f = s.field();
    if (s.is_infinity()) return {f->zero(), f->one()};
    return {f->one(), s.m()};
}

struct Mat2 {
    FE a, b, c, d;  // [[a, b], [c, d]]

    FE det() const { return a * d - b * c; }
    Mat2 inv() const {
        FE dt = det();
        if (dt.is_zero()) throw std::domain_error("singular matrix");
        FE id = dt.inv();
        return {d * id, -b * id, -c * id, a * id};
    }
    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    std::pair<FE, FE> apply(const FE& x, const FE& y) const {
        return {a * x + b * y, c * x + d * y};
    }
};

// Columns v1, v2.
Mat2 from_columns(const std::pair<FE, FE>& v1, const std::pair<FE, FE>& v2) {
    return {v1.first, v2.first, v1.second, v2.second};
}

// Solves a 3x3 system by Gaussian elimination; throws on singular input.
std::array<FE, 3> solve3(std::array<std::array<FE, 4>, 3> rows) {
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular linear system");
        std::swap(rows[col], rows[piv]);
        FE iv = rows[col][col].inv();
        for (int c = col; c < 4; ++c) rows[col][c] = rows[col][c] * iv;
        for (int r = 0; r < 3; ++r) {
            if (r == col || rows[r][col].is_zero()) continue;
            FE factor = rows[r][col];
            for (int c = col; c < 4; ++c)
                rows[r][c] = rows[r][c] - factor * rows[col][c];
        }
    }
    return {rows[0][3], rows[1][3], rows[2][3]};
}

Point frob_point(const Point& P, uint32_t i) {
    return {P.x.frobenius(i), P.y.frobenius(i)};
}

}  // namespace

// --- Slope -------------------------------------------------------------

Slope Slope::finite(FE m) {
    auto f = m.field();
    if (!f) throw std::invalid_argument("null field");
    return Slope(f, false, m);
}

Slope Slope::infinity(FieldPtr field) {
    if (!field) throw std::invalid_argument("null field");
    return Slope(field, true, field->zero());
}

const FE& Slope::m() const {
    if (inf_) throw std::logic_error("vertical class has no finite slope");
    return m_;
}

bool Slope::operator==(const Slope& o) const {
    need_same_field(field_, o.field_);
    if (inf_ != o.inf_) return false;
    return inf_ || m_.code() == o.m_.code();
}

bool Slope::operator<(const Slope& o) const {
    if (inf_ != o.inf_) return !inf_;
    if (inf_) return false;
    return m_.code() < o.m_.code();
}

std::string Slope::str() const { return inf_ ? "inf" : m_.str(); }

// --- Line --------------------------------------------------------------

bool Line::contains(const Point& P) const {
    if (vertical) return P.x == a;
    return P.y == a * P.x + b;
}

Slope Line::slope() const {
    if (vertical) return Slope::infinity(a.field());
    return Slope::finite(a);
}

bool Line::operator==(const Line& o) const {
    if (vertical != o.vertical) return false;
    if (vertical) return a == o.a;
    return a == o.a && b == o.b;
}

Slope slope_of(const Point& P, const Point& Q) {
    need_same_field(P.x.field(), Q.x.field());
    if (P == Q) throw std::invalid_argument("slope of a repeated point");
    FE dx = Q.x - P.x;
    if (dx.is_zero()) return Slope::infinity(P.x.field());
    return Slope::finite((Q.y - P.y) / dx);
}

Line line_through(const Point& P, const Slope& s) {
    need_same_field(P.x.field(), s.field());
    if (s.is_infinity()) return {true, P.x, P.x.field()->zero()};
    return {false, s.m(), P.y - s.m() * P.x};
}

bool collinear(const Point& P, const Point& Q, const Point& R) {
    need_same_field(P.x.field(), Q.x.field());
    need_same_field(P.x.field(), R.x.field());
    if (P == Q || P == R || Q == R)
        throw std::invalid_argument("collinearity of repeated points");
    return ((Q.x - P.x) * (R.y - P.y) - (Q.y - P.y) * (R.x - P.x)).is_zero();
}

// --- PointSet ----------------------------------------------------------

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) return;
    field_ = pts_[0].x.field();
    need_field(field_);
    for (const auto& P : pts_) {
        need_same_field(field_, P.x.field());
        need_same_field(field_, P.y.field());
    }
    std::sort(pts_.begin(), pts_.end());
    for (size_t i = 1; i < pts_.size(); ++i)
        if (pts_[i] == pts_[i - 1])
            throw std::invalid_argument("duplicate point " + pts_[i].str());
}

bool PointSet::contains(const Point& P) const {
    return std::binary_search(pts_.begin(), pts_.end(), P);
}

std::string PointSet::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < pts_.size(); ++i) {
        if (i) os << ' ';
        os << pts_[i].str();
    }
    os << '}';
    return os.str();
}

// --- Collineation ------------------------------------------------------

Collineation::Collineation(FE a, FE b, FE c, FE d, FE e, FE f, uint32_t frob_power)
    : field_(a.field()), a_(a), b_(b), c_(c), d_(d), e_(e), f_(f), frob_(frob_power) {
    need_field(field_);
    for (const FE* x : {&b_, &c_, &d_, &e_, &f_}) need_same_field(field_, x->field());
    if ((a_ * d_ - b_ * c_).is_zero())
        throw std::invalid_argument("collineation matrix is singular");
    if (frob_ >= field_->k())
        throw std::invalid_argument("frobenius power out of range");
}

Collineation Collineation::identity(const FieldPtr& field) {
    need_field(field);
    return Collineation(field->one(), field->zero(), field->zero(), field->one(),
                        field->zero(), field->zero(), 0);
}

Collineation Collineation::translation(const FE& e, const FE& f) {
    auto field = e.field();
    need_field(field);
    return Collineation(field->one(), field->zero(), field->zero(), field->one(), e, f, 0);
}

Point Collineation::apply(const Point& P) const {
    need_same_field(field_, P.x.field());
    FE x = P.x.frobenius(frob_), y = P.y.frobenius(frob_);
    return {a_ * x + b_ * y + e_, c_ * x + d_ * y + f_};
}

PointSet Collineation::apply(const PointSet& S) const {
    std::vector<Point> out;
    out.reserve(S.size());
    for (const auto& P : S) out.push_back(apply(P));
    return PointSet(std::move(out));
}

Slope Collineation::slope_image(const Slope& s) const {
    need_same_field(field_, s.field());
    if (s.is_infinity()) {
        if (b_.is_zero()) return Slope::infinity(field_);
        return Slope::finite(d_ / b_);
    }
    FE m = s.m().frobenius(frob_);
    FE den = a_ + b_ * m;
    if (den.is_zero()) return Slope::infinity(field_);
    return Slope::finite((c_ + d_ * m) / den);
}

Collineation compose(const Collineation& second, const Collineation& first) {
    need_same_field(second.field(), first.field());
    uint32_t k = first.field()->k();
    uint32_t i2 = second.frob_power();
    auto s2 = [&](const FE& v) { return v.frobenius(i2); };
    Mat2 m2{second.a(), second.b(), second.c(), second.d()};
    Mat2 m1s{s2(first.a()), s2(first.b()), s2(first.c()), s2(first.d())};
    Mat2 m = m2.mul(m1s);
    auto t1s = m2.apply(s2(first.e()), s2(first.f()));
    return Collineation(m.a, m.b, m.c, m.d, t1s.first + second.e(),
                        t1s.second + second.f(),
                        (first.frob_power() + i2) % k);
}

Collineation Collineation::inverse() const {
    uint32_t k = field_->k();
    uint32_t ip = (k - frob_) % k;
    auto s = [&](const FE& v) { return v.frobenius(ip); };
    Mat2 mi = Mat2{s(a_), s(b_), s(c_), s(d_)}.inv();
    auto t = mi.apply(s(e_), s(f_));
    return Collineation(mi.a, mi.b, mi.c, mi.d, -t.first, -t.second, ip);
}

std::string Collineation::str() const {
    std::ostringstream os;
    os << "[[" << a_.str() << ',' << b_.str() << "],[" << c_.str() << ',' << d_.str()
       << "]] + (" << e_.str() << ',' << f_.str() << ") frob^" << frob_;
    return os.str();
}

// --- Frame and quad normalization --------------------------------------

Collineation frame_collineation(const Point& A, const Point& B, const Slope& m0,
                                const Slope& m1, const Slope& minf) {
    const auto& f = need_field(A.x.field());
    if (A == B) throw std::invalid_argument("frame points must be distinct");
    if (m0 == m1 || m0 == minf || m1 == minf)
        throw std::invalid_argument("frame classes must be distinct");
    if (!(slope_of(A, B) == m1))
        throw std::invalid_argument("slope of AB must be the middle frame class");

    FE zero = f->zero(), one = f->one();
    auto vinf = direction(minf);
    auto v0 = direction(m0);
    std::array<FE, 3> row1 = solve3({{{A.x, A.y, one, zero},
                                      {B.x, B.y, one, one},
                                      {vinf.first, vinf.second, zero, zero}}});
    std::array<FE, 3> row2 = solve3({{{A.x, A.y, one, zero},
                                      {B.x, B.y, one, one},
                                      {v0.first, v0.second, zero, zero}}});
    Collineation phi(row1[0], row1[1], row2[0], row2[1], row1[2], row2[2], 0);

    Point o{zero, zero}, u{one, one};
    if (phi.apply(A) != o || phi.apply(B) != u ||
        !(phi.slope_image(m0) == Slope::finite(zero)) ||
        !(phi.slope_image(m1) == Slope::finite(one)) ||
        !phi.slope_image(minf).is_infinity())
        throw std::logic_error("frame normalization failed postconditions");
    return phi;
}

Collineation quad_collineation(const Point& A, const Point& B, const Point& C,
                               const Point& E) {
    const auto& f = need_field(A.x.field());
    const Point pts[4] = {A, B, C, E};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("input is not an ordered quad");
    for (int i = 0; i < 4; ++i) {
        const Point* tri[3];
        int n = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) tri[n++] = &pts[j];
        if (collinear(*tri[0], *tri[1], *tri[2]))
            throw std::invalid_argument("input is not an ordered quad");
    }
    if (!(slope_of(A, B) == slope_of(C, E)) || !(slope_of(A, E) == slope_of(B, C)))
        throw std::invalid_argument("input is not an ordered quad");

    Mat2 M = from_columns({B.x - A.x, B.y - A.y}, {E.x - A.x, E.y - A.y}).inv();
    auto tA = M.apply(A.x, A.y);
    Collineation phi(M.a, M.b, M.c, M.d, -tA.first, -tA.second, 0);

    FE zero = f->zero(), one = f->one();
    if (phi.apply(A) != Point{zero, zero} || phi.apply(B) != Point{one, zero} ||
        phi.apply(C) != Point{one, one} || phi.apply(E) != Point{zero, one})
        throw std::logic_error("quad normalization failed postconditions");
    return phi;
}

// --- Equivalence search ------------------------------------------------

namespace {

// Completes a nonzero vector to an invertible matrix sending v to w.
Mat2 vector_extension(const std::pair<FE, FE>& v, const std::pair<FE, FE>& w) {
    const auto& f = v.first.field();
    FE zero = f->zero(), one = f->one();
    auto indep = [&](const std::pair<FE, FE>& u) -> std::pair<FE, FE> {
        if (u.second.is_zero()) return {zero, one};
        return {one, zero};
    };
    auto uv = indep(v), uw = indep(w);
    return from_columns(w, uw).mul(from_columns(v, uv).inv());
}

std::optional<Collineation> equivalent_collinear(const PointSet& S, const PointSet& T) {
    const auto& f = S.field();
    uint32_t q = f->q();
    if (q > 1024)
        throw std::invalid_argument("collinear equivalence limited to q <= 1024");
    // All points of a set on one line: reduce to 1-dimensional semilinear maps.
    for (size_t i = 2; i < T.size(); ++i)
        if (!collinear(T[0], T[1], T[i])) return std::nullopt;

    Point A = S[0];
    std::pair<FE, FE> d{S[1].x - A.x, S[1].y - A.y};
    Point B = T[0];
    std::pair<FE, FE> e{T[1].x - B.x, T[1].y - B.y};
    for (uint32_t i = 0; i < f->k(); ++i) {
        Point As = frob_point(A, i);
        std::pair<FE, FE> ds{d.first.frobenius(i), d.second.frobenius(i)};
        for (uint32_t ac = 1; ac < q; ++ac) {
            FE a = f->element(ac);
            Mat2 M = vector_extension(ds, {a * e.first, a * e.second});
            for (uint32_t bc = 0; bc < q; ++bc) {
                FE b = f->element(bc);
                auto MA = M.apply(As.x, As.y);
                FE te = B.x + b * e.first - MA.first;
                FE tf = B.y + b * e.second - MA.second;
                Collineation phi(M.a, M.b, M.c, M.d, te, tf, i);
                if (phi.apply(S) == T) return phi;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Collineation> equivalent(const PointSet& S, const PointSet& T) {
    if (S.empty() && T.empty())
        throw std::invalid_argument("equivalence of empty sets");
    need_same_field(S.field(), T.field());
    if (S.size() != T.size())
        throw std::invalid_argument("equivalence requires equal sizes");
    const auto& f = S.field();
    size_t n = S.size();

    if (n == 1) return Collineation::translation(T[0].x - S[0].x, T[0].y - S[0].y);
    if (n == 2) {
        // The affine group is 2-transitive; no Frobenius needed.
        Mat2 M = vector_extension({S[1].x - S[0].x, S[1].y - S[0].y},
                                  {T[1].x - T[0].x, T[1].y - T[0].y});
        auto MA = M.apply(S[0].x, S[0].y);
        return Collineation(M.a, M.b, M.c, M.d, T[0].x - MA.first, T[0].y - MA.second, 0);
    }

    // Anchor triple: first non-collinear (i, j, l) of S in canonical order.
    int ai = -1, aj = -1, al = -1;
    for (size_t i = 0; i < n && ai < 0; ++i)
        for (size_t j = i + 1; j < n && ai < 0; ++j)
            for (size_t l = j + 1; l < n; ++l)
                if (!collinear(S[i], S[j], S[l])) {
                    ai = static_cast<int>(i);
                    aj = static_cast<int>(j);
                    al = static_cast<int>(l);
                    break;
                }
    if (ai < 0) return equivalent_collinear(S, T);

    for (uint32_t i = 0; i < f->k(); ++i) {
        Point As = frob_point(S[ai], i), Bs = frob_point(S[aj], i), Cs = frob_point(S[al], i);
        Mat2 base =
            from_columns({Bs.x - As.x, Bs.y - As.y}, {Cs.x - As.x, Cs.y - As.y}).inv();
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v)
                for (size_t w = 0; w < n; ++w) {
                    if (u == v || u == w || v == w) continue;
                    const Point &P = T[u], &Q = T[v], &R = T[w];
                    if (collinear(P, Q, R)) continue;
                    Mat2 M = from_columns({Q.x - P.x, Q.y - P.y},
                                          {R.x - P.x, R.y - P.y})
                                 .mul(base);
                    auto MA = M.apply(As.x, As.y);
                    Collineation phi(M.a, M.b, M.c, M.d, P.x - MA.first, P.y - MA.second,
                                     i);
                    if (phi.apply(S) == T) return phi;
                }
    }
    return std::nullopt;
}

std::optional<Collineation> equivalent_exhaustive(const PointSet& S, const PointSet& T) {
    need_same_field(S.field(), T.field());
    if (S.size() != T.size())
        throw std::invalid_argument("equivalence requires equal sizes");
    const auto& f = S.field();
    uint32_t q = f->q();
    if (q > 11) throw std::invalid_argument("exhaustive sweep limited to q <= 11");

    for (uint32_t i = 0; i < f->k(); ++i) {
        std::vector<Point> Ss;
        for (const auto& P : S) Ss.push_back(frob_point(P, i));
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                for (uint32_t c = 0; c < q; ++c)
                    for (uint32_t d = 0; d < q; ++d) {
                        if (f->sub(f->mul(a, d), f->mul(b, c)) == 0) continue;
                        FE fa = f->element(a), fb = f->element(b), fc = f->element(c),
                           fd = f->element(d);
                        // the image of the first point fixes the translation
                        FE ix = fa * Ss[0].x + fb * Ss[0].y;
                        FE iy = fc * Ss[0].x + fd * Ss[0].y;
                        for (const auto& T0 : T) {
                            Collineation phi(fa, fb, fc, fd, T0.x - ix, T0.y - iy, i);
                            bool ok = true;
                            for (const auto& P : Ss) {
                                FE px = fa * P.x + fb * P.y + phi.e();
                                FE py = fc * P.x + fd * P.y + phi.f();
                                if (!T.contains({px, py})) { ok = false; break; }
                            }
                            if (ok) return phi;
                        }
                    }
    }
    return std::nullopt;
}

}  // namespace netarc
