#include "kcr/geometry.hpp"

#include <list>

namespace kcr {

PointD PointD::zero(int dim) {
    PointD p;
    p.dim = dim;
    return p;
}

PointD& PointD::operator+=(const PointD& o) {
    if (dim != o.dim) throw DimensionMismatch();
    for (int i = 0; i < dim; ++i) c[size_t(i)] += o.c[size_t(i)];
    return *this;
}

PointD& PointD::operator-=(const PointD& o) {
    if (dim != o.dim) throw DimensionMismatch();
    for (int i = 0; i < dim; ++i) c[size_t(i)] -= o.c[size_t(i)];
    return *this;
}

PointD& PointD::operator*=(const FieldElem& s) {
    for (int i = 0; i < dim; ++i) c[size_t(i)] = c[size_t(i)] * s;
    return *this;
}

PointD PointD::operator-() const {
    PointD r = *this;
    for (int i = 0; i < dim; ++i) r.c[size_t(i)] = -r.c[size_t(i)];
    return r;
}

bool operator==(const PointD& a, const PointD& b) {
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i)
        if (a.c[size_t(i)] != b.c[size_t(i)]) return false;
    return true;
}

FieldElem dot(const PointD& a, const PointD& b) {
    if (a.dim != b.dim) throw DimensionMismatch();
    FieldElem s;
    for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
    return s;
}

FieldElem sq_norm(const PointD& a) { return dot(a, a); }

FieldElem sq_dist(const PointD& p, const PointD& q) {
    if (p.dim != q.dim) throw DimensionMismatch();
    FieldElem s, d;
    for (int i = 0; i < p.dim; ++i) {
        d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

bool within(const PointD& p, const PointD& center, const FieldElem& sq_radius) {
    return fe_sign(sq_radius - sq_dist(p, center)) >= 0;
}

bool in_ball(const PointD& p, const Ball& b) { return within(p, b.center, b.sq_radius); }

namespace {

FieldElem det2(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
    return a * d - b * c;
}

FieldElem det3(const std::array<std::array<FieldElem, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

// Determinant of the Gram matrix of the listed vectors (size 1..3).
FieldElem gram_det(const std::vector<PointD>& v) {
    size_t m = v.size();
    if (m == 1) return sq_norm(v[0]);
    if (m == 2) return det2(sq_norm(v[0]), dot(v[0], v[1]), dot(v[1], v[0]), sq_norm(v[1]));
    std::array<std::array<FieldElem, 3>, 3> g;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i; j < 3; ++j) g[i][j] = g[j][i] = dot(v[i], v[j]);
    return det3(g);
}

// Ball through p0 and p0 + v_i kept without division: center p0 + w / (2D),
// D the Gram determinant of the v_i (positive), w = sum mu_i v_i with
// mu = adj(G) b, b_i = |v_i|^2.
struct Implicit {
    PointD p0;
    PointD w;
    FieldElem d;
};

Implicit solve_independent(const PointD& p0, const std::vector<PointD>& v, const FieldElem& d) {
    size_t m = v.size();
    Implicit r{p0, PointD::zero(p0.dim), FieldElem(1)};
    if (m == 0) return r;
    std::array<std::array<FieldElem, 3>, 3> g;
    std::array<FieldElem, 3> rhs;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i; j < m; ++j) g[i][j] = g[j][i] = dot(v[i], v[j]);
        rhs[i] = g[i][i];
    }
    std::array<FieldElem, 3> mu;
    if (m == 1) {
        mu[0] = g[0][0];
    } else if (m == 2) {
        mu[0] = det2(rhs[0], g[0][1], rhs[1], g[1][1]);
        mu[1] = det2(g[0][0], rhs[0], g[1][0], rhs[1]);
    } else {
        for (size_t col = 0; col < 3; ++col) {
            auto gc = g;
            for (size_t row = 0; row < 3; ++row) gc[row][col] = rhs[row];
            mu[col] = det3(gc);
        }
    }
    for (size_t i = 0; i < m; ++i) r.w += v[i] * mu[i];
    r.d = d;
    return r;
}

// sign of |p - c|^2 - r^2, scaled by 4D^2 / (2D) > 0
int side(const Implicit& b, const PointD& p) {
    PointD u = p - b.p0;
    return fe_sign(b.d * sq_norm(u) - dot(u, b.w));
}

Implicit implicit_circumball(const std::vector<PointD>& support) {
    if (support.empty()) throw EmptyInput();
    int dim = support[0].dim;
    for (const auto& p : support)
        if (p.dim != dim) throw DimensionMismatch();
    if (support.size() > size_t(dim) + 1) throw DegenerateSupport();
    const PointD& p0 = support[0];
    // Greedy maximal independent subset of the difference vectors.
    std::vector<PointD> basis;
    std::vector<size_t> dependent;
    FieldElem d(1);
    for (size_t i = 1; i < support.size(); ++i) {
        std::vector<PointD> trial = basis;
        trial.push_back(support[i] - p0);
        FieldElem g = gram_det(trial);
        if (fe_sign(g) != 0) {
            basis = std::move(trial);
            d = g;
        } else {
            dependent.push_back(i);
        }
    }
    Implicit b = solve_independent(p0, basis, d);
    // Dependent points must already sit on that sphere.
    for (size_t i : dependent)
        if (side(b, support[i]) != 0) throw DegenerateSupport();
    return b;
}

Ball explicit_ball(const Implicit& b) {
    if (b.w == PointD::zero(b.p0.dim)) return Ball{b.p0, FieldElem()};
    FieldElem half_inv = fe_inv(b.d) * BigRational(1, 2);
    PointD off = b.w * half_inv;
    return Ball{b.p0 + off, sq_norm(off)};
}

struct MtfState {
    const std::vector<PointD>& pool;
    std::list<size_t> order;
    std::vector<size_t> boundary;
    int dim;
};

// Move-to-front recursion.  The ball is undefined while the boundary is empty.
std::optional<Implicit> mtf(MtfState& st, std::list<size_t>::iterator end) {
    std::optional<Implicit> b;
    if (!st.boundary.empty()) {
        std::vector<PointD> r;
        for (size_t i : st.boundary) r.push_back(st.pool[i]);
        b = implicit_circumball(r);
    }
    if (st.boundary.size() == size_t(st.dim) + 1) return b;
    for (auto it = st.order.begin(); it != end;) {
        auto cur = it++;
        size_t idx = *cur;
        if (b && side(*b, st.pool[idx]) <= 0) continue;
        st.boundary.push_back(idx);
        b = mtf(st, cur);
        st.boundary.pop_back();
        st.order.splice(st.order.begin(), st.order, cur);
    }
    return b;
}

Implicit implicit_meb(const std::vector<PointD>& pool, const std::vector<size_t>& idx) {
    if (idx.empty()) throw EmptyInput();
    int dim = pool[idx[0]].dim;
    for (size_t i : idx)
        if (pool[i].dim != dim) throw DimensionMismatch();
    MtfState st{pool, std::list<size_t>(idx.begin(), idx.end()), {}, dim};
    return *mtf(st, st.order.end());
}

// Scale by the lcm of all coefficient denominators so the predicates run on
// integer coefficients (mpq with unit denominators skips most gcd work).
BigInt common_den(const std::vector<PointD>& pool, const std::vector<size_t>& idx) {
    BigInt l = 1;
    for (size_t i : idx)
        for (int a = 0; a < pool[i].dim; ++a) {
            const FieldElem& f = pool[i][a];
            for (int k = 0; k < FieldElem::kDim; ++k)
                if (f.mask() >> k & 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.coeff(k).get_den().get_mpz_t());
        }
    return l;
}

std::vector<PointD> scaled(const std::vector<PointD>& pool, const std::vector<size_t>& idx, const BigInt& l) {
    std::vector<PointD> out;
    out.reserve(idx.size());
    FieldElem f{BigRational(l)};
    for (size_t i : idx) out.push_back(pool[i] * f);
    return out;
}

std::vector<size_t> iota_idx(size_t n) {
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
}

}  // namespace

Ball circumball(const std::vector<PointD>& support) { return explicit_ball(implicit_circumball(support)); }

Ball meb_of(const std::vector<PointD>& pool, const std::vector<size_t>& idx) {
    if (idx.empty()) throw EmptyInput();
    BigInt l = common_den(pool, idx);
    std::vector<PointD> sc = scaled(pool, idx, l);
    Ball b = explicit_ball(implicit_meb(sc, iota_idx(sc.size())));
    BigRational inv(BigInt(1), l);
    b.center *= FieldElem(inv);
    b.sq_radius *= BigRational(inv * inv);
    return b;
}

Ball meb(const std::vector<PointD>& points) { return meb_of(points, iota_idx(points.size())); }

bool fits(const std::vector<PointD>& points, const FieldElem& sq_radius) {
    if (points.empty()) return true;
    auto all = iota_idx(points.size());
    BigInt l = common_den(points, all);
    std::vector<PointD> sc = scaled(points, all, l);
    Implicit b = implicit_meb(sc, all);
    // |w|^2 / (4 D^2) <= R^2 l^2
    FieldElem dd = b.d * b.d;
    FieldElem r2 = sq_radius * BigRational(BigInt(4 * l * l));
    return fe_sign(r2 * dd - sq_norm(b.w)) >= 0;
}

int orient2d(const PointD& a, const PointD& b, const PointD& c) {
    return fe_sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

std::string point_str(const PointD& p) {
    std::string s;
    for (int i = 0; i < p.dim; ++i) {
        if (i) s += " ";
        s += fe_str(p[i]);
    }
    return s;
}

PointD point_parse(int dim, const std::vector<std::string>& fields) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("point: dimension must be 2 or 3");
    if (int(fields.size()) != dim) throw DimensionMismatch();
    PointD p = PointD::zero(dim);
    for (int i = 0; i < dim; ++i) p[i] = fe_parse(fields[size_t(i)]);
    return p;
}

}  // namespace kcr
