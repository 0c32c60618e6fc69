#pragma once

#include "kcr/exactnum.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcr {

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};
struct EmptyInput : std::invalid_argument {
    EmptyInput() : std::invalid_argument("empty input") {}
};
struct DegenerateSupport : std::invalid_argument {
    DegenerateSupport() : std::invalid_argument("affinely dependent support") {}
};

struct PointD {
    int dim = 2;
    std::array<FieldElem, 3> c{};

    PointD() = default;
    PointD(FieldElem x, FieldElem y) : dim(2), c{std::move(x), std::move(y), FieldElem()} {}
    PointD(FieldElem x, FieldElem y, FieldElem z) : dim(3), c{std::move(x), std::move(y), std::move(z)} {}

    static PointD zero(int dim);

    const FieldElem& operator[](int i) const { return c[size_t(i)]; }
    FieldElem& operator[](int i) { return c[size_t(i)]; }

    PointD& operator+=(const PointD& o);
    PointD& operator-=(const PointD& o);
    PointD& operator*=(const FieldElem& s);
    friend PointD operator+(PointD a, const PointD& b) { return a += b; }
    friend PointD operator-(PointD a, const PointD& b) { return a -= b; }
    friend PointD operator*(PointD a, const FieldElem& s) { return a *= s; }
    friend PointD operator*(const FieldElem& s, PointD a) { return a *= s; }
    PointD operator-() const;

    friend bool operator==(const PointD& a, const PointD& b);
    friend bool operator!=(const PointD& a, const PointD& b) { return !(a == b); }
};

using Vec = PointD;

struct Ball {
    PointD center;
    FieldElem sq_radius;
};

struct LabeledPoint {
    PointD p;
    std::string tag;
    std::optional<long> index;
};

FieldElem dot(const PointD& a, const PointD& b);
FieldElem sq_norm(const PointD& a);
FieldElem sq_dist(const PointD& p, const PointD& q);
bool in_ball(const PointD& p, const Ball& b);
// Closed containment at an explicit squared radius.
bool within(const PointD& p, const PointD& center, const FieldElem& sq_radius);

Ball circumball(const std::vector<PointD>& support);
Ball meb(const std::vector<PointD>& points);
// meb restricted to the listed indices of a point pool.
Ball meb_of(const std::vector<PointD>& pool, const std::vector<size_t>& idx);
// True iff the points fit into one closed ball of the given squared radius.
bool fits(const std::vector<PointD>& points, const FieldElem& sq_radius);

// 2D orientation sign of (b-a) x (c-a).
int orient2d(const PointD& a, const PointD& b, const PointD& c);

std::string point_str(const PointD& p);  // space separated 8-tuples
PointD point_parse(int dim, const std::vector<std::string>& fields);

}  // namespace kcr
