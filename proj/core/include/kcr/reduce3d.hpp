#pragma once

#include "kcr/gadgets.hpp"
#include "kcr/reduceplanar.hpp"
#include "kcr/report.hpp"

#include <memory>
#include <optional>

namespace kcr {

struct NotPrefixSplit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// Either side of the assignment does not fit one ball.
struct InvalidCovering : NotPrefixSplit {
    using NotPrefixSplit::NotPrefixSplit;
};
struct SoundnessViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/*
 * Two balls in R^3.  Families A, B, C run upward along z from (1/sqrt2,0,0),
 * (0,1/sqrt2,0) and (-1/2,-1/2,0); five anchors sit on the top ball and their
 * z-mirrors on the bottom one.
 */
struct TwoCenter3D {
    std::shared_ptr<const IntArray> x;
    EpsScale scale;
    RadiusMode mode = RadiusMode::Cube3D;
    FieldElem sq_radius;
    BigRational t;
    std::vector<PnSpec> families;  // A, B, C
    std::vector<std::vector<PointD>> family_points;
    std::vector<PointD> d_plus, d_minus;
    std::vector<LabeledPoint> points;  // A, B, C, D+, D-

    long lo() const { return pn_lo(x->n); }
    long hi() const { return pn_hi(x->n); }
    const PointD& fp(int family, long i) const { return family_points[size_t(family)][size_t(i - lo())]; }
};

BigRational anchor_t(long n);  // 3 floor(n/100) + 1/4

TwoCenter3D build_2center3d(const IntArray& x, const EpsScale& s, RadiusMode mode = RadiusMode::Cube3D);

struct WitnessPair {
    PointD c_plus, c_minus;
    Triple split{};
};

// -3i - X[i] sqrt(eps)
BigRational star_coord(const IntArray& x, long i, const EpsScale& s);

WitnessPair witness_3d(const TwoCenter3D& inst, const Triple& sol);
WitnessPair witness_3d(const IntArray& x, const Triple& sol, const EpsScale& s);

// Side per point of inst.points: 1 for the ball through d0+, 0 for the other.
// Points inside both balls go with the top ball only when the bottom one
// misses them; ties are resolved toward prefix splits (heads below).
std::vector<int> assignment_from_centers(const TwoCenter3D& inst, const PointD& c_plus, const PointD& c_minus);

struct SwitchIndices {
    long i_hat = 0, j_hat = 0, k_hat = 0;
};

struct Extraction3D {
    SwitchIndices sw;
    Triple sol{};
};

Extraction3D extract_3d(const TwoCenter3D& inst, const std::vector<int>& assignment);

struct Certificate3D {
    bool feasible = false;
    SwitchIndices split;
    std::optional<Triple> decoded;
    CertificateReport report;
    size_t meb_evaluations = 0;
};

Certificate3D certify_no_3d(const TwoCenter3D& inst, long max_n = 200);

// Box bounds on the center coordinates forced by the anchors.
CertificateReport ranges_check(const TwoCenter3D& inst, const PointD& c_plus, const PointD& c_minus);
// sq_dist to c+ non-increasing and to c- non-decreasing along every family.
CertificateReport monotone_distance_check(const TwoCenter3D& inst, const WitnessPair& w);

}  // namespace kcr
