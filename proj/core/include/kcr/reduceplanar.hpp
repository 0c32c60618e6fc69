#pragma once

#include "kcr/gadgets.hpp"
#include "kcr/report.hpp"

#include <array>
#include <memory>
#include <optional>

namespace kcr {

struct NotAWitness : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GadgetConstants {
    PointD o, p, pbar, c, q, qhat;
    FieldElem gamma;
    std::array<PointD, 6> centers;  // c_1..c_6
};

GadgetConstants gadget_constants(const EpsScale& s);

struct DiskPart {
    int family;
    bool tail;  // covers [> split] instead of [<= split]
};

struct PlanarDisk {
    std::string name;
    PointD expected;
    std::vector<DiskPart> parts;
    std::vector<LabeledPoint> fixed;  // anchors, consistency point
};

/*
 * Planar instance for k = 6 or k = 10.  Families are split by one index each;
 * the disks form two chains between a start disk (heads of the first family
 * of each chain and of the shared family) and an end disk (the tails).
 */
struct PlanarInstance {
    int k = 0;
    std::shared_ptr<const IntArray> x;
    EpsScale scale;
    RadiusMode mode = RadiusMode::Standard;
    FieldElem sq_radius;
    std::vector<PnSpec> families;
    std::vector<std::vector<PointD>> family_points;  // by index - lo
    std::vector<int> chain_a, chain_b;
    int shared = -1;
    std::vector<PlanarDisk> disks;
    int start_disk = 0, end_disk = 0;
    std::vector<int> pair_a, pair_b;  // pair_a[l] joins chain_a[l] and chain_a[l+1]
    std::vector<LabeledPoint> points;
    std::optional<GadgetConstants> constants;

    long lo() const { return pn_lo(x->n); }
    long hi() const { return pn_hi(x->n); }
    const PointD& fp(int family, long i) const { return family_points[size_t(family)][size_t(i - lo())]; }
};

PlanarInstance build_6center(const IntArray& x, const EpsScale& s, RadiusMode mode = RadiusMode::Standard);
PlanarInstance build_10center(const IntArray& x, const EpsScale& s, RadiusMode mode = RadiusMode::Standard);

// Points assigned to one disk under per-family split values in [lo-1, hi].
// Collinear runs are reduced to their two end points when hull_only is set.
std::vector<PointD> disk_cluster(const PlanarInstance& inst, const PlanarDisk& d, const std::vector<long>& split,
                                 bool hull_only = true);

struct WitnessK {
    std::vector<PointD> centers;
    Triple split{};
    std::vector<BigRational> sq_bounds;  // per center, squared distance bound to the expected center
    std::vector<std::string> notes;      // disks whose explicit center was replaced
};

WitnessK witness_planar(const PlanarInstance& inst, const Triple& sol);
WitnessK witness_6center(const IntArray& x, const Triple& sol, const EpsScale& s,
                         RadiusMode mode = RadiusMode::Standard);
WitnessK witness_10center(const IntArray& x, const Triple& sol, const EpsScale& s,
                          RadiusMode mode = RadiusMode::Standard);

CertificateReport anchor_force_check(const PlanarInstance& inst);

struct PlanarCertificate {
    bool feasible = false;
    std::vector<long> split;  // per family
    std::optional<Triple> decoded;
    CertificateReport report;
    size_t meb_evaluations = 0;
};

PlanarCertificate certify_no_planar(const PlanarInstance& inst, long max_n = 64);

/*
 * Lemma replays in the frame z = (0,0), a = (-sqrt3/2, 1/2), b = (sqrt3/2, 1/2),
 * c = (0,-1).  Every index combination is checked; records are tagged with the
 * lemma item they instantiate.
 */
CertificateReport suite_covering_basic(const IntArray& a, const IntArray& b, const IntArray& c, const EpsScale& s,
                                       RadiusMode mode);
CertificateReport suite_d4_covering(const IntArray& a, const IntArray& b, const IntArray& c, const EpsScale& s,
                                    RadiusMode mode);
CertificateReport suite_consistency(const IntArray& a, const EpsScale& s, RadiusMode mode);
// The four tail/head family pairs of the 6-center instance.
CertificateReport suite_b12(const IntArray& x, const EpsScale& s, RadiusMode mode);
// Two-disk coverability around the shared edge of the two hexagons.
CertificateReport suite_shared_edge(const IntArray& xu, const IntArray& xv, const IntArray& xe, const EpsScale& s,
                                    RadiusMode mode);

}  // namespace kcr
