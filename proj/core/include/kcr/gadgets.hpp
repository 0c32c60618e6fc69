#pragma once

#include "kcr/gap3sum.hpp"
#include "kcr/geometry.hpp"

#include <utility>
#include <vector>

namespace kcr {

// Arrays fed to the point ladders share the X[-n..n] layout of GapInstance.
using IntArray = GapInstance;

enum class RadiusMode { Standard, Gap, Cube3D };

const char* radius_mode_name(RadiusMode m);
RadiusMode parse_radius_mode(const std::string& s);

BigRational planar_radius(const EpsScale& s);      // 1 - eps + eps^1.7
BigRational gap_radius(const EpsScale& s);         // 1 - eps + 2 eps^1.7
BigRational cube3d_sq_radius(const EpsScale& s);   // 1 + 3 M^2 eps^2, M = n^2
FieldElem sq_radius_for(RadiusMode m, const EpsScale& s);

// Tolerances around hexagonal vertices, as multiples of n*eps.
inline BigRational anchor_sufficient_tol() { return BigRational(1, 10); }
inline BigRational anchor_necessary_tol() { return BigRational(3, 10); }

// v_1..v_12, v_k at angle (k-1)*30 degrees.
Vec unit_vec(int k);
// 2 a1 v1 + 2 a3 v3 + 2 a5 v5.
PointD hex_lattice(long a1, long a3, long a5);

long floor_div2(long i);

struct PnSpec {
    const IntArray* array = nullptr;
    PointD origin;
    Vec direction;
    FieldElem alpha = FieldElem(1);
    EpsScale scale;
    std::string tag = "P";
};

// 3 floor(i/2) eps + X[floor(i/2)] eps^1.5 - (-1)^i alpha eps
FieldElem pn_multiplier(const PnSpec& spec, long i);
PointD pn_point(const PnSpec& spec, long i);
// Points for i = -2n..2n+1 in index order.
std::vector<LabeledPoint> build_pn(const PnSpec& spec);
inline long pn_lo(long n) { return -2 * n; }
inline long pn_hi(long n) { return 2 * n + 1; }

// A'[i] = -A[-i]
IntArray reverse_array(const IntArray& a);

BigRational anchor_delta(const EpsScale& s);  // 1 - (n/10 + 1) eps
std::vector<LabeledPoint> build_anchors(const std::vector<PointD>& hex_vertices, const EpsScale& s);

struct BadContext : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HexVertexContext {
    PointD vertex;
    // Unit half-edges: the endpoint is the edge midpoint.
    std::vector<std::pair<PointD, bool>> incident;  // (endpoint, shared)
};

LabeledPoint build_consistency(const HexVertexContext& ctx, const EpsScale& s);

/*
 * Explicit center for three families leaving z along unit directions ua, ub
 * (and the third at 120 degrees), even indices i, j with array values ai, bj:
 *
 *     d = z + mu_a ua + mu_b ub
 *     mu_a = (2i + j) eps + (4/3 ai + 2/3 bj) eps^1.5
 *     mu_b = (2j + i) eps + (4/3 bj + 2/3 ai) eps^1.5
 */
PointD covering_basic_center(const PointD& z, const Vec& ua, const Vec& ub, long i, long j, long ai, long bj,
                             const EpsScale& s);
// Bound 3 eps (max(|i|,|j|) + 1), squared.
BigRational covering_center_sq_bound(long i, long j, const EpsScale& s);

}  // namespace kcr
