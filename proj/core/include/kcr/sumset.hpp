#pragma once

#include "kcr/reduceplanar.hpp"
#include "kcr/solver.hpp"

#include <map>
#include <set>

namespace kcr {

struct LayoutConflict : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotASolution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using GridVertex = std::pair<long, long>;  // (i, j): i vertical, j horizontal

// Values are 1..n; relation pairs are (value of edges[e].first, value of edges[e].second).
struct CSPInstance {
    std::vector<GridVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    long n = 1;
    std::vector<std::set<std::pair<long, long>>> relations;

    void validate() const;
};

struct SumSetInstance {
    std::vector<GridVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> color;  // (i + j) mod 2
    long n = 1;
    std::vector<std::set<long>> dv;
    std::vector<std::set<long>> de;

    long domain_bound() const { return n * n; }
    void validate() const;
};

int grid_color(const GridVertex& v);
// Every unit-distance pair, so the graph is induced.
std::vector<std::pair<int, int>> grid_edges(const std::vector<GridVertex>& vertices);
std::vector<GridVertex> grid_block(long rows, long cols);
// Each relation keeps every pair with probability `density`.
CSPInstance gen_csp(const std::vector<GridVertex>& vertices, long n, double density, uint64_t seed);

SumSetInstance csp_to_sumset(const CSPInstance& c);
// Inverse of the value encoding: v* / n^c(v).
std::vector<long> decode_assignment(const SumSetInstance& s, const std::vector<long>& values);

std::optional<std::vector<long>> brute_csp(const CSPInstance& c, uint64_t max_nodes = 10'000'000);
std::optional<std::vector<long>> brute_sumset(const SumSetInstance& s, uint64_t max_nodes = 10'000'000);
bool is_sumset_solution(const SumSetInstance& s, const std::vector<long>& values);

// Index half-range of the vertex and edge arrays: 100 n^2.
long sumset_range(const SumSetInstance& s);

struct SumSetArrays {
    std::vector<IntArray> xv;  // 1 on D_v, 2 elsewhere
    std::vector<IntArray> xe;  // -2 where -k is in D_e, 0 elsewhere
};

SumSetArrays sumset_arrays(const SumSetInstance& s);

// Hexagonal vertex in lattice units: the point (x, y sqrt3).
using HexKey = std::pair<long, long>;
PointD hex_point(const HexKey& h);

struct CurveEdge {
    HexKey from, to;   // along the curve orientation
    int shared = -1;   // index into CurveLayout::shared
};

struct BasicCurve {
    GridVertex grid;
    bool ccw = true;
    std::vector<HexKey> cells;      // the 14 cells, axial coordinates
    std::vector<CurveEdge> edges;   // closed, in orientation order
};

struct SharedEdge {
    int u = -1, v = -1;   // instance vertex indices, u the lower one
    int grid_edge = -1;   // index into SumSetInstance::edges
    HexKey from, to;      // orientation shared by both curves
};

struct CurveLayout {
    std::vector<BasicCurve> curves;
    std::vector<SharedEdge> shared;
    std::vector<HexKey> hex_vertices;  // every curve vertex once
};

// The four core cells (axial coordinates) and the grid translations.
struct CurveShape {
    std::array<HexKey, 4> core;
    HexKey step_i, step_j;
};
const CurveShape& basic_curve_shape();

CurveLayout layout_curves(const SumSetInstance& s);
CurveLayout layout_curves(const std::vector<GridVertex>& vertices, const std::vector<std::pair<int, int>>& edges);

/*
 * k'-center instance over the layout.  One family per curve edge (type 1 on
 * non-shared edges with X_v, type 2 on shared edges with X_e, run backwards),
 * one disk per hexagonal vertex holding its anchors and consistency point.
 */
struct KCenter2D {
    SumSetInstance source;
    SumSetArrays arrays;
    CurveLayout layout;
    EpsScale scale;
    RadiusMode mode = RadiusMode::Standard;
    FieldElem sq_radius;
    std::vector<PnSpec> families;
    std::vector<std::vector<PointD>> family_points;
    std::vector<int> family_vertex;       // owning instance vertex, -1 for shared edges
    std::vector<int> family_shared;       // shared edge index or -1
    std::vector<PlanarDisk> disks;        // one per layout.hex_vertices entry
    GeometricInstance geometric;

    long lo() const { return pn_lo(scale.n); }
    long hi() const { return pn_hi(scale.n); }
    const PointD& fp(int family, long i) const { return family_points[size_t(family)][size_t(i - lo())]; }
};

KCenter2D build_kcenter2d(const SumSetInstance& s, const EpsScale& scale, RadiusMode mode = RadiusMode::Standard);
// Scale for the construction: full fidelity at n' = sumset_range(s).
EpsScale kcenter2d_scale(const SumSetInstance& s);

std::vector<long> kcenter2d_splits(const KCenter2D& k, const std::vector<long>& values);

struct WitnessKC {
    CoverWitness centers;
    std::vector<long> split;  // per family
};

WitnessKC witness_kcenter2d(const KCenter2D& k, const std::vector<long>& values);

/*
 * Exact search over one split per family, every disk checked on its cluster.
 * Bounds are narrowed by monotone propagation, then the search branches.
 */
struct SplitDecision {
    bool feasible = false;
    std::vector<long> split;
    std::optional<std::vector<long>> decoded;  // per vertex, when every split decodes
    uint64_t meb_evaluations = 0;
    uint64_t nodes = 0;
};

SplitDecision decide_split_cover(const KCenter2D& k, uint64_t max_nodes = 100'000);

}  // namespace kcr
