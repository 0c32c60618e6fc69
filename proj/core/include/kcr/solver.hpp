#pragma once

#include "kcr/geometry.hpp"
#include "kcr/report.hpp"

#include <cstdint>
#include <variant>

namespace kcr {

struct GeometricInstance {
    std::vector<LabeledPoint> points;
    int k = 1;
    FieldElem sq_radius;
    int dim = 2;

    void validate() const;
};

struct CoverWitness {
    std::vector<PointD> centers;
};

struct WitnessCheck {
    bool ok = false;
    FieldElem worst;  // max over points of min over centers of sq_dist - sq_radius
    size_t worst_point = 0;
};

WitnessCheck verify_witness(const GeometricInstance& inst, const CoverWitness& w);

struct SolverLimits {
    uint64_t max_candidates = 10'000'000;  // subset MEB evaluations
    uint64_t max_nodes = 1'000'000;        // branch nodes
};

struct SolverStats {
    uint64_t nodes = 0;
    uint64_t subsets = 0;     // subsets whose MEB was evaluated
    uint64_t candidates = 0;  // distinct covered sets kept
};

enum class CoverTag { Coverable, Infeasible, ResourceExceeded };
const char* cover_tag_name(CoverTag t);

struct CoverDecision {
    CoverTag tag = CoverTag::Infeasible;
    CoverWitness witness;  // set when Coverable
    SolverStats stats;
    std::string detail;
};

CoverDecision decide_cover(const GeometricInstance& inst, const SolverLimits& limits = {});

// Enumerates every assignment of points to at most k parts.  Small inputs only.
bool partition_oracle(const GeometricInstance& inst);

}  // namespace kcr
