#pragma once

#include "kcr/gadgets.hpp"
#include "kcr/reduce3d.hpp"
#include "kcr/solver.hpp"
#include "kcr/sumset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kcr {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct Render3DUnsupported : std::invalid_argument {
    Render3DUnsupported() : std::invalid_argument("render: dimension 3 has no planar drawing") {}
};

enum class DeltaMode { Full, Relaxed };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string output;
    long n = 8;
    DeltaMode delta_mode = DeltaMode::Full;
    BigRational delta;  // relaxed mode only
    uint64_t seed = 1;
    SolverLimits limits;
    RadiusMode radius = RadiusMode::Standard;
    std::string suite;

    // "full" or a positive rational below 1
    void set_delta(const std::string& s);
    // "candidates,nodes"
    void set_limits(const std::string& s);
    EpsScale scale(long n_eff) const;
};

/*
 * Geometric instance file.  Header lines carry construction constants, mark
 * lines the expected disk centers (display only, never read by a verdict).
 *
 *   kcr-geometric 1
 *   dim 2
 *   k 10
 *   sq_radius (q0,...,q7)
 *   header t 1/4
 *   mark (..) (..)
 *   point TAG INDEX|- (..) (..)
 *   end
 */
struct GeometricFile {
    static constexpr int kSchema = 1;
    GeometricInstance inst;
    std::map<std::string, std::string> header;
    std::vector<PointD> marks;
};

GeometricFile to_file(const TwoCenter3D& t);
GeometricFile to_file(const PlanarInstance& p);
GeometricFile to_file(const KCenter2D& k);

std::string write_geometric(const GeometricFile& g);
GeometricFile parse_geometric(const std::string& text);

std::string write_witness(const CoverWitness& w, int dim);
CoverWitness parse_witness(const std::string& text);

std::string write_sumset(const SumSetInstance& s);
SumSetInstance parse_sumset(const std::string& text);
std::string write_csp(const CSPInstance& c);
CSPInstance parse_csp(const std::string& text);

// First line of a file names its kind: conv, gap, sumset, csp, kcr-geometric, ...
std::string file_kind(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct RenderOptions {
    std::optional<CoverWitness> witness;
    double px = 700;  // canvas width
};

// Planar instances only.
std::string render_svg(const GeometricFile& g, const RenderOptions& opt = {});
// Axis-aligned projections xy, xz, yz of a 3D instance.
std::vector<std::pair<std::string, std::string>> render_projections(const GeometricFile& g,
                                                                    const RenderOptions& opt = {});

}  // namespace kcr
