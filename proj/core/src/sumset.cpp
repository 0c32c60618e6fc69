#include "kcr/sumset.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace kcr {

namespace {

long ipow(long b, int e) { return e == 0 ? 1 : b; }

bool unit_apart(const GridVertex& a, const GridVertex& b) {
    return std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1;
}

void check_graph(const std::vector<GridVertex>& vs, const std::vector<std::pair<int, int>>& es, bool layout) {
    auto fail = [&](const std::string& m) {
        if (layout) throw LayoutConflict(m);
        throw std::invalid_argument(m);
    };
    std::set<GridVertex> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) fail("duplicate grid vertex");
    std::set<std::pair<int, int>> have;
    for (auto [a, b] : es) {
        if (a < 0 || b < 0 || size_t(a) >= vs.size() || size_t(b) >= vs.size()) fail("edge endpoint out of range");
        if (!unit_apart(vs[size_t(a)], vs[size_t(b)])) fail("edge between grid vertices that are not adjacent");
        if (!have.insert({std::min(a, b), std::max(a, b)}).second) fail("duplicate edge");
    }
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (unit_apart(vs[a], vs[b]) && !have.count({int(a), int(b)})) fail("graph is not induced: missing grid edge");
}

}  // namespace

int grid_color(const GridVertex& v) { return int(((v.first + v.second) % 2 + 2) % 2); }

std::vector<std::pair<int, int>> grid_edges(const std::vector<GridVertex>& vertices) {
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (unit_apart(vertices[a], vertices[b])) out.push_back({int(a), int(b)});
    return out;
}

std::vector<GridVertex> grid_block(long rows, long cols) {
    std::vector<GridVertex> out;
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) out.push_back({i, j});
    return out;
}

CSPInstance gen_csp(const std::vector<GridVertex>& vertices, long n, double density, uint64_t seed) {
    CSPInstance c;
    c.vertices = vertices;
    c.edges = grid_edges(vertices);
    c.n = n;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    for (size_t e = 0; e < c.edges.size(); ++e) {
        std::set<std::pair<long, long>> r;
        for (long a = 1; a <= n; ++a)
            for (long b = 1; b <= n; ++b)
                if (keep(rng)) r.insert({a, b});
        c.relations.push_back(std::move(r));
    }
    c.validate();
    return c;
}

void CSPInstance::validate() const {
    if (n < 1) throw std::invalid_argument("csp: domain size must be positive");
    check_graph(vertices, edges, false);
    if (relations.size() != edges.size()) throw std::invalid_argument("csp: one relation per edge");
    for (const auto& r : relations)
        for (auto [a, b] : r)
            if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("csp: relation value outside 1..n");
}

void SumSetInstance::validate() const {
    if (n < 1) throw std::invalid_argument("sumset: n must be positive");
    check_graph(vertices, edges, false);
    if (color.size() != vertices.size() || dv.size() != vertices.size() || de.size() != edges.size())
        throw std::invalid_argument("sumset: size mismatch");
    for (size_t v = 0; v < vertices.size(); ++v) {
        if (color[v] != grid_color(vertices[v])) throw std::invalid_argument("sumset: coloring is not the grid parity");
        long unit = ipow(n, color[v]);
        for (long d : dv[v])
            if (d % unit != 0 || d / unit < 1 || d / unit > n) throw std::invalid_argument("sumset: D_v value out of range");
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto& a = dv[size_t(edges[e].first)];
        const auto& b = dv[size_t(edges[e].second)];
        for (long d : de[e]) {
            bool ok = false;
            for (long x : a) ok = ok || b.count(d - x);
            if (!ok) throw std::invalid_argument("sumset: D_e value is not a sum from D_u + D_v");
        }
    }
}

SumSetInstance csp_to_sumset(const CSPInstance& c) {
    c.validate();
    SumSetInstance s;
    s.vertices = c.vertices;
    s.edges = c.edges;
    s.n = c.n;
    for (const auto& v : c.vertices) s.color.push_back(grid_color(v));
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        std::set<long> d;
        for (long a = 1; a <= c.n; ++a) d.insert(a * ipow(c.n, s.color[v]));
        s.dv.push_back(std::move(d));
    }
    for (size_t e = 0; e < c.edges.size(); ++e) {
        int cu = s.color[size_t(c.edges[e].first)], cv = s.color[size_t(c.edges[e].second)];
        std::set<long> d;
        for (auto [a, b] : c.relations[e]) d.insert(a * ipow(c.n, cu) + b * ipow(c.n, cv));
        s.de.push_back(std::move(d));
    }
    return s;
}

std::vector<long> decode_assignment(const SumSetInstance& s, const std::vector<long>& values) {
    std::vector<long> out;
    for (size_t v = 0; v < values.size(); ++v) out.push_back(values[v] / ipow(s.n, s.color[v]));
    return out;
}

bool is_sumset_solution(const SumSetInstance& s, const std::vector<long>& values) {
    if (values.size() != s.vertices.size()) return false;
    for (size_t v = 0; v < values.size(); ++v)
        if (!s.dv[v].count(values[v])) return false;
    for (size_t e = 0; e < s.edges.size(); ++e)
        if (!s.de[e].count(values[size_t(s.edges[e].first)] + values[size_t(s.edges[e].second)])) return false;
    return true;
}

namespace {

// Lexicographic backtracking; ok(v, values) checks the edges closed by vertex v.
template <class Dom, class Ok>
std::optional<std::vector<long>> backtrack(size_t nv, Dom dom, Ok ok, uint64_t max_nodes, const char* who) {
    std::vector<long> cur(nv, 0);
    uint64_t nodes = 0;
    auto rec = [&](auto&& self, size_t v) -> bool {
        if (v == nv) return true;
        for (long val : dom(v)) {
            if (++nodes > max_nodes) throw ResourceExceeded(std::string(who) + ": node cap reached");
            cur[v] = val;
            if (ok(v, cur) && self(self, v + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0)) return cur;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<long>> brute_csp(const CSPInstance& c, uint64_t max_nodes) {
    c.validate();
    std::vector<long> all;
    for (long a = 1; a <= c.n; ++a) all.push_back(a);
    return backtrack(
        c.vertices.size(), [&](size_t) { return all; },
        [&](size_t v, const std::vector<long>& cur) {
            for (size_t e = 0; e < c.edges.size(); ++e) {
                auto [a, b] = c.edges[e];
                if (size_t(std::max(a, b)) != v) continue;
                if (!c.relations[e].count({cur[size_t(a)], cur[size_t(b)]})) return false;
            }
            return true;
        },
        max_nodes, "brute_csp");
}

std::optional<std::vector<long>> brute_sumset(const SumSetInstance& s, uint64_t max_nodes) {
    s.validate();
    return backtrack(
        s.vertices.size(), [&](size_t v) { return std::vector<long>(s.dv[v].begin(), s.dv[v].end()); },
        [&](size_t v, const std::vector<long>& cur) {
            for (size_t e = 0; e < s.edges.size(); ++e) {
                auto [a, b] = s.edges[e];
                if (size_t(std::max(a, b)) != v) continue;
                if (!s.de[e].count(cur[size_t(a)] + cur[size_t(b)])) return false;
            }
            return true;
        },
        max_nodes, "brute_sumset");
}

long sumset_range(const SumSetInstance& s) { return 100 * s.n * s.n; }

SumSetArrays sumset_arrays(const SumSetInstance& s) {
    s.validate();
    long r = sumset_range(s);
    SumSetArrays out;
    for (const auto& d : s.dv) {
        IntArray x = IntArray::filled(r, 2);
        for (long k : d) x.at(k) = 1;
        out.xv.push_back(std::move(x));
    }
    for (const auto& d : s.de) {
        IntArray x = IntArray::filled(r, 0);
        for (long k : d) x.at(-k) = -2;
        out.xe.push_back(std::move(x));
    }
    return out;
}

PointD hex_point(const HexKey& h) {
    return PointD(FieldElem(BigRational(h.first)), FieldElem::surd(3, BigRational(h.second)));
}

const CurveShape& basic_curve_shape() {
    // Cell (q, r) is centred at (1 + 3q, (1 + q + 2r) sqrt3).  The core has one
    // horizontal inner edge, between (1,-1) and (1,0).
    static const CurveShape shape{{HexKey{0, 0}, HexKey{1, -1}, HexKey{1, 0}, HexKey{2, -1}}, {0, 4}, {5, -1}};
    return shape;
}

namespace {

const std::array<HexKey, 6> kCellNb = {HexKey{0, 1}, HexKey{0, -1}, HexKey{1, 0}, HexKey{-1, 0}, HexKey{1, -1}, HexKey{-1, 1}};
const std::array<HexKey, 6> kCorner = {HexKey{2, 0}, HexKey{1, 1}, HexKey{-1, 1}, HexKey{-2, 0}, HexKey{-1, -1}, HexKey{1, -1}};

using EdgeKey = std::pair<HexKey, HexKey>;  // sorted endpoints

EdgeKey ekey(HexKey a, HexKey b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::vector<HexKey> region(const GridVertex& g) {
    const CurveShape& sh = basic_curve_shape();
    HexKey t{g.first * sh.step_i.first + g.second * sh.step_j.first, g.first * sh.step_i.second + g.second * sh.step_j.second};
    std::set<HexKey> cells;
    for (auto c : sh.core) {
        cells.insert(c);
        for (auto d : kCellNb) cells.insert({c.first + d.first, c.second + d.second});
    }
    std::vector<HexKey> out;
    for (auto c : cells) out.push_back({c.first + t.first, c.second + t.second});
    return out;
}

// Closed boundary of a cell set, counterclockwise.
std::vector<HexKey> boundary_ccw(const std::vector<HexKey>& cells) {
    std::map<EdgeKey, int> cnt;
    for (auto [q, r] : cells) {
        HexKey c{1 + 3 * q, 1 + q + 2 * r};
        for (int k = 0; k < 6; ++k) {
            HexKey a{c.first + kCorner[size_t(k)].first, c.second + kCorner[size_t(k)].second};
            HexKey b{c.first + kCorner[size_t(k + 1) % 6].first, c.second + kCorner[size_t(k + 1) % 6].second};
            ++cnt[ekey(a, b)];
        }
    }
    std::map<HexKey, std::vector<HexKey>> adj;
    for (const auto& [e, c] : cnt)
        if (c == 1) adj[e.first].push_back(e.second), adj[e.second].push_back(e.first);
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) throw LayoutConflict("basic curve is not a simple cycle");
    std::vector<HexKey> cyc{adj.begin()->first};
    HexKey prev = cyc[0], cur = adj.begin()->second[0];
    while (cur != cyc[0]) {
        cyc.push_back(cur);
        const auto& nb = adj[cur];
        HexKey nx = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nx;
    }
    if (cyc.size() != adj.size()) throw LayoutConflict("basic curve is not connected");
    long area = 0;  // shoelace in lattice units; the sqrt3 factor keeps the sign
    for (size_t i = 0; i < cyc.size(); ++i) {
        const auto& a = cyc[i];
        const auto& b = cyc[(i + 1) % cyc.size()];
        area += a.first * b.second - b.first * a.second;
    }
    if (area < 0) std::reverse(cyc.begin(), cyc.end());
    return cyc;
}

}  // namespace

CurveLayout layout_curves(const std::vector<GridVertex>& vertices, const std::vector<std::pair<int, int>>& edges) {
    check_graph(vertices, edges, true);
    CurveLayout out;
    std::map<EdgeKey, std::vector<std::pair<int, size_t>>> owners;  // edge -> (curve, position)
    for (size_t v = 0; v < vertices.size(); ++v) {
        BasicCurve c;
        c.grid = vertices[v];
        c.ccw = grid_color(vertices[v]) == 0;
        c.cells = region(vertices[v]);
        auto cyc = boundary_ccw(c.cells);
        if (!c.ccw) std::reverse(cyc.begin(), cyc.end());
        for (size_t i = 0; i < cyc.size(); ++i) {
            c.edges.push_back({cyc[i], cyc[(i + 1) % cyc.size()], -1});
            owners[ekey(cyc[i], cyc[(i + 1) % cyc.size()])].push_back({int(v), i});
        }
        out.curves.push_back(std::move(c));
    }
    // Regions must not overlap.
    std::map<HexKey, int> cell_owner;
    for (size_t v = 0; v < out.curves.size(); ++v)
        for (auto c : out.curves[v].cells)
            if (!cell_owner.emplace(c, int(v)).second) throw LayoutConflict("basic curves overlap");

    std::map<std::pair<int, int>, int> edge_of;
    for (size_t e = 0; e < edges.size(); ++e)
        edge_of[{std::min(edges[e].first, edges[e].second), std::max(edges[e].first, edges[e].second)}] = int(e);
    std::map<std::pair<int, int>, int> shared_count;
    for (const auto& [ek, own] : owners) {
        if (own.size() == 1) continue;
        if (own.size() > 2) throw LayoutConflict("hexagonal edge on more than two curves");
        int a = own[0].first, b = own[1].first;
        auto it = edge_of.find({std::min(a, b), std::max(a, b)});
        if (it == edge_of.end()) throw LayoutConflict("curves of non-adjacent vertices share an edge");
        const CurveEdge& ea = out.curves[size_t(a)].edges[own[0].second];
        const CurveEdge& eb = out.curves[size_t(b)].edges[own[1].second];
        if (ea.from != eb.from) throw LayoutConflict("shared edge orientations disagree");
        SharedEdge s;
        s.grid_edge = it->second;
        s.u = edges[size_t(s.grid_edge)].first;
        s.v = edges[size_t(s.grid_edge)].second;
        s.from = ea.from;
        s.to = ea.to;
        int id = int(out.shared.size());
        out.shared.push_back(s);
        out.curves[size_t(a)].edges[own[0].second].shared = id;
        out.curves[size_t(b)].edges[own[1].second].shared = id;
        ++shared_count[it->first];
    }
    for (const auto& [k, e] : edge_of)
        if (shared_count[k] != 1) throw LayoutConflict("adjacent curves must share exactly one edge");
    std::sort(out.shared.begin(), out.shared.end(), [](const SharedEdge& x, const SharedEdge& y) { return x.grid_edge < y.grid_edge; });
    // re-point curve edges after sorting
    for (auto& c : out.curves)
        for (auto& e : c.edges)
            if (e.shared >= 0)
                for (size_t s = 0; s < out.shared.size(); ++s)
                    if (ekey(out.shared[s].from, out.shared[s].to) == ekey(e.from, e.to)) e.shared = int(s);

    std::set<HexKey> seen;
    for (const auto& c : out.curves)
        for (const auto& e : c.edges)
            if (seen.insert(e.from).second) out.hex_vertices.push_back(e.from);
    return out;
}

CurveLayout layout_curves(const SumSetInstance& s) {
    s.validate();
    return layout_curves(s.vertices, s.edges);
}

EpsScale kcenter2d_scale(const SumSetInstance& s) { return EpsScale::full(sumset_range(s)); }

KCenter2D build_kcenter2d(const SumSetInstance& s, const EpsScale& scale, RadiusMode mode) {
    KCenter2D k;
    k.source = s;
    k.arrays = sumset_arrays(s);
    if (scale.n != sumset_range(s)) throw std::invalid_argument("build_kcenter2d: scale.n must equal 100 n^2");
    k.layout = layout_curves(s);
    k.scale = scale;
    k.mode = mode;
    k.sq_radius = sq_radius_for(mode, scale);
    FieldElem half(BigRational(1, 2));

    // family ends: (start, end) hex vertices along the ladder direction
    std::vector<std::pair<HexKey, HexKey>> ends;
    auto add = [&](const IntArray* x, const HexKey& start, const HexKey& end, const std::string& tag, int vtx, int sh) {
        PointD a = hex_point(start), b = hex_point(end);
        PnSpec p;
        p.array = x;
        p.origin = (a + b) * half;
        p.direction = (b - a) * half;
        p.scale = scale;
        p.tag = tag;
        std::vector<PointD> pts;
        for (long i = pn_lo(scale.n); i <= pn_hi(scale.n); ++i) pts.push_back(pn_point(p, i));
        k.families.push_back(p);
        k.family_points.push_back(std::move(pts));
        k.family_vertex.push_back(vtx);
        k.family_shared.push_back(sh);
        ends.push_back({start, end});
    };
    for (size_t v = 0; v < k.layout.curves.size(); ++v) {
        const auto& c = k.layout.curves[v];
        for (size_t e = 0; e < c.edges.size(); ++e)
            if (c.edges[e].shared < 0)
                add(&k.arrays.xv[v], c.edges[e].from, c.edges[e].to, "V" + std::to_string(v) + "." + std::to_string(e), int(v), -1);
    }
    for (size_t sidx = 0; sidx < k.layout.shared.size(); ++sidx) {
        const auto& sh = k.layout.shared[sidx];
        add(&k.arrays.xe[size_t(sh.grid_edge)], sh.to, sh.from, "E" + std::to_string(sh.grid_edge), -1, int(sidx));
    }

    // curve neighbours of each hex vertex, for the consistency points
    std::map<HexKey, std::vector<std::pair<HexKey, HexKey>>> around;  // vertex -> (prev, next) per curve
    std::map<HexKey, bool> on_shared;
    for (const auto& c : k.layout.curves)
        for (size_t e = 0; e < c.edges.size(); ++e) {
            const auto& cur = c.edges[e];
            const auto& nx = c.edges[(e + 1) % c.edges.size()];
            around[cur.to].push_back({cur.from, nx.to});
            if (cur.shared >= 0) on_shared[cur.from] = on_shared[cur.to] = true;
        }
    for (const auto& h : k.layout.hex_vertices) {
        PlanarDisk d;
        d.name = "h" + std::to_string(h.first) + "," + std::to_string(h.second);
        d.expected = hex_point(h);
        for (size_t f = 0; f < ends.size(); ++f) {
            if (ends[f].first == h) d.parts.push_back({int(f), false});
            if (ends[f].second == h) d.parts.push_back({int(f), true});
        }
        if (!on_shared[h]) {
            const auto& pn = around[h].at(0);
            HexVertexContext ctx{d.expected, {{(hex_point(pn.first) + d.expected) * half, false},
                                              {(hex_point(pn.second) + d.expected) * half, false}}};
            d.fixed.push_back(build_consistency(ctx, scale));
        }
        auto anc = build_anchors({d.expected}, scale);
        d.fixed.insert(d.fixed.end(), anc.begin(), anc.end());
        k.disks.push_back(std::move(d));
    }

    GeometricInstance& g = k.geometric;
    g.dim = 2;
    g.k = int(k.disks.size());
    g.sq_radius = k.sq_radius;
    for (size_t f = 0; f < k.families.size(); ++f)
        for (long i = k.lo(); i <= k.hi(); ++i) g.points.push_back({k.fp(int(f), i), k.families[f].tag, i});
    for (const auto& d : k.disks)
        for (const auto& p : d.fixed) g.points.push_back(p);
    return k;
}

std::vector<long> kcenter2d_splits(const KCenter2D& k, const std::vector<long>& values) {
    std::vector<long> split(k.families.size());
    for (size_t f = 0; f < k.families.size(); ++f) {
        if (k.family_vertex[f] >= 0) {
            split[f] = 2 * values[size_t(k.family_vertex[f])];
        } else {
            const auto& sh = k.layout.shared[size_t(k.family_shared[f])];
            split[f] = -2 * (values[size_t(sh.u)] + values[size_t(sh.v)]);
        }
    }
    return split;
}

namespace {

std::vector<PointD> cluster(const KCenter2D& k, const PlanarDisk& d, const std::vector<long>& split) {
    std::vector<PointD> out;
    for (const auto& part : d.parts) {
        long s = split[size_t(part.family)];
        long from = part.tail ? s + 1 : k.lo();
        long to = part.tail ? k.hi() : s;
        if (from > to) continue;
        out.push_back(k.fp(part.family, from));
        if (to != from) out.push_back(k.fp(part.family, to));
    }
    for (const auto& p : d.fixed) out.push_back(p.p);
    return out;
}

}  // namespace

WitnessKC witness_kcenter2d(const KCenter2D& k, const std::vector<long>& values) {
    if (!is_sumset_solution(k.source, values)) throw NotASolution("assignment does not solve the SumSet instance");
    WitnessKC w;
    w.split = kcenter2d_splits(k, values);
    for (const auto& d : k.disks) w.centers.centers.push_back(meb(cluster(k, d, w.split)).center);
    return w;
}

SplitDecision decide_split_cover(const KCenter2D& k, uint64_t max_nodes) {
    SplitDecision out;
    const size_t nf = k.families.size();
    const long lo = k.lo() - 1, hi = k.hi();
    std::vector<std::vector<int>> disks_of(nf);
    for (size_t d = 0; d < k.disks.size(); ++d)
        for (const auto& p : k.disks[d].parts) disks_of[size_t(p.family)].push_back(int(d));

    std::map<std::pair<int, std::vector<long>>, bool> memo;
    auto ok = [&](int d, const std::vector<long>& split) {
        std::vector<long> key;
        for (const auto& p : k.disks[size_t(d)].parts) key.push_back(split[size_t(p.family)]);
        auto it = memo.find({d, key});
        if (it != memo.end()) return it->second;
        ++out.meb_evaluations;
        bool r = fits(cluster(k, k.disks[size_t(d)], split), k.sq_radius);
        memo.emplace(std::make_pair(d, key), r);
        return r;
    };

    using Bounds = std::vector<std::pair<long, long>>;
    // Narrow every variable of the queued disks against the most favourable
    // values of the others.  False when a domain empties.
    auto propagate = [&](Bounds& b, std::deque<int> queue) {
        std::vector<char> queued(k.disks.size(), 0);
        for (int d : queue) queued[size_t(d)] = 1;
        std::vector<long> trial(nf);
        while (!queue.empty()) {
            int d = queue.front();
            queue.pop_front();
            queued[size_t(d)] = 0;
            const auto& parts = k.disks[size_t(d)].parts;
            for (const auto& part : parts) {
                for (const auto& o : parts) trial[size_t(o.family)] = o.tail ? b[size_t(o.family)].second : b[size_t(o.family)].first;
                size_t f = size_t(part.family);
                auto [l, u] = b[f];
                long nl = l, nu = u;
                if (!part.tail) {
                    trial[f] = l;
                    if (!ok(d, trial)) return false;
                    long a = l, z = u;  // largest value that still fits
                    while (a < z) {
                        long m = a + (z - a + 1) / 2;
                        trial[f] = m;
                        if (ok(d, trial)) a = m;
                        else z = m - 1;
                    }
                    nu = a;
                } else {
                    trial[f] = u;
                    if (!ok(d, trial)) return false;
                    long a = l, z = u;  // smallest value that fits
                    while (a < z) {
                        long m = a + (z - a) / 2;
                        trial[f] = m;
                        if (ok(d, trial)) z = m;
                        else a = m + 1;
                    }
                    nl = a;
                }
                if (nl != l || nu != u) {
                    b[f] = {nl, nu};
                    for (int e : disks_of[f])
                        if (!queued[size_t(e)]) queued[size_t(e)] = 1, queue.push_back(e);
                }
            }
        }
        return true;
    };

    std::deque<int> all;
    for (size_t d = 0; d < k.disks.size(); ++d) all.push_back(int(d));
    auto search = [&](auto&& self, Bounds b, std::deque<int> queue) -> bool {
        if (++out.nodes > max_nodes) throw ResourceExceeded("decide_split_cover: node cap reached");
        if (!propagate(b, std::move(queue))) return false;
        size_t pick = nf;
        long width = 0;
        for (size_t f = 0; f < nf; ++f) {
            long w = b[f].second - b[f].first;
            if (w > 0 && (pick == nf || w < width)) pick = f, width = w;
        }
        if (pick == nf) {
            out.split.clear();
            for (const auto& [l, u] : b) out.split.push_back(l);
            return true;
        }
        long mid = b[pick].first + width / 2;
        std::deque<int> touched(disks_of[pick].begin(), disks_of[pick].end());
        Bounds up = b;
        up[pick].first = mid + 1;
        if (self(self, up, touched)) return true;
        b[pick].second = mid;
        return self(self, b, touched);
    };
    out.feasible = search(search, Bounds(nf, {lo, hi}), all);
    if (out.feasible) {
        std::vector<long> vals(k.layout.curves.size(), 0);
        std::vector<char> set(vals.size(), 0);
        bool good = true;
        for (size_t f = 0; f < nf; ++f) {
            int v = k.family_vertex[f];
            if (v < 0) continue;
            long s = out.split[f];
            if (s % 2 != 0 || (set[size_t(v)] && vals[size_t(v)] != s / 2)) good = false;
            vals[size_t(v)] = s / 2;
            set[size_t(v)] = 1;
        }
        if (good) out.decoded = vals;
    }
    return out;
}

}  // namespace kcr
