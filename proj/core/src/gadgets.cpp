#include "kcr/gadgets.hpp"

namespace kcr {

const char* radius_mode_name(RadiusMode m) {
    switch (m) {
        case RadiusMode::Standard: return "standard";
        case RadiusMode::Gap: return "gap";
        default: return "cube3d";
    }
}

RadiusMode parse_radius_mode(const std::string& s) {
    if (s == "standard") return RadiusMode::Standard;
    if (s == "gap") return RadiusMode::Gap;
    if (s == "cube3d") return RadiusMode::Cube3D;
    throw std::invalid_argument("unknown radius mode: " + s);
}

BigRational planar_radius(const EpsScale& s) { return 1 - eps_power(s, 10) + eps_power(s, 17); }

BigRational gap_radius(const EpsScale& s) { return 1 - eps_power(s, 10) + 2 * eps_power(s, 17); }

BigRational cube3d_sq_radius(const EpsScale& s) {
    BigRational m = BigRational(s.n) * s.n;
    return 1 + 3 * m * m * eps_power(s, 20);
}

FieldElem sq_radius_for(RadiusMode m, const EpsScale& s) {
    switch (m) {
        case RadiusMode::Standard: {
            BigRational r = planar_radius(s);
            return FieldElem(BigRational(r * r));
        }
        case RadiusMode::Gap: {
            BigRational r = gap_radius(s);
            return FieldElem(BigRational(r * r));
        }
        default: return FieldElem(cube3d_sq_radius(s));
    }
}

Vec unit_vec(int k) {
    if (k < 1 || k > 12) throw std::invalid_argument("unit_vec: index must be 1..12");
    if (k > 6) return -unit_vec(k - 6);
    FieldElem h(rat(1, 2));
    FieldElem r = FieldElem::surd(3, rat(1, 2));
    switch (k) {
        case 1: return Vec(FieldElem(1), FieldElem());
        case 2: return Vec(r, h);
        case 3: return Vec(h, r);
        case 4: return Vec(FieldElem(), FieldElem(1));
        case 5: return Vec(-h, r);
        default: return Vec(-r, h);
    }
}

PointD hex_lattice(long a1, long a3, long a5) {
    return PointD(FieldElem(2 * a1 + a3 - a5), FieldElem::surd(3, BigRational(a3 + a5)));
}

long floor_div2(long i) { return i >= 0 ? i / 2 : -((-i + 1) / 2); }

FieldElem pn_multiplier(const PnSpec& spec, long i) {
    const IntArray& x = *spec.array;
    long h = floor_div2(i);
    BigRational base = 3 * h * eps_power(spec.scale, 10) + x.at(h) * eps_power(spec.scale, 15);
    FieldElem off = spec.alpha * eps_power(spec.scale, 10);
    FieldElem m(base);
    if (i % 2 == 0) m -= off;
    else m += off;
    return m;
}

PointD pn_point(const PnSpec& spec, long i) { return spec.origin + spec.direction * pn_multiplier(spec, i); }

std::vector<LabeledPoint> build_pn(const PnSpec& spec) {
    if (!spec.array) throw std::invalid_argument("build_pn: missing array");
    spec.array->validate();
    long n = spec.array->n;
    std::vector<LabeledPoint> out;
    out.reserve(size_t(4 * n + 2));
    for (long i = pn_lo(n); i <= pn_hi(n); ++i) out.push_back({pn_point(spec, i), spec.tag, i});
    return out;
}

IntArray reverse_array(const IntArray& a) {
    IntArray r = a;
    for (long i = -a.n; i <= a.n; ++i) r.at(i) = -a.at(-i);
    return r;
}

BigRational anchor_delta(const EpsScale& s) {
    return 1 - (rat(s.n, 10) + 1) * eps_power(s, 10);
}

std::vector<LabeledPoint> build_anchors(const std::vector<PointD>& hex_vertices, const EpsScale& s) {
    FieldElem delta(anchor_delta(s));
    if (fe_sign(delta) <= 0 || fe_cmp(delta, FieldElem(1)) >= 0)
        throw std::invalid_argument("build_anchors: Delta outside (0,1)");
    std::vector<LabeledPoint> out;
    for (const auto& h : hex_vertices)
        for (int k = 1; k <= 6; ++k) out.push_back({h + unit_vec(2 * k) * delta, "ANCHOR", std::nullopt});
    return out;
}

LabeledPoint build_consistency(const HexVertexContext& ctx, const EpsScale& s) {
    if (ctx.incident.size() != 2) throw BadContext("consistency point needs exactly two incident edges");
    for (const auto& e : ctx.incident)
        if (e.second) throw BadContext("consistency point at a vertex with a shared edge");
    Vec u1 = ctx.incident[0].first - ctx.vertex;
    Vec u2 = ctx.incident[1].first - ctx.vertex;
    if (sq_norm(u1) != FieldElem(1) || sq_norm(u2) != FieldElem(1) || dot(u1, u2) != FieldElem(rat(-1, 2)))
        throw BadContext("incident edges are not unit half-edges at 120 degrees");
    Vec u3 = -(u1 + u2);
    FieldElem len(BigRational(1 - eps_power(s, 10)));
    return {ctx.vertex + u3 * len, "CONSISTENCY", std::nullopt};
}

PointD covering_basic_center(const PointD& z, const Vec& ua, const Vec& ub, long i, long j, long ai, long bj,
                             const EpsScale& s) {
    BigRational e = eps_power(s, 10), e15 = eps_power(s, 15);
    BigRational mua = (2 * i + j) * e + (BigRational(4, 3) * ai + BigRational(2, 3) * bj) * e15;
    BigRational mub = (2 * j + i) * e + (BigRational(4, 3) * bj + BigRational(2, 3) * ai) * e15;
    return z + ua * FieldElem(mua) + ub * FieldElem(mub);
}

BigRational covering_center_sq_bound(long i, long j, const EpsScale& s) {
    BigRational b = 3 * eps_power(s, 10) * (std::max(std::abs(i), std::abs(j)) + 1);
    return b * b;
}

}  // namespace kcr
