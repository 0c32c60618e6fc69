#include "kcr/reduce3d.hpp"

#include <chrono>
#include <sstream>

namespace kcr {

namespace {

FieldElem fq(const BigRational& q) { return FieldElem(q); }

std::vector<PointD> ladder(const PnSpec& s) {
    std::vector<PointD> out;
    for (long i = pn_lo(s.array->n); i <= pn_hi(s.array->n); ++i) out.push_back(pn_point(s, i));
    return out;
}

BigRational m_sq(const EpsScale& s) {
    BigRational m = BigRational(s.n) * s.n;
    return m * m;
}

}  // namespace

BigRational anchor_t(long n) { return BigRational(3 * (n / 100)) + BigRational(1, 4); }

TwoCenter3D build_2center3d(const IntArray& x, const EpsScale& s, RadiusMode mode) {
    x.validate();
    if (s.n != x.n) throw std::invalid_argument("build_2center3d: scale.n must equal x.n");
    TwoCenter3D in;
    in.x = std::make_shared<const IntArray>(x);
    in.scale = s;
    in.mode = mode;
    in.sq_radius = sq_radius_for(mode, s);
    in.t = anchor_t(x.n);

    FieldElem z0, r2h = FieldElem::surd(2, BigRational(1, 2)), half(BigRational(1, 2));
    Vec up(z0, z0, FieldElem(1));
    auto fam = [&](const std::string& tag, PointD origin, Vec dir, FieldElem alpha) {
        PnSpec p;
        p.array = in.x.get();
        p.origin = std::move(origin);
        p.direction = std::move(dir);
        p.alpha = std::move(alpha);
        p.scale = s;
        p.tag = tag;
        in.families.push_back(p);
        in.family_points.push_back(ladder(p));
    };
    fam("A", PointD(r2h, z0, z0), up, FieldElem(1));
    fam("B", PointD(z0, r2h, z0), up, FieldElem(1));
    fam("C", PointD(-half, -half, z0), PointD(z0, z0, r2h), FieldElem::surd(2));

    BigRational e = s.eps();
    FieldElem top = r2h + fq(e);
    FieldElem side = fq(1 - in.t * e);
    in.d_plus = {PointD(z0, z0, top + FieldElem(1)), PointD(side, z0, top), PointD(z0, side, top),
                 PointD(-side, z0, top), PointD(z0, -side, top)};
    for (const auto& d : in.d_plus) in.d_minus.push_back(PointD(d[0], d[1], -d[2]));

    for (size_t f = 0; f < 3; ++f)
        for (long i = in.lo(); i <= in.hi(); ++i) in.points.push_back({in.fp(int(f), i), in.families[f].tag, i});
    for (size_t a = 0; a < 5; ++a) in.points.push_back({in.d_plus[a], "D+", long(a)});
    for (size_t a = 0; a < 5; ++a) in.points.push_back({in.d_minus[a], "D-", long(a)});
    return in;
}

BigRational star_coord(const IntArray& x, long i, const EpsScale& s) {
    return -3 * BigRational(i) - x.at(i) * eps_power(s, 5);
}

WitnessPair witness_3d(const TwoCenter3D& inst, const Triple& sol) {
    if (!is_yes_witness(*inst.x, sol)) throw NotAWitness("not a YES witness for this array");
    const EpsScale& s = inst.scale;
    BigRational e = s.eps();
    WitnessPair w;
    w.split = sol;
    w.c_plus = PointD(fq(star_coord(*inst.x, sol.i, s) * e), fq(star_coord(*inst.x, sol.j, s) * e),
                      FieldElem::surd(2, BigRational(1, 2)) + fq(e));
    w.c_minus = -w.c_plus;
    return w;
}

WitnessPair witness_3d(const IntArray& x, const Triple& sol, const EpsScale& s) {
    return witness_3d(build_2center3d(x, s), sol);
}

std::vector<int> assignment_from_centers(const TwoCenter3D& inst, const PointD& c_plus, const PointD& c_minus) {
    std::vector<int> side(inst.points.size(), -1);
    size_t per = size_t(inst.hi() - inst.lo() + 1);
    for (size_t f = 0; f < 3; ++f) {
        std::vector<bool> in_p(per), in_m(per);
        for (size_t t = 0; t < per; ++t) {
            const PointD& p = inst.family_points[f][t];
            in_p[t] = within(p, c_plus, inst.sq_radius);
            in_m[t] = within(p, c_minus, inst.sq_radius);
            if (!in_p[t] && !in_m[t]) throw std::invalid_argument("assignment: point outside both balls");
        }
        // Heads below the last point only the bottom ball holds.
        size_t cut = 0;
        for (size_t t = 0; t < per; ++t)
            if (!in_p[t]) cut = t + 1;
        bool prefix = true;
        for (size_t t = cut; t < per; ++t) prefix = prefix && in_p[t];
        for (size_t t = 0; t < per; ++t) {
            int v = prefix ? (t < cut ? 0 : 1) : (in_m[t] ? 0 : 1);
            side[f * per + t] = v;
        }
    }
    for (size_t a = 0; a < 10; ++a) {
        size_t idx = 3 * per + a;
        const PointD& p = inst.points[idx].p;
        bool ip = within(p, c_plus, inst.sq_radius), im = within(p, c_minus, inst.sq_radius);
        if (!ip && !im) throw std::invalid_argument("assignment: anchor outside both balls");
        side[idx] = a < 5 ? (ip ? 1 : 0) : (im ? 0 : 1);
    }
    return side;
}

Extraction3D extract_3d(const TwoCenter3D& inst, const std::vector<int>& assignment) {
    if (assignment.size() != inst.points.size()) throw std::invalid_argument("extract_3d: assignment size mismatch");
    size_t per = size_t(inst.hi() - inst.lo() + 1);
    // B+ is the ball holding d0+.
    int plus = assignment[3 * per];
    std::vector<PointD> ps, ms;
    for (size_t i = 0; i < assignment.size(); ++i) (assignment[i] == plus ? ps : ms).push_back(inst.points[i].p);
    if (!fits(ps, inst.sq_radius)) throw InvalidCovering("extract_3d: top side does not fit one ball");
    if (!fits(ms, inst.sq_radius)) throw InvalidCovering("extract_3d: bottom side does not fit one ball");

    std::array<long, 3> hat{};
    for (size_t f = 0; f < 3; ++f) {
        size_t heads = 0;
        while (heads < per && assignment[f * per + heads] != plus) ++heads;
        for (size_t t = heads; t < per; ++t)
            if (assignment[f * per + t] != plus)
                throw NotPrefixSplit("extract_3d: family " + inst.families[f].tag + " is not split into head and tail");
        hat[f] = inst.lo() - 1 + long(heads);
    }
    Extraction3D out;
    out.sw = {hat[0], hat[1], hat[2]};
    for (long h : hat)
        if (h % 2 != 0) throw SoundnessViolation("extract_3d: odd switching index " + std::to_string(h));
    out.sol = {hat[0] / 2, hat[1] / 2, hat[2] / 2};
    if (out.sol.i + out.sol.j + out.sol.k != 0) throw SoundnessViolation("extract_3d: indices do not sum to zero");
    const IntArray& x = *inst.x;
    if (x.at(out.sol.i) + x.at(out.sol.j) + x.at(out.sol.k) != 0)
        throw SoundnessViolation("extract_3d: values do not sum to zero");
    return out;
}

Certificate3D certify_no_3d(const TwoCenter3D& inst, long max_n) {
    if (inst.x->n > max_n) throw ResourceExceeded("certify_no_3d: n above the configured bound");
    auto t0 = std::chrono::steady_clock::now();
    Certificate3D out;
    CertificateReport& rep = out.report;
    rep.kind = "certify-3d";
    const long lo = inst.lo(), hi = inst.hi();

    auto cluster = [&](long a, long b, long k, bool top) {
        std::vector<PointD> pts;
        const std::array<long, 3> sp{a, b, k};
        for (int f = 0; f < 3; ++f) {
            long from = top ? sp[size_t(f)] + 1 : lo, to = top ? hi : sp[size_t(f)];
            if (from > to) continue;
            pts.push_back(inst.fp(f, from));
            if (to != from) pts.push_back(inst.fp(f, to));
        }
        const auto& d = top ? inst.d_plus : inst.d_minus;
        pts.insert(pts.end(), d.begin(), d.end());
        return pts;
    };
    // top: tails plus D+, an up-set in (a, b, k); bottom: heads plus D-, a down-set.
    auto top = [&](long a, long b, long k) {
        ++out.meb_evaluations;
        return fits(cluster(a, b, k, true), inst.sq_radius);
    };
    auto bot = [&](long a, long b, long k) {
        ++out.meb_evaluations;
        return fits(cluster(a, b, k, false), inst.sq_radius);
    };

    const size_t S = size_t(hi - lo + 2);
    auto slot = [&](long v) { return size_t(v - (lo - 1)); };
    // tmin(a): least b with top(a, b, hi); bmax(a): largest b with bot(a, b, lo-1).
    std::vector<long> tmin(S), bmax(S);
    long b = hi + 1;
    for (long a = lo - 1; a <= hi; ++a) {
        while (b - 1 >= lo - 1 && top(a, b - 1, hi)) --b;
        tmin[slot(a)] = b;
    }
    b = hi;
    for (long a = lo - 1; a <= hi; ++a) {
        while (b >= lo - 1 && !bot(a, b, lo - 1)) --b;
        bmax[slot(a)] = b;
    }

    size_t band = 0, feasible = 0, top_empty = 0, bottom_empty = 0;
    std::vector<std::array<long, 3>> found;
    for (long a = lo - 1; a <= hi; ++a) {
        long tm = tmin[slot(a)], bm = bmax[slot(a)];
        for (long bb = lo - 1; bb <= hi; ++bb) {
            if (bb < tm) {
                ++top_empty;
                continue;
            }
            if (bb > bm) {
                ++bottom_empty;
                continue;
            }
            ++band;
            // least k with top, largest k with bot
            long l = lo - 1, r = hi;
            while (l < r) {
                long m = l + (r - l) / 2;
                if (top(a, bb, m)) r = m;
                else l = m + 1;
            }
            long ktop = l;
            l = lo - 1, r = hi;
            while (l < r) {
                long m = l + (r - l + 1) / 2;
                if (bot(a, bb, m)) l = m;
                else r = m - 1;
            }
            long kbot = l;
            std::ostringstream in;
            in << "a=" << a << " b=" << bb << " ktop=" << ktop << " kbot=" << kbot;
            bool ok = ktop <= kbot;
            rep.add({"class", "split-class", in.str() + (ok ? " feasible" : " infeasible"), true, ""});
            if (ok) {
                ++feasible;
                for (long k = ktop; k <= kbot; ++k) found.push_back({a, bb, k});
            }
        }
    }
    // Classes outside the band fail for every k on one side (monotone in k).
    rep.counts["split-class-top-empty"] = {top_empty, 0};
    rep.counts["split-class-bottom-empty"] = {bottom_empty, 0};

    const IntArray& x = *inst.x;
    for (const auto& [a, bb, k] : found) {
        std::ostringstream in;
        in << "split a=" << a << " b=" << bb << " k=" << k;
        bool even = a % 2 == 0 && bb % 2 == 0 && k % 2 == 0;
        bool good = even && is_gap_triple(x, Triple{a / 2, bb / 2, k / 2});
        rep.add({"decode", "soundness", in.str() + (even ? "" : " odd split"), good, ""});
        if (good && !out.decoded) {
            out.decoded = Triple{a / 2, bb / 2, k / 2};
            out.split = {a, bb, k};
        }
    }
    out.feasible = !found.empty();
    if (out.feasible && !out.decoded) out.split = {found[0][0], found[0][1], found[0][2]};
    std::ostringstream sum;
    if (out.feasible)
        sum << "feasible: " << found.size() << " split triples over " << feasible << " of " << S * S << " classes";
    else
        sum << "infeasible: " << S * S << " classes (" << top_empty << " top-empty, " << bottom_empty
            << " bottom-empty, " << band << " checked per k)";
    rep.summary = sum.str();
    rep.config["n"] = std::to_string(inst.x->n);
    rep.config["radius"] = radius_mode_name(inst.mode);
    rep.config["meb_evaluations"] = std::to_string(out.meb_evaluations);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

CertificateReport ranges_check(const TwoCenter3D& inst, const PointD& c_plus, const PointD& c_minus) {
    CertificateReport rep;
    rep.kind = "ranges-3d";
    const EpsScale& s = inst.scale;
    BigRational e = s.eps(), m2 = m_sq(s);
    auto rec = [&](const std::string& id, const FieldElem& margin) {
        bool pass = fe_sign(margin) >= 0;
        rep.add({id, "ranges", "n=" + std::to_string(s.n), pass, pass ? "" : fe_summary(margin)});
    };
    for (int side = 0; side < 2; ++side) {
        const PointD& c = side ? c_minus : c_plus;
        const auto& d = side ? inst.d_minus : inst.d_plus;
        bool covers = true;
        for (const auto& p : d) covers = covers && within(p, c, inst.sq_radius);
        std::string tag = side ? "minus" : "plus";
        rep.add({tag + "-covers-anchors", "ranges", "", covers, ""});
        if (!covers) continue;
        // c+ = (x e, y e, 1/sqrt2 + e + z), c- = (-x e, -y e, -1/sqrt2 - e - z)
        FieldElem sg(side ? -1 : 1);
        FieldElem xe = c[0] * sg, ye = c[1] * sg;
        FieldElem z = c[2] * sg - FieldElem::surd(2, BigRational(1, 2)) - fq(e);
        FieldElem box = fq((inst.t + 3 * m2 * e) * e);
        rec(tag + "-z", z + fq(3 * m2 * e * e));
        rec(tag + "-x-low", xe + box);
        rec(tag + "-x-high", box - xe);
        rec(tag + "-y-low", ye + box);
        rec(tag + "-y-high", box - ye);
    }
    rep.summary = rep.verdict ? "anchor ranges hold" : "anchor range violated";
    return rep;
}

CertificateReport monotone_distance_check(const TwoCenter3D& inst, const WitnessPair& w) {
    CertificateReport rep;
    rep.kind = "monotone-distance-3d";
    for (int f = 0; f < 3; ++f)
        for (long i = inst.lo(); i < inst.hi(); ++i) {
            FieldElem dp = sq_dist(w.c_plus, inst.fp(f, i + 1)) - sq_dist(w.c_plus, inst.fp(f, i));
            FieldElem dm = sq_dist(w.c_minus, inst.fp(f, i + 1)) - sq_dist(w.c_minus, inst.fp(f, i));
            std::string in = inst.families[size_t(f)].tag + " i=" + std::to_string(i);
            rep.add({"plus", "monotone-distance", in, fe_sign(dp) <= 0, ""});
            rep.add({"minus", "monotone-distance", in, fe_sign(dm) >= 0, ""});
        }
    rep.summary = rep.verdict ? "distances monotone" : "monotonicity violated";
    return rep;
}

}  // namespace kcr
