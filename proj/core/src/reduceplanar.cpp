#include "kcr/reduceplanar.hpp"

#include <chrono>
#include <sstream>

namespace kcr {

namespace {

const FieldElem& half() {
    static const FieldElem h(rat(1, 2));
    return h;
}

PointD mirror(const PointD& a) { return PointD(-a[0], a[1]); }
PointD midpoint(const PointD& a, const PointD& b) { return (a + b) * half(); }

std::vector<PointD> family_points(const PnSpec& s) {
    std::vector<PointD> pts;
    long n = s.array->n;
    pts.reserve(size_t(pn_hi(n) - pn_lo(n) + 1));
    for (long i = pn_lo(n); i <= pn_hi(n); ++i) pts.push_back(pn_point(s, i));
    return pts;
}

int add_family(PlanarInstance& in, const std::string& tag, const PointD& origin, const Vec& dir) {
    PnSpec s;
    s.array = in.x.get();
    s.origin = origin;
    s.direction = dir;
    s.scale = in.scale;
    s.tag = tag;
    in.families.push_back(s);
    in.family_points.push_back(family_points(s));
    return int(in.families.size()) - 1;
}

void collect_points(PlanarInstance& in) {
    for (size_t f = 0; f < in.families.size(); ++f)
        for (long i = in.lo(); i <= in.hi(); ++i) in.points.push_back({in.fp(int(f), i), in.families[f].tag, i});
    for (const auto& d : in.disks)
        for (const auto& p : d.fixed)
            if (p.tag != "ANCHOR") in.points.push_back(p);
    for (const auto& d : in.disks)
        for (const auto& p : d.fixed)
            if (p.tag == "ANCHOR") in.points.push_back(p);
}

std::vector<LabeledPoint> tagged(const std::vector<PointD>& pts, const std::string& tag) {
    std::vector<LabeledPoint> out;
    for (const auto& p : pts) out.push_back({p, tag, std::nullopt});
    return out;
}

BigRational sq(const BigRational& a) { return a * a; }

}  // namespace

GadgetConstants gadget_constants(const EpsScale& s) {
    GadgetConstants g;
    FieldElem e(s.eps());
    FieldElem r3h = FieldElem::surd(3, rat(1, 2)), r7h = FieldElem::surd(7, rat(1, 2));
    g.o = PointD(FieldElem(), FieldElem());
    g.p = PointD(r3h, FieldElem(rat(3, 2)));
    g.pbar = mirror(g.p);
    g.c = PointD(FieldElem(), FieldElem(1));
    g.q = PointD(r3h + r7h, FieldElem());
    FieldElem shift = (FieldElem::surd(7, rat(11, 7)) - FieldElem::surd(3)) * e;
    g.qhat = PointD(g.q[0] - shift, FieldElem());
    g.gamma = FieldElem::surd(21, rat(1, 6)) - half();
    PointD c2 = midpoint(g.p, g.q);
    PointD c3 = -midpoint(g.pbar, mirror(g.q));
    g.centers = {g.c, c2, c3, -g.c, -c2, -c3};
    return g;
}

PlanarInstance build_6center(const IntArray& x, const EpsScale& s, RadiusMode mode) {
    x.validate();
    if (s.n != x.n) throw std::invalid_argument("build_6center: scale.n must equal x.n");
    PlanarInstance in;
    in.k = 6;
    in.x = std::make_shared<const IntArray>(x);
    in.scale = s;
    in.mode = mode;
    in.sq_radius = sq_radius_for(mode, s);
    GadgetConstants g = gadget_constants(s);
    in.constants = g;

    Vec co = g.o - g.c, cp = g.p - g.c, cpbar = g.pbar - g.c;
    Vec down = PointD(FieldElem(), -g.gamma);
    int a1 = add_family(in, "A1", g.pbar, cpbar);
    int a2 = add_family(in, "A2", -g.qhat, down);
    int a3 = add_family(in, "A3", -g.p, cp);
    int b1 = add_family(in, "B1", g.p, cp);
    int b2 = add_family(in, "B2", g.qhat, down);
    int b3 = add_family(in, "B3", -g.pbar, cpbar);
    int cc = add_family(in, "C", g.o, co);
    in.chain_a = {a1, a2, a3};
    in.chain_b = {b1, b2, b3};
    in.shared = cc;

    // Anchors a_{l,0..3}; D1 and D2 explicit, the rest by reflections.
    FieldElem d(anchor_delta(s));
    FieldElem r2 = FieldElem::surd(2, rat(1, 2));
    const auto& cs = g.centers;
    std::array<std::vector<PointD>, 6> anc;
    anc[0] = {cs[0] + PointD(FieldElem(), d), cs[0] - PointD(FieldElem(), d), cs[0] + PointD(r2 * d, r2 * d),
              cs[0] + PointD(-(r2 * d), r2 * d)};
    anc[1] = {cs[1] + PointD(r2 * d, r2 * d), cs[1] - PointD(r2 * d, r2 * d), cs[1] + PointD(FieldElem(), d),
              cs[1] + PointD(d, FieldElem())};
    for (const auto& a : anc[1]) {
        anc[5].push_back(mirror(a));
        anc[2].push_back(-mirror(a));
        anc[4].push_back(-a);
    }
    for (const auto& a : anc[0]) anc[3].push_back(-a);

    auto disk = [&](int l, std::vector<DiskPart> parts) {
        in.disks.push_back({"D" + std::to_string(l + 1), cs[size_t(l)], std::move(parts), tagged(anc[size_t(l)], "ANCHOR")});
    };
    disk(0, {{a1, false}, {b1, false}, {cc, false}});
    disk(1, {{b1, true}, {b2, false}});
    disk(2, {{b2, true}, {b3, false}});
    disk(3, {{a3, true}, {b3, true}, {cc, true}});
    disk(4, {{a2, true}, {a3, false}});
    disk(5, {{a1, true}, {a2, false}});
    in.start_disk = 0;
    in.end_disk = 3;
    in.pair_a = {5, 4};
    in.pair_b = {1, 2};
    collect_points(in);
    return in;
}

PlanarInstance build_10center(const IntArray& x, const EpsScale& s, RadiusMode mode) {
    x.validate();
    if (s.n != x.n) throw std::invalid_argument("build_10center: scale.n must equal x.n");
    PlanarInstance in;
    in.k = 10;
    in.x = std::make_shared<const IntArray>(x);
    in.scale = s;
    in.mode = mode;
    in.sq_radius = sq_radius_for(mode, s);

    // S_u runs a6 a1 a2 a3 a4 a5 counterclockwise above the shared edge (a6,a1),
    // S_v runs a6 a1 b2 b3 b4 b5 clockwise below it.
    std::vector<PointD> u = {hex_lattice(1, 0, 0), hex_lattice(1, 1, 0), hex_lattice(1, 1, 1),
                             hex_lattice(0, 1, 1), hex_lattice(0, 0, 1), hex_lattice(0, 0, 0)};
    std::vector<PointD> v = {u[0], hex_lattice(1, 0, -1), hex_lattice(1, -1, -1), hex_lattice(0, -1, -1),
                             hex_lattice(0, -1, 0), u[5]};
    auto edge_family = [&](const std::string& tag, const PointD& from, const PointD& to) {
        return add_family(in, tag, midpoint(from, to), (to - from) * half());
    };
    for (int l = 0; l < 5; ++l) in.chain_a.push_back(edge_family("A" + std::to_string(l + 1), u[size_t(l)], u[size_t(l + 1)]));
    for (int l = 0; l < 5; ++l) in.chain_b.push_back(edge_family("B" + std::to_string(l + 1), v[size_t(l)], v[size_t(l + 1)]));
    in.shared = edge_family("C", u[0], u[5]);

    auto vertex_disk = [&](const std::string& name, const PointD& h, std::vector<DiskPart> parts,
                           const PointD* prev, const PointD* next) {
        std::vector<LabeledPoint> fixed;
        if (prev) {
            HexVertexContext ctx{h, {{midpoint(*prev, h), false}, {midpoint(h, *next), false}}};
            fixed.push_back(build_consistency(ctx, s));
        }
        auto anc = build_anchors({h}, s);
        fixed.insert(fixed.end(), anc.begin(), anc.end());
        in.disks.push_back({name, h, std::move(parts), std::move(fixed)});
    };
    vertex_disk("a1", u[0], {{in.chain_a[0], false}, {in.chain_b[0], false}, {in.shared, false}}, nullptr, nullptr);
    for (int l = 1; l <= 4; ++l)
        vertex_disk("a" + std::to_string(l + 1), u[size_t(l)],
                    {{in.chain_a[size_t(l - 1)], true}, {in.chain_a[size_t(l)], false}}, &u[size_t(l - 1)], &u[size_t(l + 1)]);
    vertex_disk("a6", u[5], {{in.chain_a[4], true}, {in.chain_b[4], true}, {in.shared, true}}, nullptr, nullptr);
    for (int l = 1; l <= 4; ++l)
        vertex_disk("b" + std::to_string(l + 1), v[size_t(l)],
                    {{in.chain_b[size_t(l - 1)], true}, {in.chain_b[size_t(l)], false}}, &v[size_t(l - 1)], &v[size_t(l + 1)]);
    in.start_disk = 0;
    in.end_disk = 5;
    in.pair_a = {1, 2, 3, 4};
    in.pair_b = {6, 7, 8, 9};
    collect_points(in);
    return in;
}

std::vector<PointD> disk_cluster(const PlanarInstance& inst, const PlanarDisk& d, const std::vector<long>& split,
                                 bool hull_only) {
    std::vector<PointD> out;
    for (const auto& part : d.parts) {
        long s = split[size_t(part.family)];
        long from = part.tail ? s + 1 : inst.lo();
        long to = part.tail ? inst.hi() : s;
        if (from > to) continue;
        if (hull_only) {
            out.push_back(inst.fp(part.family, from));
            if (to != from) out.push_back(inst.fp(part.family, to));
        } else {
            for (long i = from; i <= to; ++i) out.push_back(inst.fp(part.family, i));
        }
    }
    for (const auto& p : d.fixed) out.push_back(p.p);
    return out;
}

WitnessK witness_planar(const PlanarInstance& inst, const Triple& sol) {
    const IntArray& x = *inst.x;
    if (!is_yes_witness(x, sol)) throw NotAWitness("not a YES witness for this array");
    WitnessK w;
    w.split = sol;
    const long si = 2 * sol.i, sj = 2 * sol.j, sk = 2 * sol.k;
    std::vector<long> split(inst.families.size());
    for (int f : inst.chain_a) split[size_t(f)] = si;
    for (int f : inst.chain_b) split[size_t(f)] = sj;
    split[size_t(inst.shared)] = sk;

    const EpsScale& s = inst.scale;
    BigRational e = s.eps();
    auto dir = [&](int f) { return inst.families[size_t(f)].direction; };
    for (size_t di = 0; di < inst.disks.size(); ++di) {
        const PlanarDisk& d = inst.disks[di];
        PointD center;
        BigRational bound;
        if (int(di) == inst.start_disk) {
            center = covering_basic_center(d.expected, dir(inst.chain_a.front()), dir(inst.chain_b.front()), si, sj,
                                           x.at(sol.i), x.at(sol.j), s);
            bound = covering_center_sq_bound(si, sj, s);
        } else if (int(di) == inst.end_disk) {
            center = covering_basic_center(d.expected, -dir(inst.chain_a.back()), -dir(inst.chain_b.back()), -si, -sj,
                                           -x.at(sol.i), -x.at(sol.j), s);
            bound = covering_center_sq_bound(si, sj, s);
        } else {
            int tf = -1, hf = -1;
            for (const auto& p : d.parts) (p.tail ? tf : hf) = p.family;
            long t = split[size_t(tf)];
            if (inst.k == 10) {
                center = covering_basic_center(d.expected, -dir(tf), dir(hf), -t, t, -x.at(t / 2), x.at(t / 2), s);
                bound = covering_center_sq_bound(t, t, s);
            } else {
                center = midpoint(inst.fp(tf, t + 1), inst.fp(hf, t));
                bound = sq((std::abs(t) + 1) * e);
            }
        }
        auto cluster = disk_cluster(inst, d, split, false);
        bool ok = true;
        for (const auto& p : cluster)
            if (!within(p, center, inst.sq_radius)) {
                ok = false;
                break;
            }
        if (!ok) {
            Ball m = meb(cluster);
            if (fe_cmp(m.sq_radius, inst.sq_radius) <= 0) {
                center = m.center;
                w.notes.push_back(d.name + ": explicit center misses its cluster; using the cluster MEB center");
            } else {
                w.notes.push_back(d.name + ": cluster does not fit one disk (MEB exceeds the radius by " +
                                  fe_summary(m.sq_radius - inst.sq_radius) + ")");
            }
        }
        w.centers.push_back(center);
        w.sq_bounds.push_back(bound);
    }
    return w;
}

WitnessK witness_6center(const IntArray& x, const Triple& sol, const EpsScale& s, RadiusMode mode) {
    return witness_planar(build_6center(x, s, mode), sol);
}

WitnessK witness_10center(const IntArray& x, const Triple& sol, const EpsScale& s, RadiusMode mode) {
    return witness_planar(build_10center(x, s, mode), sol);
}

namespace {

std::vector<PointD> disk_anchors(const PlanarDisk& d) {
    std::vector<PointD> out;
    for (const auto& p : d.fixed)
        if (p.tag == "ANCHOR") out.push_back(p.p);
    return out;
}

}  // namespace

CertificateReport anchor_force_check(const PlanarInstance& inst) {
    CertificateReport rep;
    rep.kind = "anchor-force-" + std::to_string(inst.k);
    const EpsScale& s = inst.scale;
    BigRational e = s.eps();
    BigRational delta = anchor_delta(s);
    FieldElem four(4);
    auto rec = [&](const std::string& id, const std::string& lemma, const FieldElem& margin, bool pass) {
        rep.add({id, lemma, "n=" + std::to_string(s.n), pass, pass && !rep.keep_passing ? "" : fe_summary(margin)});
    };

    std::vector<std::vector<PointD>> anc;
    for (const auto& d : inst.disks) anc.push_back(disk_anchors(d));

    // Sufficiency: 0.1 n eps + Delta = 1 - eps, and every anchor sits at Delta.
    BigRational lhs = anchor_sufficient_tol() * s.n * e + delta;
    rec("delta-sum", "anchor-sufficient", FieldElem(lhs - (1 - e)), lhs == 1 - e);
    FieldElem one_e(BigRational(sq(1 - e)));
    rec("one-minus-eps", "anchor-sufficient", inst.sq_radius - one_e, fe_cmp(one_e, inst.sq_radius) <= 0);
    for (size_t l = 0; l < anc.size(); ++l)
        for (size_t m = 0; m < anc[l].size(); ++m) {
            FieldElem d2 = sq_dist(anc[l][m], inst.disks[l].expected);
            rec("anchor-dist-" + inst.disks[l].name + "-" + std::to_string(m), "anchor-sufficient",
                d2 - FieldElem(sq(delta)), d2 == FieldElem(sq(delta)));
        }

    // avg_center on each diametral pair: any common covering disk has its center
    // within sqrt(2 delta') of the midpoint, delta' = 1 - Delta.  The farthest such
    // center is at squared distance r^2 - Delta^2.
    BigRational dprime = 1 - delta;
    for (size_t l = 0; l < anc.size(); ++l) {
        const auto& a = anc[l];
        size_t m0 = 0, m1 = inst.k == 6 ? 1 : 3;
        bool mid = midpoint(a[m0], a[m1]) == inst.disks[l].expected;
        FieldElem lens = inst.sq_radius - FieldElem(sq(delta));
        FieldElem margin = FieldElem(2 * dprime) - lens;
        rec("avg-center-" + inst.disks[l].name, "avg-center", margin, mid && fe_sign(margin) >= 0);
    }

    if (inst.k == 6) {
        for (size_t l = 0; l < 6; ++l)
            for (size_t m = l + 1; m < 6; ++m) {
                FieldElem d2 = sq_dist(anc[l][0], anc[m][0]);
                rec("pairwise-" + std::to_string(l + 1) + "-" + std::to_string(m + 1), "6cen-anchor", d2 - four,
                    fe_cmp(d2, four) >= 0);
            }
        for (size_t l = 0; l < 6; ++l)
            for (size_t m = 0; m < 6; ++m) {
                if (l == m) continue;
                FieldElem d2 = sq_dist(anc[l][1], anc[m][0]);
                bool strict = (l == 1 && m == 2) || (l == 2 && m == 1) || (l == 4 && m == 5) || (l == 5 && m == 4);
                bool pass = strict ? fe_cmp(d2, four) > 0 : fe_cmp(d2, four) >= 0;
                if (strict) pass = pass && d2 == FieldElem(BigRational(2 * sq(delta) + BigRational(9, 4)));
                rec("cross-" + std::to_string(l + 1) + "-" + std::to_string(m + 1), "6cen-anchor", d2 - four, pass);
            }
    } else {
        // Same direction at distinct vertices: at least 2 apart, so no disk of
        // radius r < 1 holds both (at most six anchors per disk).
        FieldElem four_r2 = inst.sq_radius * BigRational(4);
        for (size_t l = 0; l < anc.size(); ++l)
            for (size_t m = l + 1; m < anc.size(); ++m)
                for (size_t t = 0; t < anc[l].size(); ++t) {
                    FieldElem d2 = sq_dist(anc[l][t], anc[m][t]);
                    rec("same-dir-" + inst.disks[l].name + "-" + inst.disks[m].name + "-" + std::to_string(t),
                        "anchor-at-most-six", d2 - four_r2, fe_cmp(d2, four) >= 0 && fe_cmp(d2, four_r2) > 0);
                }
    }
    rep.summary = rep.verdict ? "all anchor premises hold" : "anchor premise violated";
    return rep;
}

PlanarCertificate certify_no_planar(const PlanarInstance& inst, long max_n) {
    if (inst.x->n > max_n) throw ResourceExceeded("certify_no_planar: n above the configured bound");
    auto t0 = std::chrono::steady_clock::now();
    PlanarCertificate out;
    CertificateReport& rep = out.report;
    rep.kind = "certify-planar-" + std::to_string(inst.k);
    const long lo = inst.lo(), hi = inst.hi();
    const long none = lo - 2;
    const size_t S = size_t(hi - lo + 2);  // split values lo-1..hi
    auto slot = [&](long v) { return size_t(v - (lo - 1)); };

    std::vector<long> split(inst.families.size(), lo - 1);
    auto feas = [&](int disk) {
        ++out.meb_evaluations;
        return fits(disk_cluster(inst, inst.disks[size_t(disk)], split), inst.sq_radius);
    };

    // For a pair disk joining tail family tf and head family hf the feasible
    // (s, t) form an up-set in s and a down-set in t: M(s) = max feasible t.
    auto pair_stair = [&](int disk, int tf, int hf) {
        std::vector<long> m(S, none);
        long t = none;
        for (long s = lo - 1; s <= hi; ++s) {
            split[size_t(tf)] = s;
            if (t == none) {
                split[size_t(hf)] = lo - 1;
                if (!feas(disk)) continue;
                t = lo - 1;
            }
            while (t < hi) {
                split[size_t(hf)] = t + 1;
                if (!feas(disk)) break;
                ++t;
            }
            m[slot(s)] = t;
        }
        return m;
    };
    auto chain_reach = [&](const std::vector<int>& chain, const std::vector<int>& pairs) {
        std::vector<long> reach(S);
        for (long s = lo - 1; s <= hi; ++s) reach[slot(s)] = s;
        for (size_t l = 0; l < pairs.size(); ++l) {
            auto m = pair_stair(pairs[l], chain[l], chain[l + 1]);
            for (auto& r : reach) r = r == none ? none : m[slot(r)];
        }
        return reach;
    };
    std::vector<long> fa = chain_reach(inst.chain_a, inst.pair_a);
    std::vector<long> fb = chain_reach(inst.chain_b, inst.pair_b);

    int fa0 = inst.chain_a.front(), fb0 = inst.chain_b.front(), fc = inst.shared;
    int fa1 = inst.chain_a.back(), fb1 = inst.chain_b.back();

    // Start disk (heads): down-set in all three; K1(a,b) = max feasible k.
    std::vector<long> k1(S * S, none);
    for (long a = lo - 1; a <= hi; ++a)
        for (long b = lo - 1; b <= hi; ++b) {
            long k = hi;
            if (b > lo - 1) k = std::min(k, k1[slot(a) * S + slot(b - 1)]);
            if (a > lo - 1) k = std::min(k, k1[slot(a - 1) * S + slot(b)]);
            split[size_t(fa0)] = a;
            split[size_t(fb0)] = b;
            while (k >= lo - 1) {
                split[size_t(fc)] = k;
                if (feas(inst.start_disk)) break;
                --k;
            }
            k1[slot(a) * S + slot(b)] = k < lo - 1 ? none : k;
        }
    // End disk (tails): up-set in all three; K6(a,b) = min feasible k.
    const long never = hi + 1;
    std::vector<long> k6(S * S, never);
    for (long a = hi; a >= lo - 1; --a)
        for (long b = hi; b >= lo - 1; --b) {
            long k = lo - 1;
            if (b < hi) k = std::max(k, k6[slot(a) * S + slot(b + 1)]);
            if (a < hi) k = std::max(k, k6[slot(a + 1) * S + slot(b)]);
            split[size_t(fa1)] = a;
            split[size_t(fb1)] = b;
            while (k <= hi) {
                split[size_t(fc)] = k;
                if (feas(inst.end_disk)) break;
                ++k;
            }
            k6[slot(a) * S + slot(b)] = k;
        }

    size_t classes = 0, feasible_classes = 0;
    std::optional<std::array<long, 3>> found;
    for (long a = lo - 1; a <= hi; ++a)
        for (long b = lo - 1; b <= hi; ++b) {
            ++classes;
            std::ostringstream why;
            why << "a=" << a << " b=" << b << " ";
            long ea = fa[slot(a)], eb = fb[slot(b)], kmax = k1[slot(a) * S + slot(b)];
            bool ok = false;
            if (ea == none) why << "chain-a blocked";
            else if (eb == none) why << "chain-b blocked";
            else if (kmax == none) why << "start disk infeasible for every k";
            else {
                long kmin = k6[slot(ea) * S + slot(eb)];
                why << "kmax=" << kmax << " kmin=" << kmin;
                ok = kmin <= kmax;
                if (ok && !found) found = std::array<long, 3>{a, b, kmin};
            }
            if (ok) ++feasible_classes;
            rep.add({"class", "split-class", why.str() + (ok ? " feasible" : " infeasible"), true, ""});
        }

    if (found) {
        out.feasible = true;
        auto [a, b, k] = *found;
        out.split.assign(inst.families.size(), 0);
        auto fill = [&](const std::vector<int>& chain, const std::vector<int>& pairs, long start) {
            long v = start;
            out.split[size_t(chain[0])] = v;
            for (size_t l = 0; l < pairs.size(); ++l) {
                auto m = pair_stair(pairs[l], chain[l], chain[l + 1]);
                v = m[slot(v)];
                out.split[size_t(chain[l + 1])] = v;
            }
        };
        fill(inst.chain_a, inst.pair_a, a);
        fill(inst.chain_b, inst.pair_b, b);
        out.split[size_t(fc)] = k;
        bool aligned = true;
        for (int f : inst.chain_a) aligned = aligned && out.split[size_t(f)] == a;
        for (int f : inst.chain_b) aligned = aligned && out.split[size_t(f)] == b;
        bool even = a % 2 == 0 && b % 2 == 0 && k % 2 == 0;
        std::ostringstream in;
        in << "split a=" << a << " b=" << b << " k=" << k;
        if (aligned && even) {
            Triple t{a / 2, b / 2, k / 2};
            bool good = a >= -2 * inst.x->n && a <= 2 * inst.x->n && b >= -2 * inst.x->n && b <= 2 * inst.x->n &&
                        k >= -2 * inst.x->n && k <= 2 * inst.x->n && is_gap_triple(*inst.x, t);
            if (good) out.decoded = t;
            rep.add({"decode", "soundness", in.str(), good, ""});
        } else {
            rep.add({"decode", "soundness", in.str() + (aligned ? " odd split" : " chains disagree"), false, ""});
        }
        rep.summary = "feasible split found; " + std::to_string(feasible_classes) + " of " + std::to_string(classes) +
                      " split classes feasible";
    } else {
        rep.summary = "infeasible: all " + std::to_string(classes) + " split classes fail";
    }
    rep.config["n"] = std::to_string(inst.x->n);
    rep.config["k"] = std::to_string(inst.k);
    rep.config["radius"] = radius_mode_name(inst.mode);
    rep.config["meb_evaluations"] = std::to_string(out.meb_evaluations);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// ---------------------------------------------------------------------------
// Lemma replays

namespace {

struct Frame {
    PointD z;
    Vec ua, ub, uc;
};

Frame lemma_frame() {
    FieldElem r3h = FieldElem::surd(3, rat(1, 2));
    return {PointD(FieldElem(), FieldElem()), PointD(-r3h, half()), PointD(r3h, half()),
            PointD(FieldElem(), FieldElem(-1))};
}

struct Fam {
    std::vector<PointD> pts;
    long lo;
    const PointD& operator[](long i) const { return pts[size_t(i - lo)]; }
};

Fam make_fam(const IntArray& x, const PointD& origin, const Vec& dir, const EpsScale& s) {
    PnSpec sp;
    sp.array = &x;
    sp.origin = origin;
    sp.direction = dir;
    sp.scale = s;
    return {family_points(sp), pn_lo(x.n)};
}

std::string idx3(long i, long j, long k) {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
}

struct Checker {
    CertificateReport& rep;
    FieldElem r2;

    void infeasible(const std::string& lemma, const std::vector<PointD>& pts, const std::string& in) {
        Ball b = meb(pts);
        FieldElem m = b.sq_radius - r2;
        bool pass = fe_sign(m) > 0;
        rep.add({"no-disk", lemma, in, pass, pass && !rep.keep_passing ? "" : fe_summary(m)});
    }

    // Every listed point within the center's disk and the center near z.
    void covers(const std::string& lemma, const PointD& center, const std::vector<PointD>& pts, const PointD& z,
                const BigRational& sq_bound, const std::string& in) {
        bool pass = true;
        FieldElem worst;
        for (const auto& p : pts) {
            FieldElem m = sq_dist(p, center) - r2;
            if (fe_sign(m) > 0) {
                pass = false;
                worst = m;
                break;
            }
        }
        FieldElem dz = sq_dist(center, z) - FieldElem(sq_bound);
        bool near = fe_sign(dz) <= 0;
        std::string margin;
        if (!pass) margin = "cover:" + fe_summary(worst);
        else if (!near) margin = "center:" + fe_summary(dz);
        rep.add({"disk", lemma, in, pass && near, margin});
    }
};

void push_range(std::vector<PointD>& out, const Fam& f, long from, long to) {
    for (long i = from; i <= to; ++i) out.push_back(f[i]);
}

}  // namespace

CertificateReport suite_covering_basic(const IntArray& a, const IntArray& b, const IntArray& c, const EpsScale& s,
                                       RadiusMode mode) {
    CertificateReport rep;
    rep.kind = "suite-covering-basic";
    Checker ck{rep, sq_radius_for(mode, s)};
    Frame fr = lemma_frame();
    Fam A = make_fam(a, fr.ua, fr.ua, s), B = make_fam(b, fr.ub, fr.ub, s), C = make_fam(c, fr.uc, fr.uc, s);
    const long lo = pn_lo(a.n), hi = pn_hi(a.n);
    for (long i = lo; i <= hi; ++i)
        for (long j = lo; j <= hi; ++j)
            for (long k = lo; k <= hi; ++k) {
                long sum = i + j + k;
                if (sum > 0) {
                    ck.infeasible("covering-basic.1", {A[i], B[j], C[k]}, idx3(i, j, k));
                } else if (sum == 0) {
                    bool even = i % 2 == 0 && j % 2 == 0 && k % 2 == 0;
                    if (!even || a.at(i / 2) + b.at(j / 2) + c.at(k / 2) > 0) {
                        ck.infeasible("covering-basic.2", {A[i], B[j], C[k]}, idx3(i, j, k));
                    } else {
                        PointD d = covering_basic_center(fr.z, fr.ua, fr.ub, i, j, a.at(i / 2), b.at(j / 2), s);
                        std::vector<PointD> pts;
                        push_range(pts, A, lo, i);
                        push_range(pts, B, lo, j);
                        push_range(pts, C, lo, k);
                        ck.covers("covering-basic.3", d, pts, fr.z, covering_center_sq_bound(i, j, s), idx3(i, j, k));
                    }
                }
            }
    rep.summary = std::to_string(rep.checks()) + " checks, " + std::to_string(rep.failures()) + " failures";
    return rep;
}

CertificateReport suite_d4_covering(const IntArray& a, const IntArray& b, const IntArray& c, const EpsScale& s,
                                    RadiusMode mode) {
    CertificateReport rep;
    rep.kind = "suite-d4-covering";
    Checker ck{rep, sq_radius_for(mode, s)};
    Frame fr = lemma_frame();
    Fam A = make_fam(a, fr.ua, -fr.ua, s), B = make_fam(b, fr.ub, -fr.ub, s), C = make_fam(c, fr.uc, -fr.uc, s);
    const long lo = pn_lo(a.n), hi = pn_hi(a.n);
    for (long i = lo; i < hi; ++i)
        for (long j = lo; j < hi; ++j)
            for (long k = lo; k < hi; ++k) {
                long sum = i + j + k;
                if (sum < 0) {
                    ck.infeasible("D4-covering.1", {A[i + 1], B[j + 1], C[k + 1]}, idx3(i, j, k));
                } else if (sum == 0) {
                    bool even = i % 2 == 0 && j % 2 == 0 && k % 2 == 0;
                    if (!even || a.at(i / 2) + b.at(j / 2) + c.at(k / 2) < 0) {
                        ck.infeasible("D4-covering.2", {A[i + 1], B[j + 1], C[k + 1]}, idx3(i, j, k));
                    } else {
                        PointD d = covering_basic_center(fr.z, fr.ua, fr.ub, -i, -j, -a.at(i / 2), -b.at(j / 2), s);
                        std::vector<PointD> pts;
                        push_range(pts, A, i + 1, hi);
                        push_range(pts, B, j + 1, hi);
                        push_range(pts, C, k + 1, hi);
                        ck.covers("D4-covering.3", d, pts, fr.z, covering_center_sq_bound(i, j, s), idx3(i, j, k));
                    }
                }
            }
    rep.summary = std::to_string(rep.checks()) + " checks, " + std::to_string(rep.failures()) + " failures";
    return rep;
}

CertificateReport suite_consistency(const IntArray& a, const EpsScale& s, RadiusMode mode) {
    CertificateReport rep;
    rep.kind = "suite-2d-consistency";
    Checker ck{rep, sq_radius_for(mode, s)};
    Frame fr = lemma_frame();
    Fam A1 = make_fam(a, fr.ua, -fr.ua, s), A2 = make_fam(a, fr.ub, fr.ub, s);
    PointD ct = fr.uc * FieldElem(BigRational(1 - s.eps()));
    const long lo = pn_lo(a.n), hi = pn_hi(a.n);
    for (long i = lo; i <= hi; ++i)
        for (long j = i; j <= hi; ++j)
            ck.infeasible("2D-consistency.1", {A1[i], A2[j], ct}, "i=" + std::to_string(i) + " j=" + std::to_string(j));
    for (long i = lo; i < hi; ++i) {
        std::string in = "i=" + std::to_string(i);
        if (i % 2 != 0) {
            ck.infeasible("2D-consistency.2", {A1[i + 1], A2[i], ct}, in);
        } else {
            PointD d = covering_basic_center(fr.z, fr.ua, fr.ub, -i, i, -a.at(i / 2), a.at(i / 2), s);
            std::vector<PointD> pts;
            push_range(pts, A1, i + 1, hi);
            push_range(pts, A2, lo, i);
            pts.push_back(ct);
            ck.covers("2D-consistency.3", d, pts, fr.z, covering_center_sq_bound(i, i, s), in);
        }
    }
    rep.summary = std::to_string(rep.checks()) + " checks, " + std::to_string(rep.failures()) + " failures";
    return rep;
}

CertificateReport suite_b12(const IntArray& x, const EpsScale& s, RadiusMode mode) {
    CertificateReport rep;
    rep.kind = "suite-b12-prop";
    PlanarInstance in = build_6center(x, s, mode);
    Checker ck{rep, in.sq_radius};
    const long lo = in.lo(), hi = in.hi();
    BigRational e = s.eps();
    for (int di : {1, 2, 4, 5}) {
        const PlanarDisk& d = in.disks[size_t(di)];
        int tf = -1, hf = -1;
        for (const auto& p : d.parts) (p.tail ? tf : hf) = p.family;
        std::string tag = d.name + " ";
        for (long a = lo; a <= hi; ++a)
            for (long b = lo; b <= a; ++b)
                ck.infeasible("B12-prop.1", {in.fp(tf, b), in.fp(hf, a)},
                              tag + "tail=" + std::to_string(b) + " head=" + std::to_string(a));
        for (long t = lo; t < hi; ++t) {
            std::string ins = tag + "t=" + std::to_string(t);
            if (t % 2 != 0) {
                ck.infeasible("B12-prop.2", {in.fp(tf, t + 1), in.fp(hf, t)}, ins);
            } else {
                PointD c = midpoint(in.fp(tf, t + 1), in.fp(hf, t));
                std::vector<PointD> pts;
                for (long i = t + 1; i <= hi; ++i) pts.push_back(in.fp(tf, i));
                for (long i = lo; i <= t; ++i) pts.push_back(in.fp(hf, i));
                ck.covers("B12-prop.3", c, pts, d.expected, sq((std::abs(t) + 1) * e), ins);
            }
        }
    }
    rep.summary = std::to_string(rep.checks()) + " checks, " + std::to_string(rep.failures()) + " failures";
    return rep;
}

CertificateReport suite_shared_edge(const IntArray& xu, const IntArray& xv, const IntArray& xe, const EpsScale& s,
                                    RadiusMode mode) {
    CertificateReport rep;
    rep.kind = "suite-shared-edge";
    FieldElem r2 = sq_radius_for(mode, s);
    Checker ck{rep, r2};
    PointD a6 = hex_lattice(0, 0, 0), a1 = hex_lattice(1, 0, 0), a2 = hex_lattice(1, 1, 0), a5 = hex_lattice(0, 0, 1);
    PointD b2 = hex_lattice(1, 0, -1), b5 = hex_lattice(0, -1, 0);
    auto fam = [&](const IntArray& x, const PointD& from, const PointD& to) {
        return make_fam(x, midpoint(from, to), (to - from) * half(), s);
    };
    Fam A5 = fam(xu, a5, a6), B5 = fam(xv, b5, a6), C = fam(xe, a1, a6), A1 = fam(xu, a1, a2), B1 = fam(xv, a1, b2);
    const long n = xu.n, lo = pn_lo(n), hi = pn_hi(n);

    auto ends = [](std::vector<PointD>& out, const Fam& f, long from, long to) {
        if (from > to) return;
        out.push_back(f[from]);
        if (to != from) out.push_back(f[to]);
    };
    // The converse needs C[-(i+j)] and C[-(i+j)+1] to exist, so the pairs are
    // limited to i, j, -(i+j) in [lo, hi-1].
    for (long i = lo; i < hi; ++i)
        for (long j = lo; j < hi; ++j) {
            if (-(i + j) < lo || -(i + j) >= hi) continue;
            std::vector<PointD> bb, bc;  // forced parts near a6 and near a1
            ends(bb, A5, i + 1, hi);
            ends(bb, B5, j + 1, hi);
            ends(bc, A1, lo, i);
            ends(bc, B1, lo, j);
            // C split at k: one disk takes C[<=k], the other C[>k]; try both roles.
            auto with = [&](std::vector<PointD> base, long from, long to) {
                ends(base, C, from, to);
                return fits(base, r2);
            };
            bool feasible = false;
            for (int role = 0; role < 2 && !feasible; ++role) {
                const auto& head = role == 0 ? bc : bb;
                const auto& tail = role == 0 ? bb : bc;
                // head fits for k <= kh, tail fits for k >= kt; binary search both.
                long l = lo - 2, r = hi;  // largest k in [lo-1, hi] with head fit
                while (l < r) {
                    long m = (l + r + 1) / 2;
                    if (m >= lo - 1 && with(head, lo, m)) l = m;
                    else r = m - 1;
                }
                long kh = l;
                long l2 = lo - 1, r2b = hi + 1;  // smallest k with tail fit
                while (l2 < r2b) {
                    long m = l2 + (r2b - l2) / 2;
                    if (with(tail, m + 1, hi)) r2b = m;
                    else l2 = m + 1;
                }
                long kt = l2;
                feasible = kh >= lo - 1 && kt <= hi && kt <= kh;
            }
            bool cond = false;
            long ke = 0;
            if (i % 2 == 0 && j % 2 == 0) {
                ke = -(i + j) / 2;
                cond = xu.at(i / 2) + xv.at(j / 2) + xe.at(ke) == 0;
            }
            std::string in = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            rep.add({"iff", "shared-edge", in, feasible == cond,
                     feasible == cond ? "" : std::string(feasible ? "feasible without condition" : "condition without cover")});
            if (cond) {
                long k = -(i + j);
                PointD dc = covering_basic_center(a1, (a2 - a1) * half(), (b2 - a1) * half(), i, j, xu.at(i / 2),
                                                  xv.at(j / 2), s);
                PointD db = covering_basic_center(a6, (a5 - a6) * half(), (b5 - a6) * half(), -i, -j, -xu.at(i / 2),
                                                  -xv.at(j / 2), s);
                std::vector<PointD> pc, pb;
                push_range(pc, A1, lo, i);
                push_range(pc, B1, lo, j);
                push_range(pc, C, lo, k);
                push_range(pb, A5, i + 1, hi);
                push_range(pb, B5, j + 1, hi);
                push_range(pb, C, k + 1, hi);
                ck.covers("shared-edge", dc, pc, a1, covering_center_sq_bound(i, j, s), in + " disk=c");
                ck.covers("shared-edge", db, pb, a6, covering_center_sq_bound(i, j, s), in + " disk=b");
            }
        }
    rep.summary = std::to_string(rep.checks()) + " checks, " + std::to_string(rep.failures()) + " failures";
    return rep;
}

}  // namespace kcr
