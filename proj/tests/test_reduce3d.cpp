#include "doctest.h"
#include "kcr/reduce3d.hpp"

#include <random>

using namespace kcr;

namespace {

FieldElem q(long a, long b = 1) { return FieldElem(rat(a, b)); }
FieldElem fq(const BigRational& r) { return FieldElem(r); }

bool covers_all(const TwoCenter3D& in, const WitnessPair& w) {
    for (const auto& p : in.points)
        if (!within(p.p, w.c_plus, in.sq_radius) && !within(p.p, w.c_minus, in.sq_radius)) return false;
    return true;
}

// Clusters for the prefix split (a, b, k): tails with D+ on top, heads with D- below.
std::vector<PointD> side_points(const TwoCenter3D& in, const std::array<long, 3>& sp, bool top) {
    std::vector<PointD> pts;
    for (int f = 0; f < 3; ++f)
        for (long i = in.lo(); i <= in.hi(); ++i)
            if ((i > sp[size_t(f)]) == top) pts.push_back(in.fp(f, i));
    const auto& d = top ? in.d_plus : in.d_minus;
    pts.insert(pts.end(), d.begin(), d.end());
    return pts;
}

// All prefix splits checked directly with the full clusters.
std::vector<std::array<long, 3>> brute_feasible(const TwoCenter3D& in) {
    std::vector<std::array<long, 3>> out;
    for (long a = in.lo() - 1; a <= in.hi(); ++a)
        for (long b = in.lo() - 1; b <= in.hi(); ++b)
            for (long k = in.lo() - 1; k <= in.hi(); ++k) {
                std::array<long, 3> sp{a, b, k};
                if (fits(side_points(in, sp, true), in.sq_radius) && fits(side_points(in, sp, false), in.sq_radius))
                    out.push_back(sp);
            }
    return out;
}

GapInstance planted(long n, const Triple& t, uint64_t seed) {
    GapInstance x = gen_gap(n, false, seed);
    x.at(t.i) = 0, x.at(t.j) = 0, x.at(t.k) = 0;
    if (t.i != t.j && t.j != t.k && t.i != t.k) x.at(t.i) = 5, x.at(t.j) = -2, x.at(t.k) = -3;
    return x;
}

}  // namespace

TEST_CASE("build_2center3d layout") {
    CHECK(anchor_t(100) == rat(13, 4));
    CHECK(anchor_t(99) == rat(1, 4));
    CHECK(anchor_t(250) == rat(25, 4));

    long n = 3;
    GapInstance x = gen_gap(n, false, 11);
    EpsScale s = EpsScale::full(n);
    auto in = build_2center3d(x, s);
    FieldElem e(s.eps()), r2h = FieldElem::surd(2, rat(1, 2));
    CHECK(in.points.size() == size_t(6 * (2 * n + 1) + 10));
    CHECK(in.sq_radius == fq(1 + 3 * BigRational(81) * s.eps() * s.eps()));
    CHECK(in.t == rat(1, 4));
    CHECK(in.d_plus[0] == PointD(q(0), q(0), q(1) + r2h + e));
    FieldElem side = fq(1 - rat(1, 4) * s.eps());
    CHECK(in.d_plus[1] == PointD(side, q(0), r2h + e));
    CHECK(in.d_plus[4] == PointD(q(0), -side, r2h + e));
    for (size_t a = 0; a < 5; ++a) CHECK(in.d_minus[a] == PointD(in.d_plus[a][0], in.d_plus[a][1], -in.d_plus[a][2]));

    // A[1] sits above the origin by X[0] eps^1.5 + eps
    FieldElem z1 = fq(x.at(0) * eps_power(s, 15)) + e;
    CHECK(in.fp(0, 1) == PointD(r2h, q(0), z1));
    CHECK(in.fp(1, 1) == PointD(q(0), r2h, z1));
    // C runs along (0,0,1/sqrt2) with alpha sqrt2
    FieldElem m4 = fq(3 * 2 * s.eps() + x.at(2) * eps_power(s, 15)) - FieldElem::surd(2) * e;
    CHECK(in.fp(2, 4) == PointD(q(-1, 2), q(-1, 2), r2h * m4));
    size_t counted[5] = {};
    for (const auto& p : in.points) {
        if (p.tag == "A") ++counted[0];
        if (p.tag == "B") ++counted[1];
        if (p.tag == "C") ++counted[2];
        if (p.tag == "D+") ++counted[3];
        if (p.tag == "D-") ++counted[4];
    }
    CHECK(counted[0] == 14);
    CHECK(counted[2] == 14);
    CHECK(counted[3] == 5);
    CHECK(counted[4] == 5);
    CHECK_THROWS(build_2center3d(x, EpsScale::full(4)));
}

TEST_CASE("witness_3d examples") {
    long n = 2;
    GapInstance x = GapInstance::filled(n, 1);
    x.at(0) = 0;
    EpsScale s = EpsScale::full(n);
    auto w = witness_3d(x, Triple{0, 0, 0}, s);
    FieldElem top = FieldElem::surd(2, rat(1, 2)) + fq(s.eps());
    CHECK(w.c_plus == PointD(q(0), q(0), top));
    CHECK(w.c_minus == -w.c_plus);
    CHECK_THROWS_AS(witness_3d(x, Triple{1, -1, 0}, s), NotAWitness);

    // (1,-1,0) is only in the YES range from n = 100
    long m = 100;
    GapInstance y = gen_gap(m, false, 2);
    long a = 7;
    y.at(1) = a, y.at(-1) = -a, y.at(0) = 0;
    EpsScale sm = EpsScale::full(m);
    auto inst = build_2center3d(y, sm);
    auto v = witness_3d(inst, Triple{1, -1, 0});
    BigRational e = sm.eps(), re = eps_power(sm, 5);
    CHECK(v.c_plus == PointD(fq((-3 - a * re) * e), fq((3 + a * re) * e), FieldElem::surd(2, rat(1, 2)) + fq(e)));
    CHECK(v.c_minus == -v.c_plus);
    CHECK(star_coord(y, 1, sm) == -3 - a * re);
}

TEST_CASE("witness_3d covers the tails above the split") {
    std::vector<std::pair<long, Triple>> cases = {{1, {0, 0, 0}}, {2, {0, 0, 0}}, {4, {0, 0, 0}}, {7, {0, 0, 0}}};
    for (auto [n, t] : cases) {
        for (uint64_t seed : {1u, 2u}) {
            GapInstance x = gen_gap(n, true, seed);
            auto inst = build_2center3d(x, EpsScale::full(n));
            auto w = witness_3d(inst, *classify_gap(x).witness);
            CHECK(covers_all(inst, w));
            std::array<long, 3> sp{2 * w.split.i, 2 * w.split.j, 2 * w.split.k};
            for (int f = 0; f < 3; ++f)
                for (long i = inst.lo(); i <= inst.hi(); ++i) {
                    bool tail = i > sp[size_t(f)];
                    CHECK(within(inst.fp(f, i), tail ? w.c_plus : w.c_minus, inst.sq_radius));
                }
            for (const auto& d : inst.d_plus) CHECK(within(d, w.c_plus, inst.sq_radius));
            for (const auto& d : inst.d_minus) CHECK(within(d, w.c_minus, inst.sq_radius));
            CHECK(monotone_distance_check(inst, w).verdict);
            CHECK(ranges_check(inst, w.c_plus, w.c_minus).verdict);
        }
    }
}

TEST_CASE("witness round trip at n = 100") {
    for (Triple t : {Triple{1, 0, -1}, Triple{-1, 1, 0}, Triple{0, 0, 0}}) {
        GapInstance x = planted(100, t, 4);
        REQUIRE(is_yes_witness(x, t));
        auto inst = build_2center3d(x, EpsScale::full(100));
        auto w = witness_3d(inst, t);
        CHECK(covers_all(inst, w));
        auto ex = extract_3d(inst, assignment_from_centers(inst, w.c_plus, w.c_minus));
        CHECK(ex.sol == t);
        CHECK(ex.sw.i_hat == 2 * t.i);
        CHECK(ex.sw.k_hat == 2 * t.k);
        CHECK(monotone_distance_check(inst, w).verdict);
    }
}

TEST_CASE("extract_3d") {
    long n = 2;
    GapInstance x = gen_gap(n, true, 3);
    auto inst = build_2center3d(x, EpsScale::full(n));
    auto w = witness_3d(inst, Triple{0, 0, 0});
    auto as = assignment_from_centers(inst, w.c_plus, w.c_minus);
    auto ex = extract_3d(inst, as);
    CHECK(ex.sol == Triple{0, 0, 0});
    CHECK(ex.sw.j_hat == 0);

    // labels swapped: B+ is still the ball holding d0+
    std::vector<int> flipped = as;
    for (auto& v : flipped) v = 1 - v;
    CHECK(extract_3d(inst, flipped).sol == Triple{0, 0, 0});

    // B+ takes all of A: A with D+ does not fit
    std::vector<PointD> a_top(inst.family_points[0]);
    a_top.insert(a_top.end(), inst.d_plus.begin(), inst.d_plus.end());
    CHECK_FALSE(fits(a_top, inst.sq_radius));
    std::vector<int> all_a = as;
    size_t per = size_t(inst.hi() - inst.lo() + 1);
    for (size_t t = 0; t < per; ++t) all_a[t] = 1;
    CHECK_THROWS_AS(extract_3d(inst, all_a), NotPrefixSplit);

    // one head point swapped into the top ball breaks the prefix shape
    std::vector<int> hole = as;
    hole[0] = 1;
    CHECK_THROWS_AS(extract_3d(inst, hole), NotPrefixSplit);
    CHECK_THROWS_AS(extract_3d(inst, std::vector<int>(3)), std::invalid_argument);
}

TEST_CASE("certify_no_3d agrees with brute split enumeration") {
    for (long n : {1L, 2L})
        for (bool yes : {true, false}) {
            if (n == 2 && yes) continue;
            GapInstance x = gen_gap(n, yes, 20 + uint64_t(n));
            auto inst = build_2center3d(x, EpsScale::full(n));
            auto brute = brute_feasible(inst);
            auto cert = certify_no_3d(inst);
            CHECK(cert.feasible == !brute.empty());
            CHECK(cert.feasible == yes);
            CHECK(cert.report.failures() == 0);
            for (const auto& sp : brute) {
                CHECK(sp[0] % 2 == 0);
                CHECK(is_gap_triple(x, Triple{sp[0] / 2, sp[1] / 2, sp[2] / 2}));
            }
            if (yes) {
                REQUIRE(cert.decoded);
                CHECK(*cert.decoded == Triple{0, 0, 0});
                REQUIRE(brute.size() == 1);
                CHECK(brute[0] == std::array<long, 3>{0, 0, 0});
            }
        }
}

TEST_CASE("certify_no_3d verdicts") {
    for (long n = 1; n <= 6; ++n) {
        for (uint64_t seed : {1u, 9u}) {
            GapInstance no = gen_gap(n, false, seed);
            auto c = certify_no_3d(build_2center3d(no, EpsScale::full(n)));
            CHECK_FALSE(c.feasible);
            CHECK(c.report.verdict);
            size_t S = size_t(4 * n + 3);
            CHECK(c.report.counts["split-class-top-empty"].first + c.report.counts["split-class-bottom-empty"].first +
                      c.report.counts["split-class"].first ==
                  S * S);
            GapInstance yes = gen_gap(n, true, seed);
            auto d = certify_no_3d(build_2center3d(yes, EpsScale::full(n)));
            CHECK(d.feasible);
            REQUIRE(d.decoded);
            CHECK(is_yes_witness(yes, *d.decoded));
        }
    }
    GapInstance big = gen_gap(5, false, 1);
    CHECK_THROWS_AS(certify_no_3d(build_2center3d(big, EpsScale::full(5)), 4), ResourceExceeded);
}

TEST_CASE("odd splits fail") {
    long n = 2;
    GapInstance x = gen_gap(n, true, 5);
    auto inst = build_2center3d(x, EpsScale::full(n));
    // neighbours of the witness split with one odd index
    for (int f = 0; f < 3; ++f)
        for (long d : {-1L, 1L}) {
            std::array<long, 3> sp{0, 0, 0};
            sp[size_t(f)] += d;
            bool ok = fits(side_points(inst, sp, true), inst.sq_radius) && fits(side_points(inst, sp, false), inst.sq_radius);
            CHECK_FALSE(ok);
        }
    std::array<long, 3> even{0, 0, 0};
    CHECK(fits(side_points(inst, even, true), inst.sq_radius));
    CHECK(fits(side_points(inst, even, false), inst.sq_radius));
}

TEST_CASE("anchor ranges") {
    std::mt19937_64 rng(17);
    for (long n : {1L, 3L}) {
        GapInstance x = gen_gap(n, false, 2);
        EpsScale s = EpsScale::full(n);
        auto inst = build_2center3d(x, s);
        BigRational e = s.eps(), m2 = BigRational(n * n) * (n * n);
        Ball bp = meb(inst.d_plus), bm = meb(inst.d_minus);
        CHECK(ranges_check(inst, bp.center, bm.center).verdict);

        // sampled centers around the meb center that still hold D+
        BigRational box = (inst.t + 3 * m2 * e) * e;
        int kept = 0;
        std::uniform_int_distribution<long> u(-40, 40);
        for (int it = 0; it < 60; ++it) {
            PointD c = bp.center + PointD(fq(box * u(rng) / 32), fq(box * u(rng) / 32), fq(e * u(rng) / 32));
            bool holds = true;
            for (const auto& d : inst.d_plus) holds = holds && within(d, c, inst.sq_radius);
            if (!holds) continue;
            ++kept;
            CHECK(ranges_check(inst, c, -c).verdict);
        }
        CHECK(kept > 0);
        // a center pushed past the x bound loses an anchor
        PointD far = bp.center + PointD(fq(box * 2), q(0), q(0));
        bool holds = true;
        for (const auto& d : inst.d_plus) holds = holds && within(d, far, inst.sq_radius);
        CHECK_FALSE(holds);
    }
}
