#include "kcr/solver.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace kcr {

void GeometricInstance::validate() const {
    if (k < 1) throw std::invalid_argument("GeometricInstance: k must be positive");
    if (dim != 2 && dim != 3) throw std::invalid_argument("GeometricInstance: dim must be 2 or 3");
    for (const auto& p : points)
        if (p.p.dim != dim) throw DimensionMismatch();
}

const char* cover_tag_name(CoverTag t) {
    switch (t) {
        case CoverTag::Coverable: return "coverable";
        case CoverTag::Infeasible: return "infeasible";
        case CoverTag::ResourceExceeded: return "resource-exceeded";
    }
    return "?";
}

namespace {

// Integer bounds lo <= a * 2^24 <= hi, exact.
constexpr int kBoxBits = 24;

std::pair<BigInt, BigInt> dyadic_bounds(const FieldElem& a) {
    BigInt lo = 0, hi = 0;
    for (int k = 0; k < FieldElem::kDim; ++k) {
        const BigRational& c = a.coeff(k);
        if (c == 0) continue;
        BigInt s;
        BigInt sq = BigInt(FieldElem::kRadicand[size_t(k)]) << (2 * kBoxBits);
        mpz_sqrt(s.get_mpz_t(), sq.get_mpz_t());  // s <= sqrt(m) 2^24 < s + 1
        BigInt s1 = k == 0 ? s : BigInt(s + 1);
        const BigInt& lo_f = c > 0 ? s : s1;
        const BigInt& hi_f = c > 0 ? s1 : s;
        BigInt t;
        t = c.get_num() * lo_f;
        mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), c.get_den().get_mpz_t());
        lo += t;
        t = c.get_num() * hi_f;
        mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), c.get_den().get_mpz_t());
        hi += t;
    }
    return {lo, hi};
}

using Box = std::vector<std::pair<BigInt, BigInt>>;

Box box_of(const PointD& p) {
    Box b;
    for (int i = 0; i < p.dim; ++i) b.push_back(dyadic_bounds(p[i]));
    return b;
}

// Lower bound of sq_dist * 2^48.
BigInt sq_dist_floor(const Box& a, const Box& b) {
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        BigInt gap = 0;
        if (a[i].first > b[i].second) gap = a[i].first - b[i].second;
        else if (b[i].first > a[i].second) gap = b[i].first - a[i].second;
        s += gap * gap;
    }
    return s;
}

}  // namespace

WitnessCheck verify_witness(const GeometricInstance& inst, const CoverWitness& w) {
    for (const auto& c : w.centers)
        if (c.dim != inst.dim) throw DimensionMismatch();
    for (const auto& p : inst.points)
        if (p.p.dim != inst.dim) throw DimensionMismatch();
    WitnessCheck out;
    out.ok = true;
    if (inst.points.empty()) return out;
    // Centers whose box distance already exceeds the radius cannot cover a point;
    // they only matter for the margin when no center covers it.
    std::vector<Box> cbox;
    for (const auto& c : w.centers) cbox.push_back(box_of(c));
    BigInt r_hi = dyadic_bounds(inst.sq_radius).second << kBoxBits;
    bool have_worst = false;
    for (size_t i = 0; i < inst.points.size(); ++i) {
        const PointD& p = inst.points[i].p;
        if (w.centers.empty()) {
            out.ok = false;
            continue;
        }
        Box pb = box_of(p);
        std::optional<FieldElem> best;
        auto take = [&](size_t c) {
            FieldElem d = sq_dist(p, w.centers[c]);
            if (!best || fe_cmp(d, *best) < 0) best = std::move(d);
        };
        for (size_t c = 0; c < w.centers.size(); ++c)
            if (sq_dist_floor(pb, cbox[c]) <= r_hi) take(c);
        if (!best || fe_cmp(*best, inst.sq_radius) > 0)
            for (size_t c = 0; c < w.centers.size(); ++c) take(c);
        FieldElem margin = *best - inst.sq_radius;
        if (fe_sign(margin) > 0) out.ok = false;
        if (!have_worst || fe_cmp(margin, out.worst) > 0) {
            out.worst = std::move(margin);
            out.worst_point = i;
            have_worst = true;
        }
    }
    return out;
}

namespace {

using Bits = std::vector<uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

struct BitsHash {
    size_t operator()(const Bits& b) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : b) h = (h ^ w) * 1099511628211ull;
        return h;
    }
};

BigInt choose(uint64_t n, uint64_t r) {
    BigInt v;
    mpz_bin_uiui(v.get_mpz_t(), n, r);
    return v;
}

struct Candidate {
    PointD center;
    Bits cover;
};

struct Search {
    const GeometricInstance& inst;
    const SolverLimits& lim;
    SolverStats& st;
    std::vector<Candidate> cands;
    std::vector<std::vector<size_t>> by_point;  // candidates covering each point
    std::unordered_map<Bits, int, BitsHash> failed;  // covered set -> largest budget that failed
    std::vector<size_t> chosen;
    size_t n = 0;
    bool exceeded = false;

    bool full(const Bits& b) const {
        for (size_t i = 0; i < n; ++i)
            if (!(b[i / 64] >> (i % 64) & 1)) return false;
        return true;
    }

    bool run(const Bits& covered, int budget) {
        if (full(covered)) return true;
        if (budget == 0) return false;
        if (++st.nodes > lim.max_nodes) {
            exceeded = true;
            return false;
        }
        auto it = failed.find(covered);
        if (it != failed.end() && it->second >= budget) return false;
        // uncovered point with the fewest candidates, lowest index on ties
        size_t pick = n, best = SIZE_MAX;
        for (size_t i = 0; i < n; ++i) {
            if (covered[i / 64] >> (i % 64) & 1) continue;
            if (by_point[i].size() < best) best = by_point[i].size(), pick = i;
        }
        for (size_t c : by_point[pick]) {
            Bits next = covered;
            for (size_t w = 0; w < next.size(); ++w) next[w] |= cands[c].cover[w];
            chosen.push_back(c);
            if (run(next, budget - 1)) return true;
            chosen.pop_back();
            if (exceeded) return false;
        }
        auto& f = failed[covered];
        f = std::max(f, budget);
        return false;
    }
};

}  // namespace

CoverDecision decide_cover(const GeometricInstance& inst, const SolverLimits& limits) {
    inst.validate();
    CoverDecision out;
    const size_t n = inst.points.size();
    if (n == 0) {
        out.tag = CoverTag::Coverable;
        return out;
    }
    BigInt need = 0;
    for (int r = 1; r <= inst.dim + 1; ++r) need += choose(n, uint64_t(r));
    if (need > BigInt(std::to_string(limits.max_candidates))) {
        out.tag = CoverTag::ResourceExceeded;
        out.detail = "candidate subsets " + need.get_str() + " exceed the cap of " +
                     std::to_string(limits.max_candidates);
        return out;
    }

    // Candidate centers: MEBs of support subsets that fit, grown to the full radius.
    std::vector<PointD> pts;
    for (const auto& p : inst.points) pts.push_back(p.p);
    std::vector<Candidate> raw;
    std::unordered_map<Bits, size_t, BitsHash> seen;
    const size_t words = (n + 63) / 64;
    std::vector<size_t> idx;
    auto consider = [&] {
        ++out.stats.subsets;
        Ball b = meb_of(pts, idx);
        if (fe_cmp(b.sq_radius, inst.sq_radius) > 0) return;
        Bits cov(words, 0);
        for (size_t i = 0; i < n; ++i)
            if (within(pts[i], b.center, inst.sq_radius)) cov[i / 64] |= uint64_t(1) << (i % 64);
        if (seen.emplace(cov, raw.size()).second) raw.push_back({b.center, std::move(cov)});
    };
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (!idx.empty()) consider();
        if (left == 0) return;
        for (size_t i = from; i < n; ++i) {
            idx.push_back(i);
            self(self, i + 1, left - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, inst.dim + 1);

    // Drop covered sets contained in another one.
    std::vector<size_t> order(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) order[i] = i;
    auto pop = [&](size_t i) {
        size_t c = 0;
        for (uint64_t w : raw[i].cover) c += size_t(__builtin_popcountll(w));
        return c;
    };
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pop(a) > pop(b); });
    Search s{inst, limits, out.stats, {}, {}, {}, {}, n};
    for (size_t i : order) {
        bool dominated = false;
        for (const auto& c : s.cands)
            if (subset_of(raw[i].cover, c.cover)) {
                dominated = true;
                break;
            }
        if (!dominated) s.cands.push_back(std::move(raw[i]));
    }
    out.stats.candidates = s.cands.size();
    s.by_point.resize(n);
    for (size_t c = 0; c < s.cands.size(); ++c)
        for (size_t i = 0; i < n; ++i)
            if (s.cands[c].cover[i / 64] >> (i % 64) & 1) s.by_point[i].push_back(c);

    bool ok = s.run(Bits(words, 0), inst.k);
    if (s.exceeded) {
        out.tag = CoverTag::ResourceExceeded;
        out.detail = "branch nodes exceed the cap of " + std::to_string(limits.max_nodes);
        return out;
    }
    if (!ok) {
        out.tag = CoverTag::Infeasible;
        return out;
    }
    out.tag = CoverTag::Coverable;
    for (size_t c : s.chosen) out.witness.centers.push_back(s.cands[c].center);
    if (!verify_witness(inst, out.witness).ok) throw std::logic_error("decide_cover: witness failed to verify");
    return out;
}

bool partition_oracle(const GeometricInstance& inst) {
    inst.validate();
    if (inst.points.size() > 12 || inst.k > 3) throw ResourceExceeded("partition_oracle: at most 12 points and k <= 3");
    const size_t n = inst.points.size();
    std::vector<std::vector<PointD>> parts;
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == n) return true;
        const PointD& p = inst.points[i].p;
        for (size_t j = 0; j < parts.size(); ++j) {
            parts[j].push_back(p);
            bool ok = fits(parts[j], inst.sq_radius) && self(self, i + 1);
            parts[j].pop_back();
            if (ok) return true;
        }
        if (int(parts.size()) < inst.k) {
            parts.push_back({p});
            bool ok = fits(parts.back(), inst.sq_radius) && self(self, i + 1);
            parts.pop_back();
            if (ok) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace kcr
