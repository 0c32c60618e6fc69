#include "kcr/gap3sum.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>

namespace kcr {

void ConvInstance::validate() const {
    if (n < 1 || long(a.size()) != n) throw std::invalid_argument("conv instance: bad length");
    for (long v : a)
        if (v < 1 || v > n * n) throw std::invalid_argument("conv instance: entry out of range");
}

void GapInstance::validate() const {
    if (n < 0 || long(x.size()) != 2 * n + 1) throw std::invalid_argument("gap instance: bad length");
    for (long v : x)
        if (v < -n * n || v > n * n) throw std::invalid_argument("gap instance: entry out of range");
}

GapInstance GapInstance::filled(long n, long value) {
    GapInstance g;
    g.n = n;
    g.x.assign(size_t(2 * n + 1), value);
    return g;
}

const char* gap_tag_name(GapTag t) {
    switch (t) {
        case GapTag::YES: return "YES";
        case GapTag::NO: return "NO";
        default: return "NEITHER";
    }
}

GapInstance conv_to_gap(const ConvInstance& a) {
    a.validate();
    long n = a.n;
    GapInstance g = GapInstance::filled(300 * n, 3 * n * n);
    for (long i = 1; i <= n; ++i) {
        g.at(n + i) = a.at(i);
        g.at(-2 * n - i) = -a.at(i);
    }
    return g;
}

bool is_gap_triple(const GapInstance& x, const Triple& t) {
    auto in = [&](long v) { return v >= -x.n && v <= x.n; };
    if (!in(t.i) || !in(t.j) || !in(t.k)) return false;
    return t.i + t.j + t.k == 0 && x.at(t.i) + x.at(t.j) + x.at(t.k) == 0;
}

bool is_yes_witness(const GapInstance& x, const Triple& t) {
    long r = x.n / 100;
    auto in = [&](long v) { return v >= -r && v <= r; };
    return in(t.i) && in(t.j) && in(t.k) && is_gap_triple(x, t);
}

GapClass classify_gap(const GapInstance& x) {
    GapClass out;
    long n = x.n, r = n / 100;
    for (long i = -r; i <= r; ++i)
        for (long j = -r; j <= r; ++j) {
            long k = -i - j;
            if (std::abs(k) <= r && x.at(i) + x.at(j) + x.at(k) == 0) {
                out.tag = GapTag::YES;
                out.witness = Triple{i, j, k};
                return out;
            }
        }
    // Any zero triple at all: walk value triples a <= b <= c with a + b + c = 0
    // and try index pairs from the two smaller buckets.
    std::map<long, std::vector<long>> by_value;
    for (long i = -n; i <= n; ++i) by_value[x.at(i)].push_back(i);
    for (auto ia = by_value.begin(); ia != by_value.end(); ++ia) {
        for (auto ib = ia; ib != by_value.end(); ++ib) {
            long a = ia->first, b = ib->first, c = -a - b;
            if (c < b) break;
            auto ic = by_value.find(c);
            if (ic == by_value.end()) continue;
            std::array<const std::vector<long>*, 3> s = {&ia->second, &ib->second, &ic->second};
            std::sort(s.begin(), s.end(), [](auto* p, auto* q) { return p->size() < q->size(); });
            long third = s[2] == &ia->second ? a : s[2] == &ib->second ? b : c;
            for (long i : *s[0])
                for (long j : *s[1]) {
                    long k = -i - j;
                    if (k >= -n && k <= n && x.at(k) == third) {
                        out.tag = GapTag::NEITHER;
                        return out;
                    }
                }
        }
    }
    out.tag = GapTag::NO;
    return out;
}

std::optional<Triple> brute_conv(const ConvInstance& a) {
    for (long i = 1; i <= a.n; ++i)
        for (long j = 1; i + j <= a.n; ++j)
            if (a.at(i) + a.at(j) == a.at(i + j)) return Triple{i, j, i + j};
    return std::nullopt;
}

ConvInstance gen_planted(long n, bool want_yes, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_planted: n must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> val(1, n * n);
    for (int round = 0; round < 10000; ++round) {
        ConvInstance c;
        c.n = n;
        c.a.resize(size_t(n));
        for (auto& v : c.a) v = val(rng);
        if (want_yes && n >= 2) {
            std::uniform_int_distribution<long> idx(1, n - 1);
            long i = idx(rng);
            std::uniform_int_distribution<long> jdx(1, n - i);
            long j = jdx(rng);
            long s = c.at(i) + c.at(j);
            if (s <= n * n) c.a[size_t(i + j - 1)] = s;
        }
        if (brute_conv(c).has_value() == want_yes) return c;
    }
    throw GenerationFailed("gen_planted: rejection sampling exhausted");
}

GapInstance gen_gap(long n, bool want_yes, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_gap: n must be positive");
    std::mt19937_64 rng(seed);
    long m = n * n;
    std::uniform_int_distribution<long> val(-m, m);
    long r = n / 100;
    for (int round = 0; round < 10000; ++round) {
        GapInstance g = GapInstance::filled(n, 0);
        for (auto& v : g.x) v = val(rng);
        if (want_yes) {
            std::uniform_int_distribution<long> idx(-r, r);
            long i = idx(rng), j = idx(rng), k = -i - j;
            if (std::abs(k) > r) continue;
            if (i == j && j == k) {
                g.at(0) = 0;
            } else {
                // Balance on an index that occurs once; a repeated index u
                // contributes twice.
                long u = (i == j) ? i : (i == k ? i : (j == k ? j : i));
                long w = (i == j) ? k : (i == k ? j : (j == k ? i : k));
                long s = (i != j && i != k && j != k) ? -(g.at(i) + g.at(j)) : -2 * g.at(u);
                if (std::abs(s) > m) continue;
                g.at(w) = s;
            }
            GapClass c = classify_gap(g);
            if (c.tag == GapTag::YES) return g;
        } else {
            // Odd entries never sum to zero in threes; used after a few
            // uniform attempts so large n does not stall.
            if (round >= 20)
                for (auto& v : g.x) v = (v % 2 == 0) ? (v > 0 ? v - 1 : v + 1) : v;
            if (classify_gap(g).tag == GapTag::NO) return g;
        }
    }
    throw GenerationFailed("gen_gap: rejection sampling exhausted");
}

std::string write_conv(const ConvInstance& a) {
    std::ostringstream os;
    os << "conv " << a.n << "\n";
    for (size_t i = 0; i < a.a.size(); ++i) os << (i ? " " : "") << a.a[i];
    os << "\n";
    return os.str();
}

std::string write_gap(const GapInstance& x) {
    std::ostringstream os;
    os << "gap " << x.n << "\n";
    for (size_t i = 0; i < x.x.size(); ++i) os << (i ? " " : "") << x.x[i];
    os << "\n";
    return os.str();
}

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream is(text);
    std::string kind;
    long n = 0;
    if (!(is >> kind >> n)) throw std::invalid_argument("instance file: missing header");
    ParsedInstance out;
    if (kind == "conv") {
        ConvInstance c;
        c.n = n;
        c.a.resize(size_t(n));
        for (auto& v : c.a)
            if (!(is >> v)) throw std::invalid_argument("instance file: short conv body");
        c.validate();
        out.conv = c;
    } else if (kind == "gap") {
        GapInstance g = GapInstance::filled(n, 0);
        for (auto& v : g.x)
            if (!(is >> v)) throw std::invalid_argument("instance file: short gap body");
        g.validate();
        out.gap = g;
    } else {
        throw std::invalid_argument("instance file: unknown kind " + kind);
    }
    return out;
}

}  // namespace kcr
