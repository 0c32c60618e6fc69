#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcr {

struct Triple {
    long i = 0, j = 0, k = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
};

// A[1..n], stored zero-based.
struct ConvInstance {
    long n = 0;
    std::vector<long> a;

    long at(long i) const { return a.at(size_t(i - 1)); }
    void validate() const;
};

// X[-n..n], stored with offset n.
struct GapInstance {
    long n = 0;
    std::vector<long> x;

    long at(long i) const { return x.at(size_t(i + n)); }
    long& at(long i) { return x.at(size_t(i + n)); }
    long max_abs() const { return n * n; }
    void validate() const;

    static GapInstance filled(long n, long value);
};

enum class GapTag { YES, NO, NEITHER };

struct GapClass {
    GapTag tag = GapTag::NO;
    std::optional<Triple> witness;
};

const char* gap_tag_name(GapTag t);

struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GapInstance conv_to_gap(const ConvInstance& a);
GapClass classify_gap(const GapInstance& x);
std::optional<Triple> brute_conv(const ConvInstance& a);

// True iff (i,j,k) is a zero triple of x (index sum and value sum both zero).
bool is_gap_triple(const GapInstance& x, const Triple& t);
// Zero triple with every index inside the inner range |.| <= floor(n/100).
bool is_yes_witness(const GapInstance& x, const Triple& t);

ConvInstance gen_planted(long n, bool want_yes, uint64_t seed);

// Gap instances for the geometric tiers.  YES plants a restricted witness
// (only (0,0,0) exists below n = 100); NO is rejection sampled.
GapInstance gen_gap(long n, bool want_yes, uint64_t seed);

std::string write_conv(const ConvInstance& a);
std::string write_gap(const GapInstance& x);
// Parses either "conv n" or "gap n" files.  Exactly one optional is set.
struct ParsedInstance {
    std::optional<ConvInstance> conv;
    std::optional<GapInstance> gap;
};
ParsedInstance parse_instance(const std::string& text);

}  // namespace kcr
