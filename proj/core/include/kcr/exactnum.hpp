#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcr {

// Rationals are GMP mpq values; every gmpxx operation leaves them canonical.
using BigRational = mpq_class;
using BigInt = mpz_class;

BigRational rat(long num, long den = 1);
BigRational rat_parse(const std::string& s);
std::string rat_str(const BigRational& q);

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/*
 * Element of Q(sqrt2, sqrt3, sqrt7).
 *
 * Slot k holds the coefficient of sqrt(m_k) where the bits of k select the
 * primes 2, 3, 7:
 *
 *     k : 0  1   2   3   4   5    6    7
 *     m : 1  2   3   6   7   14   21   42
 *
 * mask_ has bit k set iff slot k is nonzero.  Products use the mask to skip
 * empty slots, so elements of a subfield such as Q(sqrt2) stay cheap.
 */
class FieldElem {
public:
    static constexpr int kDim = 8;
    static constexpr std::array<int, kDim> kRadicand{1, 2, 3, 6, 7, 14, 21, 42};

    FieldElem() = default;
    FieldElem(const BigRational& q);  // NOLINT: implicit by design
    FieldElem(long v) : FieldElem(BigRational(v)) {}  // NOLINT

    static FieldElem surd(int m, const BigRational& q = 1);  // q * sqrt(m)
    static FieldElem from_coeffs(const std::array<BigRational, kDim>& c);

    const BigRational& coeff(int k) const { return c_[k]; }
    uint8_t mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }
    bool is_rational() const { return (mask_ & ~1u) == 0; }

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator*=(const BigRational& q);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(FieldElem a, const BigRational& q) { return a *= q; }
    friend FieldElem operator*(const BigRational& q, FieldElem a) { return a *= q; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // Floating approximation for display (SVG, logs).  Never used for verdicts.
    double approx() const;

private:
    void refresh(int k);

    std::array<BigRational, kDim> c_{};
    uint8_t mask_ = 0;
};

FieldElem fe_mul(const FieldElem& a, const FieldElem& b);
FieldElem fe_inv(const FieldElem& a);
FieldElem fe_div(const FieldElem& a, const FieldElem& b);

// Exact sign.  Zero by the coefficient test, otherwise by dyadic interval
// refinement that starts at 64 fractional bits and doubles.
int fe_sign(const FieldElem& a);

inline int fe_cmp(const FieldElem& a, const FieldElem& b) { return fe_sign(a - b); }

// Number of fe_sign calls since start (predicate audit).
uint64_t fe_sign_calls();

std::string fe_str(const FieldElem& a);  // "(q0,q1,...,q7)"
FieldElem fe_parse(const std::string& s);
std::string fe_pretty(const FieldElem& a);  // "1/2 + 3/2*sqrt3"

/*
 * The epsilon ladder.  eps = delta^10, so each power eps^(t/10) used by the
 * constructions is delta^t and stays rational.
 */
struct EpsScale {
    BigRational delta;
    long n = 1;

    static EpsScale full(long n);                            // delta = (10n)^-10
    static EpsScale relaxed(long n, const BigRational& d);   // explicit delta

    BigRational eps() const;  // delta^10
};

BigRational eps_power(const EpsScale& s, int tenths);

}  // namespace kcr
