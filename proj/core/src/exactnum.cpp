#include "kcr/exactnum.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

namespace kcr {

BigRational rat(long num, long den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational rat_parse(const std::string& s) {
    BigRational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FieldElem::FieldElem(const BigRational& q) {
    c_[0] = q;
    refresh(0);
}

FieldElem FieldElem::surd(int m, const BigRational& q) {
    FieldElem r;
    for (int k = 0; k < kDim; ++k) {
        if (kRadicand[k] == m) {
            r.c_[k] = q;
            r.refresh(k);
            return r;
        }
    }
    throw std::invalid_argument("radicand outside the field: " + std::to_string(m));
}

FieldElem FieldElem::from_coeffs(const std::array<BigRational, kDim>& c) {
    FieldElem r;
    r.c_ = c;
    for (int k = 0; k < kDim; ++k) r.refresh(k);
    return r;
}

void FieldElem::refresh(int k) {
    if (sgn(c_[k]) != 0)
        mask_ |= uint8_t(1u << k);
    else
        mask_ &= uint8_t(~(1u << k));
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (int k = 0; k < kDim; ++k)
        if (mask_ >> k & 1) r.c_[k] = -r.c_[k];
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    for (int k = 0; k < kDim; ++k) {
        if (o.mask_ >> k & 1) {
            c_[k] += o.c_[k];
            refresh(k);
        }
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    for (int k = 0; k < kDim; ++k) {
        if (o.mask_ >> k & 1) {
            c_[k] -= o.c_[k];
            refresh(k);
        }
    }
    return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    BigRational t;
    for (int i = 0; i < FieldElem::kDim; ++i) {
        if (!(a.mask_ >> i & 1)) continue;
        for (int j = 0; j < FieldElem::kDim; ++j) {
            if (!(b.mask_ >> j & 1)) continue;
            t = a.c_[i] * b.c_[j];
            int f = FieldElem::kRadicand[i & j];
            if (f != 1) t *= f;
            r.c_[i ^ j] += t;
        }
    }
    for (int k = 0; k < FieldElem::kDim; ++k) r.refresh(k);
    return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    *this = *this * o;
    return *this;
}

FieldElem& FieldElem::operator*=(const BigRational& q) {
    if (sgn(q) == 0) {
        *this = FieldElem();
        return *this;
    }
    for (int k = 0; k < kDim; ++k)
        if (mask_ >> k & 1) c_[k] *= q;
    return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.mask_ != b.mask_) return false;
    for (int k = 0; k < FieldElem::kDim; ++k)
        if ((a.mask_ >> k & 1) && a.c_[k] != b.c_[k]) return false;
    return true;
}

double FieldElem::approx() const {
    double s = 0;
    for (int k = 0; k < kDim; ++k)
        if (mask_ >> k & 1) s += c_[k].get_d() * std::sqrt(double(kRadicand[k]));
    return s;
}

FieldElem fe_mul(const FieldElem& a, const FieldElem& b) { return a * b; }

namespace {

// Negate the slots that contain the given prime bit.
FieldElem conj(const FieldElem& a, int bit) {
    std::array<BigRational, FieldElem::kDim> c;
    for (int k = 0; k < FieldElem::kDim; ++k)
        c[k] = (k & bit) ? BigRational(-a.coeff(k)) : a.coeff(k);
    return FieldElem::from_coeffs(c);
}

}  // namespace

FieldElem fe_inv(const FieldElem& a) {
    if (a.is_zero()) throw DivisionByZero();
    if (a.is_rational()) return FieldElem(BigRational(1 / a.coeff(0)));
    // a * conj7(a) lies in Q(sqrt2,sqrt3); repeat for 3 and 2.
    FieldElem c7 = conj(a, 4);
    FieldElem b = a * c7;
    FieldElem c3 = conj(b, 2);
    FieldElem d = b * c3;
    FieldElem c2 = conj(d, 1);
    FieldElem e = d * c2;
    if (!e.is_rational() || e.is_zero()) throw std::logic_error("fe_inv: norm not rational");
    BigRational inv_norm = 1 / e.coeff(0);
    return c7 * c3 * c2 * inv_norm;
}

FieldElem fe_div(const FieldElem& a, const FieldElem& b) {
    if (b.is_rational()) {
        if (b.is_zero()) throw DivisionByZero();
        return a * BigRational(1 / b.coeff(0));
    }
    return a * fe_inv(b);
}

namespace {

std::atomic<uint64_t> g_sign_calls{0};

// floor(sqrt(m) * 2^p) for the seven irrational radicands, cached per p.
const std::array<BigInt, FieldElem::kDim>& sqrt_table(unsigned long p) {
    thread_local std::map<unsigned long, std::array<BigInt, FieldElem::kDim>> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::array<BigInt, FieldElem::kDim> t;
    for (int k = 1; k < FieldElem::kDim; ++k) {
        BigInt v = FieldElem::kRadicand[k];
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 2 * p);
        mpz_sqrt(t[k].get_mpz_t(), v.get_mpz_t());
    }
    return cache.emplace(p, std::move(t)).first->second;
}

}  // namespace

uint64_t fe_sign_calls() { return g_sign_calls.load(std::memory_order_relaxed); }

int fe_sign(const FieldElem& a) {
    g_sign_calls.fetch_add(1, std::memory_order_relaxed);
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sgn(a.coeff(0));

    BigInt lo, hi, num, t;
    for (unsigned long p = 64;; p *= 2) {
        const auto& sq = sqrt_table(p);
        lo = 0;
        hi = 0;
        for (int k = 0; k < FieldElem::kDim; ++k) {
            if (!(a.mask() >> k & 1)) continue;
            const BigRational& q = a.coeff(k);
            const BigInt& den = q.get_den();
            if (k == 0) {
                mpz_mul_2exp(num.get_mpz_t(), q.get_num().get_mpz_t(), p);
                mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                lo += t;
                mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                hi += t;
                continue;
            }
            // sqrt(m) * 2^p lies in [s, s+1].
            const BigInt& s = sq[k];
            bool pos = sgn(q) > 0;
            num = q.get_num() * (pos ? s : BigInt(s + 1));
            mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            lo += t;
            num = q.get_num() * (pos ? BigInt(s + 1) : s);
            mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            hi += t;
        }
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
}

std::string fe_str(const FieldElem& a) {
    std::string s = "(";
    for (int k = 0; k < FieldElem::kDim; ++k) {
        if (k) s += ",";
        s += rat_str(a.coeff(k));
    }
    return s + ")";
}

FieldElem fe_parse(const std::string& s) {
    std::string body = s;
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw std::invalid_argument("bad field element: " + s);
    body = body.substr(1, body.size() - 2);
    std::array<BigRational, FieldElem::kDim> c;
    std::stringstream ss(body);
    std::string tok;
    int k = 0;
    while (std::getline(ss, tok, ',')) {
        if (k >= FieldElem::kDim) throw std::invalid_argument("too many coefficients: " + s);
        c[k++] = rat_parse(tok);
    }
    if (k != FieldElem::kDim) throw std::invalid_argument("too few coefficients: " + s);
    return FieldElem::from_coeffs(c);
}

std::string fe_pretty(const FieldElem& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int k = 0; k < FieldElem::kDim; ++k) {
        if (!(a.mask() >> k & 1)) continue;
        if (!s.empty()) s += " + ";
        s += a.coeff(k).get_str();
        if (k) s += "*sqrt" + std::to_string(FieldElem::kRadicand[k]);
    }
    return s;
}

EpsScale EpsScale::full(long n) {
    if (n < 1) throw std::invalid_argument("EpsScale: n must be positive");
    BigInt base = 10 * n;
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), 10);
    EpsScale s;
    s.n = n;
    s.delta = BigRational(BigInt(1), den);
    return s;
}

EpsScale EpsScale::relaxed(long n, const BigRational& d) {
    if (n < 1) throw std::invalid_argument("EpsScale: n must be positive");
    if (sgn(d) <= 0 || d >= 1) throw std::invalid_argument("EpsScale: delta must lie in (0,1)");
    EpsScale s;
    s.n = n;
    s.delta = d;
    return s;
}

BigRational EpsScale::eps() const { return eps_power(*this, 10); }

BigRational eps_power(const EpsScale& s, int tenths) {
    if (tenths < 0) throw std::invalid_argument("eps_power: negative exponent");
    // Small cache: the constructions hammer a handful of exponents.
    thread_local BigRational last_delta;
    thread_local std::vector<BigRational> pw;
    if (pw.empty() || last_delta != s.delta) {
        last_delta = s.delta;
        pw.assign(1, BigRational(1));
    }
    while (int(pw.size()) <= tenths) pw.push_back(pw.back() * s.delta);
    return pw[tenths];
}

}  // namespace kcr
