#pragma once

// Independent reference procedures used only by the tests.

#include "kcr/exactnum.hpp"

#include <random>

namespace kcr::oracle {

// Sign by repeated squaring over the tower Q < Q(sqrt2) < Q(sqrt2,sqrt3) < ...
// Splits a = x + y*sqrt(p) and compares x^2 with p*y^2 when signs disagree.
inline int tower_sign(const FieldElem& a, int top_bit = 4) {
    if (top_bit == 0) return sgn(a.coeff(0));
    std::array<BigRational, 8> xs{}, ys{};
    for (int k = 0; k < 8; ++k) {
        if (k & top_bit) ys[k ^ top_bit] = a.coeff(k);
        else xs[k] = a.coeff(k);
    }
    FieldElem x = FieldElem::from_coeffs(xs), y = FieldElem::from_coeffs(ys);
    int p = top_bit == 4 ? 7 : top_bit == 2 ? 3 : 2;
    int sx = tower_sign(x, top_bit >> 1), sy = tower_sign(y, top_bit >> 1);
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sx == 0 ? sy : sx;
    FieldElem d = x * x - y * y * BigRational(p);
    return sx * tower_sign(d, top_bit >> 1);
}

inline FieldElem random_elem(std::mt19937_64& rng, int span = 20, unsigned mask = 0xff) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    std::array<BigRational, 8> c{};
    for (int k = 0; k < 8; ++k)
        if (mask >> k & 1) c[k] = BigRational(num(rng), den(rng)), c[k].canonicalize();
    return FieldElem::from_coeffs(c);
}

}  // namespace kcr::oracle
