#pragma once

// Hermite and Laguerre evaluation, the X1-Laguerre family, and the pair of
// first-order operators that ladder the X1 index.

#include <complex>

#include "isoq/polynomial.hpp"

namespace isoq {

using Complex = std::complex<double>;

// A complex value kept as mantissa * exp(log_scale) so that recurrences can
// run far past the double overflow threshold.
struct ScaledComplex {
    Complex mantissa{0.0, 0.0};
    double log_scale = 0.0;

    Complex value() const { return mantissa * std::exp(log_scale); }
};

// H_n(z) by the three-term recurrence, with periodic magnitude rescaling.
// Safe for n well beyond 500; the unscaled wrapper may still overflow to inf
// if the true value exceeds the double range.
ScaledComplex hermite_eval_scaled(int n, Complex z);
Complex hermite_eval(int n, Complex z);

// Exact coefficients of H_n.
RationalPoly hermite_poly(int n);

// Associated Laguerre L^k_n(x) by recurrence; k may be any real, including
// the negative integers (L^{-n}_n(x) = (-x)^n/n! falls out of the same
// recurrence).
double laguerre_assoc_eval(int n, double k, double x);

// Exact-coefficient associated Laguerre polynomial.
RationalPoly laguerre_assoc_poly(int n, const Rational& k);

// X1-Laguerre polynomial of degree nu >= 1:
//   Lhat^k_nu = -(x + k + 1) L^k_{nu-1} + L^k_{nu-2},   L^k_{-1} == 0.
RationalPoly x1_laguerre(int nu, const Rational& k);

// Left side of the X1 differential equation with denominators cleared,
//   x(x+k) y'' - (x-k)(x+k+1) y' + [(x-k) + (nu-1)(x+k)] y,
// evaluated at y = Lhat^k_nu. Identically zero for every member of the family.
RationalPoly x1_ode_residual(int nu, const Rational& k);
DoublePoly x1_ode_residual_fp(int nu, double k);

// Result of applying one of the first-order operators below: a rational
// function numerator/denominator, reduced, with the quotient available
// whenever the division is exact.
struct RationalFnApplication {
    RationalPoly numerator;
    RationalPoly denominator;  // monic after reduction; the constant 1 when exact
    bool exact = false;

    const RationalPoly& quotient() const {
        if (!exact) throw std::domain_error("operator result is not a polynomial");
        return numerator;
    }
};

// A_k(y) = -[(x+k+1) y' - y]/(x+k).
// Lowers the X1 degree while raising the superscript:
//   A_k Lhat^k_{n+1} = Lhat^{k+1}_n.
RationalFnApplication apply_Ak(const RationalPoly& y, const Rational& k);

// B_k(y) = [x(x+k)(y' - y) + k y (x+k+1)]/(x+k+1).
// Raises the X1 degree while lowering the superscript:
//   B_k Lhat^{k+1}_n = n Lhat^k_{n+1}.
RationalFnApplication apply_Bk(const RationalPoly& y, const Rational& k);

}  // namespace isoq
