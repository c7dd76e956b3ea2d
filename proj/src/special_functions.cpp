#include "isoq/special_functions.hpp"

#include <cmath>

namespace isoq {

namespace {
constexpr double kRescaleThreshold = 1e150;
}

ScaledComplex hermite_eval_scaled(int n, Complex z) {
    if (n < 0) throw std::domain_error("hermite_eval: n must be nonnegative");
    Complex hm1(0.0, 0.0);  // H_{k-1}
    Complex h(1.0, 0.0);    // H_k
    double log_scale = 0.0;
    for (int k = 0; k < n; ++k) {
        const Complex next = 2.0 * z * h - 2.0 * static_cast<double>(k) * hm1;
        hm1 = h;
        h = next;
        const double m = std::max(std::abs(h), std::abs(hm1));
        if (m > kRescaleThreshold) {
            h /= m;
            hm1 /= m;
            log_scale += std::log(m);
        }
    }
    return {h, log_scale};
}

Complex hermite_eval(int n, Complex z) {
    return hermite_eval_scaled(n, z).value();
}

RationalPoly hermite_poly(int n) {
    if (n < 0) throw std::domain_error("hermite_poly: n must be nonnegative");
    RationalPoly hm1;
    RationalPoly h = RationalPoly::constant(Rational(1));
    const RationalPoly two_x = RationalPoly::monomial(Rational(2), 1);
    for (int k = 0; k < n; ++k) {
        RationalPoly next = two_x * h - hm1 * Rational(2 * k);
        hm1 = std::move(h);
        h = std::move(next);
    }
    return h;
}

double laguerre_assoc_eval(int n, double k, double x) {
    if (n < 0) throw std::domain_error("laguerre_assoc_eval: n must be nonnegative");
    if (n == 0) return 1.0;
    double lm1 = 1.0;          // L^k_0
    double l = 1.0 + k - x;    // L^k_1
    for (int m = 1; m < n; ++m) {
        const double next = ((2.0 * m + k + 1.0 - x) * l - (m + k) * lm1) / (m + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

RationalPoly laguerre_assoc_poly(int n, const Rational& k) {
    if (n < 0) throw std::domain_error("laguerre_assoc_poly: n must be nonnegative");
    RationalPoly lm1 = RationalPoly::constant(Rational(1));
    if (n == 0) return lm1;
    // L^k_1 = 1 + k - x
    const Rational one_plus_k = Rational(1) + k;
    RationalPoly l(std::vector<Rational>{one_plus_k, Rational(-1)});
    for (int m = 1; m < n; ++m) {
        // (m+1) L_{m+1} = (2m+k+1-x) L_m - (m+k) L_{m-1}
        const Rational a0 = Rational(2 * m + 1) + k;
        const Rational m_plus_k = Rational(m) + k;
        RationalPoly a(std::vector<Rational>{a0, Rational(-1)});
        RationalPoly next = (a * l - lm1 * m_plus_k) * (Rational(1) / Rational(m + 1));
        lm1 = std::move(l);
        l = std::move(next);
    }
    return l;
}

RationalPoly x1_laguerre(int nu, const Rational& k) {
    if (nu < 1) throw std::domain_error("x1_laguerre: degree must be at least 1");
    if (k <= 0) throw std::domain_error("x1_laguerre: parameter k must be positive");
    // -(x + k + 1)
    const Rational neg_kp1 = -(Rational(1) + k);
    const RationalPoly front(std::vector<Rational>{neg_kp1, Rational(-1)});
    RationalPoly result = front * laguerre_assoc_poly(nu - 1, k);
    if (nu >= 2) result = result + laguerre_assoc_poly(nu - 2, k);
    return result;
}

namespace {

// Shared residual assembly; works for exact and floating coefficients.
template <typename T>
Polynomial<T> ode_residual_impl(int nu, const T& k, const Polynomial<T>& y) {
    const Polynomial<T> dy = y.derivative();
    const Polynomial<T> ddy = dy.derivative();
    const T neg_k = T(0) - k;
    const T kp1 = k + T(1);
    // x(x+k)
    const Polynomial<T> a(std::vector<T>{T(0), k, T(1)});
    // (x-k)(x+k+1)
    const Polynomial<T> xmk(std::vector<T>{neg_k, T(1)});
    const Polynomial<T> xkp1(std::vector<T>{kp1, T(1)});
    const Polynomial<T> b = xmk * xkp1;
    // (x-k) + (nu-1)(x+k)
    const Polynomial<T> xpk(std::vector<T>{k, T(1)});
    const Polynomial<T> c = xmk + xpk * T(nu - 1);
    return a * ddy - b * dy + c * y;
}

}  // namespace

RationalPoly x1_ode_residual(int nu, const Rational& k) {
    return ode_residual_impl<Rational>(nu, k, x1_laguerre(nu, k));
}

DoublePoly x1_ode_residual_fp(int nu, double k) {
    if (nu < 1) throw std::domain_error("x1_ode_residual_fp: degree must be at least 1");
    if (k <= 0) throw std::domain_error("x1_ode_residual_fp: parameter k must be positive");
    return ode_residual_impl<double>(nu, k, to_double(x1_laguerre(nu, Rational(k))));
}

namespace {

// Reduce num/den, exposing an exact quotient when den divides num.
RationalFnApplication reduce(RationalPoly num, RationalPoly den) {
    RationalFnApplication out;
    auto d = num.divmod(den);
    if (d.remainder.is_zero()) {
        out.numerator = std::move(d.quotient);
        out.denominator = RationalPoly::constant(Rational(1));
        out.exact = true;
        return out;
    }
    const RationalPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).quotient;
        den = den.divmod(g).quotient;
    }
    // normalize the denominator to be monic
    const Rational lead = den.leading();
    out.numerator = num * (Rational(1) / lead);
    out.denominator = den * (Rational(1) / lead);
    out.exact = false;
    return out;
}

}  // namespace

RationalFnApplication apply_Ak(const RationalPoly& y, const Rational& k) {
    if (k <= 0) throw std::domain_error("apply_Ak: parameter k must be positive");
    if (y.is_zero()) return {RationalPoly(), RationalPoly::constant(Rational(1)), true};
    const Rational kp1 = Rational(1) + k;
    const RationalPoly xkp1(std::vector<Rational>{kp1, Rational(1)});
    const RationalPoly xpk(std::vector<Rational>{k, Rational(1)});
    const RationalPoly num = -(xkp1 * y.derivative() - y);
    return reduce(num, xpk);
}

RationalFnApplication apply_Bk(const RationalPoly& y, const Rational& k) {
    if (k <= 0) throw std::domain_error("apply_Bk: parameter k must be positive");
    if (y.is_zero()) return {RationalPoly(), RationalPoly::constant(Rational(1)), true};
    const Rational kp1 = Rational(1) + k;
    const RationalPoly xkp1(std::vector<Rational>{kp1, Rational(1)});
    const RationalPoly x_xpk(std::vector<Rational>{Rational(0), k, Rational(1)});
    const RationalPoly num = x_xpk * (y.derivative() - y) + (y * k) * xkp1;
    return reduce(num, xkp1);
}

}  // namespace isoq
