#pragma once

// Dense univariate polynomials with exact rational or double coefficients.
// The rational instantiation backs the exact identity checks; the double
// instantiation is the fast evaluation path.

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoq {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    // coefficients in ascending degree order
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& a) { return Polynomial(std::vector<T>{a}); }

    // the monomial a*x^n
    static Polynomial monomial(const T& a, std::size_t n) {
        std::vector<T> c(n + 1, T(0));
        c[n] = a;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<T>& coeffs() const { return c_; }

    // coefficient of x^i (0 beyond the stored range)
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    template <typename X>
    X eval(const X& x) const {
        X acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const T& s) const {
        std::vector<T> r(c_);
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Euclidean division; requires a nonzero divisor.
    struct DivResult {
        Polynomial quotient;
        Polynomial remainder;
    };
    DivResult divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> rem(c_);
        std::vector<T> quo;
        const int dd = d.degree();
        if (degree() >= dd) quo.assign(static_cast<std::size_t>(degree() - dd) + 1, T(0));
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            const std::size_t k = rem.size() - 1 - static_cast<std::size_t>(dd);
            const T f = rem.back() / d.leading();
            quo[k] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= f * d.c_[i];
            while (!rem.empty() && rem.back() == T(0)) rem.pop_back();
            if (rem.empty()) break;
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == T(0)) continue;
            if (!s.empty()) s += " + ";
            s += coeff_str(c_[i]) + (i ? "*x^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    static std::string coeff_str(const T& v) {
        if constexpr (std::is_same_v<T, Rational>) {
            return v.str();
        } else {
            return std::to_string(static_cast<double>(v));
        }
    }

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using RationalPoly = Polynomial<Rational>;
using DoublePoly = Polynomial<double>;

inline DoublePoly to_double(const RationalPoly& p) {
    std::vector<double> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].convert_to<double>();
    return DoublePoly(std::move(c));
}

// Monic gcd over the rationals (Euclid). gcd(0, 0) = 0.
inline RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rational(1) / a.leading());
    return a;
}

}  // namespace isoq
