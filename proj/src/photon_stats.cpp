#include "isoq/photon_stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoq {

namespace {

void check_xi(Complex xi) {
    if (!(std::abs(xi) < 1.0)) {
        throw std::domain_error("moment formulas require |xi| < 1, got |xi| = " +
                                std::to_string(std::abs(xi)));
    }
}

// Single-mode truncation for the series oracles.  Extends until the tail mass
// drops below eps and the second-moment weight of the last block is
// negligible, so n^2-weighted sums keep full accuracy.
struct SeriesMode {
    std::vector<Complex> c;
    double n2 = 1.0; // squared normalization constant
};

SeriesMode truncated_series(Complex xi, Complex alpha, double eps) {
    constexpr int kCap = 4096;
    constexpr int kBlock = 32;
    if (!(eps > 0.0) || eps > 1e-3) {
        throw std::domain_error("series tail bound must lie in (0, 1e-3]");
    }
    SeriesMode sm;
    double nr = norm_radial(xi, alpha);
    sm.n2 = nr * nr;

    double sum0 = 0.0;   // sum |c_n|^2
    double sum2 = 0.0;   // sum n^2 |c_n|^2
    for (;;) {
        double block_peak = 0.0;
        for (int b = 0; b < kBlock; ++b) {
            int n = static_cast<int>(sm.c.size());
            Complex cn = radial_coeff(n, xi, alpha);
            sm.c.push_back(cn);
            double t = std::norm(cn);
            sum0 += t;
            sum2 += static_cast<double>(n) * n * t;
            block_peak = std::max(block_peak, static_cast<double>(n) * n * t);
        }
        double tail = std::max(0.0, 1.0 - sm.n2 * sum0);
        bool second_moment_settled = sm.n2 * block_peak < 1e-17 * (1.0 + sm.n2 * sum2);
        if (tail < eps && second_moment_settled) return sm;
        if (static_cast<int>(sm.c.size()) >= kCap) {
            throw std::runtime_error("series truncation cap reached with tail mass " +
                                     std::to_string(tail));
        }
    }
}

} // namespace

double mean_n_closed(Complex xi, Complex alpha) {
    check_xi(xi);
    double s2 = std::norm(xi);
    double cross = 2.0 * (std::conj(xi) * alpha * alpha).real();
    return (std::norm(alpha) * (1.0 + s2) + cross + s2) / (1.0 - s2);
}

double mean_n2_closed(Complex xi, Complex alpha) {
    check_xi(xi);
    double s2 = std::norm(xi);
    double a2 = std::norm(alpha);
    double b = 2.0 * (std::conj(xi) * alpha * alpha).real();
    double denom = (1.0 - s2) * (1.0 - s2);
    double bracket = a2 * a2 * (1.0 + s2) * (1.0 + s2) + s2 * (2.0 + s2) + b * b +
                     (2.0 * (1.0 + a2) * (1.0 + s2) + 2.0 * s2) * b +
                     a2 * (1.0 + 8.0 * s2 + 3.0 * s2 * s2);
    return bracket / denom;
}

double mean_n_series(Complex xi, Complex alpha, double eps) {
    SeriesMode sm = truncated_series(xi, alpha, eps);
    double acc = 0.0;
    for (size_t n = 0; n < sm.c.size(); ++n) acc += static_cast<double>(n) * std::norm(sm.c[n]);
    return sm.n2 * acc;
}

double mean_n2_series(Complex xi, Complex alpha, double eps) {
    SeriesMode sm = truncated_series(xi, alpha, eps);
    double acc = 0.0;
    for (size_t n = 0; n < sm.c.size(); ++n) {
        acc += static_cast<double>(n) * static_cast<double>(n) * std::norm(sm.c[n]);
    }
    return sm.n2 * acc;
}

Complex expect_a_series(Complex xi, Complex alpha, double eps) {
    SeriesMode sm = truncated_series(xi, alpha, eps);
    Complex acc(0.0, 0.0);
    for (size_t n = 1; n < sm.c.size(); ++n) {
        acc += std::conj(sm.c[n - 1]) * sm.c[n] * std::sqrt(static_cast<double>(n));
    }
    return sm.n2 * acc;
}

Complex expect_a2_series(Complex xi, Complex alpha, double eps) {
    SeriesMode sm = truncated_series(xi, alpha, eps);
    Complex acc(0.0, 0.0);
    for (size_t n = 2; n < sm.c.size(); ++n) {
        double w = std::sqrt(static_cast<double>(n) * (n - 1.0));
        acc += std::conj(sm.c[n - 2]) * sm.c[n] * w;
    }
    return sm.n2 * acc;
}

ModeMoments mode_moments(Complex xi, Complex alpha) {
    ModeMoments m;
    m.mean_n = mean_n_closed(xi, alpha);
    m.mean_n2 = mean_n2_closed(xi, alpha);
    if (m.mean_n <= 0.0) {
        throw std::domain_error("Mandel Q is undefined for the vacuum (<n> = 0)");
    }
    m.q = m.mean_n2 / m.mean_n - m.mean_n - 1.0;
    return m;
}

double mandel_q(Complex xi, Complex alpha) {
    return mode_moments(xi, alpha).q;
}

QuadExpectations quad_expectations(Complex xi, Complex alpha) {
    check_xi(xi);
    QuadExpectations e;
    double root = std::sqrt(1.0 - std::norm(xi));
    Complex inner = std::conj(alpha) * xi + alpha;
    e.a = (alpha + xi * std::conj(alpha)) / root;
    e.a2 = (xi + inner * inner) / (1.0 - std::norm(xi));
    e.a_dag = std::conj(e.a);
    e.a_dag2 = std::conj(e.a2);
    e.n = mean_n_closed(xi, alpha);
    return e;
}

QuadExpectations quad_expectations_series(Complex xi, Complex alpha, double eps) {
    QuadExpectations e;
    e.a = expect_a_series(xi, alpha, eps);
    e.a2 = expect_a2_series(xi, alpha, eps);
    e.a_dag = std::conj(e.a);
    e.a_dag2 = std::conj(e.a2);
    e.n = mean_n_series(xi, alpha, eps);
    return e;
}

std::pair<double, double> squeeze_indicators_from(const QuadExpectations& e) {
    Complex fluct = e.a2 + e.a_dag2 - e.a * e.a - e.a_dag * e.a_dag;
    Complex base = -2.0 * e.a * e.a_dag + 2.0 * e.n;
    Complex i1 = fluct + base;
    Complex i2 = -fluct + base;
    if (std::abs(i1.imag()) > 1e-12 || std::abs(i2.imag()) > 1e-12) {
        throw std::runtime_error("squeeze indicators acquired an imaginary part");
    }
    return {i1.real(), i2.real()};
}

std::pair<double, double> squeeze_indicators(Complex xi, Complex alpha) {
    return squeeze_indicators_from(quad_expectations(xi, alpha));
}

namespace {

AngularExpectations compose_angular(const QuadExpectations& plus,
                                    const QuadExpectations& minus) {
    AngularExpectations e;
    // The state is a product state over the two circular modes, so every
    // L expectation factorizes into per-mode ladder expectations.
    e.lp = std::conj(plus.a) * minus.a;
    e.lm = std::conj(e.lp);
    e.lp2 = std::conj(plus.a2) * minus.a2;
    e.lm2 = std::conj(e.lp2);
    e.lplm = plus.n * (minus.n + 1.0);
    e.lmlp = (plus.n + 1.0) * minus.n;
    e.lz = 0.5 * (plus.n - minus.n);
    return e;
}

} // namespace

AngularExpectations angular_expectations(const ThreeModeParams& p) {
    return compose_angular(
        quad_expectations(p.plus.squeeze.xi, p.plus.coherent.alpha),
        quad_expectations(p.minus.squeeze.xi, p.minus.coherent.alpha));
}

AngularExpectations angular_expectations_series(const ThreeModeParams& p, double eps) {
    return compose_angular(
        quad_expectations_series(p.plus.squeeze.xi, p.plus.coherent.alpha, eps),
        quad_expectations_series(p.minus.squeeze.xi, p.minus.coherent.alpha, eps));
}

AngularVariances angular_variances(const AngularExpectations& e) {
    AngularVariances v;
    // <L_x^2> = (1/4)(<L_+^2> + <L_-^2> + <L_+L_-> + <L_-L_+>) and
    // <L_y^2> = (1/4)(<L_+L_-> + <L_-L_+> - <L_+^2> - <L_-^2>).
    double lp2_sym = 2.0 * e.lp2.real();
    v.dlx2 = 0.25 * (lp2_sym + e.lplm + e.lmlp) - e.lp.real() * e.lp.real();
    v.dly2 = 0.25 * (e.lplm + e.lmlp - lp2_sym) - e.lp.imag() * e.lp.imag();
    return v;
}

std::pair<double, double> spin_squeeze_indicators(const ThreeModeParams& p,
                                                 double threshold) {
    AngularExpectations e = angular_expectations(p);
    double alz = std::abs(e.lz);
    if (alz <= threshold) {
        throw std::domain_error("spin squeezing indicators undefined: |<L_z>| = " +
                                std::to_string(alz) + " is below threshold");
    }
    AngularVariances v = angular_variances(e);
    return {(2.0 * v.dlx2 - alz) / alz, (2.0 * v.dly2 - alz) / alz};
}

} // namespace isoq
