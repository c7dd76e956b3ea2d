#include "isoq/squeezed_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isoq {

namespace {

constexpr double kMaxSqueezeR = 20.0;

void check_xi(Complex xi) {
    if (!(std::abs(xi) < 1.0)) {
        throw std::domain_error("squeeze parameter requires |xi| < 1, got |xi| = " +
                                std::to_string(std::abs(xi)));
    }
}

} // namespace

SqueezeParam make_squeeze(double R, double phi) {
    if (!(R >= 0.0) || R > kMaxSqueezeR) {
        throw std::domain_error("squeeze magnitude must lie in [0, 20], got " +
                                std::to_string(R));
    }
    SqueezeParam sq;
    sq.R = R;
    sq.phi = phi;
    sq.xi = -std::exp(Complex(0.0, phi)) * std::tanh(R);
    return sq;
}

SqueezeParam squeeze_from_xi(Complex xi) {
    check_xi(xi);
    SqueezeParam sq;
    sq.R = std::atanh(std::abs(xi));
    sq.phi = (std::abs(xi) == 0.0) ? 0.0 : std::arg(-xi);
    sq.xi = xi;
    return sq;
}

CoherentParam make_coherent(Complex alpha0, const SqueezeParam& sq) {
    check_xi(sq.xi);
    CoherentParam c;
    c.alpha0 = alpha0;
    c.alpha = (alpha0 - sq.xi * std::conj(alpha0)) / std::sqrt(1.0 - std::norm(sq.xi));
    return c;
}

Complex alpha_hyperbolic(Complex alpha0, double R, double phi) {
    return alpha0 * std::cosh(R) +
           std::conj(alpha0) * std::exp(Complex(0.0, phi)) * std::sinh(R);
}

ModeParams make_mode(double R, double phi, Complex alpha0) {
    ModeParams m;
    m.squeeze = make_squeeze(R, phi);
    m.coherent = make_coherent(alpha0, m.squeeze);
    return m;
}

ModeParams mode_from_xi(Complex xi, Complex alpha0) {
    ModeParams m;
    m.squeeze = squeeze_from_xi(xi);
    m.coherent = make_coherent(alpha0, m.squeeze);
    return m;
}

Complex radial_coeff_branch(int n, Complex xi, Complex alpha, bool flip_root) {
    if (n < 0) throw std::domain_error("Fock index must be nonnegative");
    check_xi(xi);
    if (std::abs(xi) < kCoherentFallbackXi) {
        // Coherent limit: c_n = alpha^n / sqrt(n!), assembled in the log
        // domain so large |alpha| with large n cannot overflow.
        if (n == 0) return Complex(1.0, 0.0);
        double a = std::abs(alpha);
        if (a == 0.0) return Complex(0.0, 0.0);
        double log_mag = n * std::log(a) - 0.5 * std::lgamma(n + 1.0);
        double ph = n * std::arg(alpha);
        return std::exp(log_mag) * Complex(std::cos(ph), std::sin(ph));
    }

    Complex s = std::sqrt(-2.0 * xi);
    if (flip_root) s = -s;
    Complex mu = alpha * std::sqrt(1.0 - std::norm(xi)) / s;
    ScaledComplex h = hermite_eval_scaled(n, mu);

    // c_n = H_n(mu) (s/2)^n / sqrt(n!), with the power and factorial folded
    // into a single exponent next to the Hermite rescaling.
    Complex log_half_s = std::log(s / 2.0);
    double log_mag = h.log_scale + n * log_half_s.real() - 0.5 * std::lgamma(n + 1.0);
    double ph = n * log_half_s.imag();
    return h.mantissa * std::exp(log_mag) * Complex(std::cos(ph), std::sin(ph));
}

Complex radial_coeff(int n, Complex xi, Complex alpha) {
    return radial_coeff_branch(n, xi, alpha, false);
}

Complex angular_coeff(double l, double m, Complex xi_plus, Complex alpha_plus,
                      Complex xi_minus, Complex alpha_minus) {
    double kp = l + m;
    double km = l - m;
    double kp_round = std::round(kp);
    double km_round = std::round(km);
    if (std::abs(kp - kp_round) > 1e-9 || std::abs(km - km_round) > 1e-9) {
        throw std::domain_error("l+m and l-m must be integers");
    }
    if (kp_round < 0.0 || km_round < 0.0) {
        throw std::domain_error("|m| must not exceed l");
    }
    return radial_coeff(static_cast<int>(kp_round), xi_plus, alpha_plus) *
           radial_coeff(static_cast<int>(km_round), xi_minus, alpha_minus);
}

double norm_radial(Complex xi, Complex alpha) {
    check_xi(xi);
    double quarter_root = std::pow(1.0 - std::norm(xi), 0.25);
    Complex cross = alpha * alpha * std::conj(xi) + std::conj(alpha) * std::conj(alpha) * xi;
    // cross is a value plus its conjugate, hence real up to rounding.
    double exponent = -0.25 * (cross.real() + 2.0 * std::norm(alpha));
    return quarter_root * std::exp(exponent);
}

double norm_angular(const ModeParams& plus, const ModeParams& minus) {
    return norm_radial(plus.squeeze.xi, plus.coherent.alpha) *
           norm_radial(minus.squeeze.xi, minus.coherent.alpha);
}

double TruncatedState::tail_mass() const {
    return std::max(tail_radial, std::max(tail_plus, tail_minus));
}

Complex TruncatedState::coeff(int n_radial, int n_plus, int n_minus) const {
    return coeff_radial.at(static_cast<size_t>(n_radial)) *
           coeff_plus.at(static_cast<size_t>(n_plus)) *
           coeff_minus.at(static_cast<size_t>(n_minus));
}

namespace {

// Expands one mode until the tail mass drops below eps_tail.
void truncate_mode(Complex xi, Complex alpha, double norm_const, double eps_tail,
                   int hard_cap, std::vector<Complex>& coeff, double& tail) {
    double n2 = norm_const * norm_const;
    coeff.clear();
    double sum = 0.0;
    int target = 64;
    for (;;) {
        while (static_cast<int>(coeff.size()) < target) {
            int n = static_cast<int>(coeff.size());
            Complex c = radial_coeff(n, xi, alpha);
            coeff.push_back(c);
            sum += std::norm(c);
        }
        tail = std::max(0.0, 1.0 - n2 * sum);
        if (tail < eps_tail) return;
        if (target >= hard_cap) {
            throw std::runtime_error("Fock truncation cap " + std::to_string(hard_cap) +
                                     " reached with tail mass " + std::to_string(tail));
        }
        target = std::min(hard_cap, 2 * target);
    }
}

} // namespace

TruncatedState build_state(const ThreeModeParams& params, double eps_tail, int hard_cap) {
    if (!(eps_tail > 0.0) || eps_tail > 1e-3) {
        throw std::domain_error("eps_tail must lie in (0, 1e-3]");
    }
    if (hard_cap < 1) throw std::domain_error("hard_cap must be positive");

    TruncatedState st;
    st.params = params;
    st.norm_radial_const = norm_radial(params.radial.squeeze.xi, params.radial.coherent.alpha);
    st.norm_plus_const = norm_radial(params.plus.squeeze.xi, params.plus.coherent.alpha);
    st.norm_minus_const = norm_radial(params.minus.squeeze.xi, params.minus.coherent.alpha);

    truncate_mode(params.radial.squeeze.xi, params.radial.coherent.alpha,
                  st.norm_radial_const, eps_tail, hard_cap, st.coeff_radial, st.tail_radial);
    truncate_mode(params.plus.squeeze.xi, params.plus.coherent.alpha,
                  st.norm_plus_const, eps_tail, hard_cap, st.coeff_plus, st.tail_plus);
    truncate_mode(params.minus.squeeze.xi, params.minus.coherent.alpha,
                  st.norm_minus_const, eps_tail, hard_cap, st.coeff_minus, st.tail_minus);
    return st;
}

namespace {

// Accumulates the overlap matrix on an a x theta product grid: midpoint rule
// radially, uniform rule in the angle.
std::vector<std::vector<Complex>> overlap_on_grid(Complex xi, int n_max, double a_max,
                                                  int radial_points, int angular_points) {
    const int dim = n_max + 1;
    std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim, Complex(0.0, 0.0)));
    const double h = a_max / radial_points;
    const double dtheta = 2.0 * M_PI / angular_points;
    const double root = std::sqrt(1.0 - std::norm(xi));
    std::vector<Complex> c(dim);

    for (int i = 0; i < radial_points; ++i) {
        double a = (i + 0.5) * h;
        for (int j = 0; j < angular_points; ++j) {
            double theta = j * dtheta;
            Complex alpha0 = a * Complex(std::cos(theta), std::sin(theta));
            Complex alpha = (alpha0 - xi * std::conj(alpha0)) / root;
            for (int n = 0; n < dim; ++n) c[n] = radial_coeff(n, xi, alpha);
            double nr = norm_radial(xi, alpha);
            // d^2 alpha0 = a da dtheta; the resolution carries measure 1/pi.
            double weight = nr * nr * a * h * dtheta / M_PI;
            for (int np = 0; np < dim; ++np) {
                Complex left = std::conj(c[np]) * weight;
                for (int n = 0; n < dim; ++n) m[np][n] += left * c[n];
            }
        }
    }
    return m;
}

double max_identity_deviation(const std::vector<std::vector<Complex>>& m) {
    double worst = 0.0;
    for (size_t np = 0; np < m.size(); ++np) {
        for (size_t n = 0; n < m.size(); ++n) {
            double target = (np == n) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(m[np][n] - Complex(target, 0.0)));
        }
    }
    return worst;
}

} // namespace

IdentityCheckResult identity_resolution_check(Complex xi, const PolarQuadratureConfig& cfg) {
    double axi = std::abs(xi);
    if (!(axi > 0.0) || axi > 0.8) {
        throw std::domain_error("identity check requires 0 < |xi| <= 0.8");
    }
    if (cfg.n_max < 0 || cfg.n_max > 10) {
        throw std::domain_error("identity check supports n_max <= 10");
    }
    if (cfg.radial_points < 4 || cfg.angular_points < 4) {
        throw std::domain_error("identity check needs at least 4 points per axis");
    }

    IdentityCheckResult res;
    res.overlap = overlap_on_grid(xi, cfg.n_max, cfg.a_max,
                                  cfg.radial_points, cfg.angular_points);
    res.max_abs_deviation = max_identity_deviation(res.overlap);

    // Difference against the half-resolution grid estimates the quadrature
    // error actually committed at full resolution.
    auto coarse = overlap_on_grid(xi, cfg.n_max, cfg.a_max,
                                  cfg.radial_points / 2, cfg.angular_points / 2);
    double diff = 0.0;
    for (size_t np = 0; np < res.overlap.size(); ++np) {
        for (size_t n = 0; n < res.overlap.size(); ++n) {
            diff = std::max(diff, std::abs(res.overlap[np][n] - coarse[np][n]));
        }
    }
    res.error_estimate = diff;
    res.converged = diff < cfg.tolerance;
    return res;
}

} // namespace isoq
