#include "isoq/radial.hpp"

#include <cmath>
#include <stdexcept>

#include "isoq/quadrature.hpp"
#include "isoq/special_functions.hpp"

namespace isoq {

void validate(const OscillatorConfig& cfg) {
    if (!(cfg.omega > 0.0)) throw std::domain_error("oscillator: omega must be positive");
    if (cfg.l < 0) throw std::domain_error("oscillator: l must be nonnegative");
}

double potential_v(double r, const OscillatorConfig& cfg) {
    validate(cfg);
    if (!(r > 0.0)) throw std::domain_error("potential_v: r must be positive");
    const double w = cfg.omega;
    const double l = cfg.l;
    const double d = 2.0 * w * r * r + 2.0 * l + 1.0;
    return w * w * r * r + l * (l + 1.0) / (r * r) + 8.0 * w / d - 16.0 * w * (2.0 * l + 1.0) / (d * d);
}

double energy(int n, const OscillatorConfig& cfg) {
    validate(cfg);
    if (n < 0) throw std::domain_error("energy: n must be nonnegative");
    return 2.0 * cfg.omega * (2.0 * n + cfg.l + 1.5);
}

double superpotential(double r, const OscillatorConfig& cfg) {
    validate(cfg);
    if (!(r > 0.0)) throw std::domain_error("superpotential: r must be positive");
    const double w = cfg.omega;
    const double l = cfg.l;
    return w * r - (l + 1.0) / r + 4.0 * w * r / (2.0 * w * r * r + 2.0 * l + 1.0)
           - 4.0 * w * r / (2.0 * w * r * r + 2.0 * l + 3.0);
}

namespace {

double norm_const_value(int n, const OscillatorConfig& cfg) {
    // N_{n,l} = sqrt(8 w^{l+3/2} n! / ((n+l+3/2) Gamma(n+l+1/2)))
    const double lg = std::log(8.0) + (cfg.l + 1.5) * std::log(cfg.omega) + std::lgamma(n + 1.0)
                      - std::log(n + cfg.l + 1.5) - std::lgamma(n + cfg.l + 0.5);
    return std::exp(0.5 * lg);
}

}  // namespace

RadialEigenstate eigenfunction(int n, const OscillatorConfig& cfg) {
    validate(cfg);
    if (n < 0) throw std::domain_error("eigenfunction: n must be nonnegative");
    RadialEigenstate st;
    st.config = cfg;
    st.n = n;
    st.norm_const = norm_const_value(n, cfg);
    const Rational k = Rational(2 * cfg.l + 1, 2);
    st.poly = to_double(x1_laguerre(n + 1, k));
    st.dpoly = st.poly.derivative();
    st.ddpoly = st.dpoly.derivative();
    return st;
}

double RadialEigenstate::value(double r) const {
    if (!(r > 0.0)) throw std::domain_error("eigenstate value: r must be positive");
    const double w = config.omega;
    const double x = w * r * r;
    const double d = 2.0 * x + 2.0 * config.l + 1.0;
    return norm_const * std::pow(r, config.l + 1) / d * poly.eval(x) * std::exp(-0.5 * x);
}

double RadialEigenstate::derivative(double r) const {
    if (!(r > 0.0)) throw std::domain_error("eigenstate derivative: r must be positive");
    const double w = config.omega;
    const int l = config.l;
    const double x = w * r * r;
    const double d = 2.0 * x + 2.0 * l + 1.0;
    const double p = poly.eval(x), dp = dpoly.eval(x);
    const double q = p / d;
    const double dq = dp / d - 2.0 * p / (d * d);
    const double g = std::pow(r, l + 1) * q;
    const double gp = (l + 1.0) * std::pow(r, l) * q + 2.0 * w * std::pow(r, l + 2) * dq;
    return norm_const * std::exp(-0.5 * x) * (gp - w * r * g);
}

double RadialEigenstate::second_derivative(double r) const {
    if (!(r > 0.0)) throw std::domain_error("eigenstate derivative: r must be positive");
    const double w = config.omega;
    const int l = config.l;
    const double x = w * r * r;
    const double d = 2.0 * x + 2.0 * l + 1.0;
    const double p = poly.eval(x), dp = dpoly.eval(x), ddp = ddpoly.eval(x);
    const double q = p / d;
    const double dq = dp / d - 2.0 * p / (d * d);
    const double ddq = ddp / d - 4.0 * dp / (d * d) + 8.0 * p / (d * d * d);
    const double g = std::pow(r, l + 1) * q;
    const double gp = (l + 1.0) * std::pow(r, l) * q + 2.0 * w * std::pow(r, l + 2) * dq;
    const double gpp = l * (l + 1.0) * std::pow(r, l - 1) * q
                       + 2.0 * w * (2.0 * l + 3.0) * std::pow(r, l + 1) * dq
                       + 4.0 * w * w * std::pow(r, l + 3) * ddq;
    return norm_const * std::exp(-0.5 * x) * (gpp - 2.0 * w * r * gp + (w * w * r * r - w) * g);
}

double schrodinger_residual(const RadialEigenstate& state, double r) {
    return -state.second_derivative(r)
           + (potential_v(r, state.config) - energy(state.n, state.config)) * state.value(r);
}

double tail_cutoff(const OscillatorConfig& cfg, int n_max) {
    // choose x_cut with x - 2(n_max + l + 2) ln x > 40, then r = sqrt(x/w)
    const double a = 2.0 * (n_max + cfg.l + 2);
    double x = 60.0;
    for (int i = 0; i < 40; ++i) x = 40.0 + a * std::log(x);
    return std::sqrt(x / cfg.omega);
}

SampledFn sample(const RadialEigenstate& state, const std::vector<double>& grid) {
    SampledFn out;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double r : grid) out.values.push_back(state.value(r));
    return out;
}

SampledFn apply_A_minus(const RadialEigenstate& state, const std::vector<double>& grid) {
    SampledFn out;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double r : grid)
        out.values.push_back(state.derivative(r) + superpotential(r, state.config) * state.value(r));
    return out;
}

SampledFn apply_A_plus(const RadialEigenstate& state, const std::vector<double>& grid) {
    if (state.config.l < 1)
        throw std::domain_error("apply_A_plus: state must have l >= 1");
    const OscillatorConfig below{state.config.omega, state.config.l - 1};
    SampledFn out;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double r : grid)
        out.values.push_back(-state.derivative(r) + superpotential(r, below) * state.value(r));
    return out;
}

RadialWavefn to_wavefn(const RadialEigenstate& state) {
    RadialWavefn f;
    f.config = state.config;
    f.coeff.assign(state.n + 1, 0.0);
    f.coeff[state.n] = 1.0;
    return f;
}

double RadialWavefn::eval(double r) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (coeff[k] == 0.0) continue;
        acc += coeff[k] * eigenfunction(static_cast<int>(k), config).value(r);
    }
    return acc;
}

namespace {

// Project a function onto {Phi_{j,l}} for j = 0..j_max by quadrature.
std::vector<double> project_onto_basis(const std::function<double(double)>& fn,
                                       const OscillatorConfig& cfg, int j_max) {
    std::vector<double> coeff(j_max + 1, 0.0);
    const double rcut = tail_cutoff(cfg, j_max);
    for (int j = 0; j <= j_max; ++j) {
        const RadialEigenstate basis = eigenfunction(j, cfg);
        const auto res = integrate_adaptive(
            [&](double r) { return fn(r) * basis.value(r); }, 1e-12, rcut, 1e-11);
        coeff[j] = res.value;
    }
    return coeff;
}

std::vector<RadialEigenstate> build_basis(const OscillatorConfig& cfg, std::size_t count) {
    std::vector<RadialEigenstate> basis;
    basis.reserve(count);
    for (std::size_t k = 0; k < count; ++k) basis.push_back(eigenfunction(static_cast<int>(k), cfg));
    return basis;
}

}  // namespace

RadialWavefn ladder_lower(const RadialWavefn& f) {
    validate(f.config);
    const OscillatorConfig up{f.config.omega, f.config.l + 1};
    const auto basis = build_basis(f.config, f.coeff.size());
    // analytic A-(l) applied term by term
    auto applied = [&](double r) {
        const double w_val = superpotential(r, f.config);
        double acc = 0.0;
        for (std::size_t k = 0; k < f.coeff.size(); ++k) {
            if (f.coeff[k] == 0.0) continue;
            acc += f.coeff[k] * (basis[k].derivative(r) + w_val * basis[k].value(r));
        }
        return acc;
    };
    const int j_max = static_cast<int>(f.coeff.size());
    std::vector<double> projected = project_onto_basis(applied, up, j_max);
    RadialWavefn out;
    out.config = f.config;  // re-instantiated one l down, back at the original l
    out.coeff.resize(projected.size());
    const double scale = -1.0 / std::sqrt(4.0 * f.config.omega);
    for (std::size_t j = 0; j < projected.size(); ++j) out.coeff[j] = scale * projected[j];
    return out;
}

RadialWavefn ladder_raise(const RadialWavefn& f) {
    validate(f.config);
    const OscillatorConfig up{f.config.omega, f.config.l + 1};
    const auto basis_up = build_basis(up, f.coeff.size());
    // the same coefficients re-instantiated at l+1, then analytic A+(l)
    auto applied = [&](double r) {
        const double w_val = superpotential(r, f.config);
        double acc = 0.0;
        for (std::size_t k = 0; k < f.coeff.size(); ++k) {
            if (f.coeff[k] == 0.0) continue;
            acc += f.coeff[k] * (-basis_up[k].derivative(r) + w_val * basis_up[k].value(r));
        }
        return acc;
    };
    const int j_max = static_cast<int>(f.coeff.size()) + 1;
    std::vector<double> projected = project_onto_basis(applied, f.config, j_max);
    RadialWavefn out;
    out.config = f.config;
    out.coeff.resize(projected.size());
    const double scale = -1.0 / std::sqrt(4.0 * f.config.omega);
    for (std::size_t j = 0; j < projected.size(); ++j) out.coeff[j] = scale * projected[j];
    return out;
}

SampledFn apply_ladder(const RadialEigenstate& state, LadderDirection dir,
                       const std::vector<double>& grid) {
    const RadialWavefn f = to_wavefn(state);
    const RadialWavefn g = dir == LadderDirection::lower ? ladder_lower(f) : ladder_raise(f);
    SampledFn out;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double r : grid) out.values.push_back(g.eval(r));
    return out;
}

GramResult orthonormality_matrix(int l, int n_max, double omega) {
    if (n_max < 0 || n_max > 12)
        throw std::domain_error("orthonormality_matrix: n_max must lie in [0, 12]");
    const OscillatorConfig cfg{omega, l};
    validate(cfg);
    const auto basis = build_basis(cfg, n_max + 1);
    const double rcut = tail_cutoff(cfg, n_max);
    GramResult res;
    res.overlap.assign(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    for (int a = 0; a <= n_max; ++a) {
        for (int b = a; b <= n_max; ++b) {
            const auto q = integrate_adaptive(
                [&](double r) { return basis[a].value(r) * basis[b].value(r); }, 1e-12, rcut, 1e-11);
            res.overlap[a][b] = res.overlap[b][a] = q.value;
            res.max_error_estimate = std::max(res.max_error_estimate, q.error_estimate);
            if (!q.converged) res.converged = false;
        }
    }
    return res;
}

}  // namespace isoq
