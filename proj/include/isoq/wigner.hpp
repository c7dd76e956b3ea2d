#pragma once

#include <array>
#include <complex>
#include <vector>

#include "isoq/squeezed_state.hpp"

namespace isoq {

// Phase-space transition element
//   <n'|T(zeta,0)|n> = e^{-2|z|^2} sqrt(n'!/n!) 2^{n-n'+1} (-1)^{n'}
//                      conj(zeta)^{n-n'} L_{n'}^{n-n'}(4|z|^2)
// for n >= n'; the n' > n case follows from Hermiticity as the conjugate of
// the swapped element.
Complex t_matrix_element(int n_prime, int n, Complex zeta);

// Single-mode closed-form Wigner factor with unit peak value.
double wigner_closed_mode(Complex xi, Complex alpha, Complex zeta);

// Rectangular evaluation grid of the diagonal slice zeta_r = zeta_+ = zeta_-.
struct WignerGrid {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    std::vector<std::vector<double>> values; // values[ix][ip]
};

enum class WignerMethod { series, closed };

// Evaluates the three-mode Wigner function both as a truncated Fock double
// sum per mode and in closed Gaussian form.  The double sum carries an
// overall constant per mode relative to the unit-peak closed form; the
// constructor measures that constant at fixed probe points (it must not
// depend on zeta) and series() divides it out, so both methods share the
// unit-peak convention.
class WignerEvaluator {
public:
    explicit WignerEvaluator(const ThreeModeParams& params, double eps_tail = 1e-12,
                             int hard_cap = 4096);

    // Normalized series and closed evaluations of the three-mode product.
    double series(Complex z_radial, Complex z_plus, Complex z_minus) const;
    double closed(Complex z_radial, Complex z_plus, Complex z_minus) const;

    // Per-mode pieces (mode 0 = radial, 1 = plus, 2 = minus).
    // series_mode_raw is the bare double sum N^2 sum conj(c) c T without the
    // constant divided out.
    double series_mode_raw(int mode, Complex zeta) const;
    double closed_mode(int mode, Complex zeta) const;
    double series_mode(int mode, Complex zeta) const;

    // Measured series/closed constant of one mode and the largest relative
    // deviation of that ratio across the probe points.
    double mode_constant(int mode) const;
    double constant_spread() const;

private:
    struct Mode {
        Complex xi{0.0, 0.0};
        Complex alpha{0.0, 0.0};
        std::vector<Complex> coeff;
        double norm_sq = 1.0;
        double constant = 1.0;
    };

    std::array<Mode, 3> modes_;
    std::vector<double> log_factorial_;
    double constant_spread_ = 0.0;
};

// Free-function forms of the two evaluations on the three phase points.
double wigner_series(const ThreeModeParams& params, Complex z_radial, Complex z_plus,
                     Complex z_minus, double eps_tail = 1e-12);
double wigner_closed(const ThreeModeParams& params, Complex z_radial, Complex z_plus,
                     Complex z_minus);

// Evaluates the diagonal slice zeta = x + ip over [x_min,x_max] x [p_min,p_max]
// with `resolution` points per axis (2 <= resolution <= 2048).
WignerGrid wigner_grid(const ThreeModeParams& params, double x_min, double x_max,
                       double p_min, double p_max, int resolution, WignerMethod method,
                       double eps_tail = 1e-12);

} // namespace isoq
