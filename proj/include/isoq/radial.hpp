#pragma once

// Radial generalized isotonic oscillator: potential, spectrum, closed-form
// eigenfunctions, the first-order intertwiners A+/A-, and number-ladder
// operators built from them.

#include <vector>

#include "isoq/polynomial.hpp"

namespace isoq {

struct OscillatorConfig {
    double omega = 1.0;  // frequency, sets the inverse-length^2 scale
    int l = 0;           // angular momentum
};

void validate(const OscillatorConfig& cfg);

// V(r) = w^2 r^2 + l(l+1)/r^2 + 8w/(2wr^2+2l+1) - 16w(2l+1)/(2wr^2+2l+1)^2
double potential_v(double r, const OscillatorConfig& cfg);

// E_{n,l} = 2w(2n + l + 3/2)
double energy(int n, const OscillatorConfig& cfg);

// W(r) = wr - (l+1)/r + 4wr/(2wr^2+2l+1) - 4wr/(2wr^2+2l+3)
double superpotential(double r, const OscillatorConfig& cfg);

// Bound state Phi_{n,l}(r) = N r^{l+1}/(2wr^2+2l+1) * Lhat^{(l+1/2)}_{n+1}(wr^2) e^{-wr^2/2}
// with analytic first and second derivatives.
struct RadialEigenstate {
    OscillatorConfig config;
    int n = 0;
    double norm_const = 0.0;
    DoublePoly poly;    // Lhat^{(l+1/2)}_{n+1} in x = w r^2
    DoublePoly dpoly;   // d/dx of poly
    DoublePoly ddpoly;  // d^2/dx^2 of poly

    double value(double r) const;
    double derivative(double r) const;
    double second_derivative(double r) const;
};

RadialEigenstate eigenfunction(int n, const OscillatorConfig& cfg);

// -Phi'' + (V - E) Phi, which vanishes for an exact eigenfunction
double schrodinger_residual(const RadialEigenstate& state, double r);

// Radius beyond which every integrand built from states up to band index
// n_max decays below 1e-16.
double tail_cutoff(const OscillatorConfig& cfg, int n_max);

struct SampledFn {
    std::vector<double> grid;    // strictly increasing radii
    std::vector<double> values;
};

SampledFn sample(const RadialEigenstate& state, const std::vector<double>& grid);

// A-(l) = d/dr + W(r;l) applied to Phi_{n,l}; lands on -sqrt(4wn) Phi_{n-1,l+1}
SampledFn apply_A_minus(const RadialEigenstate& state, const std::vector<double>& grid);

// A+(l-1) = -d/dr + W(r;l-1) applied to Phi_{n,l}; lands on
// -sqrt(4w(n+1)) Phi_{n+1,l-1}. Requires l >= 1.
SampledFn apply_A_plus(const RadialEigenstate& state, const std::vector<double>& grid);

// A wavefunction expanded over the eigenbasis {Phi_{k,l}} at fixed l.
struct RadialWavefn {
    OscillatorConfig config;
    std::vector<double> coeff;

    double eval(double r) const;
};

RadialWavefn to_wavefn(const RadialEigenstate& state);

// Number ladder: lower realizes a_r (A- followed by re-expansion one l down),
// raise realizes a_r^dagger (re-instantiation one l up followed by A+), both
// scaled by -1/sqrt(4w). Neither changes l. The re-expansion projects onto
// the closed-form eigenbasis by quadrature rather than assuming the target,
// so the sqrt(n) factors come out of the numerics.
RadialWavefn ladder_lower(const RadialWavefn& f);
RadialWavefn ladder_raise(const RadialWavefn& f);

enum class LadderDirection { lower, raise };

SampledFn apply_ladder(const RadialEigenstate& state, LadderDirection dir,
                       const std::vector<double>& grid);

// Gram matrix G_{nn'} = int Phi_{n,l} Phi_{n',l} dr for n, n' <= n_max.
struct GramResult {
    std::vector<std::vector<double>> overlap;
    double max_error_estimate = 0.0;
    bool converged = true;
};

GramResult orthonormality_matrix(int l, int n_max, double omega);

}  // namespace isoq
