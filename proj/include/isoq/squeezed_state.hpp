#pragma once

#include <complex>
#include <vector>

#include "isoq/special_functions.hpp"

namespace isoq {

// Below this squeeze magnitude the state is treated as purely coherent and
// the Fock coefficients fall back to the Glauber form alpha^n / sqrt(n!).
inline constexpr double kCoherentFallbackXi = 1e-8;

// Squeeze parameter xi = -e^{i phi} tanh(R) for squeeze magnitude R >= 0
// and phase phi.  |xi| < 1 always holds for finite R.
struct SqueezeParam {
    double R = 0.0;
    double phi = 0.0;
    Complex xi{0.0, 0.0};
};

// Builds the squeeze parameter from magnitude and phase.
// Throws std::domain_error for R < 0 or R > 20 (tanh saturates in double
// precision well before 20, so larger values only lose information).
SqueezeParam make_squeeze(double R, double phi);

// Recovers (R, phi) from a given complex xi with |xi| < 1.
SqueezeParam squeeze_from_xi(Complex xi);

// Displacement parameter pair: alpha0 is the coherent displacement before
// squeezing, alpha the effective displacement entering the Fock expansion,
// alpha = (alpha0 - xi conj(alpha0)) / sqrt(1 - |xi|^2).
struct CoherentParam {
    Complex alpha0{0.0, 0.0};
    Complex alpha{0.0, 0.0};
};

// Builds the effective displacement from alpha0 and the squeeze parameter.
CoherentParam make_coherent(Complex alpha0, const SqueezeParam& sq);

// Equivalent hyperbolic form alpha = alpha0 cosh(R) + conj(alpha0) e^{i phi} sinh(R),
// kept as an independent cross-check of make_coherent.
Complex alpha_hyperbolic(Complex alpha0, double R, double phi);

// One oscillator mode of the three-mode state.
struct ModeParams {
    SqueezeParam squeeze;
    CoherentParam coherent;
};

ModeParams make_mode(double R, double phi, Complex alpha0);
ModeParams mode_from_xi(Complex xi, Complex alpha0);

// The full state factorizes over the radial mode and the two circular modes.
struct ThreeModeParams {
    ModeParams radial;
    ModeParams plus;
    ModeParams minus;
};

// Unnormalized Fock coefficient
//   c_n = H_n(mu) (s/2)^n / sqrt(n!),
// with s = sqrt(-2 xi) (principal branch) and mu = alpha sqrt(1 - |xi|^2) / s.
// Assembled in the log domain so it stays finite for n in the thousands.
// For |xi| < kCoherentFallbackXi the coherent form alpha^n / sqrt(n!) is used.
// flip_root selects the opposite square root s -> -s; the result is invariant
// under that choice, which radial_coeff_branch exposes for testing.
Complex radial_coeff(int n, Complex xi, Complex alpha);
Complex radial_coeff_branch(int n, Complex xi, Complex alpha, bool flip_root);

// Angular coefficient for the |l, m> occupation pair (l+m, l-m):
//   c_{l,m} = c_{l+m}(xi_+, alpha_+) * c_{l-m}(xi_-, alpha_-).
// l may be integer or half-integer; l+m and l-m must be nonnegative integers
// (within 1e-9), otherwise std::domain_error.
Complex angular_coeff(double l, double m, Complex xi_plus, Complex alpha_plus,
                      Complex xi_minus, Complex alpha_minus);

// Closed-form normalization of a single mode,
//   N = (1 - |xi|^2)^{1/4} exp(-(alpha^2 conj(xi) + conj(alpha)^2 xi + 2|alpha|^2)/4).
// Requires |xi| < 1; at xi = 0 this reduces to exp(-|alpha|^2 / 2).
double norm_radial(Complex xi, Complex alpha);

// Product normalization of the two circular modes.
double norm_angular(const ModeParams& plus, const ModeParams& minus);

// Truncated Fock expansion of the three-mode state.  Coefficients are the
// unnormalized c_n; the norm fields carry the closed-form normalizations.
// tail_* is the probability weight beyond each truncation, bounded by the
// eps_tail passed to build_state.
struct TruncatedState {
    ThreeModeParams params;
    std::vector<Complex> coeff_radial;
    std::vector<Complex> coeff_plus;
    std::vector<Complex> coeff_minus;
    double norm_radial_const = 1.0;
    double norm_plus_const = 1.0;
    double norm_minus_const = 1.0;
    double tail_radial = 0.0;
    double tail_plus = 0.0;
    double tail_minus = 0.0;

    // Product normalization of all three modes.
    double norm() const { return norm_radial_const * norm_plus_const * norm_minus_const; }
    // Largest per-mode tail mass.
    double tail_mass() const;
    // Product coefficient c_n * c_{n+} * c_{n-} (unnormalized).
    Complex coeff(int n_radial, int n_plus, int n_minus) const;
};

// Expands each mode until its tail mass 1 - N^2 sum |c_n|^2 drops below
// eps_tail, doubling the truncation as needed.  Throws std::domain_error for
// eps_tail outside (0, 1e-3] and std::runtime_error if hard_cap coefficients
// do not reach the requested tail.
TruncatedState build_state(const ThreeModeParams& params, double eps_tail,
                           int hard_cap = 4096);

// Polar integration grid for the identity-resolution check: midpoint rule on
// the radius, uniform rule on the angle.
struct PolarQuadratureConfig {
    int n_max = 6;           // overlap matrix spans Fock indices 0..n_max
    double a_max = 8.0;      // radial cutoff on |alpha0|
    int radial_points = 150;
    int angular_points = 128;
    double tolerance = 1e-3; // convergence bar on the half-resolution estimate
};

struct IdentityCheckResult {
    std::vector<std::vector<Complex>> overlap; // M_{n'n}
    double max_abs_deviation = 0.0;            // max |M - I| entry
    double error_estimate = 0.0;               // change vs half resolution
    bool converged = false;
};

// Evaluates M_{n'n} = (1/pi) integral of conj(c_{n'}) c_n N^2 d^2 alpha0 over
// the disc |alpha0| <= a_max at fixed xi, which resolves to the identity on
// the truncated Fock space.  Requires 0 < |xi| <= 0.8 and n_max <= 10.
IdentityCheckResult identity_resolution_check(Complex xi, const PolarQuadratureConfig& cfg);

} // namespace isoq
