#pragma once

#include <complex>
#include <utility>

#include "isoq/squeezed_state.hpp"

namespace isoq {

// Per-mode number statistics.  q is Mandel's parameter
// q = mean_n2 / mean_n - mean_n - 1.
struct ModeMoments {
    double mean_n = 0.0;
    double mean_n2 = 0.0;
    double q = 0.0;
};

// First and second moments of one annihilation operator, with the conjugate
// pairs stored explicitly: a_dag = conj(a) and a_dag2 = conj(a2).
struct QuadExpectations {
    Complex a{0.0, 0.0};
    Complex a_dag{0.0, 0.0};
    Complex a2{0.0, 0.0};
    Complex a_dag2{0.0, 0.0};
    double n = 0.0;
};

// Angular momentum expectations in the two-mode Schwinger realization,
// L_+ = a_+^dag a_-, L_z = (n_+ - n_-)/2.  lm = conj(lp), lm2 = conj(lp2);
// lplm = <L_+ L_->, lmlp = <L_- L_+>.
struct AngularExpectations {
    Complex lp{0.0, 0.0};
    Complex lm{0.0, 0.0};
    Complex lp2{0.0, 0.0};
    Complex lm2{0.0, 0.0};
    double lplm = 0.0;
    double lmlp = 0.0;
    double lz = 0.0;
};

// Variances of L_x = (L_+ + L_-)/2 and L_y = (L_+ - L_-)/(2i).
struct AngularVariances {
    double dlx2 = 0.0;
    double dly2 = 0.0;
};

// Closed-form photon number moments of a single squeezed coherent mode,
//   <n>  = [|a|^2 (1+|xi|^2) + 2 Re(conj(xi) a^2) + |xi|^2] / (1 - |xi|^2),
// and the matching fourth-order expression for <n^2>.
double mean_n_closed(Complex xi, Complex alpha);
double mean_n2_closed(Complex xi, Complex alpha);

// Truncated Fock-sum evaluations of the same moments, used as independent
// oracles for the closed forms.  eps bounds the tail mass of the truncation;
// throws std::runtime_error when the internal coefficient cap is reached.
double mean_n_series(Complex xi, Complex alpha, double eps);
double mean_n2_series(Complex xi, Complex alpha, double eps);
Complex expect_a_series(Complex xi, Complex alpha, double eps);
Complex expect_a2_series(Complex xi, Complex alpha, double eps);

// Number moments plus Mandel Q.  Throws std::domain_error for the vacuum
// (mean_n = 0), where Q is undefined.
ModeMoments mode_moments(Complex xi, Complex alpha);
double mandel_q(Complex xi, Complex alpha);

// Closed-form ladder expectations
//   <a>   = (alpha + xi conj(alpha)) / sqrt(1 - |xi|^2),
//   <a^2> = (xi + (conj(alpha) xi + alpha)^2) / (1 - |xi|^2),
// with the conjugate entries filled in and n = mean_n_closed.
QuadExpectations quad_expectations(Complex xi, Complex alpha);
QuadExpectations quad_expectations_series(Complex xi, Complex alpha, double eps);

// Squeezing indicators for the quadratures w = (a^dag + a)/sqrt(2) and
// p = i(a^dag - a)/sqrt(2):
//   I1 = <a^2> + <a^dag2> - <a>^2 - <a^dag>^2 - 2<a><a^dag> + 2<a^dag a>
//   I2 = the same with the first four terms sign-flipped.
// I1 = 2 Var(w) - 1 and I2 = 2 Var(p) - 1, so a negative value signals
// squeezing in that quadrature.  Both must be real; an imaginary residue
// above 1e-12 raises std::runtime_error.
std::pair<double, double> squeeze_indicators_from(const QuadExpectations& e);
std::pair<double, double> squeeze_indicators(Complex xi, Complex alpha);

// Seven angular expectations of the product state, composed from the
// per-mode ladder expectations of the circular (+/-) modes.
AngularExpectations angular_expectations(const ThreeModeParams& p);
AngularExpectations angular_expectations_series(const ThreeModeParams& p, double eps);

// Variances from the definition <L^2> - <L>^2.
AngularVariances angular_variances(const AngularExpectations& e);

// Spin squeezing indicators S = (2 Var(L) - |<L_z>|) / |<L_z>|
// for L_x and L_y.  Throws std::domain_error when |<L_z>| <= threshold,
// where the normalization degenerates.
std::pair<double, double> spin_squeeze_indicators(const ThreeModeParams& p,
                                                 double threshold = 1e-9);

} // namespace isoq
