#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "isoq/wigner.hpp"

using isoq::Complex;
using isoq::ThreeModeParams;
using isoq::WignerEvaluator;

namespace {

ThreeModeParams mixed_params() {
    ThreeModeParams p;
    p.radial = isoq::mode_from_xi(Complex{0.4, 0.0}, Complex{0.5, 0.0});
    p.plus = isoq::mode_from_xi(Complex{-0.2, 0.25}, Complex{0.8, -0.3});
    p.minus = isoq::mode_from_xi(Complex{0.0, 0.1}, Complex{-0.4, 0.6});
    return p;
}

ThreeModeParams vacuum_params() {
    ThreeModeParams p;
    p.radial = isoq::make_mode(0.0, 0.0, Complex{0.0, 0.0});
    p.plus = p.radial;
    p.minus = p.radial;
    return p;
}

} // namespace

TEST_CASE("transition_elements_at_low_index") {
    Complex zeta{0.3, 0.4};
    double g = std::exp(-2.0 * std::norm(zeta));
    CHECK(std::abs(isoq::t_matrix_element(0, 0, zeta) - Complex{2.0 * g, 0.0}) < 1e-15);
    Complex t11 = isoq::t_matrix_element(1, 1, zeta);
    CHECK(std::abs(t11 - Complex{-2.0 * g * (1.0 - 4.0 * std::norm(zeta)), 0.0}) < 1e-15);
    Complex t01 = isoq::t_matrix_element(0, 1, zeta);
    CHECK(std::abs(t01 - 4.0 * std::conj(zeta) * g) < 1e-15);
    CHECK_THROWS_AS(isoq::t_matrix_element(-1, 0, zeta), std::domain_error);
    CHECK_THROWS_AS(isoq::t_matrix_element(0, -2, zeta), std::domain_error);
}

TEST_CASE("transition_elements_are_hermitian") {
    Complex zeta{-0.6, 0.2};
    Complex upper = isoq::t_matrix_element(2, 5, zeta);
    Complex lower = isoq::t_matrix_element(5, 2, zeta);
    CHECK(std::abs(upper - std::conj(lower)) < 1e-15);
}

TEST_CASE("diagonal_transition_elements_reduce_to_laguerre") {
    // <n|T|n> = 2 (-1)^n e^{-2|z|^2} L_n(4|z|^2); at 4|z|^2 = 1, L_3 = -2/3.
    Complex zeta{0.5, 0.0};
    double g = std::exp(-2.0 * std::norm(zeta));
    Complex t33 = isoq::t_matrix_element(3, 3, zeta);
    CHECK(t33.real() == doctest::Approx(2.0 * (-1.0) * g * (-2.0 / 3.0)).epsilon(1e-13));
    CHECK(std::fabs(t33.imag()) < 1e-16);
}

TEST_CASE("series_constant_is_two_per_mode") {
    for (const ThreeModeParams& p : {mixed_params(), vacuum_params()}) {
        WignerEvaluator eval(p);
        for (int mode = 0; mode < 3; ++mode) {
            CHECK(std::fabs(eval.mode_constant(mode) - 2.0) < 1e-10);
        }
        CHECK(eval.constant_spread() < 1e-8);
    }
}

TEST_CASE("vacuum_wigner_function_is_a_unit_gaussian") {
    WignerEvaluator eval(vacuum_params());
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.7, -0.4}, Complex{-1.2, 0.9}}) {
        double expected = std::exp(-6.0 * std::norm(z));
        CHECK(eval.closed(z, z, z) == doctest::Approx(expected).epsilon(1e-13));
        CHECK(eval.series(z, z, z) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("closed_form_peaks_at_the_displacement") {
    ThreeModeParams p = mixed_params();
    WignerEvaluator eval(p);
    const Complex centers[3] = {p.radial.coherent.alpha0, p.plus.coherent.alpha0,
                                p.minus.coherent.alpha0};
    for (int mode = 0; mode < 3; ++mode) {
        CHECK(std::fabs(eval.closed_mode(mode, centers[mode]) - 1.0) < 1e-12);
        // Nearby values stay below the peak.
        CHECK(eval.closed_mode(mode, centers[mode] + Complex{0.3, -0.2}) < 1.0);
    }
}

TEST_CASE("series_matches_closed_form_near_the_peak") {
    ThreeModeParams p = mixed_params();
    WignerEvaluator eval(p);
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    for (int trial = 0; trial < 20; ++trial) {
        Complex zr = p.radial.coherent.alpha0 + Complex{box(rng), box(rng)};
        Complex zp = p.plus.coherent.alpha0 + Complex{box(rng), box(rng)};
        Complex zm = p.minus.coherent.alpha0 + Complex{box(rng), box(rng)};
        double ws = eval.series(zr, zp, zm);
        double wc = eval.closed(zr, zp, zm);
        REQUIRE(wc > 0.0);
        CHECK(std::fabs(ws - wc) <= 1e-6 * wc);
    }
}

TEST_CASE("series_matches_closed_form_at_strong_squeezing") {
    ThreeModeParams p;
    p.radial = isoq::mode_from_xi(Complex{0.7, 0.0}, Complex{0.6, 0.0});
    p.plus = isoq::mode_from_xi(Complex{0.0, -0.7}, Complex{0.2, 0.4});
    p.minus = isoq::mode_from_xi(Complex{0.5, 0.5}, Complex{0.0, 0.0});
    WignerEvaluator eval(p);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> box(-0.7, 0.7);
    for (int trial = 0; trial < 10; ++trial) {
        Complex zr = p.radial.coherent.alpha0 + Complex{box(rng), box(rng)};
        Complex zp = p.plus.coherent.alpha0 + Complex{box(rng), box(rng)};
        Complex zm = p.minus.coherent.alpha0 + Complex{box(rng), box(rng)};
        double ws = eval.series(zr, zp, zm);
        double wc = eval.closed(zr, zp, zm);
        REQUIRE(wc > 0.0);
        CHECK(std::fabs(ws - wc) <= 1e-4 * wc);
    }
}

TEST_CASE("free_functions_agree_with_the_evaluator") {
    ThreeModeParams p = mixed_params();
    WignerEvaluator eval(p);
    Complex z{0.4, -0.1};
    CHECK(isoq::wigner_closed(p, z, z, z) == eval.closed(z, z, z));
    CHECK(isoq::wigner_series(p, z, z, z) ==
          doctest::Approx(eval.series(z, z, z)).epsilon(1e-14));
}

TEST_CASE("squeezed_vacuum_decay_rates_along_the_axes") {
    // For a squeezed vacuum with xi = 0.3 the closed form decays as
    // exp(-2 (1+xi)/(1-xi) p^2) along the imaginary axis and as
    // exp(-2 (1-xi)/(1+xi) x^2) along the real axis.
    ThreeModeParams p = vacuum_params();
    p.radial = isoq::mode_from_xi(Complex{0.3, 0.0}, Complex{0.0, 0.0});
    WignerEvaluator eval(p);
    double up = 2.0 * 1.3 / 0.7;
    double down = 2.0 * 0.7 / 1.3;
    for (double t : {0.4, 0.9, 1.6}) {
        double wp = eval.closed_mode(0, Complex{0.0, t});
        double wx = eval.closed_mode(0, Complex{t, 0.0});
        CHECK(-std::log(wp) / (t * t) == doctest::Approx(up).epsilon(1e-12));
        CHECK(-std::log(wx) / (t * t) == doctest::Approx(down).epsilon(1e-12));
    }
}

TEST_CASE("single_mode_integral_is_preserved_by_squeezing") {
    // With unit peak the single-mode integral is pi/2, so the Riemann sum of
    // (2/pi) W over the plane tends to one regardless of squeeze strength.
    ThreeModeParams p = vacuum_params();
    p.radial = isoq::mode_from_xi(Complex{0.3, 0.0}, Complex{0.7, 0.0});
    WignerEvaluator eval(p);
    double h = 0.05;
    double sum = 0.0;
    for (int i = 0; i < 160; ++i) {
        for (int j = 0; j < 160; ++j) {
            Complex z{-3.3 + (i + 0.5) * h, -4.0 + (j + 0.5) * h};
            sum += eval.closed_mode(0, z);
        }
    }
    CHECK(sum * h * h * 2.0 / M_PI == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("grid_slice_is_symmetric_for_real_parameters") {
    ThreeModeParams p;
    p.radial = isoq::make_mode(0.7, 0.0, Complex{0.5, 0.0});
    p.plus = isoq::make_mode(0.2, 0.0, Complex{1.0, 0.0});
    p.minus = isoq::make_mode(0.4, 0.0, Complex{-0.3, 0.0});
    isoq::WignerGrid grid =
        isoq::wigner_grid(p, -2.0, 2.0, -2.0, 2.0, 21, isoq::WignerMethod::closed);
    REQUIRE(grid.x_axis.size() == 21);
    REQUIRE(grid.p_axis.size() == 21);
    CHECK(grid.x_axis.front() == -2.0);
    CHECK(grid.x_axis.back() == 2.0);
    for (size_t ix = 0; ix < 21; ++ix) {
        for (size_t ip = 0; ip < 21; ++ip) {
            CHECK(grid.values[ix][ip] ==
                  doctest::Approx(grid.values[ix][20 - ip]).epsilon(1e-12));
        }
    }
}

TEST_CASE("grid_methods_agree") {
    ThreeModeParams p = mixed_params();
    isoq::WignerGrid closed =
        isoq::wigner_grid(p, -1.5, 1.5, -1.5, 1.5, 16, isoq::WignerMethod::closed);
    isoq::WignerGrid series =
        isoq::wigner_grid(p, -1.5, 1.5, -1.5, 1.5, 16, isoq::WignerMethod::series);
    for (size_t ix = 0; ix < 16; ++ix) {
        for (size_t ip = 0; ip < 16; ++ip) {
            double wc = closed.values[ix][ip];
            double ws = series.values[ix][ip];
            CHECK(std::fabs(ws - wc) <= 1e-6 * std::max(1.0, std::fabs(wc)));
        }
    }
}

TEST_CASE("grid_rejects_out_of_range_requests") {
    ThreeModeParams p = vacuum_params();
    CHECK_THROWS_AS(isoq::wigner_grid(p, -1.0, 1.0, -1.0, 1.0, 1, isoq::WignerMethod::closed),
                    std::domain_error);
    CHECK_THROWS_AS(
        isoq::wigner_grid(p, -1.0, 1.0, -1.0, 1.0, 2049, isoq::WignerMethod::closed),
        std::domain_error);
    CHECK_THROWS_AS(isoq::wigner_grid(p, 1.0, -1.0, -1.0, 1.0, 8, isoq::WignerMethod::closed),
                    std::domain_error);
}
