#include <doctest.h>

#include <cmath>
#include <vector>

#include "isoq/radial.hpp"

using isoq::OscillatorConfig;
using isoq::RadialEigenstate;
using isoq::RadialWavefn;

namespace {

std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(a + (b - a) * i / (count - 1.0));
    return out;
}

// d/dr of the superpotential, used by the shape-invariance checks.
double superpotential_deriv(double r, const OscillatorConfig& cfg) {
    double w = cfg.omega;
    double d1 = 2.0 * w * r * r + 2.0 * cfg.l + 1.0;
    double d3 = d1 + 2.0;
    return w + (cfg.l + 1.0) / (r * r) + (4.0 * w * d1 - 16.0 * w * w * r * r) / (d1 * d1) -
           (4.0 * w * d3 - 16.0 * w * w * r * r) / (d3 * d3);
}

} // namespace

TEST_CASE("potential_energy_superpotential_spot_values") {
    OscillatorConfig c10{1.0, 0};
    OscillatorConfig c11{1.0, 1};
    CHECK(isoq::potential_v(1.0, c10) == doctest::Approx(17.0 / 9.0).epsilon(1e-15));
    CHECK(isoq::potential_v(1.0, c11) == doctest::Approx(67.0 / 25.0).epsilon(1e-15));
    CHECK(isoq::superpotential(1.0, c10) == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
    CHECK(isoq::energy(0, c10) == doctest::Approx(3.0));
    CHECK(isoq::energy(1, c10) == doctest::Approx(7.0));
}

TEST_CASE("domain_violations_are_rejected") {
    OscillatorConfig cfg{1.0, 0};
    CHECK_THROWS_AS(isoq::potential_v(0.0, cfg), std::domain_error);
    CHECK_THROWS_AS(isoq::potential_v(-1.0, cfg), std::domain_error);
    CHECK_THROWS_AS(isoq::validate(OscillatorConfig{0.0, 0}), std::domain_error);
    CHECK_THROWS_AS(isoq::validate(OscillatorConfig{1.0, -1}), std::domain_error);
    CHECK_THROWS_AS(isoq::eigenfunction(-1, cfg), std::domain_error);
}

TEST_CASE("spectrum_is_linear_with_spacing_4w") {
    for (double w : {0.5, 1.0, 2.0}) {
        OscillatorConfig cfg{w, 2};
        CHECK(isoq::energy(0, cfg) == doctest::Approx(w * (2.0 * 2 + 3.0)));
        for (int n = 0; n < 6; ++n) {
            CHECK(isoq::energy(n + 1, cfg) - isoq::energy(n, cfg) ==
                  doctest::Approx(4.0 * w).epsilon(1e-14));
        }
    }
}

TEST_CASE("potential_approaches_oscillator_far_out") {
    OscillatorConfig cfg{1.3, 2};
    double r = 1e3;
    CHECK(isoq::potential_v(r, cfg) / (cfg.omega * cfg.omega * r * r) ==
          doctest::Approx(1.0).epsilon(1e-5));
    CHECK(isoq::superpotential(100.0, cfg) / (cfg.omega * 100.0) ==
          doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("superpotential_consistency_with_potential") {
    // W^2 - W' = V - w(2l+3) links the two closed forms.
    for (int l : {0, 1, 3}) {
        OscillatorConfig cfg{0.8, l};
        for (double r : {0.3, 0.9, 1.7, 3.2}) {
            double w2 = isoq::superpotential(r, cfg) * isoq::superpotential(r, cfg);
            double lhs = w2 - superpotential_deriv(r, cfg);
            double rhs = isoq::potential_v(r, cfg) - cfg.omega * (2.0 * l + 3.0);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("shape_invariance_gap_is_4w") {
    // (W_l^2 + W_l') - (W_{l+1}^2 - W_{l+1}') = 4w at every radius.
    for (int l : {0, 2}) {
        OscillatorConfig lo{1.1, l};
        OscillatorConfig hi{1.1, l + 1};
        for (double r : {0.4, 1.0, 2.3, 4.0}) {
            double wl = isoq::superpotential(r, lo);
            double wh = isoq::superpotential(r, hi);
            double gap = (wl * wl + superpotential_deriv(r, lo)) -
                         (wh * wh - superpotential_deriv(r, hi));
            CHECK(gap == doctest::Approx(4.0 * 1.1).epsilon(1e-10));
        }
    }
}

TEST_CASE("eigenfunctions_satisfy_the_radial_equation") {
    for (double w : {0.5, 2.0}) {
        for (int l = 0; l <= 3; ++l) {
            OscillatorConfig cfg{w, l};
            for (int n = 0; n <= 4; ++n) {
                RadialEigenstate st = isoq::eigenfunction(n, cfg);
                double peak = 0.0;
                for (double r : linspace(0.1, 8.0, 80)) {
                    peak = std::max(peak, std::fabs(st.value(r)));
                }
                for (double r : linspace(0.1, 8.0, 80)) {
                    CHECK(std::fabs(isoq::schrodinger_residual(st, r)) <= 1e-8 * peak);
                }
            }
        }
    }
}

TEST_CASE("analytic_derivatives_match_finite_differences") {
    OscillatorConfig cfg{1.0, 2};
    RadialEigenstate st = isoq::eigenfunction(3, cfg);
    double h = 1e-4;
    for (double r : {0.5, 1.2, 2.8}) {
        double fd1 = (st.value(r + h) - st.value(r - h)) / (2.0 * h);
        double fd2 = (st.value(r + h) - 2.0 * st.value(r) + st.value(r - h)) / (h * h);
        CHECK(st.derivative(r) == doctest::Approx(fd1).epsilon(1e-7));
        CHECK(st.second_derivative(r) == doctest::Approx(fd2).epsilon(1e-5));
    }
}

TEST_CASE("ground_state_is_nodeless") {
    for (int l : {0, 1}) {
        OscillatorConfig cfg{1.0, l};
        RadialEigenstate st = isoq::eigenfunction(0, cfg);
        int sign_changes = 0;
        double prev = st.value(0.05);
        for (double r : linspace(0.1, 10.0, 400)) {
            double v = st.value(r);
            if (v * prev < 0.0) ++sign_changes;
            prev = v;
        }
        CHECK(sign_changes == 0);
    }
}

TEST_CASE("excited_state_node_count_matches_quantum_number") {
    OscillatorConfig cfg{1.0, 0};
    for (int n = 1; n <= 3; ++n) {
        RadialEigenstate st = isoq::eigenfunction(n, cfg);
        int sign_changes = 0;
        double prev = st.value(0.02);
        for (double r : linspace(0.04, 12.0, 2000)) {
            double v = st.value(r);
            if (v * prev < 0.0) ++sign_changes;
            prev = v;
        }
        CHECK(sign_changes == n);
    }
}

TEST_CASE("eigenstates_are_orthonormal") {
    for (int l : {0, 3}) {
        isoq::GramResult gram = isoq::orthonormality_matrix(l, 4, 1.3);
        CHECK(gram.converged);
        for (size_t i = 0; i < gram.overlap.size(); ++i) {
            for (size_t j = 0; j < gram.overlap.size(); ++j) {
                double target = (i == j) ? 1.0 : 0.0;
                CHECK(std::fabs(gram.overlap[i][j] - target) < 1e-7);
            }
        }
    }
    CHECK_THROWS_AS(isoq::orthonormality_matrix(0, 13, 1.0), std::domain_error);
}

TEST_CASE("tail_cutoff_bounds_squared_states") {
    OscillatorConfig cfg{0.5, 1};
    double rc = isoq::tail_cutoff(cfg, 4);
    for (int n = 0; n <= 4; ++n) {
        RadialEigenstate st = isoq::eigenfunction(n, cfg);
        double v = st.value(rc);
        CHECK(v * v < 1e-16);
        CHECK(std::fabs(st.value(rc + 1.0)) < std::fabs(v));
    }
}

TEST_CASE("first_intertwiner_steps_down_and_shifts_l_up") {
    // A-(l) Phi_{n,l} = -sqrt(4wn) Phi_{n-1,l+1}
    std::vector<double> grid = linspace(0.2, 6.0, 30);
    for (double w : {0.7, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            for (int n = 1; n <= 3; ++n) {
                OscillatorConfig cfg{w, l};
                RadialEigenstate st = isoq::eigenfunction(n, cfg);
                isoq::SampledFn lowered = isoq::apply_A_minus(st, grid);
                RadialEigenstate tgt = isoq::eigenfunction(n - 1, OscillatorConfig{w, l + 1});
                double scale = -std::sqrt(4.0 * w * n);
                for (size_t i = 0; i < grid.size(); ++i) {
                    CHECK(lowered.values[i] ==
                          doctest::Approx(scale * tgt.value(grid[i])).epsilon(1e-8));
                }
            }
        }
    }
}

TEST_CASE("first_intertwiner_annihilates_the_band_bottom") {
    std::vector<double> grid = linspace(0.2, 6.0, 30);
    OscillatorConfig cfg{1.0, 1};
    RadialEigenstate st = isoq::eigenfunction(0, cfg);
    isoq::SampledFn lowered = isoq::apply_A_minus(st, grid);
    for (double v : lowered.values) CHECK(std::fabs(v) < 1e-10);
}

TEST_CASE("second_intertwiner_steps_up_and_shifts_l_down") {
    // A+(l-1) Phi_{n,l} = -sqrt(4w(n+1)) Phi_{n+1,l-1}
    std::vector<double> grid = linspace(0.2, 6.0, 30);
    for (int l = 1; l <= 3; ++l) {
        for (int n = 0; n <= 2; ++n) {
            OscillatorConfig cfg{1.0, l};
            RadialEigenstate st = isoq::eigenfunction(n, cfg);
            isoq::SampledFn raised = isoq::apply_A_plus(st, grid);
            RadialEigenstate tgt = isoq::eigenfunction(n + 1, OscillatorConfig{1.0, l - 1});
            double scale = -std::sqrt(4.0 * (n + 1.0));
            for (size_t i = 0; i < grid.size(); ++i) {
                CHECK(raised.values[i] ==
                      doctest::Approx(scale * tgt.value(grid[i])).epsilon(1e-8));
            }
        }
    }
    CHECK_THROWS_AS(isoq::apply_A_plus(isoq::eigenfunction(0, OscillatorConfig{1.0, 0}), grid),
                    std::domain_error);
}

TEST_CASE("ladder_lowering_produces_sqrt_n") {
    std::vector<double> grid = linspace(0.2, 6.0, 25);
    for (int l = 0; l <= 3; ++l) {
        OscillatorConfig cfg{1.0, l};
        for (int n = 1; n <= 5; ++n) {
            RadialWavefn f = isoq::to_wavefn(isoq::eigenfunction(n, cfg));
            RadialWavefn low = isoq::ladder_lower(f);
            RadialEigenstate ref = isoq::eigenfunction(n - 1, cfg);
            for (double r : grid) {
                CHECK(low.eval(r) ==
                      doctest::Approx(std::sqrt(double(n)) * ref.value(r)).epsilon(1e-8));
            }
        }
        // Lowering the band bottom annihilates it.
        RadialWavefn bottom = isoq::ladder_lower(
            isoq::to_wavefn(isoq::eigenfunction(0, cfg)));
        for (double r : grid) CHECK(std::fabs(bottom.eval(r)) < 1e-9);
    }
}

TEST_CASE("ladder_raising_produces_sqrt_n_plus_one") {
    std::vector<double> grid = linspace(0.2, 6.0, 25);
    for (int l = 0; l <= 3; ++l) {
        OscillatorConfig cfg{1.0, l};
        for (int n = 0; n <= 4; ++n) {
            RadialWavefn f = isoq::to_wavefn(isoq::eigenfunction(n, cfg));
            RadialWavefn up = isoq::ladder_raise(f);
            RadialEigenstate ref = isoq::eigenfunction(n + 1, cfg);
            for (double r : grid) {
                CHECK(up.eval(r) ==
                      doctest::Approx(std::sqrt(n + 1.0) * ref.value(r)).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("raise_then_lower_scales_by_n_plus_one") {
    OscillatorConfig cfg{1.0, 2};
    std::vector<double> grid = linspace(0.3, 5.0, 20);
    for (int n = 0; n <= 3; ++n) {
        RadialWavefn f = isoq::to_wavefn(isoq::eigenfunction(n, cfg));
        RadialWavefn cycled = isoq::ladder_lower(isoq::ladder_raise(f));
        for (double r : grid) {
            CHECK(cycled.eval(r) == doctest::Approx((n + 1.0) * f.eval(r)).epsilon(1e-8));
        }
    }
}

TEST_CASE("ladder_commutator_acts_as_identity") {
    // [a, a^dag] Phi = Phi, with both orderings evaluated through the
    // quadrature-projected ladder maps.
    OscillatorConfig cfg{1.0, 1};
    std::vector<double> grid = linspace(0.3, 5.0, 20);
    for (int n = 1; n <= 3; ++n) {
        RadialWavefn f = isoq::to_wavefn(isoq::eigenfunction(n, cfg));
        RadialWavefn down_up = isoq::ladder_lower(isoq::ladder_raise(f));
        RadialWavefn up_down = isoq::ladder_raise(isoq::ladder_lower(f));
        for (double r : grid) {
            CHECK(down_up.eval(r) - up_down.eval(r) ==
                  doctest::Approx(f.eval(r)).epsilon(1e-8));
        }
    }
}

TEST_CASE("eigenstate_ladder_shortcut_matches_wavefn_path") {
    OscillatorConfig cfg{1.0, 2};
    std::vector<double> grid = linspace(0.3, 5.0, 15);
    RadialEigenstate st = isoq::eigenfunction(2, cfg);
    isoq::SampledFn low = isoq::apply_ladder(st, isoq::LadderDirection::lower, grid);
    isoq::SampledFn up = isoq::apply_ladder(st, isoq::LadderDirection::raise, grid);
    RadialEigenstate below = isoq::eigenfunction(1, cfg);
    RadialEigenstate above = isoq::eigenfunction(3, cfg);
    for (size_t i = 0; i < grid.size(); ++i) {
        CHECK(low.values[i] ==
              doctest::Approx(std::sqrt(2.0) * below.value(grid[i])).epsilon(1e-8));
        CHECK(up.values[i] ==
              doctest::Approx(std::sqrt(3.0) * above.value(grid[i])).epsilon(1e-8));
    }
}

TEST_CASE("sampling_matches_direct_evaluation") {
    OscillatorConfig cfg{1.0, 0};
    RadialEigenstate st = isoq::eigenfunction(2, cfg);
    std::vector<double> grid = linspace(0.5, 4.0, 8);
    isoq::SampledFn s = isoq::sample(st, grid);
    REQUIRE(s.grid.size() == grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        CHECK(s.values[i] == st.value(grid[i]));
    }
}
