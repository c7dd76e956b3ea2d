// Command-line front end: validation suites plus CSV/JSON emitters for the
// Mandel, quadrature-squeezing, spin-squeezing, Wigner, and eigensystem data.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoq/photon_stats.hpp"
#include "isoq/polynomial.hpp"
#include "isoq/quadrature.hpp"
#include "isoq/radial.hpp"
#include "isoq/special_functions.hpp"
#include "isoq/squeezed_state.hpp"
#include "isoq/table_io.hpp"
#include "isoq/wigner.hpp"

namespace {

using isoq::Complex;

struct OutputOptions {
    std::string path;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& out, const std::string& default_path) {
    out.path = default_path;
    cmd->add_option("--output", out.path, "Output file path")
        ->capture_default_str();
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void emit(const isoq::Table& table, const OutputOptions& out) {
    std::string text = (out.format == "json") ? isoq::to_json(table) : isoq::to_csv(table);
    isoq::write_text_file(out.path, text);
    std::fprintf(stderr, "wrote %s (%zu rows)\n", out.path.c_str(), table.rows.size());
}

// Mandel Q per mode versus swept squeeze magnitude at fixed displacement.  The swept value x parameterizes xi = -x (zero squeeze
// phase), the convention under which Q changes sign along the sweep.
int run_mandel(double alpha0, double xi_min, double xi_max, int steps,
               const OutputOptions& out) {
    isoq::Table t;
    t.columns = {"xi", "q"};
    for (int i = 0; i < steps; ++i) {
        double x = xi_min + (xi_max - xi_min) * i / (steps - 1.0);
        Complex xi(-x, 0.0);
        isoq::ModeParams mode = isoq::mode_from_xi(xi, Complex(alpha0, 0.0));
        double q = isoq::mandel_q(mode.squeeze.xi, mode.coherent.alpha);
        t.rows.push_back({x, q});
    }
    emit(t, out);
    return 0;
}

// Quadrature indicators I1/I2 over the displacement polar grid at fixed
// real xi.
int run_quadrature(double xi, double alpha_max, int alpha_steps, int theta_steps,
                   const OutputOptions& out) {
    isoq::Table t;
    t.columns = {"alpha_abs", "theta", "i1", "i2"};
    for (int ia = 0; ia < alpha_steps; ++ia) {
        double aabs = alpha_max * ia / (alpha_steps - 1.0);
        for (int it = 0; it < theta_steps; ++it) {
            double theta = 2.0 * M_PI * it / theta_steps;
            Complex alpha0 = aabs * Complex(std::cos(theta), std::sin(theta));
            isoq::ModeParams mode = isoq::mode_from_xi(Complex(xi, 0.0), alpha0);
            auto [i1, i2] = isoq::squeeze_indicators(mode.squeeze.xi, mode.coherent.alpha);
            t.rows.push_back({aabs, theta, i1, i2});
        }
    }
    emit(t, out);
    return 0;
}

// Spin squeezing indicators over the (x_plus, y_plus) displacement grid.
// Grid points where |<L_z>| degenerates below threshold are skipped and
// counted on stderr.
int run_angular(double xi, double alpha0_minus, double half_width, int res,
                const OutputOptions& out) {
    isoq::Table t;
    t.columns = {"x_plus", "y_plus", "s_lx", "s_ly"};
    int skipped = 0;
    for (int ix = 0; ix < res; ++ix) {
        double x = -half_width + 2.0 * half_width * ix / (res - 1.0);
        for (int iy = 0; iy < res; ++iy) {
            double y = -half_width + 2.0 * half_width * iy / (res - 1.0);
            isoq::ThreeModeParams p;
            p.radial = isoq::mode_from_xi(Complex(xi, 0.0), Complex(0.0, 0.0));
            p.plus = isoq::mode_from_xi(Complex(xi, 0.0), Complex(x, y));
            p.minus = isoq::mode_from_xi(Complex(xi, 0.0), Complex(alpha0_minus, 0.0));
            try {
                auto [slx, sly] = isoq::spin_squeeze_indicators(p);
                t.rows.push_back({x, y, slx, sly});
            } catch (const std::domain_error&) {
                ++skipped;
            }
        }
    }
    if (skipped > 0) {
        std::fprintf(stderr, "skipped %d grid points with degenerate <L_z>\n", skipped);
    }
    emit(t, out);
    return 0;
}

// Diagonal-slice Wigner grid.  half_tanh_xi applies the
// alternative convention xi = -(1/2) e^{i phi} tanh R.
int run_wigner(double R, double phi, double alpha0, double half_width, int res,
               const std::string& method, bool half_tanh_xi, const OutputOptions& out) {
    Complex xi = -std::exp(Complex(0.0, phi)) * std::tanh(R);
    if (half_tanh_xi) xi *= 0.5;
    isoq::ModeParams mode = isoq::mode_from_xi(xi, Complex(alpha0, 0.0));
    isoq::ThreeModeParams p{mode, mode, mode};
    auto m = (method == "series") ? isoq::WignerMethod::series : isoq::WignerMethod::closed;
    isoq::WignerGrid grid =
        isoq::wigner_grid(p, -half_width, half_width, -half_width, half_width, res, m);

    isoq::Table t;
    t.columns = {"x", "p", "w"};
    for (size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
        for (size_t ip = 0; ip < grid.p_axis.size(); ++ip) {
            t.rows.push_back({grid.x_axis[ix], grid.p_axis[ip], grid.values[ix][ip]});
        }
    }
    emit(t, out);
    return 0;
}

// Eigensystem samples in long format: one block per quantum number n with
// the potential, the energy, and the radial eigenfunction on a shared grid.
int run_eigen(double omega, int l, int n_max, double r_max, int samples,
              const OutputOptions& out) {
    isoq::OscillatorConfig cfg{omega, l};
    isoq::Table t;
    t.columns = {"n", "r", "potential", "energy", "phi"};
    for (int n = 0; n <= n_max; ++n) {
        isoq::RadialEigenstate state = isoq::eigenfunction(n, cfg);
        double e = isoq::energy(n, cfg);
        for (int i = 1; i <= samples; ++i) {
            double r = r_max * i / static_cast<double>(samples);
            t.rows.push_back({static_cast<double>(n), r, isoq::potential_v(r, cfg), e,
                              state.value(r)});
        }
    }
    emit(t, out);
    return 0;
}

// One validation suite outcome.
struct SuiteResult {
    std::string name;
    bool pass;
    double worst;
};

void report(std::vector<SuiteResult>& results, const std::string& name, double worst,
            double bound) {
    results.push_back({name, worst < bound, worst});
}

// Runs every invariant suite with fixed parameters and tolerances.
int run_validate(const OutputOptions& out) {
    std::vector<SuiteResult> results;

    // Exact special-function identities over a small index range.
    {
        bool ok = true;
        for (int k2 = 1; k2 <= 5; k2 += 2) {
            isoq::Rational k(k2, 2);
            for (int nu = 1; nu <= 10; ++nu) {
                if (isoq::x1_ode_residual(nu, k).degree() != -1) ok = false;
            }
            for (int n = 1; n <= 5; ++n) {
                auto lowered = isoq::apply_Ak(isoq::x1_laguerre(n + 1, k), k);
                if (!lowered.exact || !(lowered.quotient() == isoq::x1_laguerre(n, k + 1))) {
                    ok = false;
                }
            }
        }
        results.push_back({"x1_laguerre_identities", ok, ok ? 0.0 : 1.0});
    }

    // Schrodinger residual and orthonormality of the radial eigensystem.
    {
        double worst = 0.0;
        for (double omega : {0.5, 1.0}) {
            for (int l = 0; l <= 2; ++l) {
                isoq::OscillatorConfig cfg{omega, l};
                for (int n = 0; n <= 3; ++n) {
                    isoq::RadialEigenstate st = isoq::eigenfunction(n, cfg);
                    double peak = 0.0;
                    for (double r = 0.1; r <= 8.0; r += 0.1) {
                        peak = std::max(peak, std::fabs(st.value(r)));
                    }
                    for (double r = 0.1; r <= 8.0; r += 0.1) {
                        worst = std::max(worst,
                                         std::fabs(isoq::schrodinger_residual(st, r)) / peak);
                    }
                }
            }
        }
        report(results, "schrodinger_residual", worst, 1e-8);

        double gram_worst = 0.0;
        for (int l : {0, 2}) {
            auto gram = isoq::orthonormality_matrix(l, 3, 1.0);
            for (size_t i = 0; i < gram.overlap.size(); ++i) {
                for (size_t j = 0; j < gram.overlap.size(); ++j) {
                    double target = (i == j) ? 1.0 : 0.0;
                    gram_worst = std::max(gram_worst,
                                          std::fabs(gram.overlap[i][j] - target));
                }
            }
        }
        report(results, "eigenstate_orthonormality", gram_worst, 1e-7);
    }

    // Ladder action reproduces sqrt(n) / sqrt(n+1) factors.
    {
        double worst = 0.0;
        isoq::OscillatorConfig cfg{1.0, 1};
        for (int n = 1; n <= 3; ++n) {
            isoq::RadialWavefn f = isoq::to_wavefn(isoq::eigenfunction(n, cfg));
            isoq::RadialWavefn low = isoq::ladder_lower(f);
            isoq::RadialEigenstate ref = isoq::eigenfunction(n - 1, cfg);
            for (double r = 0.2; r <= 6.0; r += 0.2) {
                worst = std::max(worst, std::fabs(low.eval(r) -
                                                  std::sqrt(double(n)) * ref.value(r)));
            }
        }
        report(results, "ladder_algebra", worst, 1e-8);
    }

    // Per-mode normalization and branch-root invariance of the coefficients.
    {
        double worst_norm = 0.0;
        double worst_branch = 0.0;
        for (double axi : {0.1, 0.3, 0.5, 0.7}) {
            for (double phase : {0.0, M_PI / 3.0}) {
                for (double a0 : {0.0, 1.0, 3.0}) {
                    Complex xi = -std::exp(Complex(0.0, phase)) * axi;
                    isoq::ModeParams m = isoq::mode_from_xi(xi, Complex(a0, 0.0));
                    double nr = isoq::norm_radial(m.squeeze.xi, m.coherent.alpha);
                    double sum = 0.0;
                    for (int n = 0; n < 600; ++n) {
                        Complex c = isoq::radial_coeff(n, m.squeeze.xi, m.coherent.alpha);
                        sum += std::norm(c);
                        if (n < 40) {
                            Complex flip = isoq::radial_coeff_branch(
                                n, m.squeeze.xi, m.coherent.alpha, true);
                            // Compare normalized amplitudes, which are bounded
                            // by one; the raw c_n scale like exp(|alpha|^2/2).
                            worst_branch = std::max(worst_branch, nr * std::abs(c - flip));
                        }
                    }
                    worst_norm = std::max(worst_norm, std::fabs(nr * nr * sum - 1.0));
                }
            }
        }
        report(results, "state_normalization", worst_norm, 1e-10);
        report(results, "branch_root_invariance", worst_branch, 1e-12);
    }

    // Closed moments against truncated Fock-series oracles.
    {
        double worst = 0.0;
        for (double axi : {0.1, 0.4, 0.7}) {
            for (double phase : {0.0, M_PI / 3.0}) {
                for (double a0 : {0.0, 1.0, 3.0}) {
                    Complex xi = -std::exp(Complex(0.0, phase)) * axi;
                    isoq::ModeParams m = isoq::mode_from_xi(xi, Complex(a0, 0.0));
                    Complex x = m.squeeze.xi, al = m.coherent.alpha;
                    double n_rel = std::fabs(isoq::mean_n_closed(x, al) -
                                             isoq::mean_n_series(x, al, 1e-12)) /
                                   (1.0 + std::fabs(isoq::mean_n_closed(x, al)));
                    double n2_rel = std::fabs(isoq::mean_n2_closed(x, al) -
                                              isoq::mean_n2_series(x, al, 1e-12)) /
                                    (1.0 + std::fabs(isoq::mean_n2_closed(x, al)));
                    auto ec = isoq::quad_expectations(x, al);
                    auto es = isoq::quad_expectations_series(x, al, 1e-12);
                    double a_rel = std::abs(ec.a - es.a) / (1.0 + std::abs(ec.a));
                    double a2_rel = std::abs(ec.a2 - es.a2) / (1.0 + std::abs(ec.a2));
                    worst = std::max({worst, n_rel, n2_rel, a_rel, a2_rel});
                }
            }
        }
        report(results, "moment_oracles", worst, 1e-8);
    }

    // Angular expectations against the per-mode series composition.
    {
        double worst = 0.0;
        for (double axi : {0.1, 0.5}) {
            isoq::ThreeModeParams p;
            p.radial = isoq::mode_from_xi(Complex(-axi, 0.0), Complex(0.0, 0.0));
            p.plus = isoq::mode_from_xi(Complex(-axi, 0.0), Complex(0.8, -0.6));
            p.minus = isoq::mode_from_xi(Complex(-axi, 0.0), Complex(1.3, 0.0));
            auto ec = isoq::angular_expectations(p);
            auto es = isoq::angular_expectations_series(p, 1e-12);
            worst = std::max({worst, std::abs(ec.lp - es.lp), std::abs(ec.lp2 - es.lp2),
                              std::fabs(ec.lplm - es.lplm), std::fabs(ec.lmlp - es.lmlp),
                              std::fabs(ec.lz - es.lz)});
        }
        report(results, "angular_oracles", worst, 1e-8);
    }

    // Wigner series against the closed Gaussian form near the state peak.
    {
        isoq::ModeParams m = isoq::mode_from_xi(Complex(-0.4, 0.0), Complex(0.5, 0.0));
        isoq::ThreeModeParams p{m, m, m};
        isoq::WignerEvaluator ev(p);
        double worst = ev.constant_spread();
        for (double dx = -1.0; dx <= 1.0; dx += 0.5) {
            for (double dp = -1.0; dp <= 1.0; dp += 0.5) {
                Complex z(0.5 + dx, dp);
                double ws = ev.series(z, z, z);
                double wc = ev.closed(z, z, z);
                worst = std::max(worst, std::fabs(ws - wc) / (1.0 + std::fabs(wc)));
            }
        }
        report(results, "wigner_series_vs_closed", worst, 1e-6);
    }

    // Identity resolution on the displacement disc.
    {
        isoq::PolarQuadratureConfig qc;
        qc.n_max = 3;
        qc.radial_points = 150;
        qc.angular_points = 128;
        auto idr = isoq::identity_resolution_check(Complex(0.4, 0.0), qc);
        report(results, "identity_resolution", idr.max_abs_deviation, 1e-3);
    }

    isoq::Table t;
    t.columns = {"suite", "passed", "worst"};
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s %s (worst %.3e)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.worst);
        all_pass = all_pass && r.pass;
        t.rows.push_back({static_cast<double>(t.rows.size()), r.pass ? 1.0 : 0.0, r.worst});
    }
    emit(t, out);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized isotonic oscillator: squeezed-state numerics"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("ISOQ_CONFIG");
    // Let --config reach the parent app even when it appears after the
    // subcommand name; subcommands inherit this setting.
    app.fallthrough();

    OutputOptions validate_out, mandel_out, quad_out, angular_out, wigner_out, eigen_out;

    CLI::App* validate = app.add_subcommand("validate", "Run every invariant suite");
    add_output_options(validate, validate_out, "validate.csv");

    CLI::App* mandel = app.add_subcommand("mandel", "Mandel Q versus squeeze magnitude");
    double alpha0 = 3.0, xi_min = 0.05, xi_max = 0.95;
    int steps = 90;
    mandel->add_option("--alpha0", alpha0, "Displacement magnitude")->capture_default_str();
    mandel->add_option("--xi-min", xi_min, "Sweep start")->capture_default_str();
    mandel->add_option("--xi-max", xi_max, "Sweep end")->capture_default_str();
    mandel->add_option("--steps", steps, "Sweep points")->check(CLI::Range(2, 100000))
        ->capture_default_str();
    add_output_options(mandel, mandel_out, "mandel.csv");

    CLI::App* quad = app.add_subcommand("quadrature", "Quadrature indicators I1/I2");
    double q_xi = 0.3, q_amax = 3.0;
    int q_asteps = 31, q_tsteps = 32;
    quad->add_option("--xi", q_xi, "Real squeeze parameter")->capture_default_str();
    quad->add_option("--alpha-max", q_amax, "Largest displacement magnitude")
        ->capture_default_str();
    quad->add_option("--alpha-steps", q_asteps, "Radial grid points")
        ->check(CLI::Range(2, 4096))->capture_default_str();
    quad->add_option("--theta-steps", q_tsteps, "Angular grid points")
        ->check(CLI::Range(1, 4096))->capture_default_str();
    add_output_options(quad, quad_out, "quadrature.csv");

    CLI::App* angular = app.add_subcommand("angular", "Spin squeezing indicators");
    double a_xi = 0.1, a_minus = 1.3, a_half = 2.0;
    int a_res = 41;
    angular->add_option("--xi", a_xi, "Real squeeze parameter of both modes")
        ->capture_default_str();
    angular->add_option("--alpha0-minus", a_minus, "Displacement of the minus mode")
        ->capture_default_str();
    angular->add_option("--half-width", a_half, "Half width of the plus-mode grid")
        ->capture_default_str();
    angular->add_option("--res", a_res, "Grid points per axis")->check(CLI::Range(2, 2048))
        ->capture_default_str();
    add_output_options(angular, angular_out, "angular.csv");

    CLI::App* wigner = app.add_subcommand("wigner", "Diagonal-slice Wigner grid");
    double w_R = 0.7, w_phi = 0.0, w_alpha0 = 0.5, w_half = 3.0;
    int w_res = 128;
    std::string w_method = "closed";
    bool w_half_tanh = false;
    wigner->add_option("--R", w_R, "Squeeze magnitude")->capture_default_str();
    wigner->add_option("--phi", w_phi, "Squeeze phase")->capture_default_str();
    wigner->add_option("--alpha0", w_alpha0, "Displacement (same in each mode)")
        ->capture_default_str();
    wigner->add_option("--half-width", w_half, "Grid half width")->capture_default_str();
    wigner->add_option("--res", w_res, "Grid points per axis")->check(CLI::Range(2, 2048))
        ->capture_default_str();
    wigner->add_option("--method", w_method, "Evaluation method")
        ->check(CLI::IsMember({"closed", "series"}))->capture_default_str();
    wigner->add_flag("--half-tanh-xi", w_half_tanh,
                     "Use the alternative convention xi = -(1/2) e^{i phi} tanh R");
    add_output_options(wigner, wigner_out, "wigner.csv");

    CLI::App* eigen = app.add_subcommand("eigen", "Radial eigensystem samples");
    double e_omega = 1.0, e_rmax = 8.0;
    int e_l = 0, e_nmax = 3, e_samples = 400;
    eigen->add_option("--omega", e_omega, "Oscillator frequency")->capture_default_str();
    eigen->add_option("--l", e_l, "Angular momentum quantum number")
        ->check(CLI::Range(0, 64))->capture_default_str();
    eigen->add_option("--n-max", e_nmax, "Largest radial quantum number")
        ->check(CLI::Range(0, 64))->capture_default_str();
    eigen->add_option("--r-max", e_rmax, "Largest sampled radius")->capture_default_str();
    eigen->add_option("--samples", e_samples, "Sample count")->check(CLI::Range(2, 100000))
        ->capture_default_str();
    add_output_options(eigen, eigen_out, "eigen.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return (app.exit(e) == 0) ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(validate_out);
        if (mandel->parsed()) return run_mandel(alpha0, xi_min, xi_max, steps, mandel_out);
        if (quad->parsed()) {
            return run_quadrature(q_xi, q_amax, q_asteps, q_tsteps, quad_out);
        }
        if (angular->parsed()) {
            return run_angular(a_xi, a_minus, a_half, a_res, angular_out);
        }
        if (wigner->parsed()) {
            return run_wigner(w_R, w_phi, w_alpha0, w_half, w_res, w_method, w_half_tanh,
                              wigner_out);
        }
        if (eigen->parsed()) return run_eigen(e_omega, e_l, e_nmax, e_rmax, e_samples, eigen_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
