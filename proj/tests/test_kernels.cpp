#include <doctest.h>

#include <cmath>

#include "oscbath/errors.hpp"
#include "oscbath/kernels.hpp"
#include "oscbath/quadrature.hpp"
#include "oscbath/rng.hpp"
#include "support.hpp"

using namespace oscbath;
using testsupport::close_rel;
using testsupport::radial_integral;

namespace {

ModelParams unit_params(double beta = 1.0, double theta = 1.0) {
    ModelParams p;
    p.theta = theta;
    p.beta = beta;
    p.lambda = 0.3;
    p.form_factor = FormFactor::power_law(1.0, 0.0, 1.0);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("Planck density") {
    CHECK(rho_beta(std::log(2.0), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rho_beta(800.0, 1.0) == 0.0);
    // Laurent expansion oracle at tiny argument: 1/x - 1/2 + x/12
    const double x = 1e-8;
    const double oracle = 1.0 / x - 0.5 + x / 12.0;
    CHECK(close_rel(rho_beta(x, 1.0), oracle, 1e-6));
    CHECK_THROWS_AS(rho_beta(0.0, 1.0), numeric_error);
}

TEST_CASE("oscillator kernel closed form") {
    for (double theta : {0.5, 1.0, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            CHECK(close_rel(k_osc(0.5, beta, theta),
                            1.0 / (2.0 * theta * std::sinh(0.5 * theta * beta)), 1e-14));
            CHECK(k_osc(0.1, beta, theta) == doctest::Approx(k_osc(0.9, beta, theta)).epsilon(1e-12));
            CHECK(k_osc(0.3, beta, theta) == doctest::Approx(k_osc(0.7, beta, theta)).epsilon(1e-12));
        }
    }
    // large beta: K_osc(0) = coth(theta beta / 2) / (2 theta) -> 1/2 for theta = 1
    CHECK(k_osc(0.0, 1500.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    // log-domain branch against the closed form written stably by hand
    const double x = 800.0;
    const double expected = std::exp(0.4 * x - 0.5 * x) / 1.0;  // cosh(x(0.9-1/2))/sinh(x/2) ~ e^{-0.1x}
    CHECK(close_rel(k_osc(0.9, x, 1.0) * 2.0, expected, 1e-9));
}

TEST_CASE("kernel normalization identity across the grid") {
    for (double theta : {0.5, 1.0, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            const double closed = integral_k_osc_closed(beta, theta);
            CHECK(close_rel(integral_k_osc_quadrature(beta, theta), closed, 1e-10));
        }
    }
    CHECK(integral_k_osc_closed(1.0, 2.0) == doctest::Approx(0.5));
    CHECK(integral_k_osc_closed(2.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("field kernel: endpoint identity, symmetry, minimum, integral") {
    const KernelEval ker(unit_params(2.0));
    const auto& f = ker.params().form_factor;

    CHECK(close_rel(ker.k_f(0.0), 0.5 * f.coth_weighted_norm_sq(2.0), 1e-10));
    for (double t : {0.05, 0.2, 0.35}) {
        CHECK(ker.k_f(t) == doctest::Approx(ker.k_f(1.0 - t)).epsilon(1e-12));
        CHECK(ker.k_f(0.5) <= ker.k_f(t));
    }
    // integral by an independent rule over s in [-1, 1]
    const auto& rule = GaussLegendre::get(48);
    double quad = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        quad += rule.weights[i] * ker.k_f(rule.nodes[i]);
    CHECK(close_rel(2.0 * quad, ker.integral_k_f(), 1e-9));
    CHECK(close_rel(ker.integral_k_f(), 2.0 * f.weighted_norm_sq(-1.0) / 2.0, 1e-12));
}

TEST_CASE("interpolated field kernel matches the direct evaluation") {
    const KernelEval ker(unit_params(1.0));
    auto eng = rng::make_engine(42);
    for (int i = 0; i < 200; ++i) {
        const double t = rng::uniform(eng);
        CHECK(close_rel(ker.k_f_fast(t), ker.k_f(t), 1e-8));
    }
}

TEST_CASE("sup of the field kernel: exact value vs the analytic bound") {
    for (double beta : {0.5, 1.0, 2.0, 8.0}) {
        const KernelEval ker(unit_params(beta));
        const auto sup = ker.sup_k_f();
        CHECK(close_rel(sup.exact, ker.k_f(0.0), 1e-12));
        CHECK(sup.exact < sup.bound);  // coth(x) < 1 + 1/x strictly
    }
    // beta -> infinity: sup -> (1/2) ||f||^2
    const KernelEval cold(unit_params(500.0));
    CHECK(close_rel(cold.sup_k_f().exact,
                    0.5 * cold.params().form_factor.weighted_norm_sq(0.0), 5e-3));
}

TEST_CASE("sinh-weighted integral equals four times the kernel minima product") {
    for (double beta : {0.5, 1.0, 3.0}) {
        const KernelEval ker(unit_params(beta, 1.3));
        CHECK(close_rel(ker.sinh_weighted_integral(), 4.0 * ker.k_osc(0.5) * ker.k_f(0.5), 1e-10));
    }
}

TEST_CASE("discrete-mode field kernel is the explicit two-mode sum") {
    ModelParams p = unit_params(1.5);
    p.form_factor = FormFactor::discrete_modes({{0.6, 0.2}, {1.1, 0.5}});
    const KernelEval ker(p);
    auto term = [&](double w, double g, double t) {
        return g * g * std::cosh(1.5 * w * (t - 0.5)) / (2.0 * std::sinh(0.75 * w));
    };
    for (double t : {0.0, 0.3, 0.5, 1.0}) {
        CHECK(close_rel(ker.k_f(t), term(0.6, 0.2, t) + term(1.1, 0.5, t), 1e-12));
    }
}

TEST_CASE("two-point functions") {
    const auto f = FormFactor::power_law(1.0, 0.0, 1.0);
    const double beta = 1.0;

    SUBCASE("double creation and double annihilation vanish") {
        CHECK(two_point(Ladder::Creation, Ladder::Creation, 0.2, 0.7, f, f, beta) ==
              std::complex<double>(0.0, 0.0));
        CHECK(two_point(Ladder::Annihilation, Ladder::Annihilation, 0.2, 0.7, f, f, beta) ==
              std::complex<double>(0.0, 0.0));
    }
    SUBCASE("equal times: occupation integral and the coth combination") {
        const double pm = two_point(Ladder::Creation, Ladder::Annihilation, 0.4, 0.4, f, f, beta).real();
        const double mp = two_point(Ladder::Annihilation, Ladder::Creation, 0.4, 0.4, f, f, beta).real();
        const double occupation =
            radial_integral([&](double r) { return 1.0 / std::expm1(beta * r); }, 0.0, 1.0);
        CHECK(close_rel(pm, occupation, 1e-8));
        CHECK(close_rel(pm + mp, f.coth_weighted_norm_sq(beta), 1e-8));
    }
    SUBCASE("kernel consistency at unequal times") {
        // with the larger time in the first slot, the half-sum is K_f(|d|)
        const KernelEval ker(unit_params(beta));
        const double s_hi = 0.8, s_lo = 0.3;
        const double pm = two_point(Ladder::Creation, Ladder::Annihilation, s_hi, s_lo, f, f, beta).real();
        const double mp = two_point(Ladder::Annihilation, Ladder::Creation, s_hi, s_lo, f, f, beta).real();
        CHECK(close_rel(0.5 * (pm + mp), ker.k_f(s_hi - s_lo), 1e-8));
    }
}

TEST_SUITE_END();
