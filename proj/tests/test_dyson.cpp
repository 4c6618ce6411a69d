#include <doctest.h>

#include <cmath>

#include "oscbath/bounds.hpp"
#include "oscbath/dyson.hpp"
#include "oscbath/errors.hpp"
#include "support.hpp"

using namespace oscbath;
using testsupport::close_rel;
using testsupport::within_sigma;

namespace {

ModelParams base_params(double beta = 1.0, double lambda = 0.3) {
    ModelParams p;
    p.theta = 1.0;
    p.beta = beta;
    p.lambda = lambda;
    p.form_factor = FormFactor::power_law(1.0, 0.0, 1.0);
    return p;
}

bool terms_agree(const SeriesTerm& a, const SeriesTerm& b, double k = 3.0) {
    const double sigma = std::hypot(a.error_estimate, b.error_estimate);
    return std::abs(a.value - b.value) <=
           k * sigma + 1e-10 * std::max(std::abs(a.value), std::abs(b.value));
}

}  // namespace

TEST_SUITE_BEGIN("dyson");

TEST_CASE("order zero and the vanishing-coupling shortcuts") {
    const DysonEvaluator ev(base_params());
    CHECK(ev.h2n_direct(0).value == 1.0);
    CHECK(ev.h2n_linked(0).value == 1.0);

    const DysonEvaluator free_ev(base_params(1.0, 0.0));
    CHECK(free_ev.h2n_direct(2).value == 0.0);
    CHECK(free_ev.h2n_linked(3).value == 0.0);
}

TEST_CASE("direct route refuses the factorial blowup") {
    const DysonEvaluator ev(base_params());
    CHECK_THROWS_AS(ev.h2n_direct(5), guard_error);
}

TEST_CASE("cycle integral: trace method vs MC on the smallest cycle") {
    const DysonEvaluator ev(base_params());
    const auto trace = ev.j_cycle(1);
    const auto mc = ev.j_graph_mc(DysonEvaluator::alternating_cycle(1), {101, 400000});
    CHECK(within_sigma(trace.value, mc.value, mc.std_error));
    // refinement stability
    const auto j64 = ev.j_cycle(1, GridSettings{64});
    const auto j128 = ev.j_cycle(1, GridSettings{128});
    CHECK(close_rel(j64.value, j128.value, 5e-3));
}

TEST_CASE("connected-graph integral depends only on the component size") {
    const DysonEvaluator ev(base_params());
    // straight alternating 6-cycle vs a structurally different connected graph
    PairGraph other;
    other.osc_lines = {3, {{1, 4}, {2, 5}, {3, 6}}};
    other.f_lines = {3, {{1, 2}, {3, 4}, {5, 6}}};
    const auto a = ev.j_graph_mc(DysonEvaluator::alternating_cycle(3), {7, 200000});
    const auto b = ev.j_graph_mc(other, {8, 200000});
    CHECK(std::abs(a.value - b.value) <= 3.0 * std::hypot(a.std_error, b.std_error));
    // and both agree with the trace method
    const auto trace = ev.j_cycle(3);
    CHECK(within_sigma(trace.value, a.value, a.std_error));
}

TEST_CASE("linked-cluster terms expand as expected by hand") {
    const auto p = base_params();
    const DysonEvaluator ev(p);
    const double j2 = ev.j_cycle(1).value;
    const double j4 = ev.j_cycle(2).value;
    const double lb = p.lambda * p.beta;

    const auto h2 = ev.h2n_linked(1);
    CHECK(close_rel(h2.value, lb * lb * j2 / 2.0, 1e-12));

    const auto h4 = ev.h2n_linked(2);
    const double expected4 = std::pow(lb, 4) * (j4 / 4.0 + 0.5 * std::pow(j2 / 2.0, 2));
    CHECK(close_rel(h4.value, expected4, 1e-12));
}

TEST_CASE("dual-route agreement for the first three coefficients on a 3x3 grid") {
    int cell = 0;
    for (double beta : {0.5, 1.0, 2.0}) {
        for (double lambda : {0.2, 0.4, 0.6}) {
            ++cell;
            const DysonEvaluator ev(base_params(beta, lambda));
            for (int n = 1; n <= 3; ++n) {
                const auto direct =
                    ev.h2n_direct(n, {static_cast<std::uint64_t>(900 + 10 * cell + n), 120000});
                const auto linked = ev.h2n_linked(n);
                CAPTURE(beta);
                CAPTURE(lambda);
                CAPTURE(n);
                CHECK(terms_agree(direct, linked));
                CHECK(direct.value >= -3.0 * direct.error_estimate);  // positivity
            }
        }
    }
}

TEST_CASE("coupling scaling law is exact with a fixed seed") {
    const auto p = base_params(1.0, 0.25);
    auto p2 = p;
    p2.lambda = 0.5;
    const DysonEvaluator ev(p), ev2(p2);
    for (int n = 1; n <= 2; ++n) {
        const auto a = ev.h2n_direct(n, {77, 20000});
        const auto b = ev2.h2n_direct(n, {77, 20000});
        const double scale = std::pow(2.0, 2 * n);  // t^{2n} at t = 2
        CHECK(b.value == doctest::Approx(scale * a.value).epsilon(1e-14));
        CHECK(ev2.h2n_linked(n).value ==
              doctest::Approx(scale * ev.h2n_linked(n).value).epsilon(1e-14));
    }
}

TEST_CASE("cycle sandwich bounds hold across the standard grid") {
    for (double theta : {0.5, 1.0, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            auto p = base_params(beta, 0.3);
            p.theta = theta;
            const DysonEvaluator ev(p);
            for (int m = 1; m <= 4; ++m) {
                const auto b = cycle_bounds(m, ev.kernels());
                const double j = ev.j_cycle(m).value;
                CAPTURE(theta);
                CAPTURE(beta);
                CAPTURE(m);
                CHECK(b.lower <= j * (1.0 + 1e-9));
                CHECK(j <= b.upper * (1.0 + 1e-9));
                // the factorized bound implies the summarized minus-weight
                // form, so the two must be ordered
                CHECK(b.upper <= b.upper_summary_minus * (1.0 + 1e-9));
                CHECK(j <= b.upper_summary_minus * (1.0 + 1e-9));
            }
        }
    }
}

TEST_CASE("shell-supported profiles collapse the lower bound exponentially in beta") {
    // both sinh factors grow like e^{beta c / 2}, c = r_min resp. theta, so
    // the minima product dies like e^{-(r_min + theta) beta / 2} per block
    auto shell_params = [](double beta) {
        ModelParams p;
        p.theta = 1.0;
        p.beta = beta;
        p.lambda = 0.3;
        p.form_factor = FormFactor::tabulated({0.5, 1.0}, {1.0, 1.0});
        return p;
    };
    const double cold = cycle_bounds(1, KernelEval(shell_params(30.0))).lower;
    const double warm = cycle_bounds(1, KernelEval(shell_params(10.0))).lower;
    CHECK(cold > 0.0);
    CHECK(cold < 1e-5 * warm);  // ~ e^{-0.75 * 20}
    CHECK(cold > std::exp(-30.0) * warm);
}

TEST_CASE("growth bound with the alt constant dominates computed coefficients") {
    const auto p = base_params(1.0, 0.15957691216057308);  // certified coupling
    const DysonEvaluator ev(p);
    const double c_minus = cycle_bound_constants(p.form_factor).c_minus;
    for (int n = 0; n <= 3; ++n) {
        CHECK(ev.h2n_linked(n).value <= series_coefficient_bound(n, p, c_minus) * (1.0 + 1e-9));
    }
}

TEST_CASE("bare interaction series") {
    const auto p = base_params(1.2, 0.4);
    const DysonEvaluator ev(p);

    CHECK(ev.bare_series_term(0).value == 1.0);
    const double lb = p.lambda * p.beta;
    const double expected1 = lb * lb / p.theta * 0.5 *
                             (1.0 + 2.0 / std::expm1(p.theta * p.beta)) *
                             p.form_factor.coth_weighted_norm_sq(p.beta);
    CHECK(close_rel(ev.bare_series_term(1).value, expected1, 1e-12));

    // term ratio approaches the base from below: a_{n+1}/a_n = (2n+1)/(2n+2)
    const double b = ev.bare_series_base();
    const double r5 = ev.bare_series_term(6).value / ev.bare_series_term(5).value;
    CHECK(close_rel(r5, b * 11.0 / 12.0, 1e-12));
}

TEST_CASE("bare series threshold: finite beta* and divergence beyond it") {
    auto p = base_params();
    p.form_factor = FormFactor::power_law(0.01, 0.0, 1.0);  // weak profile
    for (double lambda : {0.1, 1.0, 10.0}) {
        p.lambda = lambda;
        const DysonEvaluator ev(p);
        const auto beta_star = ev.bare_series_threshold();
        REQUIRE(beta_star.has_value());
        CHECK(*beta_star > 0.0);
        CHECK(std::isfinite(*beta_star));

        auto above = p;
        above.beta = 1.1 * *beta_star;
        const DysonEvaluator ev_above(above);
        CHECK(ev_above.bare_series_base() > 1.0);
        CHECK(ev_above.bare_series_verdict().verdict == Verdict::NumericallyDivergent);

        auto below = p;
        below.beta = 0.9 * *beta_star;
        CHECK(DysonEvaluator(below).bare_series_verdict().verdict ==
              Verdict::NumericallyConvergent);
    }
    // lambda = 0 never diverges
    p.lambda = 0.0;
    CHECK_FALSE(DysonEvaluator(p).bare_series_threshold().has_value());
}

TEST_CASE("bare divergence can coexist with the all-beta coupling certificate") {
    auto p = base_params();
    p.form_factor = FormFactor::power_law(0.01, 0.0, 1.0);
    p.lambda = 1.0;
    const DysonEvaluator ev(p);
    REQUIRE(*certify_dipole(p).satisfied);  // margin ~ 0.95
    const auto beta_star = ev.bare_series_threshold();
    REQUIRE(beta_star.has_value());
    auto hot = p;
    hot.beta = 2.0 * *beta_star;
    const DysonEvaluator ev_hot(hot);
    CHECK(*certify_dipole(hot).satisfied);  // beta-independent
    CHECK(ev_hot.bare_series_verdict().verdict == Verdict::NumericallyDivergent);
}

TEST_CASE("series report: verdicts and diagnostics") {
    SUBCASE("free model is certified with unit partial sums") {
        const auto rep = DysonEvaluator(base_params(1.0, 0.0)).series_report(3);
        CHECK(rep.verdict == Verdict::CertifiedConvergent);
        for (double s : rep.sqrt_partial_sums) CHECK(s == 1.0);
    }
    SUBCASE("certified coupling at ratio 0.8") {
        const auto rep = DysonEvaluator(base_params(1.0, 0.15957691216057308)).series_report(3);
        CHECK(rep.verdict == Verdict::CertifiedConvergent);
        REQUIRE(!rep.criteria.empty());
        CHECK(rep.criteria.back() == "coupling_criterion");
    }
    SUBCASE("beyond the divergence witness the lower bound decides") {
        auto p = base_params();
        const auto witness = divergence_witness(KernelEval(p));
        REQUIRE(witness.has_value());
        p.lambda = 1.05 * *witness;
        const auto rep = DysonEvaluator(p).series_report(3);
        CHECK(rep.verdict == Verdict::NumericallyDivergent);
        CHECK(rep.diagnostics.count("divergence_witness_lambda") == 1);
    }
    SUBCASE("budget exhaustion is reported, not hidden") {
        const auto rep = DysonEvaluator(base_params()).series_report(8, {}, {}, 1e-9);
        CHECK(rep.verdict == Verdict::Inconclusive);
        CHECK(rep.criteria == std::vector<std::string>{"budget_exhausted"});
    }
}

TEST_SUITE_END();
