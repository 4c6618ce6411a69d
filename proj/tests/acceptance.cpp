// acceptance.cpp — end-to-end acceptance suite. Runs every criterion at its
// stated tolerance and prints one pass/fail line each; exits nonzero if any
// gating check fails. The compact closed forms with known discrepancies are
// evaluated and reported inline but gate on their verified counterparts
// (see README).
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oscbath/bounds.hpp"
#include "oscbath/cli.hpp"
#include "oscbath/dyson.hpp"
#include "oscbath/fock_oracle.hpp"
#include "oscbath/kernels.hpp"
#include "oscbath/pairings.hpp"
#include "oscbath/rng.hpp"

using namespace oscbath;

namespace {

int failures = 0;
using Clock = std::chrono::steady_clock;

void report(int id, const std::string& title, bool pass, const std::string& detail,
            double seconds) {
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title;
    if (!detail.empty()) line << " -- " << detail;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

void run(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
    const auto t0 = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, title, pass, detail, std::chrono::duration<double>(Clock::now() - t0).count());
}

ModelParams flat_profile_params(double theta, double beta, double lambda, double amplitude = 1.0) {
    ModelParams p;
    p.theta = theta;
    p.beta = beta;
    p.lambda = lambda;
    p.form_factor = FormFactor::power_law(amplitude, 0.0, 1.0);
    return p;
}

bool agree3(double a, double sa, double b, double sb) {
    return std::abs(a - b) <=
           3.0 * std::hypot(sa, sb) + 1e-10 * std::max(std::abs(a), std::abs(b));
}

std::string g(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------

bool criterion_counting(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        const BigInt p = pairing_count(n);
        if (linked_cluster_pair_count(n) != BigRat(p * p, 1)) {
            detail = "identity fails at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "exact for n <= 4, e.g. n=2: 6 + 6/2 = 9 = 3^2";
    return true;
}

bool criterion_kernel_identity(std::string& detail) {
    double worst = 0.0;
    for (double theta : {0.5, 1.0, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            const double closed = integral_k_osc_closed(beta, theta);
            const double quad = integral_k_osc_quadrature(beta, theta);
            worst = std::max(worst, std::abs(quad - closed) / closed);
        }
    }
    detail = "max relative error " + g(worst);
    return worst <= 1e-10;
}

bool criterion_graph_independence(std::string& detail) {
    const DysonEvaluator ev(flat_profile_params(1.0, 1.0, 0.3));
    PairGraph other;
    other.osc_lines = {3, {{1, 4}, {2, 5}, {3, 6}}};
    other.f_lines = {3, {{1, 2}, {3, 4}, {5, 6}}};
    const auto a = ev.j_graph_mc(DysonEvaluator::alternating_cycle(3), {2024, 1000000});
    const auto b = ev.j_graph_mc(other, {2025, 1000000});
    const double sigma = std::hypot(a.std_error, b.std_error);
    detail = "J_cycle=" + g(a.value) + "  J_other=" + g(b.value) + "  |diff|/sigma=" +
             g(std::abs(a.value - b.value) / sigma);
    return std::abs(a.value - b.value) <= 3.0 * sigma;
}

bool criterion_sandwich(std::string& detail) {
    double worst_stability = 0.0;
    for (double theta : {0.5, 1.0, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            const DysonEvaluator ev(flat_profile_params(theta, beta, 0.3));
            for (int m = 1; m <= 4; ++m) {
                const auto j64 = ev.j_cycle(m, GridSettings{64});
                const auto j128 = ev.j_cycle(m, GridSettings{128});
                const double j = j128.value;
                const auto b = cycle_bounds(m, ev.kernels());
                if (!(b.lower <= j * (1.0 + 1e-9)) || !(j <= b.upper * (1.0 + 1e-9))) {
                    detail = "sandwich violated at theta=" + g(theta) + " beta=" + g(beta) +
                             " m=" + std::to_string(m);
                    return false;
                }
                worst_stability =
                    std::max(worst_stability, std::abs(j128.value - j64.value) / j);
            }
        }
    }
    detail = "lower <= J <= factorized upper on the full grid; worst grid drift " +
             g(worst_stability);
    return worst_stability < 5e-3;
}

bool criterion_dual_route(std::string& detail) {
    ModelParams params = flat_profile_params(1.0, 1.0, 0.3);
    const auto modes = mode_discretization(params.form_factor, 16);
    params.form_factor = FormFactor::discrete_modes(modes);
    const TruncationSpec spec{40, modes, 72};
    const DysonEvaluator ev(params);

    std::ostringstream os;
    os.precision(5);
    for (int n = 1; n <= 3; ++n) {
        const auto direct = ev.h2n_direct(n, {rng::stream_seed(5, 1, n), 400000});
        const auto linked = ev.h2n_linked(n);
        if (!agree3(direct.value, direct.error_estimate, linked.value, linked.error_estimate)) {
            detail = "direct vs linked disagree at n=" + std::to_string(n);
            return false;
        }
        if (n <= 2) {
            const auto oracle =
                h2n_oracle(n, params, spec, {rng::stream_seed(5, 2, n), n == 1 ? 40000 : 30000});
            if (!agree3(direct.value, direct.error_estimate, oracle.value, oracle.error_estimate) ||
                !agree3(linked.value, linked.error_estimate, oracle.value, oracle.error_estimate)) {
                detail = "oracle route disagrees at n=" + std::to_string(n) + ": oracle=" +
                         g(oracle.value) + " direct=" + g(direct.value) + " linked=" +
                         g(linked.value);
                return false;
            }
            if (n == 2)
                os << "n=2: direct=" << direct.value << " linked=" << linked.value
                   << " oracle=" << oracle.value;
        }
    }
    detail = os.str();
    return true;
}

bool criterion_wick(std::string& detail) {
    ModelParams params = flat_profile_params(1.0, 1.0, 0.0);
    const TruncationSpec spec{40, {{0.9, 0.5}}, 40};
    double worst = 0.0;
    for (int n : {2, 3}) {
        const auto rep = wick_check(spec, params, n);
        worst = std::max(worst, rep.max_rel_dev);
    }
    detail = "4- and 6-point max relative deviation " + g(worst);
    return worst < 1e-5;
}

bool criterion_simplex_gamma(std::string& detail) {
    struct Case {
        int n1, n2;
        double gamma, type2_alpha;
    };
    const std::vector<Case> cases = {{1, 0, 0.0, 0.0},  {0, 1, 0.0, 0.5},  {1, 1, 0.0, 0.0},
                                     {1, 1, 0.25, 0.25}, {2, 1, 0.0, 0.0}, {2, 1, 0.25, 0.25},
                                     {0, 2, 0.0, 0.0},  {0, 2, 0.25, 0.25}};
    bool gating = true;
    int compact_matches = 0, compact_total = 0;
    std::ostringstream notes;
    notes.precision(5);
    for (const auto& c : cases) {
        std::vector<int> pattern;
        for (int i = 0; i < 2 * c.n2; ++i) pattern.push_back(2);
        for (int i = 0; i < c.n1; ++i) pattern.push_back(1);
        const auto [a_per, interior] =
            pattern_gap_exponents(pattern, c.type2_alpha, GapConvention::SharedFirst);
        const double exact = simplex_power_exact(a_per, interior);
        const auto mc = simplex_power_mc(
            a_per, interior, 300000,
            rng::stream_seed(7, c.n1 * 8 + c.n2, static_cast<std::uint64_t>(100 * c.gamma)));
        if (std::abs(mc.value - exact) > 3.0 * mc.std_error + 1e-12) {
            gating = false;
            notes << " MC!=exact at (" << c.n1 << "," << c.n2 << ");";
        }
        const double compact = simplex_power_formula(c.n1, c.n2, c.gamma, a_per);
        ++compact_total;
        if (std::abs(compact - exact) <= 3.0 * mc.std_error + 1e-9) {
            ++compact_matches;
        } else if (c.n1 == 0 && c.n2 == 1) {
            notes << " 1/sqrt(pi) case: compact=" << compact << " vs integral=" << exact << ";";
        }
    }
    detail = "MC matches the exact Gamma-form values (3 sigma) for all " +
             std::to_string(cases.size()) + " cases; compact closed form agrees in " +
             std::to_string(compact_matches) + "/" + std::to_string(compact_total) +
             " (known discrepancy, see README);" + notes.str();
    return gating;
}

bool criterion_certificate(std::string& detail) {
    // coupling tuned to 2 |lambda| ||k^{-1/2} f|| / Theta = 0.8
    const double lambda = 0.8 / (2.0 * std::sqrt(2.0 * M_PI));
    const ModelParams params = flat_profile_params(1.0, 1.0, lambda);
    const DysonEvaluator ev(params);
    const auto rep = ev.series_report(3);
    if (rep.verdict != Verdict::CertifiedConvergent) {
        detail = "expected a certified verdict";
        return false;
    }
    for (double r : rep.sqrt_ratios) {
        if (!(r <= 0.9)) {
            detail = "sqrt-term ratio " + g(r) + " exceeds 0.9";
            return false;
        }
    }
    const double c_minus = cycle_bound_constants(params.form_factor).c_minus;
    const double c_plus = cycle_bound_constants(params.form_factor).c_plus;
    bool plus_dominates = true;
    for (int n = 0; n <= 3; ++n) {
        const double h = rep.terms[n].value;
        if (h > series_coefficient_bound(n, params, c_minus) * (1.0 + 1e-9)) {
            detail = "growth bound fails at n=" + std::to_string(n);
            return false;
        }
        if (h > series_coefficient_bound(n, params, c_plus) * (1.0 + 1e-9))
            plus_dominates = false;
    }
    detail = "certified, last sqrt ratio " + g(rep.sqrt_ratios.back()) +
             ", growth bound dominates (plus-weight constant variant " +
             std::string(plus_dominates ? "also holds" : "fails; flagged") + ")";
    return true;
}

bool criterion_divergence_witness(std::string& detail) {
    const ModelParams params = flat_profile_params(1.0, 1.0, 0.1);
    const KernelEval kernels(params);
    const auto witness = divergence_witness(kernels);
    if (!witness) {
        detail = "no witness found";
        return false;
    }
    ModelParams at = params;
    at.lambda = *witness;
    const KernelEval kernels_at(at);
    for (int n = 1; n <= 20; ++n) {
        if (!(divergence_lower(n, kernels_at) * 2.0 * n >= 1.0)) {
            detail = "lower bound dips below 1/(2n) at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "lambda* = " + g(*witness) + ", h_{2n} * 2n >= 1 exactly for n <= 20";
    return true;
}

bool criterion_bare_threshold(std::string& detail) {
    std::ostringstream os;
    os.precision(5);
    for (double lambda : {0.1, 1.0, 10.0}) {
        const ModelParams params = flat_profile_params(1.0, 1.0, lambda, 0.01);
        const DysonEvaluator ev(params);
        const auto beta_star = ev.bare_series_threshold();
        if (!beta_star || !(*beta_star > 0.0) || !std::isfinite(*beta_star)) {
            detail = "no finite beta* for lambda=" + g(lambda);
            return false;
        }
        ModelParams above = params;
        above.beta = 1.1 * *beta_star;
        const DysonEvaluator ev_above(above);
        // terms are eventually strictly increasing beyond the threshold
        int first_rise = -1;
        double prev = ev_above.bare_series_term(0).value;
        for (int n = 1; n <= 40; ++n) {
            const double cur = ev_above.bare_series_term(n).value;
            if (first_rise < 0 && cur > prev) first_rise = n;
            if (first_rise >= 0 && !(cur > prev)) {
                detail = "terms stopped increasing at n=" + std::to_string(n) +
                         " for lambda=" + g(lambda);
                return false;
            }
            prev = cur;
        }
        if (first_rise < 0 || first_rise > 10) {
            detail = "terms never turned increasing for lambda=" + g(lambda);
            return false;
        }
        os << "lambda=" << lambda << ": beta*=" << *beta_star << " (rising from n=" << first_rise
           << "); ";
    }
    detail = os.str();
    return true;
}

bool criterion_stirling(std::string& detail) {
    for (int x = 1; x <= 50; ++x) {
        if (!stirling_bounds(x).holds) {
            detail = "Stirling sandwich fails at x=" + std::to_string(x);
            return false;
        }
    }
    for (double gamma : {0.0, 0.25, 0.5}) {
        for (int n1 = 0; n1 <= 20; ++n1) {
            for (int n2 = 0; n1 + 2 * n2 <= 20; ++n2) {
                if (n1 + n2 < 1) continue;
                if (!gamma_ratio_bound(n1, n2, gamma).holds) {
                    detail = "Gamma-ratio bound fails at (" + std::to_string(n1) + "," +
                             std::to_string(n2) + "), gamma=" + g(gamma);
                    return false;
                }
            }
        }
    }
    detail = "zero violations on the full grid";
    return true;
}

bool criterion_determinism(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "oscbath_acceptance_det";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cfg_path = (dir / "run.cfg").string();
    {
        std::ofstream cfg(cfg_path);
        cfg << "schema = 1\n[model]\ntheta = 1.0\nlambda = 0.3\nbeta = 1.0\n"
               "[model.form_factor]\nkind = \"power_law\"\namplitude = 1.0\nexponent = 0.0\n"
               "cutoff = 1.0\n[compute]\nseed = 31\nsamples = 20000\ngrid = 32\nmax_n = 2\n";
    }
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    auto run_with_threads = [&](const char* threads, const std::string& out) {
        ::setenv("OSCBATH_THREADS", threads, 1);
        const int rc_terms = run_cli({"terms", "--config", cfg_path, "--out", out});
        const int rc_cert = run_cli({"certify", "--config", cfg_path, "--out", out});
        ::unsetenv("OSCBATH_THREADS");
        return rc_terms == 0 && rc_cert == 0;
    };
    if (!run_with_threads("1", (dir / "a").string()) ||
        !run_with_threads("7", (dir / "b").string())) {
        detail = "tool run failed";
        return false;
    }
    const bool same = slurp(dir / "a" / "terms.csv") == slurp(dir / "b" / "terms.csv") &&
                      slurp(dir / "a" / "terms.jsonl") == slurp(dir / "b" / "terms.jsonl") &&
                      slurp(dir / "a" / "certify.json") == slurp(dir / "b" / "certify.json");
    fs::remove_all(dir);
    detail = same ? "byte-identical CSV/JSONL/JSON across 1 vs 7 worker threads"
                  : "outputs differ across thread counts";
    return same;
}

}  // namespace

int main() {
    std::cout << "oscbath acceptance suite\n";
    run(1, "exact linked-cluster counting identity", criterion_counting);
    run(2, "oscillator kernel normalization identity", criterion_kernel_identity);
    run(3, "connected-graph integral independence (6 points, MC)", criterion_graph_independence);
    run(4, "cycle-integral sandwich and grid stability", criterion_sandwich);
    run(5, "dual-route series coefficients with the truncated-Fock oracle", criterion_dual_route);
    run(6, "Wick factorization against exact truncated traces", criterion_wick);
    run(7, "Gamma-form simplex integrals vs Monte Carlo", criterion_simplex_gamma);
    run(8, "convergence certificate at coupling ratio 0.8", criterion_certificate);
    run(9, "divergence witness lower bound", criterion_divergence_witness);
    run(10, "bare-series threshold beta* and growth beyond it", criterion_bare_threshold);
    run(11, "Stirling and Gamma-ratio bounds", criterion_stirling);
    run(12, "bytewise determinism across thread counts", criterion_determinism);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
