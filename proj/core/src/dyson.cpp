#include "oscbath/dyson.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "oscbath/errors.hpp"

namespace oscbath {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double coth(double x) {
    if (x < 1e-4) return 1.0 / x + x / 3.0;
    if (x > 350.0) return 1.0;
    return 1.0 + 2.0 / std::expm1(2.0 * x);
}

double pow_int(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// Ordered compositions (m_1, ..., m_k) of n with the 1/k! symmetry factor,
// exactly as the factorized series writes them.
void for_each_composition(int n,
                          const std::function<void(const std::vector<int>&, const BigRat&)>& fn) {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            BigInt k_factorial = 1;
            for (std::size_t a = 2; a <= parts.size(); ++a) k_factorial *= a;
            fn(parts, BigRat(1, k_factorial));
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            rec(remaining - p);
            parts.pop_back();
        }
    };
    rec(n);
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::DirectPairing: return "direct_pairing";
        case Method::LinkedCluster: return "linked_cluster";
        case Method::FockOracle: return "fock_oracle";
        case Method::BareSeries: return "bare_series";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedConvergent: return "certified_convergent";
        case Verdict::NumericallyConvergent: return "numerically_convergent";
        case Verdict::NumericallyDivergent: return "numerically_divergent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

DysonEvaluator::DysonEvaluator(ModelParams params)
    : params_(std::move(params)), kernels_(params_) {
    params_.validate();
}

SeriesTerm DysonEvaluator::h2n_direct(int n, const McSettings& mc) const {
    const auto t0 = Clock::now();
    SeriesTerm term;
    term.n = n;
    term.method = Method::DirectPairing;
    if (n < 0) throw numeric_error("h2n_direct: n must be >= 0");
    if (n == 0) {
        term.value = 1.0;
        return term;
    }
    if (n > 4) {
        const BigInt count = pairing_count(n) * pairing_count(n);
        throw guard_error("h2n_direct: pairing double sum has " + count.str() +
                          " terms for n=" + std::to_string(n) + " (guard: n <= 4)");
    }
    if (params_.lambda == 0.0) {
        term.value = 0.0;
        term.wall_seconds = seconds_since(t0);
        return term;
    }

    const int points = 2 * n;
    const auto pairings = all_pairings(n);
    // flat list of the C(2n,2) point pairs; every pairing indexes into it
    std::vector<std::pair<int, int>> all_pairs;
    std::vector<std::vector<int>> pairing_idx(pairings.size());
    auto pair_index = [&](int i, int j) {
        for (std::size_t k = 0; k < all_pairs.size(); ++k)
            if (all_pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
        all_pairs.emplace_back(i, j);
        return static_cast<int>(all_pairs.size() - 1);
    };
    for (std::size_t p = 0; p < pairings.size(); ++p)
        for (const auto& [i, j] : pairings[p].pairs) pairing_idx[p].push_back(pair_index(i, j));

    const auto& ker = kernels_;
    auto integrand = [&](const std::vector<double>& s) {
        double kosc[28], kf[28];
        for (std::size_t k = 0; k < all_pairs.size(); ++k) {
            const double d = std::abs(s[all_pairs[k].first - 1] - s[all_pairs[k].second - 1]);
            kosc[k] = ker.k_osc(d);
            kf[k] = ker.k_f_fast(d);
        }
        double w_osc = 0.0, w_f = 0.0;
        for (const auto& idx : pairing_idx) {
            double p_osc = 1.0, p_f = 1.0;
            for (int k : idx) {
                p_osc *= kosc[k];
                p_f *= kf[k];
            }
            w_osc += p_osc;
            w_f += p_f;
        }
        return w_osc * w_f;
    };

    const auto est = mc_integrate_hypercube(points, integrand, mc.seed, mc.samples);
    double pref = pow_int(params_.beta * params_.lambda, 2 * n);
    for (int i = 2; i <= 2 * n; ++i) pref /= i;
    term.value = pref * est.value;
    term.error_estimate = pref * est.std_error;
    term.wall_seconds = seconds_since(t0);
    return term;
}

CycleResult DysonEvaluator::j_cycle(int m, const GridSettings& grid) const {
    if (m < 1) throw numeric_error("j_cycle: m must be >= 1");
    {
        std::lock_guard lock(cache_mtx_);
        const auto it = j_cache_.find({m, grid.grid});
        if (it != j_cache_.end()) return it->second;
    }
    const auto& ker = kernels_;
    const auto result = cycle_integral(
        m, [&](double t) { return ker.k_osc(t); }, [&](double t) { return ker.k_f_fast(t); },
        grid.grid);
    std::lock_guard lock(cache_mtx_);
    return j_cache_.emplace(std::make_pair(m, grid.grid), result).first->second;
}

SeriesTerm DysonEvaluator::h2n_linked(int n, const GridSettings& grid) const {
    const auto t0 = Clock::now();
    SeriesTerm term;
    term.n = n;
    term.method = Method::LinkedCluster;
    if (n < 0) throw numeric_error("h2n_linked: n must be >= 0");
    if (n == 0) {
        term.value = 1.0;
        return term;
    }
    if (params_.lambda == 0.0) {
        term.wall_seconds = seconds_since(t0);
        return term;
    }
    double total = 0.0;
    double total_err = 0.0;
    for_each_composition(n, [&](const std::vector<int>& parts, const BigRat& inv_k_factorial) {
        BigRat coeff = inv_k_factorial;
        double j_product = 1.0;
        double rel_err = 0.0;
        for (int ma : parts) {
            coeff /= 2 * ma;
            const auto j = j_cycle(ma, grid);
            j_product *= j.value;
            if (j.value != 0.0) rel_err += j.error_estimate / std::abs(j.value);
        }
        const double c = static_cast<double>(coeff);
        total += c * j_product;
        total_err += std::abs(c * j_product) * rel_err;
    });
    const double pref = pow_int(params_.lambda * params_.beta, 2 * n);
    term.value = pref * total;
    term.error_estimate = pref * total_err;
    term.wall_seconds = seconds_since(t0);
    return term;
}

McResult DysonEvaluator::j_graph_mc(const PairGraph& graph, const McSettings& mc) const {
    const auto decomposition = connected_components(graph);  // validates the graph
    if (decomposition.components.size() != 1)
        throw numeric_error("j_graph_mc: graph must be connected");
    const int points = 2 * graph.osc_lines.m;
    const auto& ker = kernels_;
    const auto& osc = graph.osc_lines.pairs;
    const auto& fl = graph.f_lines.pairs;
    auto integrand = [&](const std::vector<double>& s) {
        double prod = 1.0;
        for (const auto& [i, j] : osc) prod *= ker.k_osc(std::abs(s[i - 1] - s[j - 1]));
        for (const auto& [i, j] : fl) prod *= ker.k_f_fast(std::abs(s[i - 1] - s[j - 1]));
        return prod;
    };
    return mc_integrate_hypercube(points, integrand, mc.seed, mc.samples);
}

PairGraph DysonEvaluator::alternating_cycle(int m) {
    PairGraph g;
    g.osc_lines.m = m;
    g.f_lines.m = m;
    for (int a = 0; a < m; ++a) g.osc_lines.pairs.emplace_back(2 * a + 1, 2 * a + 2);
    for (int a = 0; a < m - 1; ++a) g.f_lines.pairs.emplace_back(2 * a + 2, 2 * a + 3);
    g.f_lines.pairs.emplace_back(1, 2 * m);
    std::sort(g.f_lines.pairs.begin(), g.f_lines.pairs.end());
    return g;
}

double DysonEvaluator::bare_series_base_at(double beta) const {
    const double x = params_.lambda * beta;
    return x * x / params_.theta * coth(0.5 * params_.theta * beta) *
           params_.form_factor.coth_weighted_norm_sq(beta);
}

double DysonEvaluator::bare_series_base() const { return bare_series_base_at(params_.beta); }

SeriesTerm DysonEvaluator::bare_series_term(int n) const {
    if (n < 0) throw numeric_error("bare_series_term: n must be >= 0");
    SeriesTerm term;
    term.n = n;
    term.method = Method::BareSeries;
    double central = 1.0;  // binom(2n,n) 4^{-n} = prod (2k-1)/(2k)
    for (int k = 1; k <= n; ++k) central *= (2.0 * k - 1.0) / (2.0 * k);
    term.value = central * pow_int(bare_series_base(), n);
    return term;
}

std::optional<double> DysonEvaluator::bare_series_threshold() const {
    if (params_.lambda == 0.0) return std::nullopt;
    if (params_.form_factor.kind() == ProfileKind::Zero) return std::nullopt;
    // b(beta) is a product of increasing positive factors, so the threshold
    // is unique when it exists.
    double lo = 1e-12, hi = 1e-12;
    if (bare_series_base_at(lo) >= 1.0) return 0.0;
    hi = 1.0;
    while (bare_series_base_at(hi) < 1.0) {
        hi *= 2.0;
        if (hi > 1e12) return std::nullopt;
    }
    lo = hi / 2.0;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (bare_series_base_at(mid) >= 1.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

ConvergenceReport DysonEvaluator::bare_series_verdict(int n_terms) const {
    ConvergenceReport rep;
    const double b = bare_series_base();
    for (int n = 0; n < n_terms; ++n) {
        rep.terms.push_back(bare_series_term(n));
        rep.sqrt_terms.push_back(std::sqrt(rep.terms.back().value));
        rep.sqrt_partial_sums.push_back((n ? rep.sqrt_partial_sums.back() : 0.0) +
                                        rep.sqrt_terms.back());
        if (n) {
            const double prev = rep.sqrt_terms[n - 1];
            rep.sqrt_ratios.push_back(prev > 0.0 ? rep.sqrt_terms[n] / prev : 0.0);
        }
    }
    rep.diagnostics["ratio_base"] = b;
    if (const auto beta_star = bare_series_threshold()) rep.diagnostics["beta_star"] = *beta_star;
    rep.criteria.push_back("bare_series_ratio");
    rep.verdict = b < 1.0 ? Verdict::NumericallyConvergent : Verdict::NumericallyDivergent;
    return rep;
}

ConvergenceReport DysonEvaluator::series_report(int n_max, const McSettings& mc,
                                                const GridSettings& grid, double budget_seconds,
                                                const EtaProfiles* etas, double c_inner) const {
    if (n_max < 2) throw numeric_error("series_report: n_max must be >= 2");
    const auto t0 = Clock::now();
    ConvergenceReport rep;
    bool budget_hit = false;
    for (int n = 0; n <= n_max; ++n) {
        if (budget_seconds > 0.0 && seconds_since(t0) > budget_seconds) {
            budget_hit = true;
            break;
        }
        rep.terms.push_back(h2n_linked(n, grid));
        rep.sqrt_terms.push_back(std::sqrt(std::max(0.0, rep.terms.back().value)));
        rep.sqrt_partial_sums.push_back((n ? rep.sqrt_partial_sums.back() : 0.0) +
                                        rep.sqrt_terms.back());
        if (n >= 1) {
            const double prev = rep.sqrt_terms[n - 1];
            rep.sqrt_ratios.push_back(prev > 0.0 ? rep.sqrt_terms[n] / prev : 0.0);
        }
    }
    // direct-route cross-check, attached as diagnostics
    if (!budget_hit && params_.lambda != 0.0) {
        for (int n = 1; n <= std::min(2, n_max); ++n) {
            const auto direct = h2n_direct(n, mc);
            rep.diagnostics["h2n_direct_n" + std::to_string(n)] = direct.value;
            rep.diagnostics["h2n_direct_err_n" + std::to_string(n)] = direct.error_estimate;
        }
    }

    const auto dipole = certify_dipole(params_);
    rep.diagnostics["coupling_criterion_margin"] = dipole.margin;
    const double div_base = divergence_base(kernels_);
    rep.diagnostics["divergence_base"] = div_base;

    if (budget_hit) {
        rep.verdict = Verdict::Inconclusive;
        rep.criteria.push_back("budget_exhausted");
        return rep;
    }
    if (etas != nullptr) {
        const auto eta = certify_eta(*etas, params_.beta, c_inner);
        rep.diagnostics["eta_criterion_margin"] = eta.margin;
        if (eta.satisfied.value_or(false)) {
            rep.verdict = Verdict::CertifiedConvergent;
            rep.criteria.push_back("eta_criterion");
        }
    }
    if (dipole.satisfied.value_or(false)) {
        rep.verdict = Verdict::CertifiedConvergent;
        rep.criteria.push_back("coupling_criterion");
        return rep;
    }
    if (rep.verdict == Verdict::CertifiedConvergent) return rep;

    if (div_base >= 1.0) {
        rep.verdict = Verdict::NumericallyDivergent;
        rep.criteria.push_back("divergence_lower_bound");
        if (const auto witness = divergence_witness(kernels_))
            rep.diagnostics["divergence_witness_lambda"] = *witness;
        return rep;
    }
    // numerics only
    bool all_below = true, all_above = true;
    for (double r : rep.sqrt_ratios) {
        all_below = all_below && r < 0.95;
        all_above = all_above && r > 1.0;
    }
    if (!rep.sqrt_ratios.empty() && all_below)
        rep.verdict = Verdict::NumericallyConvergent;
    else if (!rep.sqrt_ratios.empty() && all_above)
        rep.verdict = Verdict::NumericallyDivergent;
    else
        rep.verdict = Verdict::Inconclusive;
    rep.criteria.push_back("sqrt_ratio_diagnostic");
    return rep;
}

}  // namespace oscbath
