#include "oscbath/bounds.hpp"

#include <cmath>

#include "oscbath/errors.hpp"

namespace oscbath {

namespace {

double pow_int(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

}  // namespace

CycleBoundConstants cycle_bound_constants(const FormFactor& f) {
    const double n0 = f.weighted_norm_sq(0.0);
    return {0.5 * n0 / f.weighted_norm_sq(1.0), 0.5 * n0 / f.weighted_norm_sq(-1.0)};
}

SandwichBounds cycle_bounds(int m, const KernelEval& kernels) {
    if (m < 1) throw numeric_error("cycle_bounds: m must be >= 1");
    const auto& p = kernels.params();
    SandwichBounds b{};
    const double x = kernels.sinh_weighted_integral();
    b.lower = pow_int(kernels.k_osc(0.5) * kernels.k_f(0.5), m);
    b.lower_sinh_form = pow_int(x, m);
    const double i_osc = integral_k_osc_closed(p.beta, p.theta);
    const double i_f = kernels.integral_k_f();
    b.upper = pow_int(i_osc, m) * pow_int(i_f, m - 1) * kernels.sup_k_f().exact;
    const auto c = cycle_bound_constants(p.form_factor);
    const double base =
        pow_int(2.0 * std::sqrt(p.form_factor.weighted_norm_sq(-1.0)) / (p.theta * p.beta), 2 * m);
    b.upper_summary_plus = base * (c.c_plus * p.beta + 1.0);
    b.upper_summary_minus = base * (c.c_minus * p.beta + 1.0);
    return b;
}

double series_coefficient_bound(int n, const ModelParams& params, double c_constant) {
    const double root = 2.0 / params.theta *
                        std::sqrt(params.form_factor.weighted_norm_sq(-1.0)) *
                        std::abs(params.lambda);
    return pow_int(root, 2 * n) * std::pow(n + 1.0, 0.5 * (c_constant * params.beta + 1.0));
}

double series_coefficient_bound_harmonic(int n, const ModelParams& params, double c_constant) {
    const double root = 2.0 / params.theta *
                        std::sqrt(params.form_factor.weighted_norm_sq(-1.0)) *
                        std::abs(params.lambda);
    double harmonic = 0.0;
    for (int m = 1; m <= n; ++m) harmonic += 1.0 / m;
    const double a = 0.5 * (c_constant * params.beta + 1.0) * harmonic;
    double sum = 0.0, term = 1.0;
    for (int k = 1; k <= 2 * n; ++k) {
        term *= a / k;
        sum += term;
    }
    return pow_int(root, 2 * n) * (n == 0 ? 1.0 : sum);
}

BoundResult certify_dipole(const ModelParams& params) {
    params.validate();
    BoundResult r;
    r.name = "coupling_criterion";
    const double norm = std::sqrt(params.form_factor.weighted_norm_sq(-1.0));
    r.value = std::abs(2.0 * params.lambda / params.theta) * norm;
    r.margin = 1.0 - r.value;
    r.satisfied = r.margin > 0.0;
    r.inputs = {{"theta", params.theta},
                {"lambda", params.lambda},
                {"norm_km1", norm}};
    return r;
}

double divergence_base(const KernelEval& kernels) {
    const auto& p = kernels.params();
    return 0.25 * p.beta * p.beta * p.lambda * p.lambda * kernels.sinh_weighted_integral();
}

double divergence_lower(int n, const KernelEval& kernels) {
    if (n < 1) throw numeric_error("divergence_lower: n must be >= 1");
    return pow_int(divergence_base(kernels), n) / (2.0 * n);
}

std::optional<double> divergence_witness(const KernelEval& kernels) {
    const auto& p = kernels.params();
    const double x = kernels.sinh_weighted_integral();
    if (!(x > 0.0)) return std::nullopt;
    auto base_at = [&](double lam) { return 0.25 * p.beta * p.beta * lam * lam * x; };
    double hi = 1.0;
    while (base_at(hi) < 1.0) {
        hi *= 2.0;
        if (hi > 1e154) return std::nullopt;
    }
    double lo = 0.0;
    // Invariant: base(hi) >= 1 in floating point; hi is returned so the
    // witness satisfies base^n * (2n)/(2n) >= 1 exactly for every n.
    while ((hi - lo) > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (base_at(mid) >= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double norm_series_bound(int n, double beta, double eta1, double eta2, double gamma,
                         double c_inner, double prefactor) {
    if (gamma < 0.0 || gamma > 0.5) throw numeric_error("norm_series_bound: gamma must lie in [0, 1/2]");
    if (n < 0) throw numeric_error("norm_series_bound: n must be >= 0");
    const double damp = std::pow(n + 1.0, -0.5 * (1.0 - 2.0 * gamma));
    const double core = 8.0 * eta1 + std::sqrt(8.0 * c_inner * eta2) * damp;
    return prefactor * (n + 1.0) * (n + 1.0) * pow_int((1.0 + beta) * core, n);
}

BoundResult certify_eta(double eta1, double eta2, double gamma, double beta, double c_inner) {
    if (gamma < 0.0 || gamma > 0.5) throw numeric_error("certify_eta: gamma must lie in [0, 1/2]");
    BoundResult r;
    r.name = "eta_criterion";
    // For gamma < 1/2 the eta2 term is damped to zero as n grows, so the
    // geometric root is (1+beta) 8 eta1; at gamma = 1/2 the damping is absent.
    const double root = gamma < 0.5 ? (1.0 + beta) * 8.0 * eta1
                                    : (1.0 + beta) * (8.0 * eta1 + std::sqrt(8.0 * c_inner * eta2));
    r.value = root;
    r.margin = 1.0 - root;
    r.satisfied = r.margin > 0.0;
    r.inputs = {{"eta1", eta1}, {"eta2", eta2}, {"gamma", gamma},
                {"beta", beta}, {"c_inner", c_inner}};
    return r;
}

BoundResult certify_eta(const EtaProfiles& profiles, double beta, double c_inner) {
    const auto [eta1, eta2] = eta_functionals(profiles);
    return certify_eta(eta1, eta2, profiles.gamma, beta, c_inner);
}

double simplex_power_formula(int n1, int n2, double gamma, double alpha1) {
    if (n1 + n2 < 1) throw numeric_error("simplex_power_formula: need n1 + n2 >= 1");
    if (alpha1 >= 1.0 || gamma >= 1.0)
        throw numeric_error("simplex_power_formula: non-integrable exponents");
    const double denom_arg = n1 + 2.0 * n2 * (1.0 - gamma);
    if (denom_arg <= 0.0) throw numeric_error("simplex_power_formula: Gamma argument must be positive");
    const double log_val = -std::lgamma(1.0 - alpha1) + 2.0 * n2 * std::lgamma(1.0 - gamma) -
                           std::lgamma(denom_arg);
    return std::exp(log_val);
}

double simplex_power_exact(double periodic_alpha, const std::vector<double>& interior_alphas) {
    if (periodic_alpha >= 1.0) throw numeric_error("simplex_power_exact: periodic exponent must be < 1");
    double log_val = std::lgamma(2.0 - periodic_alpha);
    double denom = 2.0 - periodic_alpha;
    for (double a : interior_alphas) {
        if (a >= 1.0) throw numeric_error("simplex_power_exact: gap exponent must be < 1");
        log_val += std::lgamma(1.0 - a);
        denom += 1.0 - a;
    }
    return std::exp(log_val - std::lgamma(denom));
}

McResult simplex_power_mc(double periodic_alpha, const std::vector<double>& interior_alphas,
                          long long samples, std::uint64_t seed) {
    const int n = static_cast<int>(interior_alphas.size()) + 1;
    auto integrand = [&](const std::vector<double>& s) {
        double v = std::pow(1.0 - s.front() + s.back(), -periodic_alpha);
        for (int i = 0; i + 1 < n; ++i) v *= std::pow(s[i] - s[i + 1], -interior_alphas[i]);
        return v;
    };
    return mc_integrate_simplex_gaps(n, integrand, interior_alphas, seed, samples);
}

std::pair<double, std::vector<double>> pattern_gap_exponents(const std::vector<int>& pattern,
                                                             double type2_alpha,
                                                             GapConvention convention) {
    if (pattern.empty()) throw numeric_error("pattern_gap_exponents: empty pattern");
    auto slot_alpha = [&](int slot) {
        const int kappa = pattern[slot];
        if (kappa != 1 && kappa != 2) throw numeric_error("pattern_gap_exponents: entries must be 1 or 2");
        return kappa == 2 ? type2_alpha : 0.0;
    };
    const int n = static_cast<int>(pattern.size());
    std::vector<double> interior(n - 1, 0.0);
    for (int i = 0; i + 1 < n; ++i)
        interior[i] = convention == GapConvention::SharedFirst ? slot_alpha(i) : slot_alpha(i + 1);
    return {slot_alpha(0), interior};
}

StirlingBounds stirling_bounds(double x) {
    if (x < 1.0) throw numeric_error("stirling_bounds: x must be >= 1");
    StirlingBounds b{};
    const double log_lower = 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(x) - x;
    b.lower = std::exp(log_lower);
    b.upper = std::exp(log_lower + 1.0);
    b.gamma_value = std::exp(std::lgamma(x));
    b.holds = b.lower <= b.gamma_value && b.gamma_value <= b.upper;
    return b;
}

GammaRatio gamma_ratio_bound(int n1, int n2, double gamma) {
    if (n1 + n2 < 1) throw numeric_error("gamma_ratio_bound: need n1 + n2 >= 1");
    if (gamma < 0.0 || gamma > 0.5) throw numeric_error("gamma_ratio_bound: gamma must lie in [0, 1/2]");
    GammaRatio r{};
    const double denom_arg = n1 + 2.0 * (1.0 - gamma) * n2;
    r.lhs = std::exp(std::lgamma(n1 + n2 + 1.0) - std::lgamma(denom_arg));
    const int n = n1 + 2 * n2;
    r.rhs = (n + 1.0) * (n + 1.0) * std::pow(denom_arg / M_E, -(1.0 - 2.0 * gamma) * n2);
    r.holds = r.lhs <= r.rhs * (1.0 + 1e-12);
    return r;
}

}  // namespace oscbath
