// bounds.hpp — the analytic bounds and convergence criteria as executable
// predicates and numbers: the cycle-integral sandwich, the series-coefficient
// growth bound, the beta-independent dipole certificate, the divergence lower
// bound with its witness search, the general eta-criterion, Gamma-function
// simplex integrals and the Stirling/Gamma-ratio checks.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscbath/kernels.hpp"
#include "oscbath/model.hpp"
#include "oscbath/quadrature.hpp"

namespace oscbath {

struct BoundResult {
    std::string name;
    double value = 0.0;
    std::optional<bool> satisfied;  // set for criteria
    double margin = 0.0;            // signed distance to the threshold
    std::map<std::string, double> inputs;
};

/// Candidate constants for the summarized cycle upper bound
/// (2 ||k^{-1/2} f|| / (Theta beta))^{2m} (C beta + 1). The plus-weight variant
/// carries the +1/2 weight; the alternative carries -1/2. Only c_minus is
/// implied by the factorized proof chain (it dominates the exact
/// beta-dependent factor (beta/2N_{-1}) sup K_f + ... for every beta); the
/// sandwich suite measures both.
struct CycleBoundConstants {
    double c_plus;   // (1/2) ||f||^2 / || k^{+1/2} f ||^2
    double c_minus;  // (1/2) ||f||^2 / || k^{-1/2} f ||^2
};
CycleBoundConstants cycle_bound_constants(const FormFactor& f);

/// Sandwich bounds for the connected 2m-point cycle integral J(2m, beta).
struct SandwichBounds {
    double lower;               // (K_osc(1/2) K_f(1/2))^m, the minima product
    double lower_sinh_form;     // X^m, X the sinh-weighted integral; equals
                                // 4^m times the minima product (flagged)
    double upper;               // (int K_osc)^m (int K_f)^{m-1} sup K_f
    double upper_summary_plus;  // summarized form with c_plus
    double upper_summary_minus;  // summarized form with c_minus
};
SandwichBounds cycle_bounds(int m, const KernelEval& kernels);

/// Growth bound for the 2n-th series coefficient:
///   (2 Theta^{-1} ||k^{-1/2} f|| |lambda|)^{2n} (n+1)^{(C beta + 1)/2}.
double series_coefficient_bound(int n, const ModelParams& params, double c_constant);

/// The harmonic-sum intermediate of the same chain:
///   (...)^{2n} sum_{k=1}^{2n} ((C beta + 1)/2 * H_n)^k / k!.
/// Note H_n >= ln(n+1), so the closed polynomial form above dominates this
/// only up to a factor e^{(C beta + 1)/2} (the ln comparison in the source
/// chain points the wrong way); both are exposed, the dominance checks run
/// against the computed coefficients.
double series_coefficient_bound_harmonic(int n, const ModelParams& params, double c_constant);

/// The beta-independent convergence certificate for the dipole model:
/// satisfied iff |2 lambda / Theta| * ||k^{-1/2} f|| < 1, margin is
/// 1 - that product. Monotone in |lambda|.
BoundResult certify_dipole(const ModelParams& params);

/// base = (beta^2 lambda^2 / 4) * X with X the sinh-weighted integral;
/// the 2n-th coefficient is bounded below by base^n / (2n).
double divergence_base(const KernelEval& kernels);
double divergence_lower(int n, const KernelEval& kernels);

/// Smallest |lambda| with base >= 1 (bisection to 1e-10 relative, returning
/// the endpoint on which base >= 1 holds in floating point, so that
/// base^n * 2n / (2n) >= 1 evaluates exactly). Empty when the form factor
/// vanishes.
std::optional<double> divergence_witness(const KernelEval& kernels);

/// Norm-series bound prefactor * (n+1)^2 (1+beta)^n
/// (8 eta1 + sqrt(8 c_inner eta2) / (n+1)^{(1-2gamma)/2})^n.
/// The two unnamed constants are explicit inputs (default 1) and are echoed
/// in the result of certify_eta.
double norm_series_bound(int n, double beta, double eta1, double eta2, double gamma,
                         double c_inner = 1.0, double prefactor = 1.0);

/// Executable surrogate for the "much less than one" smallness conditions:
/// for gamma < 1/2 require (1+beta) * 8 eta1 < 1; for gamma = 1/2 require
/// (1+beta) * (8 eta1 + sqrt(8 c_inner eta2)) < 1. The thresholds are this
/// artifact's concretization; the n-th root of the norm-series bound must
/// drop below one for summability, which is exactly what they enforce.
BoundResult certify_eta(double eta1, double eta2, double gamma, double beta,
                        double c_inner = 1.0);
BoundResult certify_eta(const EtaProfiles& profiles, double beta, double c_inner = 1.0);

/// Compact Gamma form quoted for the ordered-simplex power integral:
///   Gamma(1-alpha1)^{-1} Gamma(1-gamma)^{2 n2} / Gamma(n1 + 2 n2 (1-gamma)).
/// Kept verbatim for the bound chain; simplex_power_exact below is the
/// honestly derived value of the integral and the two differ (see README).
double simplex_power_formula(int n1, int n2, double gamma, double alpha1);

/// Exact value of int_{Delta_1^n} (1 - s_1 + s_n)^{-a_per}
/// prod_{i=1}^{n-1} (s_i - s_{i+1})^{-a_i} ds by the Dirichlet integral:
///   Gamma(2 - a_per) prod Gamma(1 - a_i) / Gamma(2 - a_per + sum (1 - a_i)).
double simplex_power_exact(double periodic_alpha, const std::vector<double>& interior_alphas);

/// Monte Carlo of the same integral via the Dirichlet-gap sampler (the
/// interior singular powers are absorbed analytically).
McResult simplex_power_mc(double periodic_alpha, const std::vector<double>& interior_alphas,
                          long long samples, std::uint64_t seed);

/// Which gap carries the exponent of slot i: the slot-1 exponent is shared by
/// the periodic gap and the first interior gap (SharedFirst), or interior
/// gap i takes the exponent of slot i+1 (Shifted). Both are integrated and
/// compared; the index convention in the source material is ambiguous.
enum class GapConvention { SharedFirst, Shifted };

/// Maps a slot pattern (entries 1 or 2, type-2 slots carrying type2_alpha)
/// to (periodic_alpha, interior_alphas) under the chosen convention.
std::pair<double, std::vector<double>> pattern_gap_exponents(const std::vector<int>& pattern,
                                                             double type2_alpha,
                                                             GapConvention convention);

struct StirlingBounds {
    double lower;        // sqrt(2 pi) x^{x-1/2} e^{-x}
    double gamma_value;  // Gamma(x)
    double upper;        // lower * e
    bool holds;
};
StirlingBounds stirling_bounds(double x);

/// Gamma(n1+n2+1)/Gamma(n1 + 2(1-gamma) n2) against the polynomial bound
/// (n+1)^2 ((n1 + 2(1-gamma) n2)/e)^{-(1-2gamma) n2}, n = n1 + 2 n2.
struct GammaRatio {
    double lhs;
    double rhs;
    bool holds;
};
GammaRatio gamma_ratio_bound(int n1, int n2, double gamma);

}  // namespace oscbath
