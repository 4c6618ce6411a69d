// quadrature.hpp — integration engines: Gauss-Legendre rules, deterministic
// simplex/hypercube Monte Carlo, Dirichlet-gap importance sampling for
// integrands singular in the ordered-coordinate gaps, and the discretized
// integral-operator trace for alternating cycle integrals.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace oscbath {

/// Gauss-Legendre rule mapped to [0,1]. Rules are computed once and cached.
struct GaussLegendre {
    std::vector<double> nodes;    // on (0,1)
    std::vector<double> weights;  // sum to 1

    static const GaussLegendre& get(int n);
};

struct McResult {
    double value = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

using Integrand = std::function<double(const std::vector<double>&)>;

/// Points uniform on the ordered simplex {0 <= s_n <= ... <= s_1 <= 1},
/// generated as sorted independent uniforms. Deterministic given (seed,
/// count); the stream is chunked so parallel consumption by index range
/// reproduces the sequential draw.
struct SimplexSampler {
    int dimension;
    std::uint64_t seed;
    long long count;

    /// fn receives each sample with coordinates in decreasing order.
    void run(const std::function<void(const std::vector<double>&)>& fn) const;
};

/// Unbiased MC estimate of an integral over the ordered simplex of dimension
/// n (the 1/n! volume weight is applied exactly). Coordinates are passed in
/// decreasing order. NaN/Inf from the integrand aborts with the sample
/// coordinates in the message.
McResult mc_integrate_simplex(int n, const Integrand& f, std::uint64_t seed, long long count);

/// Importance-sampled variant for integrands with factors
/// prod_i (s_i - s_{i+1})^{-a_i} that defeat uniform sampling (infinite second
/// moment). Gaps are drawn from a Dirichlet law whose exponents absorb
/// interior_gap_alphas analytically; f is still the full integrand. All
/// a_i must lie in [0, 1).
McResult mc_integrate_simplex_gaps(int n, const Integrand& f,
                                   const std::vector<double>& interior_gap_alphas,
                                   std::uint64_t seed, long long count);

McResult mc_integrate_hypercube(int dim, const Integrand& f, std::uint64_t seed, long long count);

using Kernel1D = std::function<double(double)>;

struct CycleResult {
    double value = 0.0;
    double error_estimate = 0.0;  // Richardson difference between N and 2N
    int grid = 0;
    bool converged = true;  // false carries a numeric warning, not an error
};

/// The alternating 2m-cycle integral
///   \int_{[0,1]^{2m}} prod K1(|s_1-s_2|) K2(|s_2-s_3|) ... K2(|s_2m-s_1|) ds
/// evaluated as trace((T_{K1} T_{K2})^m) with T_K the Gauss-Legendre
/// discretization of the integral operator with kernel K(|t-s|) on [0,1].
/// Both kernels must be positive; the result is checked nonnegative.
CycleResult cycle_integral(int m, const Kernel1D& k1, const Kernel1D& k2, int grid_n,
                           double tolerance = 5e-3);

}  // namespace oscbath
