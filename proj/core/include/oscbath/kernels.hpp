// kernels.hpp — thermal two-point kernels of the oscillator and the field on
// the rescaled imaginary-time interval [0,1], the Planck density, and the
// closed-form kernel integrals used by the cycle-integral bounds.
#pragma once

#include <complex>

#include "oscbath/model.hpp"

namespace oscbath {

/// Planck occupation 1/(e^{beta k} - 1); stable for small arguments.
/// Throws for k_abs <= 0 (pole).
double rho_beta(double k_abs, double beta);

/// K_osc(t) = cosh(beta Theta (t - 1/2)) / (2 Theta sinh(Theta beta / 2)),
/// t in [0,1]. Log-domain evaluation for large beta*Theta.
double k_osc(double t, double beta, double theta);

/// Closed form of int_{-1}^{1} K_osc(|s|) ds = 2 / (Theta^2 beta).
double integral_k_osc_closed(double beta, double theta);

/// The same integral by Gauss-Legendre quadrature (testing hook).
double integral_k_osc_quadrature(double beta, double theta, int order = 64);

/// Immutable kernel evaluator for one model configuration. Construction
/// caches the radial quadrature grid of K_f and a Chebyshev interpolant that
/// is validated against the direct evaluation.
class KernelEval {
  public:
    explicit KernelEval(const ModelParams& params);

    const ModelParams& params() const { return params_; }

    double k_osc(double t) const;

    /// K_f(t) = int cosh(beta |k| (t - 1/2)) |f(k)|^2 / (2 sinh(beta |k|/2)) dk,
    /// radial quadrature with the 1/(beta r) singular part subtracted and
    /// integrated in closed form.
    double k_f(double t) const;

    /// Chebyshev-interpolated K_f for Monte Carlo hot paths; agrees with
    /// k_f() to ~1e-9 relative (validated at construction).
    double k_f_fast(double t) const;

    /// int_{-1}^{1} K_f(|s|) ds = (2 / beta) * ||k^{-1/2} f||^2, closed form.
    double integral_k_f() const;

    struct SupKf {
        double exact;  // K_f(0), the sup by convexity
        double bound;  // (1/2)||f||^2 + (1/beta)||k^{-1/2}f||^2
    };
    SupKf sup_k_f() const;

    /// X = Theta^{-1} int |f(k)|^2 / (sinh(|k| beta/2) sinh(Theta beta/2)) dk,
    /// evaluated in the log domain (equals 4 K_osc(1/2) K_f(1/2)).
    double sinh_weighted_integral() const;

  private:
    ModelParams params_;
    double norm0_;       // ||f||^2
    double norm_m1_;     // || |k|^{-1/2} f ||^2
    std::vector<double> cheb_;  // Chebyshev coefficients of K_f on [0,1]
    double cheb_tol_ = 0.0;
    bool use_table_ = false;
};

enum class Ladder { Creation, Annihilation };

/// Free thermal two-point functions of creation/annihilation pairs at
/// rescaled imaginary times s_i, s_j in [0,1]:
///   <a+ a+> = <a- a-> = 0,
///   <a+ a-> = int f_i conj(f_j) e^{beta (s_i - s_j) |k|} rho_beta dk,
///   <a- a+> = int f_j conj(f_i) e^{beta (1 + s_j - s_i) |k|} rho_beta dk.
/// These are the exact values; the coth-weighted norm is only a majorant of
/// their combinations and is never substituted for them.
std::complex<double> two_point(Ladder sig_i, Ladder sig_j, double s_i, double s_j,
                               const FormFactor& f_i, const FormFactor& f_j, double beta);

}  // namespace oscbath
