// model.hpp — physical configuration: oscillator frequency, coupling, inverse
// temperature and the radial form factor with its weighted norms. Natural
// units (hbar = k_B = 1, dispersion alpha(k) = |k|) throughout.
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace oscbath {

enum class ProfileKind { Zero, PowerLaw, Tabulated, DiscreteModes };

/// One discretized bath mode: frequency omega > 0 and coupling weight g.
struct Mode {
    double omega = 0.0;
    double g = 0.0;
};

/// Radial profile f(k) = f(|k|) on R^3, supported in |k| <= cutoff.
///
/// PowerLaw:      f(r) = amplitude * r^exponent on (0, cutoff];
///                weighted norms require exponent > -1.
/// Tabulated:     piecewise-linear f on a radial grid; support is the grid
///                range (use a grid starting above 0 for shell profiles).
/// DiscreteModes: finitely many (omega_j, g_j); integrals become sums with
///                |f|^2 dk -> g_j^2. This is the surrogate the truncated
///                oracle and the kernel pipeline share.
class FormFactor {
  public:
    FormFactor();  // zero profile

    static FormFactor zero();
    static FormFactor power_law(double amplitude, double exponent, double cutoff);
    static FormFactor tabulated(std::vector<double> r, std::vector<double> f);
    static FormFactor discrete_modes(std::vector<Mode> modes);

    ProfileKind kind() const;
    double cutoff() const;
    /// Radial profile value; zero outside the support. Not defined for
    /// DiscreteModes.
    double value(double r) const;
    const std::vector<Mode>& modes() const;

    /// int |f(k)|^2 |k|^w dk = 4 pi int f(r)^2 r^{2+w} dr. Closed form for
    /// PowerLaw, grid quadrature for Tabulated, a finite sum for modes.
    /// Requires w > -3 and an integrable combination.
    double weighted_norm_sq(double w) const;

    /// int |f(k)|^2 coth(beta |k| / 2) dk.
    double coth_weighted_norm_sq(double beta) const;

    /// Quadrature grid over the radial support: abscissas r_i and weights
    /// q_i such that int |f|^2 phi(|k|) dk ~= sum q_i phi(r_i) for smooth or
    /// integrably-singular phi (the grid is graded toward r = 0). For
    /// DiscreteModes r_i = omega_i and q_i = g_i^2 exactly.
    struct SpectralGrid {
        std::vector<double> r;
        std::vector<double> q;
    };
    const SpectralGrid& spectral_grid() const;

    std::string describe() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit FormFactor(std::shared_ptr<const Impl> impl);
};

/// Full physical configuration of the oscillator-bath model.
struct ModelParams {
    double theta = 1.0;   // oscillator frequency
    double lambda = 0.0;  // coupling strength
    double beta = 1.0;    // inverse temperature
    FormFactor form_factor;

    void validate() const;  // theta > 0, beta > 0
};

/// Scalar interaction-strength profiles entering the eta functionals. The
/// pair-coupling profiles g_norm/h_norm bound the quadratic part; the
/// f-profiles bound the linear part regularized by the gamma-th power of the
/// shifted particle Hamiltonian. Note: the second functional squares both
/// f-profiles (the asymmetric first-power variant is a suspected misprint;
/// see README).
struct EtaProfiles {
    double gamma = 0.0;  // in [0, 1/2]
    FormFactor g_norm;
    FormFactor h_norm;
    FormFactor f_gamma_norm;
    FormFactor f_star_gamma_norm;
};

/// eta1 = int (|g|^2 + |h|^2) (2 + 4/|k|) dk,
/// eta2 = int (|f_gamma|^2 + |f*_gamma|^2) (2 + 4/|k|) dk.
std::pair<double, double> eta_functionals(const EtaProfiles& p);

}  // namespace oscbath
