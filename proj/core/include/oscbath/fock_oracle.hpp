// fock_oracle.hpp — independent ground truth at desk scale: the oscillator
// plus finitely many truncated boson modes realized as dense matrices, exact
// thermal expectations in the eigenbasis, a Wick-factorization check, and a
// simplex-MC evaluation of the series coefficients that never touches the
// pairing pipeline.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oscbath/dyson.hpp"
#include "oscbath/model.hpp"

namespace oscbath {

/// Finite truncation: d_el oscillator levels, d_b boson levels per mode.
struct TruncationSpec {
    int d_el = 16;
    std::vector<Mode> modes;
    int d_b = 16;
};

// Tensor-product dimension cap for the dense operators.
inline constexpr long kFockDimensionGuard = 200000;

/// Collapses the radial spectral density 4 pi r^2 |f(r)|^2 into M modes by
/// equal-weight quantiles with centroid frequencies. Conserves the L^2 norm
/// exactly: sum g_j^2 = ||f||^2; sum g_j^2 / omega_j -> ||k^{-1/2} f||^2 as
/// M grows.
std::vector<Mode> mode_discretization(const FormFactor& f, int mode_count);

/// Dense real-symmetric operators in the number basis of the product space.
/// h_free = Theta (b*b + 1/2) (x) 1 + sum_j omega_j n_j,
/// h_int  = lambda q (x) sum_j g_j (a_j + a_j*)/sqrt(2),   q = (b + b*)/sqrt(2 Theta).
struct Operators {
    long dim = 0;
    Eigen::MatrixXd h_free;
    Eigen::MatrixXd h_int;
    Eigen::MatrixXd q;                       // oscillator position (x) 1
    Eigen::MatrixXd phi_total;               // sum_j g_j (a_j + a_j*)/sqrt(2)
    std::vector<Eigen::MatrixXd> phi_modes;  // (a_j + a_j*)/sqrt(2), unweighted
};
Operators build_operators(const TruncationSpec& spec, const ModelParams& params);

struct SpectralData {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXd eigenvectors;
    double ground_energy() const { return eigenvalues[0]; }
    /// Partition function with energies shifted by the ground state.
    double z_shifted(double beta) const;
};
SpectralData diagonalize(const Eigen::MatrixXd& h);

/// Tr{ e^{-beta H} A_1(t_1) ... A_q(t_q) } / Tr{ e^{-beta H} } with
/// A(t) = e^{-t beta H} A e^{t beta H}; the operator list is in product order
/// and the rescaled times must be weakly ascending in [0,1] (mirroring the
/// ordered-simplex chains). Semigroup gaps are absorbed pairwise so no
/// intermediate factor exceeds one.
double thermal_expectation(const SpectralData& sd, double beta,
                           const std::vector<std::pair<Eigen::MatrixXd, double>>& ops);

/// Exact truncated single-mode chain of insertions coeff*(a + a*) at the
/// given ascending times, for a free mode of the given frequency (banded
/// propagation in the number basis; odd insertion counts vanish exactly).
double free_chain_expectation(double omega, double coeff, int levels, double beta,
                              const std::vector<double>& times_ascending);

/// Free-field 2q-point function of Phi = sum_j g_j (a_j + a_j*)/sqrt(2) for
/// independent truncated modes, by tensor-product factorization over the
/// even-count mode assignments (2 or 4 insertions for any mode count; any
/// even count for a single mode).
double field_npoint(const std::vector<Mode>& modes, int d_b, double beta,
                    const std::vector<double>& times_ascending);

struct WickReport {
    int n = 0;
    std::vector<double> times;  // descending, as indexed by the pairing sum
    double osc_exact = 0.0;
    double osc_pairing = 0.0;
    double field_exact = 0.0;
    double field_pairing = 0.0;
    double max_rel_dev = 0.0;
};

/// Compares the exact truncated 2n-point functions of the free state against
/// the pairing sums of two-point kernels (oscillator and field sides).
WickReport wick_check(const TruncationSpec& spec, const ModelParams& params, int n);

/// Relative change of the field two-point value when d_b doubles; monitors
/// the truncation error instead of assuming it.
double truncation_probe(const TruncationSpec& spec, double beta);

/// Series coefficient by simplex MC of the exact factorized traces,
/// independent of the pairing pipeline end to end. Guarded at n <= 2.
SeriesTerm h2n_oracle(int n, const ModelParams& params, const TruncationSpec& spec,
                      const McSettings& mc = {});

}  // namespace oscbath
