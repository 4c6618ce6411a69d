#include "oscbath/kernels.hpp"

#include <cmath>

#include "oscbath/errors.hpp"
#include "oscbath/quadrature.hpp"
#include "oscbath/rng.hpp"

namespace oscbath {

namespace {

// log(sinh(y)) without overflow.
double log_sinh(double y) {
    if (y > 36.0) return y - M_LN2;
    return std::log(std::sinh(y));
}

// log(expm1(y)) without overflow.
double log_expm1(double y) {
    if (y > 36.0) return y + std::log1p(-std::exp(-y));
    return std::log(std::expm1(y));
}

// cosh(x(t - 1/2)) / sinh(x/2) for t in [0,1], safe for large x.
double cosh_ratio(double x, double t) {
    if (x < 500.0) return std::cosh(x * (t - 0.5)) / std::sinh(0.5 * x);
    const double u = std::abs(t - 0.5) * x;
    // = exp(u - x/2) (1 + e^{-2u}) / (1 - e^{-x})
    return std::exp(u - 0.5 * x) * (1.0 + std::exp(-2.0 * u)) / (-std::expm1(-x));
}

}  // namespace

double rho_beta(double k_abs, double beta) {
    if (k_abs <= 0.0) throw numeric_error("rho_beta: pole at |k| = 0");
    if (beta <= 0.0) throw numeric_error("rho_beta: beta must be > 0");
    const double x = beta * k_abs;
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

double k_osc(double t, double beta, double theta) {
    if (t < 0.0 || t > 1.0) throw numeric_error("k_osc: t must lie in [0,1]");
    return cosh_ratio(beta * theta, t) / (2.0 * theta);
}

double integral_k_osc_closed(double beta, double theta) {
    return 2.0 / (theta * theta * beta);
}

double integral_k_osc_quadrature(double beta, double theta, int order) {
    const auto& rule = GaussLegendre::get(order);
    // Evenness: int_{-1}^{1} K(|s|) ds = 2 int_0^1 K(s) ds.
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * k_osc(rule.nodes[i], beta, theta);
    return 2.0 * sum;
}

KernelEval::KernelEval(const ModelParams& params) : params_(params) {
    params_.validate();
    norm0_ = params_.form_factor.weighted_norm_sq(0.0);
    norm_m1_ = params_.form_factor.weighted_norm_sq(-1.0);
    (void)params_.form_factor.spectral_grid();

    // Chebyshev fit of K_f on [0,1], validated against the direct sum; the
    // kernel is analytic so the fit converges geometrically, but sharply
    // peaked kernels (large beta*cutoff) may need more terms.
    if (params_.form_factor.kind() == ProfileKind::Zero) return;
    const double scale = std::max(std::abs(k_f(0.0)), 1e-300);
    for (int degree = 64; degree <= 4096; degree *= 2) {
        const int n = degree + 1;
        std::vector<double> fv(n);
        for (int j = 0; j < n; ++j) {
            const double x = std::cos(M_PI * (j + 0.5) / n);  // [-1,1]
            fv[j] = k_f(0.5 * (x + 1.0));
        }
        cheb_.assign(n, 0.0);
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += fv[j] * std::cos(M_PI * k * (j + 0.5) / n);
            cheb_[k] = 2.0 * acc / n;
        }
        cheb_[0] *= 0.5;
        // validate at points unrelated to the fit nodes
        auto eng = rng::make_engine(0x636865624bULL);
        use_table_ = true;
        double max_err = 0.0;
        for (int t = 0; t < 64; ++t) {
            const double x = rng::uniform(eng);
            max_err = std::max(max_err, std::abs(k_f_fast(x) - k_f(x)));
        }
        cheb_tol_ = max_err / scale;
        if (cheb_tol_ < 1e-9) return;
        use_table_ = false;
    }
    // fall back to direct evaluation; k_f_fast() degrades gracefully
}

double KernelEval::k_osc(double t) const { return oscbath::k_osc(t, params_.beta, params_.theta); }

double KernelEval::k_f(double t) const {
    if (t < 0.0 || t > 1.0) throw numeric_error("k_f: t must lie in [0,1]");
    const double beta = params_.beta;
    const auto& grid = params_.form_factor.spectral_grid();
    // Subtract the 1/(beta r) singular part of cosh(..)/(2 sinh(..)) and add
    // it back in closed form: int |f|^2 / (beta |k|) dk = norm_m1 / beta.
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.r.size(); ++i) {
        const double r = grid.r[i];
        const double x = beta * r;
        double regular;
        if (x < 1e-3) {
            // cosh(x(t-1/2))/(2 sinh(x/2)) - 1/x expanded at small x
            const double u = t - 0.5;
            regular = x * (0.5 * u * u - 1.0 / 24.0) +
                      x * x * x * (u * u * u * u / 24.0 - u * u / 48.0 + 7.0 / 5760.0);
        } else {
            regular = 0.5 * cosh_ratio(x, t) - 1.0 / x;
        }
        sum += grid.q[i] * regular;
    }
    return sum + norm_m1_ / beta;
}

double KernelEval::k_f_fast(double t) const {
    if (!use_table_) return k_f(t);
    // Clenshaw on [0,1] -> [-1,1]
    const double x = 2.0 * t - 1.0;
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = cheb_.size(); k-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + cheb_[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + cheb_[0];
}

double KernelEval::integral_k_f() const { return 2.0 * norm_m1_ / params_.beta; }

KernelEval::SupKf KernelEval::sup_k_f() const {
    return {k_f(0.0), 0.5 * norm0_ + norm_m1_ / params_.beta};
}

double KernelEval::sinh_weighted_integral() const {
    const double beta = params_.beta;
    const double theta = params_.theta;
    const auto& grid = params_.form_factor.spectral_grid();
    const double ls_theta = log_sinh(0.5 * beta * theta);
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.r.size(); ++i) {
        const double ls = log_sinh(0.5 * beta * grid.r[i]);
        sum += grid.q[i] * std::exp(-ls - ls_theta);
    }
    return sum / theta;
}

std::complex<double> two_point(Ladder sig_i, Ladder sig_j, double s_i, double s_j,
                               const FormFactor& f_i, const FormFactor& f_j, double beta) {
    if (s_i < 0.0 || s_i > 1.0 || s_j < 0.0 || s_j > 1.0)
        throw numeric_error("two_point: times must lie in [0,1]");
    if (sig_i == sig_j) return {0.0, 0.0};

    const bool mixed_modes = f_i.kind() == ProfileKind::DiscreteModes ||
                             f_j.kind() == ProfileKind::DiscreteModes;
    if (mixed_modes && (f_i.kind() != f_j.kind()))
        throw numeric_error("two_point: cannot mix discrete-mode and continuum profiles");

    // exponent coefficient c in e^{beta c |k|} rho_beta(|k|)
    const double c = sig_i == Ladder::Creation ? (s_i - s_j) : (1.0 + s_j - s_i);

    auto weight = [&](double r) {
        const double x = beta * r;
        const double arg = x * c - log_expm1(x);
        if (arg > 700.0) throw numeric_error("two_point: thermal weight overflow");
        return std::exp(arg);
    };

    double sum = 0.0;
    if (mixed_modes) {
        const auto& mi = f_i.modes();
        const auto& mj = f_j.modes();
        if (mi.size() != mj.size()) throw numeric_error("two_point: mode sets differ");
        for (std::size_t a = 0; a < mi.size(); ++a) {
            if (mi[a].omega != mj[a].omega) throw numeric_error("two_point: mode sets differ");
            sum += mi[a].g * mj[a].g * weight(mi[a].omega);
        }
    } else {
        // fresh product grid over the union of supports
        const double hi = std::max(f_i.cutoff(), f_j.cutoff());
        const auto& rule = GaussLegendre::get(12);
        double b = hi;
        for (int panel = 0; panel < 48; ++panel) {
            const double a = b / 2;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const double r = a + (b - a) * rule.nodes[q];
                sum += (b - a) * rule.weights[q] * 4.0 * M_PI * r * r * f_i.value(r) *
                       f_j.value(r) * weight(r);
            }
            b = a;
        }
    }
    return {sum, 0.0};
}

}  // namespace oscbath
