#include "oscbath/model.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "oscbath/errors.hpp"
#include "oscbath/quadrature.hpp"

namespace oscbath {

namespace {

constexpr double kFourPi = 4.0 * M_PI;

// coth with a stable small-argument branch.
double coth(double x) {
    if (x < 1e-4) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    if (x > 350.0) return 1.0;
    return 1.0 + 2.0 / std::expm1(2.0 * x);
}

}  // namespace

struct FormFactor::Impl {
    ProfileKind kind = ProfileKind::Zero;
    // PowerLaw
    double amplitude = 0.0;
    double exponent = 0.0;
    double cutoff = 0.0;
    // Tabulated
    std::vector<double> grid_r;
    std::vector<double> grid_f;
    // DiscreteModes
    std::vector<Mode> modes;

    mutable std::once_flag grid_once;
    mutable SpectralGrid spectral;

    double value(double r) const {
        switch (kind) {
            case ProfileKind::Zero:
                return 0.0;
            case ProfileKind::PowerLaw:
                return (r <= 0.0 || r > cutoff) ? 0.0 : amplitude * std::pow(r, exponent);
            case ProfileKind::Tabulated: {
                if (r < grid_r.front() || r > grid_r.back()) return 0.0;
                const auto it = std::upper_bound(grid_r.begin(), grid_r.end(), r);
                const std::size_t hi = std::min<std::size_t>(it - grid_r.begin(), grid_r.size() - 1);
                const std::size_t lo = hi == 0 ? 0 : hi - 1;
                if (hi == lo) return grid_f[lo];
                const double t = (r - grid_r[lo]) / (grid_r[hi] - grid_r[lo]);
                return grid_f[lo] + t * (grid_f[hi] - grid_f[lo]);
            }
            case ProfileKind::DiscreteModes:
                throw numeric_error("FormFactor::value is not defined for discrete modes");
        }
        return 0.0;
    }

    // Graded composite Gauss panels, dyadic toward r = 0 so that integrable
    // singularities like 1/r are resolved without special-casing.
    void build_grid() const {
        spectral.r.clear();
        spectral.q.clear();
        if (kind == ProfileKind::Zero) return;
        if (kind == ProfileKind::DiscreteModes) {
            for (const auto& m : modes) {
                spectral.r.push_back(m.omega);
                spectral.q.push_back(m.g * m.g);
            }
            return;
        }
        const auto& rule = GaussLegendre::get(12);
        auto add_panel = [&](double a, double b) {
            if (b <= a) return;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double r = a + (b - a) * rule.nodes[i];
                const double f = value(r);
                spectral.r.push_back(r);
                spectral.q.push_back((b - a) * rule.weights[i] * kFourPi * r * r * f * f);
            }
        };
        if (kind == ProfileKind::Tabulated) {
            // Per-interval panels keep the piecewise-linear kinks on panel edges.
            for (std::size_t i = 0; i + 1 < grid_r.size(); ++i) {
                if (grid_r[i] > 0.0 || i > 0) {
                    add_panel(grid_r[i], grid_r[i + 1]);
                } else {
                    // first interval touches 0: grade it
                    double b = grid_r[i + 1];
                    for (int j = 0; j < 40; ++j) {
                        add_panel(b / 2, b);
                        b /= 2;
                    }
                }
            }
            return;
        }
        double b = cutoff;
        for (int j = 0; j < 48; ++j) {
            add_panel(b / 2, b);
            b /= 2;
        }
    }

    const SpectralGrid& grid() const {
        std::call_once(grid_once, [this] { build_grid(); });
        return spectral;
    }
};

FormFactor::FormFactor() : impl_(std::make_shared<Impl>()) {}
FormFactor::FormFactor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FormFactor FormFactor::zero() { return FormFactor(); }

FormFactor FormFactor::power_law(double amplitude, double exponent, double cutoff) {
    if (amplitude <= 0.0) throw numeric_error("power_law form factor: amplitude must be > 0");
    if (cutoff <= 0.0) throw numeric_error("power_law form factor: cutoff must be > 0");
    if (exponent <= -1.0)
        throw numeric_error("power_law form factor: exponent must exceed -1 for finite weighted norms");
    auto impl = std::make_shared<Impl>();
    impl->kind = ProfileKind::PowerLaw;
    impl->amplitude = amplitude;
    impl->exponent = exponent;
    impl->cutoff = cutoff;
    return FormFactor(std::move(impl));
}

FormFactor FormFactor::tabulated(std::vector<double> r, std::vector<double> f) {
    if (r.size() < 2 || r.size() != f.size())
        throw numeric_error("tabulated form factor: need matching grids with >= 2 points");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i + 1] <= r[i]) throw numeric_error("tabulated form factor: radial grid must increase");
    if (r.front() < 0.0) throw numeric_error("tabulated form factor: negative radius");
    auto impl = std::make_shared<Impl>();
    impl->kind = ProfileKind::Tabulated;
    impl->cutoff = r.back();
    impl->grid_r = std::move(r);
    impl->grid_f = std::move(f);
    return FormFactor(std::move(impl));
}

FormFactor FormFactor::discrete_modes(std::vector<Mode> modes) {
    if (modes.empty()) throw numeric_error("discrete_modes form factor: need at least one mode");
    double cutoff = 0.0;
    for (const auto& m : modes) {
        if (m.omega <= 0.0) throw numeric_error("discrete_modes form factor: frequencies must be > 0");
        cutoff = std::max(cutoff, m.omega);
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = ProfileKind::DiscreteModes;
    impl->cutoff = cutoff;
    impl->modes = std::move(modes);
    return FormFactor(std::move(impl));
}

ProfileKind FormFactor::kind() const { return impl_->kind; }
double FormFactor::cutoff() const { return impl_->cutoff; }
double FormFactor::value(double r) const { return impl_->value(r); }

const std::vector<Mode>& FormFactor::modes() const {
    if (impl_->kind != ProfileKind::DiscreteModes)
        throw numeric_error("FormFactor::modes: not a discrete-mode profile");
    return impl_->modes;
}

const FormFactor::SpectralGrid& FormFactor::spectral_grid() const { return impl_->grid(); }

double FormFactor::weighted_norm_sq(double w) const {
    if (w <= -3.0) throw numeric_error("weighted_norm_sq: weight must exceed -3");
    switch (impl_->kind) {
        case ProfileKind::Zero:
            return 0.0;
        case ProfileKind::PowerLaw: {
            const double e = 2.0 * impl_->exponent + 3.0 + w;
            if (e <= 0.0) throw numeric_error("weighted_norm_sq: non-integrable exponent/weight combination");
            const double c = impl_->amplitude;
            return kFourPi * c * c * std::pow(impl_->cutoff, e) / e;
        }
        case ProfileKind::Tabulated:
        case ProfileKind::DiscreteModes: {
            const auto& g = impl_->grid();
            double sum = 0.0;
            for (std::size_t i = 0; i < g.r.size(); ++i) sum += g.q[i] * std::pow(g.r[i], w);
            return sum;
        }
    }
    return 0.0;
}

double FormFactor::coth_weighted_norm_sq(double beta) const {
    if (beta <= 0.0) throw numeric_error("coth_weighted_norm_sq: beta must be > 0");
    const auto& g = impl_->grid();
    double sum = 0.0;
    for (std::size_t i = 0; i < g.r.size(); ++i) sum += g.q[i] * coth(0.5 * beta * g.r[i]);
    return sum;
}

std::string FormFactor::describe() const {
    std::ostringstream os;
    switch (impl_->kind) {
        case ProfileKind::Zero:
            os << "zero";
            break;
        case ProfileKind::PowerLaw:
            os << "power_law(c=" << impl_->amplitude << ", p=" << impl_->exponent
               << ", cutoff=" << impl_->cutoff << ")";
            break;
        case ProfileKind::Tabulated:
            os << "tabulated(" << impl_->grid_r.size() << " points on [" << impl_->grid_r.front()
               << ", " << impl_->grid_r.back() << "])";
            break;
        case ProfileKind::DiscreteModes:
            os << "discrete_modes(" << impl_->modes.size() << ")";
            break;
    }
    return os.str();
}

void ModelParams::validate() const {
    if (theta <= 0.0) throw config_error("model: theta must be > 0");
    if (beta <= 0.0) throw config_error("model: beta must be > 0");
}

std::pair<double, double> eta_functionals(const EtaProfiles& p) {
    if (p.gamma < 0.0 || p.gamma > 0.5)
        throw numeric_error("eta_functionals: gamma must lie in [0, 1/2]");
    // The (2 + 4/|k|) weight splits into plain and |k|^{-1} weighted norms.
    auto weighted = [](const FormFactor& f) {
        return 2.0 * f.weighted_norm_sq(0.0) + 4.0 * f.weighted_norm_sq(-1.0);
    };
    const double eta1 = weighted(p.g_norm) + weighted(p.h_norm);
    const double eta2 = weighted(p.f_gamma_norm) + weighted(p.f_star_gamma_norm);
    return {eta1, eta2};
}

}  // namespace oscbath
