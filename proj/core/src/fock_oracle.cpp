#include "oscbath/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oscbath/errors.hpp"
#include "oscbath/kernels.hpp"

namespace oscbath {

namespace {

void check_times(const std::vector<double>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0.0 || t[i] > 1.0) throw numeric_error("imaginary times must lie in [0,1]");
        if (i > 0 && t[i] < t[i - 1])
            throw numeric_error("imaginary times must be weakly ascending in product order");
    }
}

}  // namespace

std::vector<Mode> mode_discretization(const FormFactor& f, int mode_count) {
    if (mode_count < 1) throw numeric_error("mode_discretization: need at least one mode");
    if (f.kind() == ProfileKind::DiscreteModes)
        throw numeric_error("mode_discretization: profile is already discrete");
    if (f.kind() == ProfileKind::Zero)
        throw numeric_error("mode_discretization: zero profile has no spectral mass");

    const double grid_total = [&] {
        const auto& grid = f.spectral_grid();
        double s = 0.0;
        for (double q : grid.q) s += q;
        return s;
    }();
    if (!(grid_total > 0.0)) throw numeric_error("mode_discretization: profile has no spectral mass");
    const double g = std::sqrt(f.weighted_norm_sq(0.0) / mode_count);
    std::vector<Mode> modes(mode_count);

    // Sorted point masses form a step CDF; equal-weight quantile bins may cut
    // through a point, in which case its mass and first moment are split
    // proportionally so no bin comes out empty.
    const auto& grid = f.spectral_grid();
    std::vector<std::size_t> order(grid.r.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return grid.r[a] < grid.r[b]; });

    std::size_t pos = 0;
    double remaining = grid.q[order[0]];  // unconsumed mass of the current point
    for (int j = 0; j < mode_count; ++j) {
        double want = grid_total / mode_count;
        double bin_mass = 0.0, bin_moment = 0.0;
        while (want > 0.0 && pos < order.size()) {
            const std::size_t i = order[pos];
            const double take = std::min(want, remaining);
            bin_mass += take;
            bin_moment += take * grid.r[i];
            remaining -= take;
            want -= take;
            if (remaining <= 0.0 && pos + 1 < order.size()) {
                ++pos;
                remaining = grid.q[order[pos]];
            } else if (remaining <= 0.0) {
                ++pos;  // exhausted
            }
        }
        if (bin_mass <= 0.0) throw numeric_error("mode_discretization: empty quantile bin");
        modes[j] = {bin_moment / bin_mass, g};
    }
    return modes;
}

Operators build_operators(const TruncationSpec& spec, const ModelParams& params) {
    params.validate();
    if (spec.d_el < 2 || spec.d_b < 2) throw numeric_error("build_operators: need >= 2 levels");
    long dim = spec.d_el;
    for (std::size_t j = 0; j < spec.modes.size(); ++j) {
        if (spec.modes[j].omega <= 0.0) throw numeric_error("build_operators: mode frequency must be > 0");
        if (dim > kFockDimensionGuard / spec.d_b)
            throw guard_error("build_operators: total dimension exceeds " +
                              std::to_string(kFockDimensionGuard));
        dim *= spec.d_b;
    }

    const int n_modes = static_cast<int>(spec.modes.size());
    // index = n_el + d_el * (m_1 + d_b * (m_2 + ...))
    auto level = [&](long idx, int factor) {
        if (factor == 0) return static_cast<int>(idx % spec.d_el);
        idx /= spec.d_el;
        for (int j = 1; j < factor; ++j) idx /= spec.d_b;
        return static_cast<int>(idx % spec.d_b);
    };
    auto stride = [&](int factor) {
        long s = 1;
        if (factor > 0) {
            s = spec.d_el;
            for (int j = 1; j < factor; ++j) s *= spec.d_b;
        }
        return s;
    };

    Operators ops;
    ops.dim = dim;
    ops.h_free = Eigen::MatrixXd::Zero(dim, dim);
    ops.q = Eigen::MatrixXd::Zero(dim, dim);
    ops.phi_total = Eigen::MatrixXd::Zero(dim, dim);
    ops.phi_modes.assign(n_modes, Eigen::MatrixXd::Zero(dim, dim));

    for (long i = 0; i < dim; ++i) {
        double e = params.theta * (level(i, 0) + 0.5);
        for (int j = 0; j < n_modes; ++j) e += spec.modes[j].omega * level(i, j + 1);
        ops.h_free(i, i) = e;
    }
    // ladder structure factor by factor: (a + a*) couples adjacent levels
    const double q_scale = 1.0 / std::sqrt(2.0 * params.theta);
    for (long i = 0; i < dim; ++i) {
        const int nel = level(i, 0);
        if (nel + 1 < spec.d_el) {
            const long k = i + stride(0);
            const double amp = std::sqrt(nel + 1.0) * q_scale;
            ops.q(i, k) = amp;
            ops.q(k, i) = amp;
        }
        for (int j = 0; j < n_modes; ++j) {
            const int mj = level(i, j + 1);
            if (mj + 1 < spec.d_b) {
                const long k = i + stride(j + 1);
                const double amp = std::sqrt((mj + 1.0) / 2.0);
                ops.phi_modes[j](i, k) = amp;
                ops.phi_modes[j](k, i) = amp;
                ops.phi_total(i, k) += spec.modes[j].g * amp;
                ops.phi_total(k, i) += spec.modes[j].g * amp;
            }
        }
    }
    ops.h_int = params.lambda * ops.q * ops.phi_total;
    // q and phi_total act on different factors, so the product is symmetric.
    return ops;
}

double SpectralData::z_shifted(double beta) const {
    double z = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        z += std::exp(-beta * (eigenvalues[i] - eigenvalues[0]));
    return z;
}

SpectralData diagonalize(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw numeric_error("diagonalize: eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double thermal_expectation(const SpectralData& sd, double beta,
                           const std::vector<std::pair<Eigen::MatrixXd, double>>& ops) {
    const Eigen::Index dim = sd.eigenvalues.size();
    std::vector<double> times;
    times.reserve(ops.size());
    for (const auto& [m, t] : ops) times.push_back(t);
    check_times(times);

    const double e0 = sd.eigenvalues[0];
    auto damp = [&](double u) {
        Eigen::VectorXd d(dim);
        for (Eigen::Index i = 0; i < dim; ++i) d[i] = std::exp(-u * beta * (sd.eigenvalues[i] - e0));
        return d;
    };
    if (ops.empty()) return 1.0;

    const double u0 = 1.0 + times.front() - times.back();
    Eigen::MatrixXd chain =
        damp(u0).asDiagonal() * (sd.eigenvectors.transpose() * ops.front().first * sd.eigenvectors);
    for (std::size_t k = 1; k < ops.size(); ++k) {
        const Eigen::MatrixXd mk = sd.eigenvectors.transpose() * ops[k].first * sd.eigenvectors;
        chain = chain * (damp(times[k] - times[k - 1]).asDiagonal() * mk);
    }
    return chain.trace() / sd.z_shifted(beta);
}

double free_chain_expectation(double omega, double coeff, int levels, double beta,
                              const std::vector<double>& times_ascending) {
    if (levels < 2) throw numeric_error("free_chain_expectation: need >= 2 levels");
    if (omega <= 0.0 || beta <= 0.0) throw numeric_error("free_chain_expectation: need omega, beta > 0");
    check_times(times_ascending);
    const int q = static_cast<int>(times_ascending.size());
    if (q == 0) return 1.0;
    if (q % 2 == 1) return 0.0;  // parity: odd ladder chains vanish exactly

    const double u0 = 1.0 + times_ascending.front() - times_ascending.back();
    const double boltz = std::exp(-beta * omega);
    double z = 0.0;
    {
        double w = 1.0;
        for (int n = 0; n < levels; ++n, w *= boltz) z += w;
    }

    // hot path (Monte Carlo integrands call this concurrently): per-thread
    // scratch and one exp per time gap, extended level by level
    thread_local std::vector<double> x, y, root;
    x.assign(levels, 0.0);
    y.assign(levels, 0.0);
    if (static_cast<int>(root.size()) < levels + 1) {
        root.resize(levels + 1);
        for (int n = 0; n <= levels; ++n) root[n] = std::sqrt(static_cast<double>(n));
    }

    // per-step damping tables ratio^n, built once by running products
    thread_local std::vector<double> damp_flat;
    std::vector<const double*> damp(q, nullptr);
    if (static_cast<int>(damp_flat.size()) < q * levels) damp_flat.resize(q * levels);
    for (int step = 2; step <= q; ++step) {
        const double gap = times_ascending[step - 1] - times_ascending[step - 2];
        if (gap <= 0.0) continue;
        const double ratio = std::exp(-gap * beta * omega);
        double* table = damp_flat.data() + (step - 1) * levels;
        double v = 1.0;
        for (int n = 0; n < levels; ++n, v *= ratio) table[n] = v;
        damp[step - 1] = table;
    }

    const double head_ratio = std::exp(-u0 * beta * omega);
    double head = 1.0;
    double total = 0.0;
    for (int start = 0; start < levels; ++start, head *= head_ratio) {
        if (head < 1e-310) break;
        x[start] = 1.0;
        int lo = start, hi = start;
        for (int step = q; step >= 1; --step) {
            const int nlo = std::max(0, lo - 1);
            const int nhi = std::min(levels - 1, hi + 1);
            for (int n = nlo; n <= nhi; ++n) {
                double v = 0.0;
                if (n - 1 >= lo) v += root[n] * x[n - 1];      // a* amplitude
                if (n + 1 <= hi) v += root[n + 1] * x[n + 1];  // a amplitude
                y[n] = coeff * v;
            }
            lo = nlo;
            hi = nhi;
            if (step > 1 && damp[step - 1] != nullptr) {
                const double* table = damp[step - 1];
                for (int n = lo; n <= hi; ++n) y[n] *= table[n];
            }
            std::swap(x, y);
        }
        total += head * x[start];
        // clear the touched window for the next start
        for (int n = std::max(0, start - q); n <= std::min(levels - 1, start + q); ++n) {
            x[n] = 0.0;
            y[n] = 0.0;
        }
    }
    return total / z;
}

namespace {

// Per-mode chain factor for the insertions at the time subset (ascending).
double mode_factor(const Mode& m, int d_b, double beta, const std::vector<double>& times) {
    return free_chain_expectation(m.omega, m.g / std::sqrt(2.0), d_b, beta, times);
}

}  // namespace

double field_npoint(const std::vector<Mode>& modes, int d_b, double beta,
                    const std::vector<double>& times_ascending) {
    check_times(times_ascending);
    const int q = static_cast<int>(times_ascending.size());
    if (q % 2 == 1) return 0.0;
    if (q == 0) return 1.0;
    if (modes.size() == 1) return mode_factor(modes[0], d_b, beta, times_ascending);
    if (q == 2) {
        double sum = 0.0;
        for (const auto& m : modes) sum += mode_factor(m, d_b, beta, times_ascending);
        return sum;
    }
    if (q != 4 && q != 6)
        throw guard_error("field_npoint: multi-mode evaluation implemented for 2, 4 or 6 insertions");

    // Tensor-product factorization over even-count mode assignments. Block
    // factors F_j(S) are exact per-mode chain traces; sums over distinct mode
    // tuples are built by inclusion-exclusion.
    const auto& t = times_ascending;
    auto factor = [&](const Mode& m, const std::vector<int>& slots) {
        std::vector<double> sub;
        sub.reserve(slots.size());
        for (int s : slots) sub.push_back(t[s]);
        return mode_factor(m, d_b, beta, sub);
    };
    auto sum1 = [&](const std::vector<int>& a) {
        double s = 0.0;
        for (const auto& m : modes) s += factor(m, a);
        return s;
    };
    auto sum2 = [&](const std::vector<int>& a, const std::vector<int>& b) {
        double s = 0.0;
        for (const auto& m : modes) s += factor(m, a) * factor(m, b);
        return s;
    };

    std::vector<int> all(q);
    for (int i = 0; i < q; ++i) all[i] = i;
    double total = sum1(all);  // every insertion on one mode

    if (q == 4) {
        const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& sp : splits) {
            const std::vector<int> a = {sp[0], sp[1]}, b = {sp[2], sp[3]};
            total += sum1(a) * sum1(b) - sum2(a, b);
        }
        return total;
    }

    // q == 6: splits 4+2 and 2+2+2 (the latter enumerated as pairings of the
    // six slot indices)
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            std::vector<int> two = {i, j}, four;
            for (int k = 0; k < 6; ++k)
                if (k != i && k != j) four.push_back(k);
            total += sum1(four) * sum1(two) - sum2(four, two);
        }
    }
    for_each_pairing(3, [&](const Pairing& p) {
        std::vector<std::vector<int>> blocks;
        for (const auto& [i, j] : p.pairs) blocks.push_back({i - 1, j - 1});
        const double e1 = sum1(blocks[0]), e2 = sum1(blocks[1]), e3 = sum1(blocks[2]);
        const double e12 = sum2(blocks[0], blocks[1]);
        const double e13 = sum2(blocks[0], blocks[2]);
        const double e23 = sum2(blocks[1], blocks[2]);
        double e123 = 0.0;
        for (const auto& m : modes)
            e123 += factor(m, blocks[0]) * factor(m, blocks[1]) * factor(m, blocks[2]);
        total += e1 * e2 * e3 - (e12 * e3 + e13 * e2 + e23 * e1) + 2.0 * e123;
    });
    return total;
}

WickReport wick_check(const TruncationSpec& spec, const ModelParams& params, int n) {
    if (n < 1) throw numeric_error("wick_check: n must be >= 1");
    WickReport rep;
    rep.n = n;
    const int points = 2 * n;
    // fixed mixed times, descending as the pairing indices expect
    rep.times.resize(points);
    for (int i = 0; i < points; ++i)
        rep.times[i] = 0.95 - 0.9 * static_cast<double>(i) / (points - 1);
    std::vector<double> ascending(rep.times.rbegin(), rep.times.rend());

    rep.osc_exact = free_chain_expectation(params.theta, 1.0 / std::sqrt(2.0 * params.theta),
                                           spec.d_el, params.beta, ascending);
    rep.field_exact = field_npoint(spec.modes, spec.d_b, params.beta, ascending);

    ModelParams kernel_params = params;
    kernel_params.form_factor = FormFactor::discrete_modes(spec.modes);
    const KernelEval kernels(kernel_params);
    double osc_sum = 0.0, field_sum = 0.0;
    for_each_pairing(n, [&](const Pairing& p) {
        double prod_osc = 1.0, prod_f = 1.0;
        for (const auto& [i, j] : p.pairs) {
            const double d = std::abs(rep.times[i - 1] - rep.times[j - 1]);
            prod_osc *= kernels.k_osc(d);
            prod_f *= kernels.k_f(d);
        }
        osc_sum += prod_osc;
        field_sum += prod_f;
    });
    rep.osc_pairing = osc_sum;
    rep.field_pairing = field_sum;

    auto rel = [](double a, double b) {
        const double scale = std::max(std::abs(a), std::abs(b));
        return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
    };
    rep.max_rel_dev = std::max(rel(rep.osc_exact, rep.osc_pairing),
                               rel(rep.field_exact, rep.field_pairing));
    return rep;
}

double truncation_probe(const TruncationSpec& spec, double beta) {
    const std::vector<double> times = {0.2, 0.7};
    const double coarse = field_npoint(spec.modes, spec.d_b, beta, times);
    const double fine = field_npoint(spec.modes, 2 * spec.d_b, beta, times);
    return std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300);
}

SeriesTerm h2n_oracle(int n, const ModelParams& params, const TruncationSpec& spec,
                      const McSettings& mc) {
    params.validate();
    SeriesTerm term;
    term.n = n;
    term.method = Method::FockOracle;
    if (n < 0) throw numeric_error("h2n_oracle: n must be >= 0");
    if (n == 0) {
        term.value = 1.0;
        return term;
    }
    if (n > 2) throw guard_error("h2n_oracle: cost guard allows n <= 2");
    if (params.lambda == 0.0) return term;

    const int points = 2 * n;
    const double theta = params.theta;
    const double beta = params.beta;
    const auto& modes = spec.modes;
    const int d_el = spec.d_el;
    const int d_b = spec.d_b;
    auto integrand = [&, theta, beta, d_el, d_b](const std::vector<double>& s) {
        std::vector<double> ascending(s.rbegin(), s.rend());
        const double osc = free_chain_expectation(theta, 1.0 / std::sqrt(2.0 * theta), d_el,
                                                  beta, ascending);
        const double field = field_npoint(modes, d_b, beta, ascending);
        return osc * field;
    };
    const auto est = mc_integrate_simplex(points, integrand, mc.seed, mc.samples);
    double pref = 1.0;
    for (int i = 0; i < 2 * n; ++i) pref *= params.beta * params.lambda;
    term.value = pref * est.value;
    term.error_estimate = pref * est.std_error;
    return term;
}

}  // namespace oscbath
