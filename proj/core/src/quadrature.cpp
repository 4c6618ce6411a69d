#include "oscbath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include <Eigen/Dense>

#include "oscbath/errors.hpp"
#include "oscbath/parallel.hpp"
#include "oscbath/rng.hpp"

namespace oscbath {

namespace {

// Newton iteration on the Legendre recurrence; nodes on [-1,1] then mapped.
GaussLegendre build_rule(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = 0.5 * (1.0 - x);  // descending x -> ascending node
        rule.weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
    }
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    return rule;
}

constexpr long long kChunkSamples = 8192;

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
};

[[noreturn]] void throw_bad_sample(const std::vector<double>& s, double v) {
    std::ostringstream os;
    os << "integrand returned " << v << " at sample (";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
    os << ")";
    throw numeric_error(os.str());
}

// Shared driver: per-chunk engine seeded by (seed, chunk), reduction in chunk
// order. make_eval builds a per-chunk evaluator so scratch buffers are never
// shared between workers.
using EvalFactory = std::function<std::function<double(rng::Engine&)>()>;

McResult run_mc(std::uint64_t seed, long long count, const EvalFactory& make_eval) {
    const std::size_t n_chunks =
        static_cast<std::size_t>((count + kChunkSamples - 1) / kChunkSamples);
    std::function<Accumulator(std::size_t)> work = [&](std::size_t chunk) {
        auto eval = make_eval();
        auto eng = rng::make_engine(rng::stream_seed(seed, 0x6d63ULL, chunk));
        const long long lo = static_cast<long long>(chunk) * kChunkSamples;
        const long long hi = std::min(count, lo + kChunkSamples);
        Accumulator acc;
        for (long long i = lo; i < hi; ++i) {
            const double v = eval(eng);
            acc.sum += v;
            acc.sum_sq += v * v;
        }
        return acc;
    };
    const auto accs = parallel_map_chunks<Accumulator>(n_chunks, work);
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& a : accs) {
        sum += a.sum;
        sum_sq += a.sum_sq;
    }
    McResult r;
    r.samples = count;
    r.value = sum / static_cast<double>(count);
    const double var = std::max(0.0, sum_sq / static_cast<double>(count) - r.value * r.value);
    r.std_error = count > 1 ? std::sqrt(var / static_cast<double>(count - 1)) : 0.0;
    return r;
}

void draw_sorted(rng::Engine& eng, std::vector<double>& s) {
    for (double& x : s) x = rng::uniform(eng);
    std::sort(s.begin(), s.end(), std::greater<>());
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int n) {
    if (n < 1) throw numeric_error("GaussLegendre: order must be >= 1");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

void SimplexSampler::run(const std::function<void(const std::vector<double>&)>& fn) const {
    const std::size_t n_chunks =
        static_cast<std::size_t>((count + kChunkSamples - 1) / kChunkSamples);
    std::vector<double> s(dimension);
    for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) {
        auto eng = rng::make_engine(rng::stream_seed(seed, 0x6d63ULL, chunk));
        const long long lo = static_cast<long long>(chunk) * kChunkSamples;
        const long long hi = std::min(count, lo + kChunkSamples);
        for (long long i = lo; i < hi; ++i) {
            draw_sorted(eng, s);
            fn(s);
        }
    }
}

McResult mc_integrate_simplex(int n, const Integrand& f, std::uint64_t seed, long long count) {
    if (n < 1) throw numeric_error("mc_integrate_simplex: dimension must be >= 1");
    if (count < 2) throw numeric_error("mc_integrate_simplex: need at least 2 samples");
    double volume = 1.0;
    for (int i = 2; i <= n; ++i) volume /= i;
    auto factory = [&f, n, volume]() {
        return [&f, volume, s = std::vector<double>(n)](rng::Engine& eng) mutable {
            draw_sorted(eng, s);
            const double v = f(s);
            if (!std::isfinite(v)) throw_bad_sample(s, v);
            return v * volume;
        };
    };
    return run_mc(seed, count, factory);
}

McResult mc_integrate_simplex_gaps(int n, const Integrand& f,
                                   const std::vector<double>& interior_gap_alphas,
                                   std::uint64_t seed, long long count) {
    if (n < 1) throw numeric_error("mc_integrate_simplex_gaps: dimension must be >= 1");
    if (static_cast<int>(interior_gap_alphas.size()) != n - 1)
        throw numeric_error("mc_integrate_simplex_gaps: need n-1 interior gap exponents");
    for (double a : interior_gap_alphas)
        if (a < 0.0 || a >= 1.0)
            throw numeric_error("mc_integrate_simplex_gaps: gap exponents must lie in [0,1)");

    // Gaps h_0 = 1-s_1, h_i = s_i - s_{i+1}, h_n = s_n drawn from
    // Dirichlet(1, 1-a_1, ..., 1-a_{n-1}, 1). The density against Lebesgue
    // measure in (h_1..h_n) is Gamma(B)/prod Gamma(b_i) * prod h_i^{b_i-1},
    // so the importance weight cancels the singular gap powers analytically.
    std::vector<double> shape(n + 1, 1.0);
    for (int i = 1; i < n; ++i) shape[i] = 1.0 - interior_gap_alphas[i - 1];
    double log_norm = 0.0;  // log( prod Gamma(b_i) / Gamma(sum b_i) )
    double shape_sum = 0.0;
    for (double b : shape) {
        log_norm += std::lgamma(b);
        shape_sum += b;
    }
    log_norm -= std::lgamma(shape_sum);

    auto factory = [&f, n, shape, log_norm]() {
        return [&f, n, shape, log_norm, h = std::vector<double>(n + 1),
                s = std::vector<double>(n)](rng::Engine& eng) mutable {
            double total = 0.0;
            for (int i = 0; i <= n; ++i) {
                h[i] = shape[i] == 1.0 ? rng::exponential(eng) : rng::gamma_variate(eng, shape[i]);
                total += h[i];
            }
            double acc = 1.0 - h[0] / total;
            double log_w = log_norm;
            for (int i = 0; i < n; ++i) {
                s[i] = acc;
                acc -= h[i + 1] / total;
            }
            for (int i = 1; i < n; ++i) log_w += (1.0 - shape[i]) * std::log(h[i] / total);
            const double v = f(s);
            if (!std::isfinite(v)) throw_bad_sample(s, v);
            return v * std::exp(log_w);
        };
    };
    return run_mc(seed, count, factory);
}

McResult mc_integrate_hypercube(int dim, const Integrand& f, std::uint64_t seed, long long count) {
    if (dim < 1) throw numeric_error("mc_integrate_hypercube: dimension must be >= 1");
    if (count < 2) throw numeric_error("mc_integrate_hypercube: need at least 2 samples");
    auto factory = [&f, dim]() {
        return [&f, s = std::vector<double>(dim)](rng::Engine& eng) mutable {
            for (double& x : s) x = rng::uniform(eng);
            const double v = f(s);
            if (!std::isfinite(v)) throw_bad_sample(s, v);
            return v;
        };
    };
    return run_mc(seed, count, factory);
}

namespace {

double trace_power(const Kernel1D& k1, const Kernel1D& k2, int m, int n) {
    const auto& rule = GaussLegendre::get(n);
    Eigen::MatrixXd t1(n, n), t2(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(rule.nodes[i] - rule.nodes[j]);
            t1(i, j) = k1(d) * rule.weights[j];
            t2(i, j) = k2(d) * rule.weights[j];
        }
    }
    const Eigen::MatrixXd step = t1 * t2;
    Eigen::MatrixXd power = step;
    for (int a = 1; a < m; ++a) power = power * step;
    return power.trace();
}

}  // namespace

CycleResult cycle_integral(int m, const Kernel1D& k1, const Kernel1D& k2, int grid_n,
                           double tolerance) {
    if (m < 1) throw numeric_error("cycle_integral: m must be >= 1");
    if (grid_n < 16) throw numeric_error("cycle_integral: grid must be >= 16");
    CycleResult r;
    const double coarse = trace_power(k1, k2, m, grid_n);
    const double fine = trace_power(k1, k2, m, 2 * grid_n);
    r.value = fine;
    r.error_estimate = std::abs(fine - coarse);
    r.grid = 2 * grid_n;
    const double scale = std::max(std::abs(fine), 1e-300);
    r.converged = r.error_estimate / scale <= tolerance;
    if (r.value < -1e-12 * scale)
        throw numeric_error("cycle_integral: negative trace for positive kernels");
    return r;
}

}  // namespace oscbath
