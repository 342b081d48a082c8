#include "trimode/stochastic.hpp"

#include <fftw3.h>

#include <atomic>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Splittable stream: one engine per trajectory, keyed by (seed, trajectory_index).
std::mt19937_64 make_engine(std::uint64_t seed, int trajectory_index) {
    const std::uint64_t key = splitmix64(seed ^ splitmix64(0x6a09e667f3bcc909ull +
                                         static_cast<std::uint64_t>(trajectory_index)));
    return std::mt19937_64(key);
}

// Box-Muller on 53-bit uniforms; pinned here so the draw sequence is part of
// the reproducibility contract rather than an implementation detail of the
// standard library.
inline void gaussian_pair(std::mt19937_64& rng, double& z0, double& z1) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;          // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * kPi * u2;
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
}

// One Euler-Maruyama step of the 3-mode system with the A-B block zero.
struct Stepper {
    Complex pcc, pca, pcb, pac, paa, pbc, pbb;  // rows of I + dt M
    double sigma_c = 0.0, sigma_a = 0.0, sigma_b = 0.0;
    double limit_sq = 0.0;

    Stepper(const SystemParams& params, const SimulationConfig& config) {
        const DriftMatrix drift = drift_matrix(params);
        const double dt = config.time_step;
        const CMat3& m = drift.generator;
        pcc = 1.0 + dt * m(0, 0);
        pca = dt * m(0, 1);
        pcb = dt * m(0, 2);
        pac = dt * m(1, 0);
        paa = 1.0 + dt * m(1, 1);
        pbc = dt * m(2, 0);
        pbb = 1.0 + dt * m(2, 2);

        // E[dW dW*] = (N + 1) dt per channel, split evenly over quadratures.
        sigma_c = config.noise_scale * std::sqrt(0.5 * drift.noise_rates[0] * drift.noise_weights[0] * dt);
        sigma_a = config.noise_scale * std::sqrt(0.5 * drift.noise_rates[1] * drift.noise_weights[1] * dt);
        sigma_b = config.noise_scale * std::sqrt(0.5 * drift.noise_rates[2] * drift.noise_weights[2] * dt);

        const double weight_scale = std::max(
            1.0, std::sqrt(std::max({drift.noise_weights[0], drift.noise_weights[1],
                                     drift.noise_weights[2]})));
        const double limit = 1e12 * weight_scale;
        limit_sq = limit * limit;
    }

    inline void step(CVec3& x, std::mt19937_64& rng) const {
        double z0, z1;
        Complex xc = pcc * x[0] + pca * x[1] + pcb * x[2];
        Complex xa = pac * x[0] + paa * x[1];
        Complex xb = pbc * x[0] + pbb * x[2];
        gaussian_pair(rng, z0, z1);
        xc += sigma_c * Complex{z0, z1};
        gaussian_pair(rng, z0, z1);
        xa += sigma_a * Complex{z0, z1};
        gaussian_pair(rng, z0, z1);
        xb += sigma_b * Complex{z0, z1};
        x = {xc, xa, xb};
    }

    inline void check(const CVec3& x) const {
        if (std::norm(x[0]) > limit_sq || std::norm(x[1]) > limit_sq ||
            std::norm(x[2]) > limit_sq) {
            throw IntegrationDiverged(
                "stochastic integration diverged; use a smaller time_step");
        }
    }
};

struct IntegrationPlan {
    long burn_steps = 0;
    long stride = 1;
    long samples = 0;
    double dt = 0.0;
    double dt_rec = 0.0;
};

// Records `samples` values per mode, one every `stride` steps past burn-in.
void run_trajectory(const Stepper& stepper, const IntegrationPlan& plan, std::uint64_t seed,
                    int trajectory_index, Complex* out_c, Complex* out_a, Complex* out_b) {
    std::mt19937_64 rng = make_engine(seed, trajectory_index);
    CVec3 x{};
    for (long s = 0; s < plan.burn_steps; ++s) {
        stepper.step(x, rng);
        if ((s & 63) == 0) stepper.check(x);
    }
    for (long k = 0; k < plan.samples; ++k) {
        for (long j = 0; j < plan.stride; ++j) stepper.step(x, rng);
        stepper.check(x);
        out_c[k] = x[0];
        out_a[k] = x[1];
        out_b[k] = x[2];
    }
}

double slowest_decay_time(const SystemParams& params) {
    return 2.0 / std::min({params.cavity_decay, params.decay_a, params.decay_b});
}

void require_positive_decays(const SystemParams& params) {
    if (!(params.decay_a > 0.0 && params.decay_b > 0.0)) {
        throw InvalidParameter("stochastic integration requires all decays > 0");
    }
}

IntegrationPlan make_plan(const SystemParams& params, const SimulationConfig& config,
                          double omega_max) {
    IntegrationPlan plan;
    plan.dt = config.time_step;
    if (config.record_stride > 0) {
        plan.stride = config.record_stride;
    } else {
        // Keep the recording Nyquist an order of magnitude beyond both the
        // requested band and the model's spectral extent so folded tails are
        // negligible against the 1/omega^2 backgrounds.
        const double extent = std::max({omega_max, params.cavity_decay, params.decay_a,
                                        params.decay_b, params.coupling_a, params.coupling_b,
                                        1e-6});
        plan.stride = std::max(1L, static_cast<long>(std::floor(kPi / (10.0 * extent * plan.dt))));
    }
    plan.dt_rec = plan.dt * static_cast<double>(plan.stride);
    if (omega_max >= kPi / plan.dt_rec) {
        throw InvalidParameter("record_stride too coarse for the requested frequency grid");
    }
    plan.samples = std::max(2L, std::lround(config.duration / plan.dt_rec));
    plan.burn_steps = static_cast<long>(std::ceil(config.burn_in / plan.dt));
    return plan;
}

}  // namespace

void SimulationConfig::validate(const SystemParams& params) const {
    params.validate();
    if (!(std::isfinite(time_step) && time_step > 0.0)) {
        throw InvalidParameter("time_step must be > 0");
    }
    if (!(std::isfinite(duration) && duration > 0.0)) {
        throw InvalidParameter("duration must be > 0");
    }
    if (!(std::isfinite(burn_in) && burn_in >= 0.0)) {
        throw InvalidParameter("burn_in must be >= 0");
    }
    if (trajectory_count < 1) throw InvalidParameter("trajectory_count must be >= 1");
    if (record_stride < 0) throw InvalidParameter("record_stride must be >= 0");
    if (!(std::isfinite(smoothing_halfwidth) && smoothing_halfwidth >= 0.0)) {
        throw InvalidParameter("smoothing_halfwidth must be >= 0");
    }
    if (!(std::isfinite(noise_scale) && noise_scale >= 0.0)) {
        throw InvalidParameter("noise_scale must be >= 0");
    }
    if (threads < 0) throw InvalidParameter("threads must be >= 0");

    const double max_rate = std::max({params.cavity_decay, params.decay_a, params.decay_b});
    if (time_step > 0.1 / max_rate) {
        throw InvalidParameter("time_step exceeds 0.1 / max decay rate");
    }
    const double tau = slowest_decay_time(params);
    if (duration < 50.0 * tau) {
        throw InvalidParameter("duration must cover at least 50 slowest decay times");
    }
    if (burn_in < 10.0 * tau) {
        throw InvalidParameter("burn_in must cover at least 10 slowest decay times");
    }
}

TrajectorySamples simulate_trajectory(const SystemParams& params, const SimulationConfig& config,
                                      int trajectory_index) {
    require_positive_decays(params);
    config.validate(params);
    if (trajectory_index < 0) throw InvalidParameter("trajectory_index must be >= 0");

    IntegrationPlan plan;
    plan.dt = config.time_step;
    plan.stride = config.record_stride > 0 ? config.record_stride : 1;
    plan.dt_rec = plan.dt * static_cast<double>(plan.stride);
    plan.samples = std::max(1L, std::lround(config.duration / plan.dt_rec));
    plan.burn_steps = static_cast<long>(std::ceil(config.burn_in / plan.dt));

    const Stepper stepper(params, config);
    TrajectorySamples samples;
    samples.times.resize(static_cast<std::size_t>(plan.samples));
    samples.mode_c.resize(static_cast<std::size_t>(plan.samples));
    samples.mode_a.resize(static_cast<std::size_t>(plan.samples));
    samples.mode_b.resize(static_cast<std::size_t>(plan.samples));
    run_trajectory(stepper, plan, config.seed, trajectory_index, samples.mode_c.data(),
                   samples.mode_a.data(), samples.mode_b.data());
    for (long k = 0; k < plan.samples; ++k) {
        samples.times[static_cast<std::size_t>(k)] =
            (static_cast<double>(plan.burn_steps) + static_cast<double>((k + 1) * plan.stride)) *
            plan.dt;
    }
    return samples;
}

SpectrumCurve estimate_spectrum(const SystemParams& params, const SimulationConfig& config,
                                std::span<const double> grid) {
    require_positive_decays(params);
    config.validate(params);
    if (grid.empty()) throw InvalidParameter("estimate_spectrum: grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw InvalidParameter("estimate_spectrum: grid must be strictly increasing");
        }
    }
    const double omega_max = std::max(std::abs(grid.front()), std::abs(grid.back()));
    if (omega_max >= kPi / config.time_step) {
        throw InvalidParameter("grid exceeds the integration Nyquist band (pi / time_step)");
    }

    const IntegrationPlan plan = make_plan(params, config, omega_max);
    const Stepper stepper(params, config);
    const long n = plan.samples;
    const double t_eff = static_cast<double>(n) * plan.dt_rec;
    const double bin_width = 2.0 * kPi / t_eff;

    // Window function and its power normalization: P = |sum w x e^{i w t} dt|^2
    // / (sum w^2 dt). The rectangular case reduces to 1/T_eff, which is the
    // normalization pinned by the decoupled-cavity calibration.
    std::vector<double> window;
    double sum_w2 = static_cast<double>(n);
    if (config.hann_taper) {
        window.resize(static_cast<std::size_t>(n));
        sum_w2 = 0.0;
        for (long m = 0; m < n; ++m) {
            const double w =
                0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(m) /
                                      static_cast<double>(n - 1)));
            window[static_cast<std::size_t>(m)] = w;
            sum_w2 += w * w;
        }
    }
    const double periodogram_norm = plan.dt_rec / sum_w2;

    // Signed DFT bins actually read downstream.
    const double halfwidth = config.smoothing_halfwidth;
    const long bin_min_valid = -((n - 1) / 2);
    const long bin_max_valid = n / 2;
    long bin_lo = static_cast<long>(std::floor((grid.front() - halfwidth) / bin_width)) - 1;
    long bin_hi = static_cast<long>(std::ceil((grid.back() + halfwidth) / bin_width)) + 1;
    bin_lo = std::max(bin_lo, bin_min_valid);
    bin_hi = std::min(bin_hi, bin_max_valid);
    const long n_bins = bin_hi - bin_lo + 1;

    const int total = config.trajectory_count;
    constexpr int kBlock = 8;  // fixed partition keeps sums independent of the worker count
    const int n_blocks = (total + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> block_acc(static_cast<std::size_t>(n_blocks));

    static std::mutex fftw_mutex;  // FFTW planner is not thread-safe
    std::atomic<int> next_block{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        std::vector<Complex> rec_c(static_cast<std::size_t>(n));
        std::vector<Complex> rec_a(static_cast<std::size_t>(n));
        std::vector<Complex> rec_b(static_cast<std::size_t>(n));
        std::vector<Complex> fft_in(static_cast<std::size_t>(n));
        std::vector<Complex> fft_out(static_cast<std::size_t>(n));
        fftw_plan fft_plan;
        {
            std::lock_guard<std::mutex> lock(fftw_mutex);
            fft_plan = fftw_plan_dft_1d(static_cast<int>(n),
                                        reinterpret_cast<fftw_complex*>(fft_in.data()),
                                        reinterpret_cast<fftw_complex*>(fft_out.data()),
                                        FFTW_BACKWARD, FFTW_ESTIMATE);
        }

        try {
            while (true) {
                const int block = next_block.fetch_add(1);
                if (block >= n_blocks) break;
                std::vector<double>& acc = block_acc[static_cast<std::size_t>(block)];
                acc.assign(static_cast<std::size_t>(3 * n_bins), 0.0);

                const int first = block * kBlock;
                const int last = std::min(total, first + kBlock);
                for (int traj = first; traj < last; ++traj) {
                    run_trajectory(stepper, plan, config.seed, traj, rec_c.data(), rec_a.data(),
                                   rec_b.data());
                    const Complex* series[3] = {rec_c.data(), rec_a.data(), rec_b.data()};
                    for (int mode = 0; mode < 3; ++mode) {
                        if (config.hann_taper) {
                            for (long m = 0; m < n; ++m) {
                                fft_in[static_cast<std::size_t>(m)] =
                                    series[mode][m] * window[static_cast<std::size_t>(m)];
                            }
                        } else {
                            std::memcpy(fft_in.data(), series[mode],
                                        static_cast<std::size_t>(n) * sizeof(Complex));
                        }
                        fftw_execute(fft_plan);
                        double* dest = acc.data() + mode * n_bins;
                        for (long b = bin_lo; b <= bin_hi; ++b) {
                            const long idx = b >= 0 ? b : b + n;
                            dest[b - bin_lo] +=
                                periodogram_norm * std::norm(fft_out[static_cast<std::size_t>(idx)]);
                        }
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }

        {
            std::lock_guard<std::mutex> lock(fftw_mutex);
            fftw_destroy_plan(fft_plan);
        }
    };

    int n_workers = config.threads > 0
                        ? config.threads
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    n_workers = std::min(n_workers, n_blocks);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Deterministic reduction: block partials summed in block order.
    std::vector<double> mean(static_cast<std::size_t>(3 * n_bins), 0.0);
    for (const std::vector<double>& acc : block_acc) {
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += acc[j];
    }
    const double inv_count = 1.0 / static_cast<double>(total);
    for (double& v : mean) v *= inv_count;

    SpectrumCurve curve;
    curve.grid.assign(grid.begin(), grid.end());
    curve.params_snapshot = params;
    curve.method = SpectrumMethod::kStochastic;
    curve.s_c.resize(grid.size());
    curve.s_a.resize(grid.size());
    curve.s_b.resize(grid.size());

    for (std::size_t g = 0; g < grid.size(); ++g) {
        const double omega = grid[g];
        long from = static_cast<long>(std::ceil((omega - halfwidth) / bin_width));
        long to = static_cast<long>(std::floor((omega + halfwidth) / bin_width));
        from = std::max(from, bin_lo);
        to = std::min(to, bin_hi);
        if (from > to) {
            const long nearest =
                std::clamp(std::lround(omega / bin_width), bin_lo, bin_hi);
            from = to = nearest;
        }
        const double inv_bins = 1.0 / static_cast<double>(to - from + 1);
        for (int mode = 0; mode < 3; ++mode) {
            double sum = 0.0;
            const double* src = mean.data() + mode * n_bins;
            for (long b = from; b <= to; ++b) sum += src[b - bin_lo];
            const double value = sum * inv_bins;
            (mode == 0 ? curve.s_c : mode == 1 ? curve.s_a : curve.s_b)[g] = value;
        }
    }

    const double tau = slowest_decay_time(params);
    if (config.duration < 100.0 * tau) {
        curve.warnings.push_back(
            "duration below 100 slowest decay times; spectral estimates carry wide "
            "confidence intervals");
    }
    return curve;
}

}  // namespace trimode
