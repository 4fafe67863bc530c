#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zerocross {

// Uniformly sampled signal. Times are implied: t_i = t0 + i*dt.
struct TimeSeries {
    double t0 = 0.0;
    double dt = 1.0; // > 0
    std::vector<double> values;
    std::string label;

    std::size_t size() const { return values.size(); }
    double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    double t_end() const { return time(values.size() - 1); }
    double fs() const { return 1.0 / dt; }
};

// throws std::invalid_argument when dt <= 0, size < 2, or a value is non-finite
void validate(const TimeSeries& s);

// n = round(fs*(t_b - t_a)) + 1 samples, dt = (t_b - t_a)/(n - 1).
// Throws when fewer than 2 samples would result.
TimeSeries sample(const std::function<double(double)>& f, double t_a, double t_b,
                  double fs_hz, std::string label = {});

// Additive white Gaussian noise at a target SNR. snr_db == nullopt means
// "clean": the series is returned unchanged.
struct NoiseSpec {
    std::optional<double> snr_db; // decibels; nullopt = clean
    std::uint64_t seed = 0;
};

// Noise variance P_n = P_s * 10^(-snr_db/10) with P_s the mean square of the
// clean samples. Deterministic given spec.seed.
TimeSeries add_noise(const TimeSeries& s, const NoiseSpec& spec);

} // namespace zerocross
