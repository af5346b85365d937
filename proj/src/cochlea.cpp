#include "earnet/cochlea.hpp"

#include <algorithm>
#include <cmath>

#include "earnet/errors.hpp"

namespace earnet {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Fraction of the sample rate usable as the top center frequency. Keeping a
// margin below 0.5 avoids severely warped responses at the bilinear edge.
constexpr double kNyquistFraction = 0.45;

Biquad design_bandpass(double center_hz, double q, int sample_rate_hz) {
    const double w0 = 2.0 * kPi * center_hz / sample_rate_hz;
    const double alpha = std::sin(w0) / (2.0 * q);
    const double a0 = 1.0 + alpha;
    Biquad s;
    s.b0 = alpha / a0;
    s.b1 = 0.0;
    s.b2 = -alpha / a0;
    s.a1 = -2.0 * std::cos(w0) / a0;
    s.a2 = (1.0 - alpha) / a0;
    return s;
}

} // namespace

double RateProfile::peak_rate(int channel) const {
    if (channel < 0 || channel >= num_channels) {
        throw Error(Errc::channel_out_of_range, "channel " + std::to_string(channel));
    }
    if (num_channels == 1) return rate_first_hz;
    return rate_first_hz + channel * (rate_last_hz - rate_first_hz) / (num_channels - 1);
}

std::vector<ChannelFilter> design_filterbank(const FilterBankConfig& config, int sample_rate_hz) {
    if (sample_rate_hz < 8000) {
        throw Error(Errc::unsupported_format, "sample rate must be at least 8000 Hz");
    }
    if (config.num_channels < 1 || config.num_channels > kNumChannels) {
        throw Error(Errc::channel_out_of_range,
                    "channel count must be in [1, " + std::to_string(kNumChannels) + "]");
    }
    if (config.order < 2 || config.order % 2 != 0) {
        throw Error(Errc::unsupported_format, "filter order must be a positive even number");
    }
    const double f_top = std::min(config.f_high_hz, kNyquistFraction * sample_rate_hz);
    if (config.f_low_hz <= 0.0 || config.f_low_hz >= kNyquistFraction * sample_rate_hz) {
        throw Error(Errc::nyquist_violation, "f_low must lie in (0, 0.45 * sample_rate)");
    }
    if (config.f_low_hz >= f_top) {
        throw Error(Errc::nyquist_violation, "f_low must be below the clamped top frequency");
    }

    std::vector<ChannelFilter> bank(config.num_channels);
    const double ratio = config.f_low_hz / f_top;
    for (int ch = 0; ch < config.num_channels; ++ch) {
        const double frac = (config.num_channels == 1)
                                ? 0.0
                                : static_cast<double>(ch) / (config.num_channels - 1);
        ChannelFilter& f = bank[ch];
        f.center_hz = f_top * std::pow(ratio, frac);
        f.sections.assign(config.order / 2, design_bandpass(f.center_hz, config.q, sample_rate_hz));
    }
    return bank;
}

std::vector<double> filter_signal(const ChannelFilter& filter, const std::vector<double>& input) {
    std::vector<double> y = input;
    for (const Biquad& s : filter.sections) {
        double z1 = 0.0, z2 = 0.0;
        for (double& v : y) {
            v = s.step(v, z1, z2);
        }
    }
    return y;
}

EventStream<RawEvent> encode(const AudioBuffer& audio, const FilterBankConfig& config,
                             const RateProfile& profile) {
    const std::vector<ChannelFilter> bank = design_filterbank(config, audio.sample_rate_hz);
    const double dt = 1.0 / audio.sample_rate_hz;

    EventStream<RawEvent> merged;
    merged.duration_us = static_cast<std::int64_t>(audio.samples.size()) * 1'000'000ll /
                         std::max(audio.sample_rate_hz, 1);

    // Channels are concatenated in index order, so the stable time sort below
    // realizes the (timestamp, channel, emission order) merge.
    for (int ch = 0; ch < config.num_channels; ++ch) {
        const double peak = profile.peak_rate(ch);
        std::vector<std::pair<double, double>> state(bank[ch].sections.size(), {0.0, 0.0});
        double acc = 0.0;
        for (std::size_t i = 0; i < audio.samples.size(); ++i) {
            double y = audio.samples[i];
            for (std::size_t s = 0; s < bank[ch].sections.size(); ++s) {
                y = bank[ch].sections[s].step(y, state[s].first, state[s].second);
            }
            const double rectified = std::max(0.0, y);
            acc += peak * std::min(1.0, rectified) * dt;
            if (acc >= 1.0) {
                const std::int64_t t_us =
                    static_cast<std::int64_t>(i) * 1'000'000ll / audio.sample_rate_hz;
                while (acc >= 1.0) {
                    merged.events.push_back(RawEvent{t_us, ch});
                    acc -= 1.0;
                }
            }
        }
    }

    return sort_stable_by_time(std::move(merged));
}

} // namespace earnet
