#ifndef EARNET_COCHLEA_HPP
#define EARNET_COCHLEA_HPP

#include <vector>

#include "earnet/events.hpp"
#include "earnet/wav.hpp"

namespace earnet {

/// Parallel band-pass filter bank covering the audible range. Channel 0 is
/// the highest-frequency band and centers fall log-spaced down to f_low. The
/// top center is clamped below Nyquist (0.45 * sample rate), so with 16 kHz
/// audio the bank covers up to 7.2 kHz.
struct FilterBankConfig {
    int num_channels = kNumChannels;
    double f_low_hz = 20.0;
    double f_high_hz = 20000.0;
    int order = 2; ///< even; order/2 cascaded biquad sections per channel
    double q = 4.0;
};

/// Per-channel saturation rate of the spike generator, linear in channel
/// index from 9e4 spikes/s (channel 0) down to 2e4 spikes/s (channel 31).
struct RateProfile {
    double rate_first_hz = 9.0e4;
    double rate_last_hz = 2.0e4;
    int num_channels = kNumChannels;

    double peak_rate(int channel) const;
};

/// One second-order band-pass section (direct form II transposed),
/// unit gain at the center frequency.
struct Biquad {
    double b0 = 0, b1 = 0, b2 = 0;
    double a1 = 0, a2 = 0;

    double step(double x, double& z1, double& z2) const {
        const double y = b0 * x + z1;
        z1 = b1 * x - a1 * y + z2;
        z2 = b2 * x - a2 * y;
        return y;
    }
};

struct ChannelFilter {
    double center_hz = 0;
    std::vector<Biquad> sections;
};

std::vector<ChannelFilter> design_filterbank(const FilterBankConfig& config, int sample_rate_hz);

/// Runs one channel's cascade over a signal (fresh filter state).
std::vector<double> filter_signal(const ChannelFilter& filter, const std::vector<double>& input);

/// Converts audio to a spike stream. Per channel: band-pass, half-wave
/// rectify, map amplitude to an instantaneous rate capped at the channel's
/// peak rate, then integrate-and-fire deterministically (no randomness).
/// Events from all channels are merged ordered by timestamp, then channel.
EventStream<RawEvent> encode(const AudioBuffer& audio, const FilterBankConfig& config,
                             const RateProfile& profile);

} // namespace earnet

#endif // EARNET_COCHLEA_HPP
