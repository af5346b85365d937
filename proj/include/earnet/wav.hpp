#ifndef EARNET_WAV_HPP
#define EARNET_WAV_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace earnet {

/// Mono audio normalized to [-1, 1].
struct AudioBuffer {
    std::vector<double> samples;
    int sample_rate_hz = 0;

    double duration_s() const {
        return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz : 0.0;
    }
};

/// Decodes a RIFF/WAVE buffer. Only PCM 16-bit mono is supported; samples are
/// scaled by 1/32768.
AudioBuffer read_wav(const std::vector<std::uint8_t>& bytes);
AudioBuffer read_wav_file(const std::string& path);

/// Encodes PCM 16-bit mono; samples are clipped to [-1, 1] and scaled by 32767.
std::vector<std::uint8_t> write_wav(const AudioBuffer& audio);
void write_wav_file(const std::string& path, const AudioBuffer& audio);

} // namespace earnet

#endif // EARNET_WAV_HPP
