#include "earnet/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "earnet/errors.hpp"

namespace earnet {

namespace {

std::uint32_t read_le32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
           (std::uint32_t(p[3]) << 24);
}

std::uint16_t read_le16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(std::uint16_t(p[0]) | (std::uint16_t(p[1]) << 8));
}

void append_le32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void append_le16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void append_tag(std::vector<std::uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

} // namespace

AudioBuffer read_wav(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw Error(Errc::corrupt_riff, "not a RIFF/WAVE buffer");
    }

    bool have_fmt = false;
    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t sample_rate = 0;
    const std::uint8_t* data = nullptr;
    std::uint32_t data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint8_t* chunk = bytes.data() + pos;
        const std::uint32_t chunk_len = read_le32(chunk + 4);
        const std::size_t payload = pos + 8;
        if (payload + chunk_len > bytes.size()) {
            throw Error(Errc::corrupt_riff, "chunk overruns buffer");
        }
        if (std::memcmp(chunk, "fmt ", 4) == 0) {
            if (chunk_len < 16) throw Error(Errc::corrupt_riff, "fmt chunk too small");
            format = read_le16(bytes.data() + payload);
            channels = read_le16(bytes.data() + payload + 2);
            sample_rate = read_le32(bytes.data() + payload + 4);
            bits = read_le16(bytes.data() + payload + 14);
            have_fmt = true;
        } else if (std::memcmp(chunk, "data", 4) == 0) {
            data = bytes.data() + payload;
            data_len = chunk_len;
        }
        pos = payload + chunk_len + (chunk_len % 2); // chunks are word-aligned
    }

    if (!have_fmt || data == nullptr) {
        throw Error(Errc::corrupt_riff, "missing fmt or data chunk");
    }
    if (format != 1) throw Error(Errc::unsupported_format, "only PCM is supported");
    if (channels != 1) throw Error(Errc::unsupported_format, "only mono is supported");
    if (bits != 16) throw Error(Errc::unsupported_format, "only 16-bit samples are supported");
    if (sample_rate == 0) throw Error(Errc::corrupt_riff, "zero sample rate");
    if (data_len % 2 != 0) throw Error(Errc::corrupt_riff, "odd data chunk length");

    AudioBuffer audio;
    audio.sample_rate_hz = static_cast<int>(sample_rate);
    audio.samples.resize(data_len / 2);
    for (std::size_t i = 0; i < audio.samples.size(); ++i) {
        const std::int16_t raw = static_cast<std::int16_t>(read_le16(data + 2 * i));
        audio.samples[i] = static_cast<double>(raw) / 32768.0;
    }
    return audio;
}

AudioBuffer read_wav_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io_error, "cannot open " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return read_wav(bytes);
}

std::vector<std::uint8_t> write_wav(const AudioBuffer& audio) {
    const std::uint32_t data_len = static_cast<std::uint32_t>(audio.samples.size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_len);

    append_tag(out, "RIFF");
    append_le32(out, 36 + data_len);
    append_tag(out, "WAVE");
    append_tag(out, "fmt ");
    append_le32(out, 16);
    append_le16(out, 1);  // PCM
    append_le16(out, 1);  // mono
    append_le32(out, static_cast<std::uint32_t>(audio.sample_rate_hz));
    append_le32(out, static_cast<std::uint32_t>(audio.sample_rate_hz * 2));
    append_le16(out, 2);  // block align
    append_le16(out, 16); // bits
    append_tag(out, "data");
    append_le32(out, data_len);
    for (double s : audio.samples) {
        const double clipped = std::clamp(s, -1.0, 1.0);
        append_le16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(std::lrint(clipped * 32767.0))));
    }
    return out;
}

void write_wav_file(const std::string& path, const AudioBuffer& audio) {
    const std::vector<std::uint8_t> bytes = write_wav(audio);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(Errc::io_error, "short write to " + path);
    }
}

} // namespace earnet
