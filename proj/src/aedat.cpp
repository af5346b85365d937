#include "earnet/aedat.hpp"

#include <fstream>

#include "earnet/errors.hpp"

namespace earnet {

namespace {

std::uint32_t read_be32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
           std::uint32_t(p[3]);
}

std::uint16_t read_be16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>((std::uint16_t(p[0]) << 8) | std::uint16_t(p[1]));
}

void append_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

// Consumes '#'-prefixed lines; returns the offset of the first body byte.
std::size_t parse_header(const std::vector<std::uint8_t>& bytes, AedatHeader& header) {
    header.lines.clear();
    std::size_t pos = 0;
    while (pos < bytes.size() && bytes[pos] == '#') {
        std::size_t eol = pos;
        while (eol < bytes.size() && bytes[eol] != '\n') ++eol;
        std::size_t end = eol;
        if (end > pos && bytes[end - 1] == '\r') --end;
        header.lines.emplace_back(bytes.begin() + pos, bytes.begin() + end);
        pos = (eol < bytes.size()) ? eol + 1 : eol;
    }
    return pos;
}

} // namespace

DecodedAddress decode_address(std::uint32_t addr, const AddressCodec& codec) {
    if (addr >= AddressCodec::kNumAddresses) {
        throw Error(Errc::address_out_of_range,
                    "address " + std::to_string(addr) + " >= " + std::to_string(AddressCodec::kNumAddresses));
    }
    const bool even = (addr % 2) == 0;
    const Polarity polarity = (even == codec.even_positive) ? Polarity::positive : Polarity::negative;
    return DecodedAddress{static_cast<std::int32_t>(addr / 2), polarity};
}

std::uint32_t encode_address(std::int32_t channel, Polarity polarity, const AddressCodec& codec) {
    if (channel < 0 || channel >= kNumChannels) {
        throw Error(Errc::channel_out_of_range, "channel " + std::to_string(channel));
    }
    const bool even = (polarity == Polarity::positive) == codec.even_positive;
    return static_cast<std::uint32_t>(channel) * 2 + (even ? 0u : 1u);
}

AedatReadResult read_aedat(const std::vector<std::uint8_t>& bytes, const AddressCodec& codec) {
    AedatReadResult result;
    const std::size_t body_start = parse_header(bytes, result.header);

    if (result.header.lines.empty()) {
        throw Error(Errc::bad_magic, "missing AEDAT header");
    }
    const std::string& magic = result.header.lines.front();
    std::size_t record_size = 0;
    if (magic == AedatHeader::kAedatV2Magic) {
        record_size = 8;
    } else if (magic == AedatHeader::kAedatV1Magic) {
        record_size = 6;
    } else {
        throw Error(Errc::bad_magic, "unrecognized version line '" + magic + "'");
    }

    const std::size_t body_len = bytes.size() - body_start;
    if (body_len % record_size != 0) {
        throw Error(Errc::truncated_record, "body length " + std::to_string(body_len) +
                                                " is not a multiple of " + std::to_string(record_size));
    }

    result.stream.events.reserve(body_len / record_size);
    for (std::size_t pos = body_start; pos < bytes.size(); pos += record_size) {
        const std::uint32_t addr = (record_size == 8) ? read_be32(&bytes[pos]) : read_be16(&bytes[pos]);
        const std::uint32_t ts = read_be32(&bytes[pos + record_size - 4]);
        const DecodedAddress decoded = decode_address(addr, codec);
        if (decoded.polarity == Polarity::negative) {
            ++result.discarded_negative;
            continue;
        }
        result.stream.events.push_back(RawEvent{static_cast<std::int64_t>(ts), decoded.channel});
    }

    result.stream = sort_stable_by_time(std::move(result.stream));
    result.stream.duration_us =
        result.stream.events.empty() ? 0 : result.stream.events.back().timestamp_us;
    return result;
}

std::vector<std::uint8_t> write_aedat(const AedatHeader& header, const EventStream<RawEvent>& stream,
                                      const AddressCodec& codec) {
    std::vector<std::uint8_t> out;
    out.reserve(header.lines.size() * 32 + stream.events.size() * 8);

    std::vector<std::string> lines = header.lines;
    if (lines.empty()) lines.emplace_back(AedatHeader::kAedatV2Magic);
    if (lines.front() != AedatHeader::kAedatV2Magic) {
        throw Error(Errc::bad_magic, "header must start with " + std::string(AedatHeader::kAedatV2Magic));
    }
    for (const std::string& line : lines) {
        out.insert(out.end(), line.begin(), line.end());
        out.push_back('\r');
        out.push_back('\n');
    }

    for (const RawEvent& ev : stream.events) {
        if (ev.timestamp_us < 0 || ev.timestamp_us > 0xFFFFFFFFll) {
            throw Error(Errc::timestamp_overflow,
                        "timestamp " + std::to_string(ev.timestamp_us) + " does not fit in 32 bits");
        }
        append_be32(out, encode_address(ev.channel, Polarity::positive, codec));
        append_be32(out, static_cast<std::uint32_t>(ev.timestamp_us));
    }
    return out;
}

AedatReadResult read_aedat_file(const std::string& path, const AddressCodec& codec) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io_error, "cannot open " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return read_aedat(bytes, codec);
}

void write_aedat_file(const std::string& path, const AedatHeader& header,
                      const EventStream<RawEvent>& stream, const AddressCodec& codec) {
    const std::vector<std::uint8_t> bytes = write_aedat(header, stream, codec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(Errc::io_error, "short write to " + path);
    }
}

} // namespace earnet
