#ifndef EARNET_AEDAT_HPP
#define EARNET_AEDAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "earnet/events.hpp"

namespace earnet {

/// AEDAT ASCII preamble: comment lines starting with '#', the first being the
/// version magic. Lines are stored without terminators and written back with
/// "\r\n" (the jAER convention).
struct AedatHeader {
    std::vector<std::string> lines{std::string(kAedatV2Magic)};

    static constexpr const char* kAedatV2Magic = "#!AER-DAT2.0";
    static constexpr const char* kAedatV1Magic = "#!AER-DAT1.0";
};

/// Address layout for the 32-channel monaural sensor: 64 addresses, two per
/// channel (one per rectification polarity). channel = addr >> 1 and the low
/// bit carries polarity. Which parity means "positive" is not standardized
/// across captures, so it is a switch here.
struct AddressCodec {
    bool even_positive = true;

    static constexpr std::uint32_t kNumAddresses = 2 * kNumChannels;
};

enum class Polarity { positive, negative };

struct DecodedAddress {
    std::int32_t channel;
    Polarity polarity;
};

DecodedAddress decode_address(std::uint32_t addr, const AddressCodec& codec = {});
std::uint32_t encode_address(std::int32_t channel, Polarity polarity, const AddressCodec& codec = {});

struct AedatReadResult {
    AedatHeader header;
    EventStream<RawEvent> stream;
    std::uint64_t discarded_negative = 0;
};

/// Parses an AEDAT 2.0 buffer (32-bit big-endian address, 32-bit big-endian
/// timestamp in microseconds per record). AEDAT 1.0 (16-bit address) is
/// accepted via header sniffing. Negative-polarity events are counted and
/// dropped; survivors are returned stably time-sorted.
AedatReadResult read_aedat(const std::vector<std::uint8_t>& bytes, const AddressCodec& codec = {});

/// Serializes a stream as AEDAT 2.0 with positive-polarity addresses.
/// Timestamps must fit in an unsigned 32-bit microsecond counter; wrap
/// markers are unsupported, so longer recordings are rejected.
std::vector<std::uint8_t> write_aedat(const AedatHeader& header, const EventStream<RawEvent>& stream,
                                      const AddressCodec& codec = {});

AedatReadResult read_aedat_file(const std::string& path, const AddressCodec& codec = {});
void write_aedat_file(const std::string& path, const AedatHeader& header,
                      const EventStream<RawEvent>& stream, const AddressCodec& codec = {});

} // namespace earnet

#endif // EARNET_AEDAT_HPP
