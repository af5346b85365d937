#include "earnet/errors.hpp"

namespace earnet {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::address_out_of_range: return "AddressOutOfRange";
    case Errc::channel_out_of_range: return "ChannelOutOfRange";
    case Errc::bad_magic: return "BadMagic";
    case Errc::truncated_record: return "TruncatedRecord";
    case Errc::timestamp_overflow: return "TimestampOverflow";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::corrupt_riff: return "CorruptRiff";
    case Errc::nyquist_violation: return "NyquistViolation";
    case Errc::non_monotone_event: return "NonMonotoneEvent";
    case Errc::non_positive_tau: return "NonPositiveTau";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::feature_out_of_range: return "FeatureOutOfRange";
    case Errc::bad_version: return "BadVersion";
    case Errc::empty_class: return "EmptyClass";
    case Errc::empty_histogram: return "EmptyHistogram";
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::too_few_samples: return "TooFewSamples";
    case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace earnet
