#ifndef EARNET_ERRORS_HPP
#define EARNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace earnet {

enum class Errc {
    address_out_of_range,
    channel_out_of_range,
    bad_magic,
    truncated_record,
    timestamp_overflow,
    unsupported_format,
    corrupt_riff,
    nyquist_violation,
    non_monotone_event,
    non_positive_tau,
    too_few_points,
    dimension_mismatch,
    feature_out_of_range,
    bad_version,
    empty_class,
    empty_histogram,
    degenerate_input,
    too_few_samples,
    io_error,
};

const char* errc_name(Errc code);

/// All earnet failures carry an Errc so callers can branch on the kind
/// without string-matching the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace earnet

#endif // EARNET_ERRORS_HPP
