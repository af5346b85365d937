#include "earnet/events.hpp"

#include <limits>

namespace earnet {

ValidationReport validate_stream(const EventStream<RawEvent>& stream) {
    ValidationReport report;
    std::int64_t prev = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < stream.events.size(); ++i) {
        const RawEvent& ev = stream.events[i];
        if (ev.timestamp_us < prev && !report.first_order_violation) {
            report.first_order_violation = i;
        }
        prev = std::max(prev, ev.timestamp_us);
        if (ev.channel < 0 || ev.channel >= kNumChannels) {
            ++report.out_of_range_channels;
        }
    }
    return report;
}

} // namespace earnet
