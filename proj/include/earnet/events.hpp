#ifndef EARNET_EVENTS_HPP
#define EARNET_EVENTS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace earnet {

/// Number of frequency channels of the auditory front end. Fixed: the wire
/// format (64 addresses) and the cross-layer context both assume it.
inline constexpr int kNumChannels = 32;

/// One spike from the cochlea front end. Channel 0 is the highest-frequency
/// band. Timestamps are integer microseconds; decay math converts to seconds
/// at the point of use.
struct RawEvent {
    std::int64_t timestamp_us = 0;
    std::int32_t channel = 0;

    friend bool operator==(const RawEvent&, const RawEvent&) = default;
};

/// A raw event plus the index of the per-channel pattern it matched.
struct LocalEvent {
    std::int64_t timestamp_us = 0;
    std::int32_t channel = 0;
    std::int32_t local_feature = 0;

    friend bool operator==(const LocalEvent&, const LocalEvent&) = default;
};

/// Output of the cross layer: only a timestamp and the matched cross-feature
/// index survive.
struct CrossEvent {
    std::int64_t timestamp_us = 0;
    std::int32_t cross_feature = 0;

    friend bool operator==(const CrossEvent&, const CrossEvent&) = default;
};

/// Time-ordered event sequence. Ties are legal (hardware can emit bursts);
/// tie order is the stored order.
template <typename E>
struct EventStream {
    std::vector<E> events;
    std::int64_t duration_us = 0;

    std::size_t size() const { return events.size(); }
    bool empty() const { return events.empty(); }
};

struct Recording {
    std::string id;
    std::string label;
    EventStream<RawEvent> stream;
};

struct ValidationReport {
    std::optional<std::size_t> first_order_violation; ///< index of first event whose timestamp decreases
    std::size_t out_of_range_channels = 0;

    bool ok() const { return !first_order_violation.has_value() && out_of_range_channels == 0; }
};

ValidationReport validate_stream(const EventStream<RawEvent>& stream);

/// Stable sort by timestamp; equal timestamps keep their input order.
template <typename E>
EventStream<E> sort_stable_by_time(EventStream<E> stream) {
    std::stable_sort(stream.events.begin(), stream.events.end(),
                     [](const E& a, const E& b) { return a.timestamp_us < b.timestamp_us; });
    return stream;
}

} // namespace earnet

#endif // EARNET_EVENTS_HPP
