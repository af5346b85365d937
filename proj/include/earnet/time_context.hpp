#ifndef EARNET_TIME_CONTEXT_HPP
#define EARNET_TIME_CONTEXT_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "earnet/events.hpp"

namespace earnet {

/// Per-channel decay constants. Low-frequency channels spike slower, so their
/// time constant is stretched: tau_ch = (2 + ch * 7/31) * tau_local, giving
/// multipliers 2 at channel 0 up to exactly 9 at channel 31.
struct TauSchedule {
    double tau_local_s = 1e-3;

    static double multiplier(int channel);
    double tau_for_channel(int channel) const;
};

double tau_for_channel(int channel, double tau_local_s);

/// Sliding window of the last `depth` event timestamps on each channel,
/// newest first. Slots start at -infinity (represented by a sentinel), which
/// decays to 0 in the feature vectors, so the first events on a channel are
/// still productive.
class LocalContext {
public:
    explicit LocalContext(int depth);

    int depth() const { return depth_; }
    void reset();

    /// Pushes the event's timestamp onto its channel window (dropping the
    /// oldest entry) and fills `out[j] = exp(-(t_i - t_j) / tau_ch)` over the
    /// stored timestamps, newest first; out[0] is exactly 1. Throws
    /// NonMonotoneEvent if the timestamp precedes the channel's newest entry.
    void push_and_build(const RawEvent& ev, const TauSchedule& schedule, Eigen::VectorXd& out);

    /// Context advance without computing the feature vector.
    void push(const RawEvent& ev);

private:
    int depth_;
    std::vector<std::int64_t> stamps_; // kNumChannels rings of `depth_` slots
    std::vector<int> head_;            // per-channel index of the newest slot
};

/// Timestamp of the most recent event for every (channel, local feature)
/// cell. All cells start at -infinity and only ever increase.
class CrossContext {
public:
    explicit CrossContext(int local_features);

    int local_features() const { return lk_; }
    int dim() const { return kNumChannels * lk_; }
    void reset();

    /// Writes the event's timestamp into its cell first (so the cell reads
    /// exactly 1), then fills `out` with the decay of every cell at the event
    /// time: out[ch * lk + f] = exp(-(t_i - cell) / tau_cr). Requires a
    /// time-sorted stream; an event older than the newest one seen throws
    /// NonMonotoneEvent.
    void update_and_build(const LocalEvent& ev, double tau_cr_s, Eigen::VectorXd& out);

    /// Context advance without computing the feature vector.
    void update(const LocalEvent& ev);

private:
    void check_and_store(const LocalEvent& ev);

    int lk_;
    std::vector<std::int64_t> last_;
    std::int64_t newest_;
};

} // namespace earnet

#endif // EARNET_TIME_CONTEXT_HPP
