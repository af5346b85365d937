#ifndef EARNET_NETWORK_HPP
#define EARNET_NETWORK_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "earnet/events.hpp"
#include "earnet/kmeans.hpp"

namespace earnet {

/// First layer: per-channel temporal patterns. The codebook has lk centers of
/// length n (the channel window depth).
struct LocalLayerModel {
    Codebook codebook;
    double tau_local_s = 1e-3;
    int n = 5;

    int lk() const { return codebook.k(); }
};

/// Second layer: patterns across channels. The codebook has ck centers of
/// length 32 * lk.
struct CrossLayerModel {
    Codebook codebook;
    double tau_cr_s = 0.2;

    int ck() const { return codebook.k(); }
    int lk() const { return codebook.dim() / kNumChannels; }
};

struct NetworkModel {
    LocalLayerModel local;
    CrossLayerModel cross;

    static constexpr int kFormatVersion = 1;
};

/// Per-recording event counts over the cross features; the classifier input.
struct ActivityHistogram {
    std::vector<std::uint32_t> counts;

    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (std::uint32_t c : counts) sum += c;
        return sum;
    }
};

/// Caps the number of feature vectors collected for clustering. Events past
/// the cap are still applied to the temporal contexts; they just do not
/// contribute a training vector. Sampling is uniform over all events and
/// seeded, so training is deterministic.
inline constexpr std::uint64_t kDefaultTrainVectorCap = 2'000'000;

LocalLayerModel train_local(std::span<const Recording> recordings, int n, int lk,
                            double tau_local_s, const MiniBatchConfig& kmeans_config,
                            std::uint64_t vector_cap = kDefaultTrainVectorCap);

/// Maps every raw event to a local event with the same timestamp and channel
/// plus the index of the nearest local feature. Count-preserving.
EventStream<LocalEvent> infer_local(const EventStream<RawEvent>& stream,
                                    const LocalLayerModel& model);

CrossLayerModel train_cross(std::span<const Recording> recordings, const LocalLayerModel& local,
                            int ck, double tau_cr_s, const MiniBatchConfig& kmeans_config,
                            std::uint64_t vector_cap = kDefaultTrainVectorCap);

/// Maps every local event to a cross event with the same timestamp.
/// Count-preserving.
EventStream<CrossEvent> infer_cross(const EventStream<LocalEvent>& stream,
                                    const CrossLayerModel& model);

ActivityHistogram histogram(const EventStream<CrossEvent>& stream, int ck);

/// infer_local then infer_cross then histogram, with fresh contexts.
ActivityHistogram process_recording(const NetworkModel& model, const EventStream<RawEvent>& stream);

/// Versioned JSON round-trip; centers survive exactly (shortest round-trip
/// decimal encoding of binary64).
std::string save_model(const NetworkModel& model);
NetworkModel load_model(std::string_view bytes);

} // namespace earnet

#endif // EARNET_NETWORK_HPP
