#include "earnet/network.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

#include "earnet/errors.hpp"
#include "earnet/rng.hpp"
#include "earnet/time_context.hpp"

namespace earnet {

namespace {

using nlohmann::json;

/// Sorted global event indices to keep as training vectors (all of them when
/// total fits under the cap).
std::vector<std::uint64_t> choose_sample(std::uint64_t total, std::uint64_t cap,
                                         std::uint64_t seed) {
    std::vector<std::uint64_t> picks;
    if (total <= cap) {
        picks.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) picks[i] = i;
        return picks;
    }
    Rng rng(seed);
    auto sampled = rng.sample_without_replacement(static_cast<std::size_t>(total),
                                                  static_cast<std::size_t>(cap));
    picks.assign(sampled.begin(), sampled.end());
    std::sort(picks.begin(), picks.end());
    return picks;
}

std::uint64_t total_events(std::span<const Recording> recordings) {
    std::uint64_t total = 0;
    for (const Recording& rec : recordings) total += rec.stream.size();
    return total;
}

json codebook_to_json(const Codebook& cb) {
    json centers = json::array();
    for (int i = 0; i < cb.k(); ++i) {
        json row = json::array();
        for (int j = 0; j < cb.dim(); ++j) row.push_back(cb.centers(i, j));
        centers.push_back(std::move(row));
    }
    return json{{"centers", std::move(centers)}, {"counts", cb.counts}};
}

Codebook codebook_from_json(const json& j, int expected_dim, const char* what) {
    if (!j.contains("centers") || !j["centers"].is_array() || j["centers"].empty()) {
        throw Error(Errc::bad_version, std::string(what) + ": missing centers");
    }
    const auto& centers = j["centers"];
    const int k = static_cast<int>(centers.size());
    Codebook cb;
    cb.centers.resize(k, expected_dim);
    for (int i = 0; i < k; ++i) {
        if (!centers[i].is_array() || static_cast<int>(centers[i].size()) != expected_dim) {
            throw Error(Errc::dimension_mismatch,
                        std::string(what) + ": center " + std::to_string(i) + " has dim " +
                            std::to_string(centers[i].size()) + ", expected " +
                            std::to_string(expected_dim));
        }
        for (int d = 0; d < expected_dim; ++d) {
            const double v = centers[i][d].get<double>();
            if (!std::isfinite(v)) {
                throw Error(Errc::bad_version, std::string(what) + ": non-finite center value");
            }
            cb.centers(i, d) = v;
        }
    }
    cb.counts = j.value("counts", std::vector<std::uint64_t>(static_cast<std::size_t>(k), 0));
    if (static_cast<int>(cb.counts.size()) != k) {
        throw Error(Errc::dimension_mismatch, std::string(what) + ": counts length mismatch");
    }
    return cb;
}

} // namespace

LocalLayerModel train_local(std::span<const Recording> recordings, int n, int lk,
                            double tau_local_s, const MiniBatchConfig& kmeans_config,
                            std::uint64_t vector_cap) {
    if (recordings.empty()) {
        throw Error(Errc::too_few_points, "no recordings to train on");
    }
    const std::uint64_t total = total_events(recordings);
    const std::vector<std::uint64_t> picks =
        choose_sample(total, vector_cap, derive_seed(kmeans_config.seed, "local-sample"));

    Eigen::MatrixXf vectors(static_cast<Eigen::Index>(picks.size()), n);
    Eigen::VectorXd vec(n);
    const TauSchedule schedule{tau_local_s};
    LocalContext context(n);

    std::uint64_t global_index = 0;
    std::size_t next_pick = 0;
    for (const Recording& rec : recordings) {
        context.reset();
        for (const RawEvent& ev : rec.stream.events) {
            if (next_pick < picks.size() && picks[next_pick] == global_index) {
                context.push_and_build(ev, schedule, vec);
                vectors.row(static_cast<Eigen::Index>(next_pick)) = vec.cast<float>();
                ++next_pick;
            } else {
                context.push(ev);
            }
            ++global_index;
        }
    }

    MiniBatchConfig cfg = kmeans_config;
    cfg.k = lk;
    cfg.seed = derive_seed(kmeans_config.seed, "local-kmeans");
    LocalLayerModel model;
    model.codebook = fit(vectors, cfg);
    model.tau_local_s = tau_local_s;
    model.n = n;
    return model;
}

EventStream<LocalEvent> infer_local(const EventStream<RawEvent>& stream,
                                    const LocalLayerModel& model) {
    EventStream<LocalEvent> out;
    out.duration_us = stream.duration_us;
    out.events.reserve(stream.size());

    LocalContext context(model.n);
    const TauSchedule schedule{model.tau_local_s};
    const Eigen::VectorXd sqn = center_sqnorms(model.codebook);
    Eigen::VectorXd vec(model.n);
    for (const RawEvent& ev : stream.events) {
        context.push_and_build(ev, schedule, vec);
        const int lft = predict(model.codebook, vec, sqn);
        out.events.push_back(LocalEvent{ev.timestamp_us, ev.channel, lft});
    }
    return out;
}

CrossLayerModel train_cross(std::span<const Recording> recordings, const LocalLayerModel& local,
                            int ck, double tau_cr_s, const MiniBatchConfig& kmeans_config,
                            std::uint64_t vector_cap) {
    if (recordings.empty()) {
        throw Error(Errc::too_few_points, "no recordings to train on");
    }
    const std::uint64_t total = total_events(recordings);
    const std::vector<std::uint64_t> picks =
        choose_sample(total, vector_cap, derive_seed(kmeans_config.seed, "cross-sample"));

    const int dim = kNumChannels * local.lk();
    Eigen::MatrixXf vectors(static_cast<Eigen::Index>(picks.size()), dim);
    Eigen::VectorXd vec(dim);
    CrossContext context(local.lk());

    std::uint64_t global_index = 0;
    std::size_t next_pick = 0;
    for (const Recording& rec : recordings) {
        const EventStream<LocalEvent> local_stream = infer_local(rec.stream, local);
        context.reset();
        for (const LocalEvent& ev : local_stream.events) {
            if (next_pick < picks.size() && picks[next_pick] == global_index) {
                context.update_and_build(ev, tau_cr_s, vec);
                vectors.row(static_cast<Eigen::Index>(next_pick)) = vec.cast<float>();
                ++next_pick;
            } else {
                context.update(ev);
            }
            ++global_index;
        }
    }

    MiniBatchConfig cfg = kmeans_config;
    cfg.k = ck;
    cfg.seed = derive_seed(kmeans_config.seed, "cross-kmeans");
    CrossLayerModel model;
    model.codebook = fit(vectors, cfg);
    model.tau_cr_s = tau_cr_s;
    return model;
}

EventStream<CrossEvent> infer_cross(const EventStream<LocalEvent>& stream,
                                    const CrossLayerModel& model) {
    EventStream<CrossEvent> out;
    out.duration_us = stream.duration_us;
    out.events.reserve(stream.size());

    CrossContext context(model.lk());
    const Eigen::VectorXd sqn = center_sqnorms(model.codebook);
    Eigen::VectorXd vec(model.codebook.dim());
    for (const LocalEvent& ev : stream.events) {
        context.update_and_build(ev, model.tau_cr_s, vec);
        const int cft = predict(model.codebook, vec, sqn);
        out.events.push_back(CrossEvent{ev.timestamp_us, cft});
    }
    return out;
}

ActivityHistogram histogram(const EventStream<CrossEvent>& stream, int ck) {
    ActivityHistogram hist;
    hist.counts.assign(static_cast<std::size_t>(ck), 0);
    for (const CrossEvent& ev : stream.events) {
        if (ev.cross_feature < 0 || ev.cross_feature >= ck) {
            throw Error(Errc::feature_out_of_range,
                        "cross feature " + std::to_string(ev.cross_feature) + " >= " +
                            std::to_string(ck));
        }
        ++hist.counts[static_cast<std::size_t>(ev.cross_feature)];
    }
    return hist;
}

ActivityHistogram process_recording(const NetworkModel& model, const EventStream<RawEvent>& stream) {
    return histogram(infer_cross(infer_local(stream, model.local), model.cross),
                     model.cross.ck());
}

std::string save_model(const NetworkModel& model) {
    json doc;
    doc["format"] = "earnet-model";
    doc["version"] = NetworkModel::kFormatVersion;
    doc["local"] = codebook_to_json(model.local.codebook);
    doc["local"]["n"] = model.local.n;
    doc["local"]["lk"] = model.local.lk();
    doc["local"]["tau_local_s"] = model.local.tau_local_s;
    doc["cross"] = codebook_to_json(model.cross.codebook);
    doc["cross"]["ck"] = model.cross.ck();
    doc["cross"]["tau_cr_s"] = model.cross.tau_cr_s;
    return doc.dump(2);
}

NetworkModel load_model(std::string_view bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::exception& e) {
        throw Error(Errc::bad_version, std::string("not a model file: ") + e.what());
    }
    if (doc.value("format", "") != "earnet-model" ||
        doc.value("version", -1) != NetworkModel::kFormatVersion) {
        throw Error(Errc::bad_version, "unsupported model format or version");
    }
    if (!doc.contains("local") || !doc.contains("cross")) {
        throw Error(Errc::bad_version, "missing layer sections");
    }

    NetworkModel model;
    const json& local = doc["local"];
    const int n = local.value("n", 0);
    if (n < 1) throw Error(Errc::bad_version, "invalid local window depth");
    model.local.codebook = codebook_from_json(local, n, "local");
    model.local.n = n;
    model.local.tau_local_s = local.value("tau_local_s", 0.0);
    if (!(model.local.tau_local_s > 0.0)) {
        throw Error(Errc::bad_version, "invalid tau_local");
    }

    const json& cross = doc["cross"];
    model.cross.tau_cr_s = cross.value("tau_cr_s", 0.0);
    if (!(model.cross.tau_cr_s > 0.0)) {
        throw Error(Errc::bad_version, "invalid tau_cr");
    }
    model.cross.codebook = codebook_from_json(cross, kNumChannels * model.local.lk(), "cross");

    const int declared_lk = local.value("lk", model.local.lk());
    if (declared_lk != model.local.lk()) {
        throw Error(Errc::dimension_mismatch, "declared lk does not match local codebook");
    }
    const int declared_ck = cross.value("ck", model.cross.ck());
    if (declared_ck != model.cross.ck()) {
        throw Error(Errc::dimension_mismatch, "declared ck does not match cross codebook");
    }
    return model;
}

} // namespace earnet
