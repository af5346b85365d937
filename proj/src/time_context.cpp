#include "earnet/time_context.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "earnet/errors.hpp"

namespace earnet {

namespace {

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::min();

void check_channel(int channel) {
    if (channel < 0 || channel >= kNumChannels) {
        throw Error(Errc::channel_out_of_range, "channel " + std::to_string(channel));
    }
}

} // namespace

double TauSchedule::multiplier(int channel) {
    check_channel(channel);
    // (channel * 7) / 31 keeps the endpoints exact: 0/31 = 0 and 217/31 = 7.
    return 2.0 + (static_cast<double>(channel) * 7.0) / 31.0;
}

double TauSchedule::tau_for_channel(int channel) const {
    return earnet::tau_for_channel(channel, tau_local_s);
}

double tau_for_channel(int channel, double tau_local_s) {
    if (!(tau_local_s > 0.0)) {
        throw Error(Errc::non_positive_tau, "tau_local must be positive");
    }
    return TauSchedule::multiplier(channel) * tau_local_s;
}

LocalContext::LocalContext(int depth) : depth_(depth) {
    if (depth < 1) {
        throw Error(Errc::dimension_mismatch, "window depth must be at least 1");
    }
    stamps_.assign(static_cast<std::size_t>(kNumChannels) * depth_, kNever);
    head_.assign(kNumChannels, 0);
}

void LocalContext::reset() {
    std::fill(stamps_.begin(), stamps_.end(), kNever);
    std::fill(head_.begin(), head_.end(), 0);
}

void LocalContext::push(const RawEvent& ev) {
    check_channel(ev.channel);
    std::int64_t* ring = stamps_.data() + static_cast<std::size_t>(ev.channel) * depth_;
    int& head = head_[ev.channel];
    const std::int64_t newest = ring[head];
    if (newest != kNever && ev.timestamp_us < newest) {
        throw Error(Errc::non_monotone_event,
                    "timestamp " + std::to_string(ev.timestamp_us) + " precedes channel newest " +
                        std::to_string(newest));
    }
    head = (head + 1) % depth_;
    ring[head] = ev.timestamp_us;
}

void LocalContext::push_and_build(const RawEvent& ev, const TauSchedule& schedule,
                                  Eigen::VectorXd& out) {
    push(ev);
    const double inv_tau_us = 1.0 / (schedule.tau_for_channel(ev.channel) * 1e6);

    out.resize(depth_);
    const std::int64_t* ring = stamps_.data() + static_cast<std::size_t>(ev.channel) * depth_;
    const int head = head_[ev.channel];
    for (int j = 0; j < depth_; ++j) {
        const std::int64_t t = ring[(head - j + depth_) % depth_];
        out[j] = (t == kNever)
                     ? 0.0
                     : std::exp(-static_cast<double>(ev.timestamp_us - t) * inv_tau_us);
    }
}

CrossContext::CrossContext(int local_features) : lk_(local_features), newest_(kNever) {
    if (local_features < 1) {
        throw Error(Errc::dimension_mismatch, "local feature count must be at least 1");
    }
    last_.assign(static_cast<std::size_t>(kNumChannels) * lk_, kNever);
}

void CrossContext::reset() {
    std::fill(last_.begin(), last_.end(), kNever);
    newest_ = kNever;
}

void CrossContext::check_and_store(const LocalEvent& ev) {
    check_channel(ev.channel);
    if (ev.local_feature < 0 || ev.local_feature >= lk_) {
        throw Error(Errc::feature_out_of_range,
                    "local feature " + std::to_string(ev.local_feature) + " >= " + std::to_string(lk_));
    }
    if (newest_ != kNever && ev.timestamp_us < newest_) {
        throw Error(Errc::non_monotone_event,
                    "timestamp " + std::to_string(ev.timestamp_us) + " precedes newest " +
                        std::to_string(newest_));
    }
    last_[static_cast<std::size_t>(ev.channel) * lk_ + ev.local_feature] = ev.timestamp_us;
    newest_ = ev.timestamp_us;
}

void CrossContext::update(const LocalEvent& ev) { check_and_store(ev); }

void CrossContext::update_and_build(const LocalEvent& ev, double tau_cr_s, Eigen::VectorXd& out) {
    if (!(tau_cr_s > 0.0)) {
        throw Error(Errc::non_positive_tau, "tau_cr must be positive");
    }
    check_and_store(ev);

    const double inv_tau_us = 1.0 / (tau_cr_s * 1e6);
    const int n = dim();
    out.resize(n);
    // exp(-inf) = 0, so never-seen cells come out as exact zeros.
    for (int i = 0; i < n; ++i) {
        out[i] = (last_[i] == kNever)
                     ? std::numeric_limits<double>::infinity()
                     : static_cast<double>(ev.timestamp_us - last_[i]) * inv_tau_us;
    }
    out = (-out.array()).exp();
}

} // namespace earnet
