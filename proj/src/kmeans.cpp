#include "earnet/kmeans.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "earnet/errors.hpp"
#include "earnet/rng.hpp"

namespace earnet {

namespace {

void check_dataset(Eigen::Index rows, int k) {
    if (k < 1) {
        throw Error(Errc::too_few_points, "k must be at least 1");
    }
    if (rows < k) {
        throw Error(Errc::too_few_points,
                    std::to_string(rows) + " points for k=" + std::to_string(k));
    }
}

template <typename Derived>
Codebook init_centers_impl(const Eigen::MatrixBase<Derived>& data, const MiniBatchConfig& config) {
    const Eigen::Index n = data.rows();
    check_dataset(n, config.k);

    Rng rng(config.seed);
    Codebook cb;
    cb.centers.resize(config.k, data.cols());
    cb.counts.assign(config.k, 0);

    if (config.init == InitMethod::random_sample) {
        const auto picks = rng.sample_without_replacement(static_cast<std::size_t>(n), config.k);
        for (int j = 0; j < config.k; ++j) {
            cb.centers.row(j) = data.row(static_cast<Eigen::Index>(picks[j])).template cast<double>();
        }
        return cb;
    }

    // k-means++: the next center is drawn with probability proportional to
    // the squared distance to the nearest chosen center.
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    Eigen::VectorXd d2 = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());

    const auto first = static_cast<Eigen::Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    cb.centers.row(0) = data.row(first).template cast<double>();
    chosen[static_cast<std::size_t>(first)] = 1;

    Eigen::VectorXd point(data.cols());
    for (int j = 1; j < config.k; ++j) {
        const Eigen::VectorXd prev = cb.centers.row(j - 1).transpose();
        double total = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (chosen[static_cast<std::size_t>(i)]) {
                d2[i] = 0.0;
                continue;
            }
            point = data.row(i).template cast<double>().transpose();
            d2[i] = std::min(d2[i], (point - prev).squaredNorm());
            total += d2[i];
        }

        Eigen::Index pick = -1;
        if (total > 0.0) {
            const double r = rng.uniform01() * total;
            double cum = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                cum += d2[i];
                if (cum > r) {
                    pick = i;
                    break;
                }
            }
            // Guard against accumulated rounding pushing r past the last bin.
            if (pick < 0) {
                for (Eigen::Index i = n - 1; i >= 0; --i) {
                    if (d2[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        }
        if (pick < 0) {
            // All remaining points coincide with chosen centers; fall back to
            // a uniform draw among the unchosen so k centers always exist.
            std::vector<Eigen::Index> open;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (!chosen[static_cast<std::size_t>(i)]) open.push_back(i);
            }
            pick = open[static_cast<std::size_t>(rng.uniform_below(open.size()))];
        }

        cb.centers.row(j) = data.row(pick).template cast<double>();
        chosen[static_cast<std::size_t>(pick)] = 1;
    }
    return cb;
}

template <typename Derived>
Codebook fit_impl(const Eigen::MatrixBase<Derived>& data, const MiniBatchConfig& config) {
    const Eigen::Index n = data.rows();
    check_dataset(n, config.k);
    if (config.batch_size < 1) {
        throw Error(Errc::too_few_points, "batch_size must be at least 1");
    }

    Codebook cb = init_centers_impl(data, config);

    const int batches_per_epoch =
        static_cast<int>((n + config.batch_size - 1) / config.batch_size);
    const int iterations =
        config.num_iterations >= 0 ? config.num_iterations : 10 * batches_per_epoch;

    Rng rng(derive_seed(config.seed, "batch-order"));
    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::size_t cursor = order.size(); // forces a shuffle before the first batch

    Eigen::MatrixXd batch;
    for (int it = 0; it < iterations; ++it) {
        if (cursor >= order.size()) {
            rng.shuffle(order);
            cursor = 0;
        }
        const std::size_t take =
            std::min<std::size_t>(config.batch_size, order.size() - cursor);
        batch.resize(static_cast<Eigen::Index>(take), data.cols());
        for (std::size_t r = 0; r < take; ++r) {
            batch.row(static_cast<Eigen::Index>(r)) =
                data.row(static_cast<Eigen::Index>(order[cursor + r])).template cast<double>();
        }
        cursor += take;
        partial_fit(cb, batch);
    }
    return cb;
}

} // namespace

Codebook init_centers(const Eigen::MatrixXd& data, const MiniBatchConfig& config) {
    return init_centers_impl(data, config);
}

Codebook init_centers(const Eigen::MatrixXf& data, const MiniBatchConfig& config) {
    return init_centers_impl(data, config);
}

void partial_fit(Codebook& codebook, const Eigen::MatrixXd& batch) {
    if (batch.rows() == 0) return;
    if (batch.cols() != codebook.dim()) {
        throw Error(Errc::dimension_mismatch, "batch dim " + std::to_string(batch.cols()) +
                                                  " vs codebook dim " + std::to_string(codebook.dim()));
    }

    // Assignments are computed against the centers at batch start (the
    // |c|^2 - 2 x.c score has the same argmin as the squared distance).
    const Eigen::VectorXd sqn = center_sqnorms(codebook);
    const Eigen::MatrixXd scores =
        (-2.0 * (batch * codebook.centers.transpose())).rowwise() + sqn.transpose();

    std::vector<int> assign(static_cast<std::size_t>(batch.rows()));
    for (Eigen::Index i = 0; i < batch.rows(); ++i) {
        int best = 0;
        double best_score = scores(i, 0);
        for (int j = 1; j < codebook.k(); ++j) {
            if (scores(i, j) < best_score) {
                best_score = scores(i, j);
                best = j;
            }
        }
        assign[static_cast<std::size_t>(i)] = best;
    }

    for (Eigen::Index i = 0; i < batch.rows(); ++i) {
        const int c = assign[static_cast<std::size_t>(i)];
        const double eta = 1.0 / static_cast<double>(++codebook.counts[static_cast<std::size_t>(c)]);
        codebook.centers.row(c) += eta * (batch.row(i) - codebook.centers.row(c));
    }
}

int predict(const Codebook& codebook, const Eigen::VectorXd& point,
            const Eigen::VectorXd& center_sqnorms) {
    if (point.size() != codebook.dim()) {
        throw Error(Errc::dimension_mismatch, "point dim " + std::to_string(point.size()) +
                                                  " vs codebook dim " + std::to_string(codebook.dim()));
    }
    int best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    for (int j = 0; j < codebook.k(); ++j) {
        const double score = center_sqnorms[j] - 2.0 * codebook.centers.row(j).dot(point);
        if (score < best_score) {
            best_score = score;
            best = j;
        }
    }
    return best;
}

int predict(const Codebook& codebook, const Eigen::VectorXd& point) {
    return predict(codebook, point, center_sqnorms(codebook));
}

Eigen::VectorXd center_sqnorms(const Codebook& codebook) {
    return codebook.centers.rowwise().squaredNorm();
}

Codebook fit(const Eigen::MatrixXd& data, const MiniBatchConfig& config) {
    return fit_impl(data, config);
}

Codebook fit(const Eigen::MatrixXf& data, const MiniBatchConfig& config) {
    return fit_impl(data, config);
}

} // namespace earnet
