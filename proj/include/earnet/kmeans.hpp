#ifndef EARNET_KMEANS_HPP
#define EARNET_KMEANS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace earnet {

/// Learned cluster centers, one per row, plus per-center update tallies.
/// The counts drive the 1/count learning rate of the mini-batch updates.
struct Codebook {
    Eigen::MatrixXd centers; // k x dim
    std::vector<std::uint64_t> counts;

    int k() const { return static_cast<int>(centers.rows()); }
    int dim() const { return static_cast<int>(centers.cols()); }
};

enum class InitMethod { kmeanspp, random_sample };

struct MiniBatchConfig {
    int k = 8;
    int batch_size = 1024;
    /// Number of mini-batches; negative selects 10 * ceil(N / batch_size).
    int num_iterations = -1;
    std::uint64_t seed = 0;
    InitMethod init = InitMethod::kmeanspp;
};

/// Seeded starting centers: k-means++ (D^2 sampling without replacement,
/// falling back to uniform among unchosen points when all remaining distances
/// are zero) or a uniform sample without replacement. Counts start at zero.
Codebook init_centers(const Eigen::MatrixXd& data, const MiniBatchConfig& config);
Codebook init_centers(const Eigen::MatrixXf& data, const MiniBatchConfig& config);

/// One mini-batch update pass: every point is assigned to its nearest center
/// (squared Euclidean, ties to the lowest index) against the centers as they
/// were at batch start, then updates are applied sequentially:
/// count += 1; center += (x - center) / count.
void partial_fit(Codebook& codebook, const Eigen::MatrixXd& batch);

/// Index of the nearest center; ties break to the lowest index.
int predict(const Codebook& codebook, const Eigen::VectorXd& point);

/// Fast path: same result, with |center|^2 precomputed by the caller.
int predict(const Codebook& codebook, const Eigen::VectorXd& point,
            const Eigen::VectorXd& center_sqnorms);

Eigen::VectorXd center_sqnorms(const Codebook& codebook);

/// init_centers followed by num_iterations mini-batches drawn as consecutive
/// chunks of seeded permutations (reshuffled per epoch), so every point is
/// visited equally often when iterations cover whole epochs. Deterministic
/// for a fixed seed.
Codebook fit(const Eigen::MatrixXd& data, const MiniBatchConfig& config);
Codebook fit(const Eigen::MatrixXf& data, const MiniBatchConfig& config);

} // namespace earnet

#endif // EARNET_KMEANS_HPP
