#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dac/embed.hpp"
#include "dac/graph.hpp"

namespace dac {

struct KmeansResult {
    std::vector<int> assignment;   // point index -> cluster id in [0, k)
    std::vector<double> sse_log;   // within-cluster sum of squares per iteration
    int iterations = 0;
};

// Lloyd's iterations from deterministic farthest-point initialization:
// first center = row with the largest norm (ties by index), later centers
// maximize the min distance to those already chosen. Empty clusters are
// re-seeded with the point farthest from its current center. Stops when
// assignments are stable or after 300 iterations.
KmeansResult kmeans(const std::vector<std::vector<double>>& points, int k,
                    std::uint64_t seed);

double cluster_diameter(const std::vector<std::string>& members, const Registry& registry);

struct AdaptiveParams {
    int max_cluster_size = 3;
    double max_diameter_nm = 100.0;
    double lambda_step = 0.1;
    double lambda_cap = 0.5;
    int spectral_dim = 0;   // 0 = use current k
    int ae_latent_dim = 10;
    bool ae_retrain_each_round = true;
    AETrainConfig ae_train;
};

struct Clustering {
    std::map<std::string, int> assignment;  // airport code -> cluster id in [0, k)
    int k = 0;
    double lambda_used = 0.0;
    EmbeddingMethod method = EmbeddingMethod::Spectral;
    int iterations = 0;  // escalation rounds taken

    std::vector<std::vector<std::string>> clusters() const;  // members sorted, ids dense
};

struct RoundTrace {
    int round = 0;
    int k = 0;
    double lambda = 0.0;
    std::vector<int> violating_clusters;
};

// Adaptive loop: start at lambda = 0 and k = ceil(n/2); rebuild the HAG,
// embed, run k-means; while any cluster exceeds max_cluster_size members or
// max_diameter_nm, bump k by 1 and lambda by lambda_step (capped). k is
// bounded by n, so termination is guaranteed.
Clustering adaptive_configure(const AdjacencyGraph& iag, const WindowStats& stats,
                              const Registry& registry, const KernelParams& kernel,
                              const AdaptiveParams& params, EmbeddingMethod method,
                              std::uint64_t seed,
                              const std::function<void(const RoundTrace&)>& on_round = {});

} // namespace dac
