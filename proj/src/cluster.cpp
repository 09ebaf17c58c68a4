#include "dac/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dac/kernels.hpp"

namespace dac {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        d += diff * diff;
    }
    return d;
}

} // namespace

KmeansResult kmeans(const std::vector<std::vector<double>>& points, int k, std::uint64_t seed) {
    const int n = static_cast<int>(points.size());
    if (k < 1 || k > n) throw std::invalid_argument("kmeans: k must be in [1, n]");
    (void)seed;  // recorded for provenance; initialization is fully deterministic

    // farthest-point init
    std::vector<std::vector<double>> centers;
    int first = 0;
    double best_norm = -1.0;
    for (int i = 0; i < n; ++i) {
        double norm = 0.0;
        for (double x : points[i]) norm += x * x;
        if (norm > best_norm) { best_norm = norm; first = i; }
    }
    centers.push_back(points[first]);
    while (static_cast<int>(centers.size()) < k) {
        int far = 0;
        double far_d = -1.0;
        for (int i = 0; i < n; ++i) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& c : centers) d = std::min(d, sq_dist(points[i], c));
            if (d > far_d) { far_d = d; far = i; }
        }
        centers.push_back(points[far]);
    }

    KmeansResult res;
    res.assignment.assign(n, -1);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<int> assign = kernels::assign_to_centers(points, centers);

        // re-seed empty clusters with the point farthest from its center
        for (int c = 0; c < k; ++c) {
            if (std::count(assign.begin(), assign.end(), c) > 0) continue;
            int far = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (std::count(assign.begin(), assign.end(), assign[i]) <= 1) continue;
                const double d = sq_dist(points[i], centers[assign[i]]);
                if (d > far_d) { far_d = d; far = i; }
            }
            if (far >= 0) {
                assign[far] = c;
                centers[c] = points[far];
            }
        }

        double sse = 0.0;
        for (int i = 0; i < n; ++i) sse += sq_dist(points[i], centers[assign[i]]);
        res.sse_log.push_back(sse);
        res.iterations = iter + 1;

        if (assign == res.assignment) break;
        res.assignment = assign;

        // update step
        const std::size_t dim = points.empty() ? 0 : points[0].size();
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        std::vector<int> counts(k, 0);
        for (int i = 0; i < n; ++i) {
            ++counts[assign[i]];
            for (std::size_t d = 0; d < dim; ++d) sums[assign[i]][d] += points[i][d];
        }
        for (int c = 0; c < k; ++c)
            if (counts[c] > 0)
                for (std::size_t d = 0; d < dim; ++d) centers[c][d] = sums[c][d] / counts[c];
    }

    // renumber ids densely in order of first appearance
    std::vector<int> remap(k, -1);
    int next = 0;
    for (int& a : res.assignment) {
        if (remap[a] < 0) remap[a] = next++;
        a = remap[a];
    }
    return res;
}

double cluster_diameter(const std::vector<std::string>& members, const Registry& registry) {
    if (members.empty()) throw std::invalid_argument("cluster_diameter: empty cluster");
    for (const auto& code : members) registry.at(code);  // validate even singletons
    double diameter = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            diameter = std::max(diameter,
                                great_circle_nm(registry.at(members[i]), registry.at(members[j])));
    return diameter;
}

std::vector<std::vector<std::string>> Clustering::clusters() const {
    std::vector<std::vector<std::string>> out(k);
    for (const auto& [code, id] : assignment) out.at(id).push_back(code);
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

Clustering adaptive_configure(const AdjacencyGraph& iag, const WindowStats& stats,
                              const Registry& registry, const KernelParams& kernel,
                              const AdaptiveParams& params, EmbeddingMethod method,
                              std::uint64_t seed,
                              const std::function<void(const RoundTrace&)>& on_round) {
    const int n = static_cast<int>(iag.nodes.size());
    int k = (n + 1) / 2;
    double lambda = 0.0;

    AEModel ae_model;
    bool ae_trained = false;

    Clustering result;
    for (int round = 0;; ++round) {
        KernelParams kp = kernel;
        kp.lambda = lambda;
        const HybridGraph hag = build_hag(iag, stats, registry, kp);

        Embedding emb;
        if (method == EmbeddingMethod::Spectral) {
            const int dim = std::min(params.spectral_dim > 0 ? params.spectral_dim : k, n);
            emb = spectral_embedding(hag, dim);
        } else {
            const int latent = std::min(params.ae_latent_dim, n - 1);
            if (!ae_trained || params.ae_retrain_each_round) {
                ae_model = train_autoencoder(hag, latent, seed, params.ae_train);
                ae_trained = true;
            }
            emb = encode(ae_model, hag);
        }

        const KmeansResult km = kmeans(emb.vectors, k, seed);

        result.assignment.clear();
        for (int i = 0; i < n; ++i) result.assignment[emb.nodes[i]] = km.assignment[i];
        result.k = 1 + *std::max_element(km.assignment.begin(), km.assignment.end());
        result.lambda_used = lambda;
        result.method = method;
        result.iterations = round;

        RoundTrace trace{round, k, lambda, {}};
        const auto clusters = result.clusters();
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (static_cast<int>(clusters[c].size()) > params.max_cluster_size ||
                cluster_diameter(clusters[c], registry) > params.max_diameter_nm)
                trace.violating_clusters.push_back(static_cast<int>(c));
        }
        if (on_round) on_round(trace);

        if (trace.violating_clusters.empty() || k >= n) break;
        ++k;
        lambda = std::min(lambda + params.lambda_step, params.lambda_cap);
    }
    return result;
}

} // namespace dac
