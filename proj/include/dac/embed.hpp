#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dac/graph.hpp"

#include <json.hpp>

namespace dac {

enum class EmbeddingMethod { Spectral, Autoencoder };

std::string to_string(EmbeddingMethod m);

struct Embedding {
    std::vector<std::string> nodes;            // ordered codes
    std::vector<std::vector<double>> vectors;  // n x dim, row i embeds node i
    EmbeddingMethod method = EmbeddingMethod::Spectral;
    int dim = 0;
};

struct EigenDecomposition {
    std::vector<double> values;                 // ascending
    std::vector<std::vector<double>> vectors;   // vectors[k] is the k-th eigenvector
};

// Cyclic Jacobi rotations on a symmetric matrix; sweeps until every
// off-diagonal magnitude is below 1e-12. Eigenpairs sorted ascending by
// value; each vector flipped so its largest-magnitude entry is positive.
EigenDecomposition jacobi_eigen(const std::vector<std::vector<double>>& sym);

// Unnormalized Laplacian L = D - W of the HAG.
std::vector<std::vector<double>> laplacian(const HybridGraph& hag);

// Eigenvectors of the dim smallest Laplacian eigenvalues, as embedding columns.
Embedding spectral_embedding(const HybridGraph& hag, int dim);

struct AEModel {
    // encoder: affine n -> h, rectifier on the latent; decoder: affine h -> n, linear.
    std::vector<std::vector<double>> w_enc;  // n x h
    std::vector<double> b_enc;               // h
    std::vector<std::vector<double>> w_dec;  // h x n
    std::vector<double> b_dec;               // n
    std::vector<double> col_mean;            // per-column scaling of the input rows
    std::vector<double> col_std;
    std::uint64_t seed = 0;
    std::vector<double> training_log;        // per-epoch reconstruction loss

    std::size_t input_dim() const { return w_enc.size(); }
    int latent_dim() const { return static_cast<int>(b_enc.size()); }

    nlohmann::json to_json() const;
    static AEModel from_json(const nlohmann::json& j);
};

struct AETrainConfig {
    int epochs = 2000;
    double step_size = 1e-2;
};

// Full-batch gradient descent on mean squared reconstruction error over the
// n adjacency rows (standardized per column). Deterministic given seed.
// Throws if the final loss exceeds the initial loss.
AEModel train_autoencoder(const HybridGraph& hag, int latent_dim, std::uint64_t seed,
                          const AETrainConfig& cfg = {});

// Applies stored scaling and the encoder to each adjacency row. O(n*h).
Embedding encode(const AEModel& model, const HybridGraph& hag);

} // namespace dac
