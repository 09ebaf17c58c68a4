#include "dac/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dac/kernels.hpp"

namespace dac {

using Matrix = std::vector<std::vector<double>>;

std::string to_string(EmbeddingMethod m) {
    return m == EmbeddingMethod::Spectral ? "spectral" : "ae";
}

EigenDecomposition jacobi_eigen(const Matrix& sym) {
    const std::size_t n = sym.size();
    Matrix a = sym;
    Matrix v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    const double tol = 1e-12;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off = std::max(off, std::abs(a[p][q]));
        if (off < tol) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < tol) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

    EigenDecomposition dec;
    dec.values.reserve(n);
    dec.vectors.reserve(n);
    for (std::size_t idx : order) {
        dec.values.push_back(a[idx][idx]);
        std::vector<double> vec(n);
        for (std::size_t k = 0; k < n; ++k) vec[k] = v[k][idx];
        // sign convention: largest-magnitude entry positive
        std::size_t arg = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (std::abs(vec[k]) > std::abs(vec[arg])) arg = k;
        if (vec[arg] < 0)
            for (auto& x : vec) x = -x;
        dec.vectors.push_back(std::move(vec));
    }
    return dec;
}

Matrix laplacian(const HybridGraph& hag) {
    const std::size_t n = hag.size();
    Matrix l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            degree += hag.matrix[i][j];
            l[i][j] = -hag.matrix[i][j];
        }
        l[i][i] = degree;
    }
    return l;
}

Embedding spectral_embedding(const HybridGraph& hag, int dim) {
    const int n = static_cast<int>(hag.size());
    if (dim < 1 || dim > n)
        throw std::invalid_argument("spectral_embedding: dim must be in [1, n]");

    const auto dec = jacobi_eigen(laplacian(hag));
    Embedding emb;
    emb.nodes = hag.graph.nodes;
    emb.method = EmbeddingMethod::Spectral;
    emb.dim = dim;
    emb.vectors.assign(n, std::vector<double>(dim, 0.0));
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < n; ++r) emb.vectors[r][c] = dec.vectors[c][r];
    return emb;
}

namespace {

struct Scaled {
    Matrix rows;
    std::vector<double> mean, std;
};

Scaled standardize(const Matrix& x) {
    const std::size_t n = x.size(), m = x.empty() ? 0 : x[0].size();
    Scaled s;
    s.mean.assign(m, 0.0);
    s.std.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double mu = 0.0;
        for (std::size_t i = 0; i < n; ++i) mu += x[i][j];
        mu /= n;
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) var += (x[i][j] - mu) * (x[i][j] - mu);
        var /= n;
        s.mean[j] = mu;
        s.std[j] = var > 0 ? std::sqrt(var) : 1.0;  // constant column stays centered
    }
    s.rows.assign(n, std::vector<double>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            s.rows[i][j] = (x[i][j] - s.mean[j]) / s.std[j];
    return s;
}

} // namespace

AEModel train_autoencoder(const HybridGraph& hag, int latent_dim, std::uint64_t seed,
                          const AETrainConfig& cfg) {
    const std::size_t n = hag.size();
    if (latent_dim < 1 || static_cast<std::size_t>(latent_dim) >= n)
        throw std::invalid_argument("train_autoencoder: latent_dim must be in [1, n)");
    if (cfg.epochs < 1)
        throw std::invalid_argument("train_autoencoder: epochs must be >= 1");

    const std::size_t h = static_cast<std::size_t>(latent_dim);
    const Scaled scaled = standardize(hag.matrix);
    const Matrix& x = scaled.rows;

    AEModel model;
    model.seed = seed;
    model.col_mean = scaled.mean;
    model.col_std = scaled.std;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    const double enc_scale = std::sqrt(1.0 / n), dec_scale = std::sqrt(1.0 / h);
    model.w_enc.assign(n, std::vector<double>(h));
    for (auto& row : model.w_enc)
        for (auto& w : row) w = dist(rng) * enc_scale;
    model.b_enc.assign(h, 0.0);
    model.w_dec.assign(h, std::vector<double>(n));
    for (auto& row : model.w_dec)
        for (auto& w : row) w = dist(rng) * dec_scale;
    model.b_dec.assign(n, 0.0);

    const double norm = 1.0 / (static_cast<double>(n) * n);
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const Matrix pre = kernels::affine_forward(x, model.w_enc, model.b_enc);
        Matrix z = pre;
        for (auto& row : z)
            for (auto& val : row) val = std::max(0.0, val);
        const Matrix xhat = kernels::affine_forward(z, model.w_dec, model.b_dec);

        double loss = 0.0;
        Matrix dxhat(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double e = xhat[i][j] - x[i][j];
                loss += e * e;
                dxhat[i][j] = 2.0 * norm * e;
            }
        }
        model.training_log.push_back(loss * norm);

        // decoder grads
        Matrix dw_dec(h, std::vector<double>(n, 0.0));
        std::vector<double> db_dec(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                db_dec[j] += dxhat[i][j];
                for (std::size_t k = 0; k < h; ++k) dw_dec[k][j] += z[i][k] * dxhat[i][j];
            }

        // back through decoder and rectifier
        Matrix dz(n, std::vector<double>(h, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < h; ++k) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) acc += dxhat[i][j] * model.w_dec[k][j];
                dz[i][k] = pre[i][k] > 0 ? acc : 0.0;
            }

        Matrix dw_enc(n, std::vector<double>(h, 0.0));
        std::vector<double> db_enc(h, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < h; ++k) {
                db_enc[k] += dz[i][k];
                for (std::size_t j = 0; j < n; ++j) dw_enc[j][k] += x[i][j] * dz[i][k];
            }

        const double lr = cfg.step_size;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < h; ++k) model.w_enc[j][k] -= lr * dw_enc[j][k];
        for (std::size_t k = 0; k < h; ++k) model.b_enc[k] -= lr * db_enc[k];
        for (std::size_t k = 0; k < h; ++k)
            for (std::size_t j = 0; j < n; ++j) model.w_dec[k][j] -= lr * dw_dec[k][j];
        for (std::size_t j = 0; j < n; ++j) model.b_dec[j] -= lr * db_dec[j];
    }

    if (model.training_log.back() > model.training_log.front())
        throw std::runtime_error("train_autoencoder: loss diverged (final " +
                                 std::to_string(model.training_log.back()) + " > initial " +
                                 std::to_string(model.training_log.front()) + ")");
    return model;
}

Embedding encode(const AEModel& model, const HybridGraph& hag) {
    const std::size_t n = hag.size();
    if (n != model.input_dim())
        throw std::invalid_argument("encode: node count differs from the trained model");

    Matrix x(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i][j] = (hag.matrix[i][j] - model.col_mean[j]) / model.col_std[j];

    Matrix z = kernels::affine_forward(x, model.w_enc, model.b_enc);
    for (auto& row : z)
        for (auto& val : row) val = std::max(0.0, val);

    Embedding emb;
    emb.nodes = hag.graph.nodes;
    emb.method = EmbeddingMethod::Autoencoder;
    emb.dim = model.latent_dim();
    emb.vectors = std::move(z);
    return emb;
}

nlohmann::json AEModel::to_json() const {
    return nlohmann::json{{"w_enc", w_enc},       {"b_enc", b_enc},
                          {"w_dec", w_dec},       {"b_dec", b_dec},
                          {"col_mean", col_mean}, {"col_std", col_std},
                          {"seed", seed},         {"training_log", training_log}};
}

AEModel AEModel::from_json(const nlohmann::json& j) {
    AEModel m;
    j.at("w_enc").get_to(m.w_enc);
    j.at("b_enc").get_to(m.b_enc);
    j.at("w_dec").get_to(m.w_dec);
    j.at("b_dec").get_to(m.b_dec);
    j.at("col_mean").get_to(m.col_mean);
    j.at("col_std").get_to(m.col_std);
    m.seed = j.at("seed").get<std::uint64_t>();
    j.at("training_log").get_to(m.training_log);
    return m;
}

} // namespace dac
