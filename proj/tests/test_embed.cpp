#include <doctest.h>

#include <cmath>
#include <random>

#include "dac/embed.hpp"
#include "dac/graph.hpp"
#include "dac/ingest.hpp"
#include "dac/pipeline.hpp"

using namespace dac;

namespace {

HybridGraph graph_from_matrix(std::vector<std::vector<double>> m) {
    HybridGraph hag;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "N%02d", static_cast<int>(i));
        hag.graph.nodes.push_back(buf);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != 0.0) hag.graph.edges.insert(make_edge(hag.graph.nodes[i], hag.graph.nodes[j]));
    hag.matrix = std::move(m);
    return hag;
}

// random graph with a prescribed number of connected components
HybridGraph random_components_graph(int n, int components, std::mt19937_64& rng) {
    std::vector<int> owner(n);
    for (int i = 0; i < n; ++i) owner[i] = i % components;
    std::uniform_real_distribution<double> w(0.1, 5.0);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    // spanning chain per component, plus random extra in-component edges
    for (int c = 0; c < components; ++c) {
        int prev = -1;
        for (int i = 0; i < n; ++i) {
            if (owner[i] != c) continue;
            if (prev >= 0) m[prev][i] = m[i][prev] = w(rng);
            prev = i;
        }
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < n; ++e) {
        const int i = pick(rng), j = pick(rng);
        if (i != j && owner[i] == owner[j] && m[i][j] == 0.0) m[i][j] = m[j][i] = w(rng);
    }
    return graph_from_matrix(std::move(m));
}

HybridGraph florida_hag() {
    const Registry reg = load_registry(std::string(DAC_DATA_DIR) + "/florida_airports.csv");
    const auto iag = build_iag(reg, 120.0, 200.0, 15.0);
    WindowStats stats;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> f(0, 20);
    for (const auto& a : reg.airports) {
        const int flights = f(rng);
        stats[a.code] = {flights, flights / 3};
    }
    return build_hag(iag, stats, reg, {});
}

} // namespace

TEST_CASE("Laplacian eigenvalues of the unit triangle are {0,3,3}") {
    const auto hag = graph_from_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const auto dec = jacobi_eigen(laplacian(hag));
    CHECK(dec.values[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(dec.values[1] == doctest::Approx(3.0));
    CHECK(dec.values[2] == doctest::Approx(3.0));
}

TEST_CASE("Laplacian eigenvalues of the 3-path are {0,1,3}") {
    const auto hag = graph_from_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    const auto dec = jacobi_eigen(laplacian(hag));
    CHECK(dec.values[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(dec.values[1] == doctest::Approx(1.0));
    CHECK(dec.values[2] == doctest::Approx(3.0));
}

TEST_CASE("eigenpairs: orthonormality, residuals, zero-eigenvalue multiplicity") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> nd(4, 20);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = nd(rng);
        std::uniform_int_distribution<int> cd(1, std::max(1, n / 3));
        const int components = cd(rng);
        const auto hag = random_components_graph(n, components, rng);
        const auto l = laplacian(hag);
        const auto dec = jacobi_eigen(l);

        // orthonormality
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += dec.vectors[a][i] * dec.vectors[b][i];
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-8);
            }
        // eigen residuals
        for (int a = 0; a < n; ++a)
            for (int i = 0; i < n; ++i) {
                double lv = 0.0;
                for (int j = 0; j < n; ++j) lv += l[i][j] * dec.vectors[a][j];
                CHECK(std::abs(lv - dec.values[a] * dec.vectors[a][i]) <= 1e-8);
            }
        // smallest eigenvalue 0; multiplicity equals component count
        CHECK(std::abs(dec.values[0]) <= 1e-10);
        int zeros = 0;
        for (double v : dec.values)
            if (std::abs(v) <= 1e-8) ++zeros;
        CHECK(zeros == components);
    }
}

TEST_CASE("spectral_embedding rows follow node order and component structure") {
    // two components: {0,1} and {2}
    const auto hag = graph_from_matrix({{0, 2, 0}, {2, 0, 0}, {0, 0, 0}});
    const auto emb = spectral_embedding(hag, 2);
    REQUIRE(emb.vectors.size() == 3);
    CHECK(emb.dim == 2);
    // nodes of the same component coincide in the null space
    CHECK(emb.vectors[0][0] == doctest::Approx(emb.vectors[1][0]).epsilon(1e-8));
    CHECK_THROWS_AS(spectral_embedding(hag, 4), std::invalid_argument);
}

TEST_CASE("spectral embedding is permutation-equivariant (subspace projectors)") {
    std::mt19937_64 rng(5);
    const auto hag = random_components_graph(8, 1, rng);
    const int n = 8, dim = 3;

    // permuted copy
    std::vector<int> perm{3, 1, 7, 0, 5, 2, 6, 4};
    std::vector<std::vector<double>> pm(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pm[perm[i]][perm[j]] = hag.matrix[i][j];
    const auto hag_p = graph_from_matrix(pm);

    const auto e1 = spectral_embedding(hag, dim);
    const auto e2 = spectral_embedding(hag_p, dim);

    // compare projectors P = V V^T, which are rotation/sign invariant
    auto projector = [&](const Embedding& e) {
        std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < dim; ++c) p[i][j] += e.vectors[i][c] * e.vectors[j][c];
        return p;
    };
    const auto p1 = projector(e1), p2 = projector(e2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(p1[i][j] - p2[perm[i]][perm[j]]) <= 1e-7);
}

TEST_CASE("autoencoder on constant rows converges to zero loss") {
    auto hag = graph_from_matrix({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
    // make every row identical
    hag.matrix = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}};
    const auto model = train_autoencoder(hag, 2, 1, {200, 1e-2});
    CHECK(model.training_log.back() <= 1e-6);
    const auto emb = encode(model, hag);
    for (int d = 0; d < emb.dim; ++d) {
        CHECK(std::abs(emb.vectors[0][d] - emb.vectors[1][d]) <= 1e-6);
        CHECK(std::abs(emb.vectors[0][d] - emb.vectors[3][d]) <= 1e-6);
    }
}

TEST_CASE("autoencoder training is deterministic given the seed") {
    std::mt19937_64 rng(11);
    const auto hag = random_components_graph(10, 1, rng);
    const auto a = train_autoencoder(hag, 3, 42, {300, 1e-2});
    const auto b = train_autoencoder(hag, 3, 42, {300, 1e-2});
    CHECK(a.training_log == b.training_log);  // bitwise
    CHECK(a.w_enc == b.w_enc);

    const auto c = train_autoencoder(hag, 3, 43, {300, 1e-2});
    CHECK(a.training_log != c.training_log);
}

TEST_CASE("latent dims 2, 5, 10, 15 all train on the 21x21 Florida HAG") {
    const auto hag = florida_hag();
    REQUIRE(hag.size() == 21);
    for (int latent : {2, 5, 10, 15}) {
        const auto model = train_autoencoder(hag, latent, 7, {400, 1e-2});
        CHECK(model.training_log.back() <= model.training_log.front());
        const auto emb = encode(model, hag);
        CHECK(emb.dim == latent);
        for (const auto& row : emb.vectors)
            for (double v : row) CHECK(std::isfinite(v));
    }
}

TEST_CASE("encode rejects node-count mismatch") {
    std::mt19937_64 rng(3);
    const auto hag10 = random_components_graph(10, 1, rng);
    const auto hag8 = random_components_graph(8, 1, rng);
    const auto model = train_autoencoder(hag10, 2, 1, {50, 1e-2});
    CHECK_THROWS_AS(encode(model, hag8), std::invalid_argument);
}

TEST_CASE("AEModel JSON round-trip preserves encode output") {
    std::mt19937_64 rng(17);
    const auto hag = random_components_graph(9, 1, rng);
    const auto model = train_autoencoder(hag, 3, 5, {100, 1e-2});
    const auto restored = AEModel::from_json(model.to_json());
    CHECK(encode(restored, hag).vectors == encode(model, hag).vectors);
}

TEST_CASE("invalid training arguments") {
    std::mt19937_64 rng(3);
    const auto hag = random_components_graph(6, 1, rng);
    CHECK_THROWS_AS(train_autoencoder(hag, 6, 1, {10, 1e-2}), std::invalid_argument);
    CHECK_THROWS_AS(train_autoencoder(hag, 2, 1, {0, 1e-2}), std::invalid_argument);
}
