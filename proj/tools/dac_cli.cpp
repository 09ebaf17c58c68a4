#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dac/embed.hpp"
#include "dac/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void write_json(const fs::path& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

struct CommonOpts {
    dac::RunManifest manifest;
    std::string out_dir = "out";
    bool geojson = false;
    bool verbose = false;
    int jobs = 1;
    std::string method = "spectral";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--flights", o.manifest.flights_path, "Flight CSV (BTS on-time layout)")
        ->required();
    cmd->add_option("--registry", o.manifest.registry_path, "Airport registry CSV or JSON")
        ->required();
    cmd->add_option("--method", o.method, "Embedding method: spectral|ae")
        ->check(CLI::IsMember({"spectral", "ae"}));
    cmd->add_option("--latent-dim", o.manifest.adaptive.ae_latent_dim, "AE latent dimension");
    cmd->add_option("--ae-epochs", o.manifest.adaptive.ae_train.epochs, "AE training epochs");
    cmd->add_option("--azimuth", o.manifest.azimuth_width_deg, "Azimuth sector width, degrees");
    cmd->add_option("--sector-anchor", o.manifest.sector_anchor_deg,
                    "Azimuth sector anchor bearing, degrees");
    cmd->add_option("--max-range", o.manifest.max_range_nm, "Adjacency range cap, nmi");
    cmd->add_option("--base", o.manifest.kernel.base, "Kernel base B in (0,1)");
    cmd->add_option("--delay-threshold", o.manifest.delay_threshold_min,
                    "Departure delay minutes counting as delayed (inclusive)");
    cmd->add_option("--max-cluster-size", o.manifest.adaptive.max_cluster_size,
                    "Cluster size limit in the adaptive loop");
    cmd->add_option("--max-diameter", o.manifest.adaptive.max_diameter_nm,
                    "Cluster diameter limit, nmi");
    cmd->add_option("--seed", o.manifest.seed, "Seed recorded in outputs and used by the AE");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_flag("--geojson", o.geojson, "Also write map.geojson");
    cmd->add_flag("--verbose", o.verbose, "Emit the escalation trace as JSON lines");
    cmd->add_flag("--regular-includes-delayed", o.manifest.regular_includes_delayed,
                  "Use total flights (not f-d) for the regular-workload mean");
}

void finish(CommonOpts& o) {
    o.manifest.method =
        o.method == "ae" ? dac::EmbeddingMethod::Autoencoder : dac::EmbeddingMethod::Spectral;
    fs::create_directories(o.out_dir);
}

void print_trace(const dac::WindowResult& wr) {
    for (const auto& t : wr.trace) {
        json line{{"round", t.round}, {"k", t.k}, {"lambda", t.lambda},
                  {"violating_clusters", t.violating_clusters}};
        std::cerr << line.dump() << "\n";
    }
}

int cmd_configure(CommonOpts& o) {
    finish(o);
    const auto sweep = dac::run_sweep(o.manifest, 1);
    const auto& wr = sweep.windows.at(0);
    if (o.verbose) print_trace(wr);

    write_json(fs::path(o.out_dir) / "configuration.json", wr.configuration_json(o.manifest));
    write_json(fs::path(o.out_dir) / "report.json", wr.report_json(o.manifest));
    if (o.geojson) {
        const auto registry = dac::load_registry(o.manifest.registry_path);
        write_json(fs::path(o.out_dir) / "map.geojson",
                   dac::export_geojson(wr.config, wr.stats, registry));
    }
    std::cout << sweep.summary_table();
    return 0;
}

int cmd_sweep(CommonOpts& o) {
    finish(o);
    const auto sweep = dac::run_sweep(o.manifest, o.jobs);
    if (o.verbose)
        for (const auto& wr : sweep.windows) print_trace(wr);

    write_json(fs::path(o.out_dir) / "sweep.json", sweep.summary_json(o.manifest));
    for (std::size_t i = 0; i < sweep.windows.size(); ++i) {
        const auto dir = fs::path(o.out_dir) / ("window_" + std::to_string(i));
        fs::create_directories(dir);
        write_json(dir / "configuration.json", sweep.windows[i].configuration_json(o.manifest));
        write_json(dir / "report.json", sweep.windows[i].report_json(o.manifest));
    }
    std::cout << sweep.summary_table();
    std::cout << "\npair frequencies:\n";
    for (const auto& [pair, count] : sweep.pair_counts)
        std::cout << "  " << pair << "  " << count << "\n";
    std::cout << "unpaired busy frequencies:\n";
    for (const auto& [code, count] : sweep.unpaired_busy_counts)
        std::cout << "  " << code << "  " << count << "\n";
    return 0;
}

double median_usec(const std::function<void()>& fn, int reps = 11) {
    std::vector<double> samples;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int cmd_compare_embeddings(CommonOpts& o) {
    finish(o);
    const auto registry = dac::load_registry(o.manifest.registry_path);
    const auto flights =
        dac::load_flight_csv(o.manifest.flights_path, {}, o.manifest.delay_threshold_min);
    const auto window =
        dac::parse_window_spec(o.manifest.dates.at(0), o.manifest.windows.at(0));

    std::vector<std::string> codes;
    for (const auto& a : registry.airports) codes.push_back(a.code);
    std::sort(codes.begin(), codes.end());

    json rows = json::array();
    std::cout << "size   spectral(us)   encode(us)   ae_train(us)\n";
    for (int size : {7, 10, 15, 18, 21}) {
        if (static_cast<std::size_t>(size) > codes.size()) {
            std::cout << size << "   skipped (registry has only " << codes.size()
                      << " airports)\n";
            continue;
        }
        dac::Registry sub;
        for (int i = 0; i < size; ++i) sub.airports.push_back(registry.at(codes[i]));
        const auto iag = dac::build_iag(sub, o.manifest.azimuth_width_deg,
                                        o.manifest.max_range_nm, o.manifest.sector_anchor_deg);
        const auto stats = dac::window_stats(flights.records, window, sub).stats;
        const auto hag = dac::build_hag(iag, stats, sub, o.manifest.kernel);

        const int latent = std::min(o.manifest.adaptive.ae_latent_dim, size - 1);
        dac::AEModel model;
        const double train_us = median_usec(
            [&] { model = dac::train_autoencoder(hag, latent, o.manifest.seed,
                                                 o.manifest.adaptive.ae_train); }, 3);
        const double spectral_us =
            median_usec([&] { dac::spectral_embedding(hag, std::min((size + 1) / 2, size)); });
        const double encode_us = median_usec([&] { dac::encode(model, hag); });

        char line[96];
        std::snprintf(line, sizeof(line), "%-6d %12.2f %12.2f %14.1f\n", size, spectral_us,
                      encode_us, train_us);
        std::cout << line;
        rows.push_back({{"size", size}, {"spectral_us", spectral_us},
                        {"encode_us", encode_us}, {"ae_train_us", train_us}});
    }

    // adjacency adherence of the final clusters, per method, on the full registry
    json adherence = json::array();
    const auto iag = dac::build_iag(registry, o.manifest.azimuth_width_deg,
                                    o.manifest.max_range_nm, o.manifest.sector_anchor_deg);
    for (const auto method : {dac::EmbeddingMethod::Spectral, dac::EmbeddingMethod::Autoencoder}) {
        dac::RunManifest m = o.manifest;
        m.method = method;
        const auto wr = dac::run_window(flights.records, registry, iag, window, m);
        json flagged = json::array();
        for (std::size_t c = 0; c < wr.config.clusters.size(); ++c) {
            const auto& members = wr.config.clusters[c];
            // flag clusters whose members do not form a connected IAG subgraph
            if (members.size() < 2) continue;
            std::vector<std::string> reach{members[0]};
            std::vector<std::string> rest(members.begin() + 1, members.end());
            bool grew = true;
            while (grew && !rest.empty()) {
                grew = false;
                for (auto it = rest.begin(); it != rest.end();) {
                    bool linked = false;
                    for (const auto& r : reach)
                        if (iag.has_edge(*it, r)) { linked = true; break; }
                    if (linked) { reach.push_back(*it); it = rest.erase(it); grew = true; }
                    else ++it;
                }
            }
            if (!rest.empty()) flagged.push_back({{"cluster", c}, {"members", members}});
        }
        adherence.push_back({{"method", dac::to_string(method)},
                             {"non_adjacent_clusters", flagged},
                             {"none_occurred", flagged.empty()}});
        std::cout << dac::to_string(method) << ": "
                  << (flagged.empty() ? "all clusters geodesically adjacent"
                                      : std::to_string(flagged.size()) +
                                            " cluster(s) with non-adjacent members")
                  << "\n";
    }

    write_json(fs::path(o.out_dir) / "compare.json",
               json{{"manifest", o.manifest.to_json()}, {"timings", rows},
                    {"adherence", adherence}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic airspace configuration from flight-schedule and delay data"};
    app.require_subcommand(1);

    CommonOpts configure_opts, sweep_opts, compare_opts;
    std::string date, window;

    auto* configure = app.add_subcommand("configure", "compute one window's configuration");
    add_common(configure, configure_opts);
    configure->add_option("--date", date, "YYYY-MM-DD")->required();
    configure->add_option("--window", window, "HH:MM-HH:MM")->required();

    auto* sweep = app.add_subcommand("sweep", "run many windows, tally merge patterns");
    add_common(sweep, sweep_opts);
    sweep->add_option("--date", sweep_opts.manifest.dates, "YYYY-MM-DD (repeatable)")
        ->required();
    sweep->add_option("--window", sweep_opts.manifest.windows, "HH:MM-HH:MM (repeatable)")
        ->required();
    sweep->add_option("--jobs", sweep_opts.jobs, "Concurrent windows (1 = sequential)");

    std::string cmp_date, cmp_window;
    auto* compare = app.add_subcommand("compare-embeddings",
                                       "timing and adherence comparison of both methods");
    add_common(compare, compare_opts);
    compare->add_option("--date", cmp_date, "YYYY-MM-DD")->required();
    compare->add_option("--window", cmp_window, "HH:MM-HH:MM")->required();

    try {
        app.parse(argc, argv);
        if (configure->parsed()) {
            configure_opts.manifest.dates = {date};
            configure_opts.manifest.windows = {window};
            return cmd_configure(configure_opts);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_opts);
        compare_opts.manifest.dates = {cmp_date};
        compare_opts.manifest.windows = {cmp_window};
        return cmd_compare_embeddings(compare_opts);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // missing inputs are usage errors
        return std::string(e.what()).find("cannot open") != std::string::npos ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
