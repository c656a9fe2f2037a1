#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "infodiff/config.hpp"
#include "infodiff/diffusion.hpp"
#include "infodiff/errors.hpp"
#include "infodiff/experiment.hpp"
#include "infodiff/game.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/graph_io.hpp"
#include "infodiff/hdf.hpp"
#include "infodiff/info_matrix.hpp"
#include "infodiff/lpa.hpp"
#include "infodiff/metrics.hpp"

namespace fs = std::filesystem;
using namespace infodiff;

namespace {

CommunityFormat community_format(const std::string& name)
{
    if (name == "node-label") return CommunityFormat::node_label;
    if (name == "per-line") return CommunityFormat::per_line;
    throw ArgumentError("unknown community format '" + name + "'");
}

std::string truth_path_for(const std::string& out, const std::string& truth)
{
    return truth.empty() ? out + ".truth" : truth;
}

ExperimentConfig load_experiment(const std::string& path, std::optional<std::uint64_t> seed,
                                 const std::string& out)
{
    ExperimentConfig cfg;
    if (!path.empty()) {
        const std::string base = fs::path(path).parent_path().string();
        cfg = ExperimentConfig::from_config(Config::load(path), base.empty() ? "." : base);
    }
    if (seed) cfg.master_seed = *seed;
    if (!out.empty()) cfg.output_dir = out;
    return cfg;
}

void report(const std::vector<ResultRecord>& records, const std::string& dir)
{
    write_outputs(records, dir);
    std::size_t failed = 0;
    for (const auto& r : records) {
        if (!r.ok) ++failed;
    }
    std::cerr << records.size() << " records (" << failed << " failed) written to " << dir << '\n';
    std::cout << summary_csv(emit_summary(records));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Information diffusion models and game-theoretic community detection"};
    app.require_subcommand(1);

    // gen-gn
    double gn_mu = 0.1;
    std::uint64_t seed = 0;
    std::string out, truth_out;
    bool one_based = false;
    auto* gen_gn = app.add_subcommand("gen-gn", "Generate a Girvan-Newman benchmark graph");
    gen_gn->add_option("--mu", gn_mu, "Mixing parameter")->required()->check(CLI::Range(0.0, 1.0));
    gen_gn->add_option("--seed", seed, "Random seed");
    gen_gn->add_option("--out", out, "Edge-list output path")->required();
    gen_gn->add_option("--truth", truth_out, "Community output path (default <out>.truth)");
    gen_gn->add_flag("--one-based", one_based, "Write 1-based node ids");

    // gen-er
    std::size_t er_n = 0;
    double er_p = 0.0;
    auto* gen_er = app.add_subcommand("gen-er", "Generate an Erdos-Renyi G(n, p) graph");
    gen_er->add_option("--n", er_n, "Node count")->required();
    gen_er->add_option("--p", er_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_er->add_option("--seed", seed, "Random seed");
    gen_er->add_option("--out", out, "Edge-list output path")->required();
    gen_er->add_flag("--one-based", one_based, "Write 1-based node ids");

    // diffuse
    std::string graph_path, hdf_path, model_name = "psodm", config_path;
    ModelConfig model;
    bool dynamic = false, no_early_stop = false;
    auto* diffuse = app.add_subcommand("diffuse", "Run a diffusion model and dump the information matrix");
    diffuse->add_option("--graph", graph_path, "Edge list (u v) or event stream (u v t)")->required();
    diffuse->add_option("--model", model_name, "gadm | egadm | psodm");
    diffuse->add_option("--hdf", hdf_path, "HDF file (default: built-in example function)");
    diffuse->add_option("--epochs", model.epochs, "Passes over the edge set (static graphs)");
    diffuse->add_option("--runs", model.runs, "Independent runs averaged into the matrix");
    diffuse->add_option("--p-m", model.p_m, "Per-bit mutation probability (egadm)");
    diffuse->add_option("--c", model.c_accel, "Acceleration constant (psodm)");
    diffuse->add_flag("--no-early-stop", no_early_stop, "Run every epoch");
    diffuse->add_flag("--dynamic", dynamic, "Use partners seen so far as neighbors even for static input");
    diffuse->add_option("--seed", seed, "Random seed");
    diffuse->add_option("--config", config_path, "Config file; its [model] section sets defaults");
    diffuse->add_option("--out", out, "Output directory (info.tsv, trajectory.csv)")->required();
    diffuse->add_flag("--one-based", one_based, "Input ids are 1-based");

    // detect
    std::string info_path, mode = "disjoint", algo = "gid";
    std::optional<double> m_norm, lambda;
    std::size_t max_picks = 0;
    auto* detect = app.add_subcommand("detect", "Detect communities");
    detect->add_option("--graph", graph_path, "Edge list")->required();
    detect->add_option("--info", info_path, "Information matrix TSV (gid)");
    detect->add_option("--algo", algo, "gid | lpa")->check(CLI::IsMember({"gid", "lpa"}));
    detect->add_option("--mode", mode, "disjoint | overlap")->check(CLI::IsMember({"disjoint", "overlap"}));
    detect->add_option("--m", m_norm, "Utility normalizer (default |E|)");
    detect->add_option("--lambda", lambda, "Per-label cost in overlap mode");
    detect->add_option("--max-picks", max_picks, "Pick cap (default 500n)");
    detect->add_option("--seed", seed, "Random seed");
    detect->add_option("--out", out, "Community output path (one community per line)")->required();
    detect->add_flag("--one-based", one_based, "Input and output ids are 1-based");

    // eval
    std::string detected_path, truth_path, metrics = "nmi,fccn,q";
    std::string detected_format = "per-line", truth_format = "per-line";
    auto* eval = app.add_subcommand("eval", "Score a detected cover");
    eval->add_option("--detected", detected_path, "Detected communities")->required();
    eval->add_option("--truth", truth_path, "Ground-truth communities");
    eval->add_option("--graph", graph_path, "Edge list (needed for modularity)");
    eval->add_option("--metrics", metrics, "Comma separated subset of nmi,fccn,q");
    eval->add_option("--detected-format", detected_format, "per-line | node-label");
    eval->add_option("--truth-format", truth_format, "per-line | node-label");
    eval->add_option("--out", out, "Also write the JSON here");
    eval->add_flag("--one-based", one_based, "Input ids are 1-based");

    // sweep / pipeline
    std::optional<std::uint64_t> master_seed;
    std::vector<double> mu_grid;
    std::size_t repeats = 0;
    auto* sweep = app.add_subcommand("sweep", "Mixing-parameter sweep over GN benchmarks");
    sweep->add_option("--config", config_path, "Experiment config");
    sweep->add_option("--mu", mu_grid, "Sweep values (default 0.1 0.2 0.3 0.4 0.5)")->delimiter(',');
    sweep->add_option("--repeats", repeats, "Repeats per point");
    sweep->add_option("--seed", master_seed, "Master seed");
    sweep->add_option("--out", out, "Output directory");

    auto* pipeline = app.add_subcommand("pipeline", "Run every configured dataset x algorithm x repeat");
    pipeline->add_option("--config", config_path, "Experiment config")->required();
    pipeline->add_option("--seed", master_seed, "Master seed");
    pipeline->add_option("--out", out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_gn) {
            const auto g = generate_gn(GnConfig{gn_mu, seed});
            write_file(out, write_edge_list(g.graph, one_based));
            write_file(truth_path_for(out, truth_out), write_communities(g.truth, one_based));
        } else if (*gen_er) {
            write_file(out, write_edge_list(generate_er(ErConfig{er_n, er_p, seed}), one_based));
        } else if (*diffuse) {
            ModelConfig base = model;
            if (!config_path.empty()) {
                // Config values act as defaults; explicit flags win.
                const auto cfg = ExperimentConfig::from_config(Config::load(config_path));
                base = cfg.model;
                if (diffuse->count("--epochs")) base.epochs = model.epochs;
                if (diffuse->count("--runs")) base.runs = model.runs;
                if (diffuse->count("--p-m")) base.p_m = model.p_m;
                if (diffuse->count("--c")) base.c_accel = model.c_accel;
            }
            base.model = parse_model(model_name);
            base.seed = seed;
            if (no_early_stop) base.early_stop = false;
            const HdfFunction f = hdf_path.empty() ? example_hdf() : load_hdf(read_file(hdf_path));
            base.beta = f.beta();

            const auto content = parse_edge_list(read_file(graph_path), one_based);
            DiffusionResult result = std::visit(
                [&](const auto& input) {
                    using T = std::decay_t<decltype(input)>;
                    if constexpr (std::is_same_v<T, Graph>) {
                        if (dynamic) {
                            return run_diffusion(base, build_event_stream(input, base.epochs, seed), f);
                        }
                        return run_diffusion(base, input, f);
                    } else {
                        return run_diffusion(base, input, f);
                    }
                },
                content);
            fs::create_directories(out);
            write_file((fs::path(out) / "info.tsv").string(), result.info.to_tsv());
            write_file((fs::path(out) / "trajectory.csv").string(), trajectory_csv(result.trajectory));
            std::cerr << "accepted updates: " << result.accepted_updates << '\n';
        } else if (*detect) {
            const Graph graph = parse_graph(read_file(graph_path), one_based);
            CommunityCover cover;
            if (algo == "lpa") {
                cover = lpa_detect(graph, LpaConfig{100, seed}).cover;
            } else {
                if (info_path.empty()) {
                    throw ArgumentError("--info is required for --algo gid");
                }
                const InfoMatrix info = InfoMatrix::from_tsv(read_file(info_path));
                GameConfig game;
                game.mode = mode == "overlap" ? GameMode::overlapping : GameMode::disjoint;
                game.m_norm = m_norm;
                game.lambda = lambda;
                game.max_picks = max_picks;
                game.seed = seed;
                const auto result = detect_communities(graph, info, game);
                cover = result.cover;
                std::cerr << "picks " << result.picks << ", moves " << result.moves
                          << (result.verified_nash ? ", verified local Nash" : "")
                          << (result.converged ? "" : ", pick cap reached") << '\n';
            }
            write_file(out, write_communities(cover, one_based));
        } else if (*eval) {
            std::optional<Graph> graph;
            if (!graph_path.empty()) graph = parse_graph(read_file(graph_path), one_based);
            const CommunityCover detected =
                parse_communities(read_file(detected_path), community_format(detected_format), one_based,
                                  graph ? graph->node_count() : 0);
            std::optional<CommunityCover> truth;
            if (!truth_path.empty()) {
                truth = parse_communities(read_file(truth_path), community_format(truth_format), one_based,
                                          graph ? graph->node_count() : 0);
            }
            std::size_t n = graph ? graph->node_count() : detected.node_count();
            if (truth) n = std::max(n, truth->node_count());

            nlohmann::json j = {{"nmi", nullptr}, {"fccn", nullptr}, {"modularity", nullptr}};
            for (const auto& metric : Config::parse("m = " + metrics).get_list("", "m")) {
                if (metric == "nmi") {
                    if (truth) j["nmi"] = nmi_overlapping(detected, *truth, n);
                } else if (metric == "fccn") {
                    if (truth) j["fccn"] = fccn(detected, *truth, n);
                } else if (metric == "q" || metric == "modularity") {
                    if (graph && graph->edge_count() > 0 && detected.is_partition() &&
                        detected.node_count() == graph->node_count()) {
                        j["modularity"] = modularity(*graph, detected);
                    }
                } else {
                    throw ArgumentError("unknown metric '" + metric + "'");
                }
            }
            std::cout << j.dump() << '\n';
            if (!out.empty()) write_file(out, j.dump() + "\n");
        } else if (*sweep) {
            ExperimentConfig cfg = load_experiment(config_path, master_seed, out);
            if (!mu_grid.empty()) cfg.mu_grid = mu_grid;
            if (cfg.mu_grid.empty()) cfg.mu_grid = {0.1, 0.2, 0.3, 0.4, 0.5};
            if (repeats) cfg.repeats = repeats;
            std::erase_if(cfg.datasets, [](const DatasetSpec& d) { return d.kind != DatasetSpec::Kind::gn; });
            if (cfg.datasets.empty()) {
                DatasetSpec gn;
                gn.id = "gn";
                gn.kind = DatasetSpec::Kind::gn;
                cfg.datasets.push_back(gn);
            }
            report(run_pipeline(cfg), cfg.output_dir);
        } else if (*pipeline) {
            const ExperimentConfig cfg = load_experiment(config_path, master_seed, out);
            report(run_pipeline(cfg), cfg.output_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
