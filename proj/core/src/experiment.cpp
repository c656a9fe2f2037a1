#include "infodiff/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "infodiff/errors.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/metrics.hpp"
#include "number_format.hpp"

namespace infodiff {
namespace {

namespace fs = std::filesystem;

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string format_number(double x)
{
    return detail::shortest_decimal(x);
}

std::string format_optional(const std::optional<double>& x)
{
    return x ? format_number(*x) : std::string{};
}

std::string resolve(const std::string& base, const std::string& path)
{
    if (path.empty() || fs::path(path).is_absolute()) {
        return path;
    }
    return (fs::path(base) / path).lexically_normal().string();
}

CommunityFormat parse_community_format(const std::string& name)
{
    const std::string s = lower(name);
    if (s == "node-label" || s == "node_label" || s == "lfr") return CommunityFormat::node_label;
    if (s == "per-line" || s == "per_line" || s == "lines") return CommunityFormat::per_line;
    throw ConfigError("unknown community format '" + name + "'");
}

constexpr std::uint64_t salt(std::string_view tag) { return stable_hash(tag); }

HdfFunction load_fitness(const ExperimentConfig& config, std::uint64_t seed)
{
    if (config.hdf.file) {
        return load_hdf(read_file(*config.hdf.file));
    }
    if (config.hdf.random) {
        Rng rng(seed ^ salt("hdf"));
        return build_random_hdf(*config.hdf.random, rng);
    }
    return example_hdf();
}

Model model_of(Algorithm a)
{
    switch (a) {
    case Algorithm::ggadm: return Model::gadm;
    case Algorithm::gegadm: return Model::egadm;
    default: return Model::psodm;
    }
}

bool wants(const ExperimentConfig& config, std::string_view metric)
{
    return std::find(config.metrics.begin(), config.metrics.end(), metric) != config.metrics.end();
}

} // namespace

std::string to_string(Algorithm algorithm)
{
    switch (algorithm) {
    case Algorithm::ggadm: return "GGADM";
    case Algorithm::gegadm: return "GEGADM";
    case Algorithm::gpsodm: return "GPSODM";
    case Algorithm::lpa: return "LPA";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
    const std::string s = lower(name);
    if (s == "ggadm" || s == "gadm") return Algorithm::ggadm;
    if (s == "gegadm" || s == "egadm") return Algorithm::gegadm;
    if (s == "gpsodm" || s == "psodm") return Algorithm::gpsodm;
    if (s == "lpa") return Algorithm::lpa;
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

ExperimentConfig ExperimentConfig::from_config(const Config& cfg, const std::string& base_dir)
{
    ExperimentConfig out;
    const std::string ex = "experiment";
    out.master_seed = cfg.get_u64(ex, "seed", 0);
    out.repeats = cfg.get_u64(ex, "repeats", 1);
    out.output_dir = resolve(base_dir, cfg.get_string(ex, "out", "results"));
    if (cfg.has(ex, "algorithms")) {
        out.algorithms.clear();
        for (const auto& a : cfg.get_list(ex, "algorithms")) {
            out.algorithms.push_back(parse_algorithm(a));
        }
    }
    if (cfg.has(ex, "metrics")) {
        out.metrics.clear();
        for (const auto& m : cfg.get_list(ex, "metrics")) {
            const std::string s = lower(m);
            if (s != "nmi" && s != "fccn" && s != "q") {
                throw ConfigError("unknown metric '" + m + "' (expected nmi, fccn, q)");
            }
            out.metrics.push_back(s);
        }
    }

    ModelConfig& model = out.model;
    model.epochs = cfg.get_u64("model", "epochs", model.epochs);
    model.runs = cfg.get_u64("model", "runs", model.runs);
    model.p_m = cfg.get_double("model", "p_m", model.p_m);
    model.c_accel = cfg.get_double("model", "c_accel", model.c_accel);
    model.early_stop = cfg.get_bool("model", "early_stop", model.early_stop);
    const std::string init = lower(cfg.get_string("model", "init", "random"));
    if (init == "zero") {
        model.init = InitMode::zero;
    } else if (init == "random" || init == "uniform-random" || init == "uniform_random") {
        model.init = InitMode::uniform_random;
    } else {
        throw ConfigError("unknown init mode '" + init + "'");
    }

    if (cfg.has("hdf", "file")) {
        out.hdf.file = resolve(base_dir, *cfg.get("hdf", "file"));
    } else if (cfg.has_section("hdf") && !cfg.keys("hdf").empty()) {
        RandomHdfSpec spec;
        spec.beta = cfg.get_u64("hdf", "beta", spec.beta);
        spec.n_order1 = cfg.get_u64("hdf", "n_order1", spec.n_order1);
        spec.n_higher = cfg.get_u64("hdf", "n_higher", spec.n_higher);
        spec.score_low = cfg.get_double("hdf", "score_low", spec.score_low);
        spec.score_high = cfg.get_double("hdf", "score_high", spec.score_high);
        out.hdf.random = spec;
    }

    GameConfig& game = out.game;
    const std::string mode = lower(cfg.get_string("game", "mode", "disjoint"));
    if (mode == "disjoint") {
        game.mode = GameMode::disjoint;
    } else if (mode == "overlap" || mode == "overlapping") {
        game.mode = GameMode::overlapping;
    } else {
        throw ConfigError("unknown game mode '" + mode + "'");
    }
    if (cfg.has("game", "m")) game.m_norm = cfg.get_double("game", "m", 1.0);
    if (cfg.has("game", "lambda")) game.lambda = cfg.get_double("game", "lambda", 0.0);
    game.max_picks = cfg.get_u64("game", "max_picks", game.max_picks);
    game.stall_threshold = cfg.get_u64("game", "stall_threshold", game.stall_threshold);
    game.exact_sweep_n_max = cfg.get_u64("game", "exact_sweep_n_max", game.exact_sweep_n_max);

    out.lpa.max_sweeps = cfg.get_u64("lpa", "max_sweeps", out.lpa.max_sweeps);
    out.mu_grid = cfg.get_double_list("sweep", "mu");

    const std::string prefix = "dataset.";
    for (const auto& section : cfg.sections()) {
        if (section.rfind(prefix, 0) != 0) {
            continue;
        }
        DatasetSpec d;
        d.id = section.substr(prefix.size());
        const std::string generator = lower(cfg.get_string(section, "generator", "file"));
        if (generator == "gn") {
            d.kind = DatasetSpec::Kind::gn;
            d.mu = cfg.get_double(section, "mu", 0.0);
        } else if (generator == "er") {
            d.kind = DatasetSpec::Kind::er;
            d.n = cfg.get_u64(section, "n", 0);
            d.p = cfg.get_double(section, "p", 0.0);
        } else if (generator == "file") {
            d.kind = DatasetSpec::Kind::file;
            d.graph_path = resolve(base_dir, cfg.get_string(section, "graph", ""));
        } else {
            throw ConfigError("[" + section + "] unknown generator '" + generator + "'");
        }
        d.truth_path = resolve(base_dir, cfg.get_string(section, "truth", ""));
        d.truth_format = parse_community_format(cfg.get_string(section, "truth_format", "node-label"));
        d.one_based = cfg.get_bool(section, "one_based", false);
        out.datasets.push_back(std::move(d));
    }
    out.validate();
    return out;
}

void ExperimentConfig::validate() const
{
    if (repeats == 0) {
        throw ConfigError("repeats must be at least 1");
    }
    if (algorithms.empty()) {
        throw ConfigError("no algorithms configured");
    }
    for (double mu : mu_grid) {
        if (!(mu >= 0.0 && mu <= 1.0)) {
            throw ConfigError("sweep value " + std::to_string(mu) + " outside [0, 1]");
        }
    }
    if (hdf.file && !fs::exists(*hdf.file)) {
        throw ConfigError("HDF file '" + *hdf.file + "' does not exist");
    }
    for (const auto& d : datasets) {
        if (d.kind == DatasetSpec::Kind::file) {
            if (d.graph_path.empty() || !fs::exists(d.graph_path)) {
                throw ConfigError("dataset '" + d.id + "': graph file '" + d.graph_path + "' does not exist");
            }
        }
        if (!d.truth_path.empty() && !fs::exists(d.truth_path)) {
            throw ConfigError("dataset '" + d.id + "': truth file '" + d.truth_path + "' does not exist");
        }
        if (d.kind == DatasetSpec::Kind::gn && !(d.mu >= 0.0 && d.mu <= 1.0)) {
            throw ConfigError("dataset '" + d.id + "': mu outside [0, 1]");
        }
        if (d.kind == DatasetSpec::Kind::er && (d.n == 0 || !(d.p >= 0.0 && d.p <= 1.0))) {
            throw ConfigError("dataset '" + d.id + "': invalid ER parameters");
        }
    }
    model.validate();
}

std::vector<DatasetSpec> ExperimentConfig::expanded_datasets() const
{
    std::vector<DatasetSpec> out;
    for (const auto& d : datasets) {
        if (d.kind != DatasetSpec::Kind::gn || mu_grid.empty()) {
            out.push_back(d);
            continue;
        }
        for (double mu : mu_grid) {
            DatasetSpec point = d;
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "_mu%.2f", mu);
            point.id = d.id + buffer;
            point.mu = mu;
            point.group = d.id;
            out.push_back(std::move(point));
        }
    }
    return out;
}

std::uint64_t cell_seed(std::uint64_t master, const std::string& dataset, const std::string& algorithm,
                        std::size_t repeat)
{
    return master ^ stable_hash(dataset + "/" + algorithm + "/" + std::to_string(repeat));
}

GeneratedGraph materialize(const DatasetSpec& dataset, std::uint64_t master_seed, std::size_t repeat,
                           std::optional<CommunityCover>* truth_out)
{
    const std::uint64_t graph_seed = cell_seed(master_seed, dataset.id, "graph", repeat);
    GeneratedGraph g;
    std::optional<CommunityCover> truth;
    switch (dataset.kind) {
    case DatasetSpec::Kind::gn:
        g = generate_gn(GnConfig{dataset.mu, graph_seed});
        truth = g.truth;
        break;
    case DatasetSpec::Kind::er:
        g.graph = generate_er(ErConfig{dataset.n, dataset.p, graph_seed});
        break;
    case DatasetSpec::Kind::file:
        g.graph = parse_graph(read_file(dataset.graph_path), dataset.one_based);
        break;
    }
    if (!dataset.truth_path.empty()) {
        truth = parse_communities(read_file(dataset.truth_path), dataset.truth_format, dataset.one_based,
                                  g.graph.node_count());
    }
    if (truth) {
        g.truth = *truth;
    }
    if (truth_out) {
        *truth_out = std::move(truth);
    }
    return g;
}

ResultRecord run_cell(const ExperimentConfig& config, const DatasetSpec& dataset, Algorithm algorithm,
                      std::size_t repeat)
{
    ResultRecord r;
    r.algorithm = to_string(algorithm);
    r.dataset = dataset.id;
    r.group = dataset.group;
    r.repeat = repeat;
    r.seed = cell_seed(config.master_seed, dataset.id, r.algorithm, repeat);
    if (dataset.kind == DatasetSpec::Kind::gn) {
        r.mu = dataset.mu;
    }
    try {
        std::optional<CommunityCover> truth;
        const GeneratedGraph data = materialize(dataset, config.master_seed, repeat, &truth);
        const Graph& graph = data.graph;
        r.node_count = graph.node_count();

        const auto start = std::chrono::steady_clock::now();
        CommunityCover detected;
        if (algorithm == Algorithm::lpa) {
            LpaConfig lpa = config.lpa;
            lpa.seed = r.seed;
            auto res = lpa_detect(graph, lpa);
            detected = std::move(res.cover);
            r.converged = res.converged;
        } else {
            const HdfFunction f = load_fitness(config, r.seed);
            ModelConfig model = config.model;
            model.model = model_of(algorithm);
            model.beta = f.beta();
            model.seed = r.seed ^ salt("diffusion");
            const DiffusionResult diffusion = run_diffusion(model, graph, f);

            GameConfig game = config.game;
            game.seed = r.seed ^ salt("game");
            auto res = detect_communities(graph, diffusion.info, game);
            detected = std::move(res.cover);
            r.converged = res.converged;
        }
        r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        r.community_count = detected.size();
        r.largest_community = detected.largest_size();
        if (truth && wants(config, "nmi")) {
            r.nmi = nmi_overlapping(detected, *truth, graph.node_count());
        }
        if (truth && wants(config, "fccn")) {
            r.fccn = fccn(detected, *truth, graph.node_count());
        }
        if (wants(config, "q") && detected.is_partition() && graph.edge_count() > 0) {
            r.modularity = modularity(graph, detected);
        }
    } catch (const std::exception& e) {
        r.ok = false;
        r.error = e.what();
    }
    return r;
}

std::vector<ResultRecord> run_pipeline(const ExperimentConfig& config)
{
    config.validate();
    std::vector<ResultRecord> records;
    for (const auto& dataset : config.expanded_datasets()) {
        for (Algorithm algorithm : config.algorithms) {
            for (std::size_t repeat = 0; repeat < config.repeats; ++repeat) {
                records.push_back(run_cell(config, dataset, algorithm, repeat));
            }
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
        return std::tie(a.dataset, a.algorithm, a.repeat) < std::tie(b.dataset, b.algorithm, b.repeat);
    });
    return records;
}

std::vector<SummaryRow> emit_summary(const std::vector<ResultRecord>& records)
{
    struct Acc {
        SummaryRow row;
        double nmi = 0, fccn = 0, q = 0, time = 0, comms = 0;
        std::size_t ok = 0;
    };
    std::map<std::pair<std::string, std::string>, Acc> groups;
    auto fold = [](std::optional<double>& max, double x) { max = max ? std::max(*max, x) : x; };
    for (const auto& r : records) {
        Acc& a = groups[{r.dataset, r.algorithm}];
        a.row.dataset = r.dataset;
        a.row.algorithm = r.algorithm;
        ++a.row.records;
        if (!r.ok) {
            ++a.row.failed;
            continue;
        }
        ++a.ok;
        a.time += r.wall_time;
        a.comms += static_cast<double>(r.community_count);
        if (r.nmi) {
            ++a.row.n_valid;
            a.nmi += *r.nmi;
            fold(a.row.max_nmi, *r.nmi);
        }
        if (r.fccn) {
            ++a.row.n_valid_fccn;
            a.fccn += *r.fccn;
            fold(a.row.max_fccn, *r.fccn);
        }
        if (r.modularity) {
            ++a.row.n_valid_modularity;
            a.q += *r.modularity;
            fold(a.row.max_modularity, *r.modularity);
        }
    }
    std::vector<SummaryRow> rows;
    for (auto& [key, a] : groups) {
        SummaryRow row = a.row;
        if (row.n_valid) row.mean_nmi = a.nmi / static_cast<double>(row.n_valid);
        if (row.n_valid_fccn) row.mean_fccn = a.fccn / static_cast<double>(row.n_valid_fccn);
        if (row.n_valid_modularity) row.mean_modularity = a.q / static_cast<double>(row.n_valid_modularity);
        if (a.ok) {
            row.mean_wall_time = a.time / static_cast<double>(a.ok);
            row.mean_communities = a.comms / static_cast<double>(a.ok);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CurvePoint> sweep_curve(const std::vector<ResultRecord>& records, const std::string& group)
{
    std::map<std::pair<double, std::string>, std::vector<double>> samples;
    for (const auto& r : records) {
        if (r.group == group && r.ok && r.mu && r.nmi) {
            samples[{*r.mu, r.algorithm}].push_back(*r.nmi);
        }
    }
    std::vector<CurvePoint> out;
    for (const auto& [key, xs] : samples) {
        CurvePoint p;
        p.mu = key.first;
        p.algorithm = key.second;
        p.samples = xs.size();
        double sum = 0.0;
        for (double x : xs) sum += x;
        p.mean_nmi = sum / static_cast<double>(xs.size());
        if (xs.size() > 1) {
            double ss = 0.0;
            for (double x : xs) ss += (x - p.mean_nmi) * (x - p.mean_nmi);
            p.stderr_nmi = std::sqrt(ss / static_cast<double>(xs.size() - 1)) /
                           std::sqrt(static_cast<double>(xs.size()));
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::string records_csv(const std::vector<ResultRecord>& records, bool include_wall_time)
{
    std::ostringstream out;
    out << "algorithm,dataset,group,repeat,seed,mu,nodes,communities,largest,nmi,fccn,modularity,"
        << (include_wall_time ? "wall_time," : "") << "converged,status,error\n";
    for (const auto& r : records) {
        std::string error = r.error;
        std::replace(error.begin(), error.end(), ',', ';');
        std::replace(error.begin(), error.end(), '\n', ' ');
        out << r.algorithm << ',' << r.dataset << ',' << r.group << ',' << r.repeat << ',' << r.seed
            << ',' << format_optional(r.mu) << ',' << r.node_count << ',' << r.community_count << ','
            << r.largest_community << ',' << format_optional(r.nmi) << ',' << format_optional(r.fccn)
            << ',' << format_optional(r.modularity) << ',';
        if (include_wall_time) {
            out << format_number(r.wall_time) << ',';
        }
        out << (r.converged ? "true" : "false") << ',' << (r.ok ? "ok" : "failed") << ',' << error << '\n';
    }
    return out.str();
}

std::string records_jsonl(const std::vector<ResultRecord>& records, bool include_wall_time)
{
    using nlohmann::json;
    auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
    std::ostringstream out;
    for (const auto& r : records) {
        json j = {
            {"algorithm", r.algorithm},
            {"dataset", r.dataset},
            {"group", r.group},
            {"repeat", r.repeat},
            {"seed", r.seed},
            {"mu", opt(r.mu)},
            {"nodes", r.node_count},
            {"communities", r.community_count},
            {"largest", r.largest_community},
            {"nmi", opt(r.nmi)},
            {"fccn", opt(r.fccn)},
            {"modularity", opt(r.modularity)},
            {"converged", r.converged},
            {"status", r.ok ? "ok" : "failed"},
            {"error", r.error},
        };
        if (include_wall_time) {
            j["wall_time"] = r.wall_time;
        }
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows)
{
    std::ostringstream out;
    out << "dataset,algorithm,records,failed,n_valid,mean_nmi,max_nmi,n_valid_fccn,mean_fccn,max_fccn,"
           "n_valid_q,mean_modularity,max_modularity,mean_wall_time,mean_communities\n";
    for (const auto& r : rows) {
        out << r.dataset << ',' << r.algorithm << ',' << r.records << ',' << r.failed << ',' << r.n_valid
            << ',' << format_optional(r.mean_nmi) << ',' << format_optional(r.max_nmi) << ','
            << r.n_valid_fccn << ',' << format_optional(r.mean_fccn) << ',' << format_optional(r.max_fccn)
            << ',' << r.n_valid_modularity << ',' << format_optional(r.mean_modularity) << ','
            << format_optional(r.max_modularity) << ',' << format_number(r.mean_wall_time) << ','
            << format_number(r.mean_communities) << '\n';
    }
    return out.str();
}

std::string curve_csv(const std::vector<CurvePoint>& points)
{
    std::ostringstream out;
    out << "mu,algorithm,mean_nmi,stderr,samples\n";
    for (const auto& p : points) {
        out << format_number(p.mu) << ',' << p.algorithm << ',' << format_number(p.mean_nmi) << ','
            << format_number(p.stderr_nmi) << ',' << p.samples << '\n';
    }
    return out.str();
}

void write_outputs(const std::vector<ResultRecord>& records, const std::string& directory)
{
    fs::create_directories(directory);
    const fs::path dir(directory);
    write_file((dir / "records.csv").string(), records_csv(records));
    write_file((dir / "records.jsonl").string(), records_jsonl(records));
    write_file((dir / "summary.csv").string(), summary_csv(emit_summary(records)));
    std::set<std::string> groups;
    for (const auto& r : records) {
        if (!r.group.empty()) {
            groups.insert(r.group);
        }
    }
    for (const auto& g : groups) {
        write_file((dir / ("curve_" + g + ".csv")).string(), curve_csv(sweep_curve(records, g)));
    }
}

} // namespace infodiff
