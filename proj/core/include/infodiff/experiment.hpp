#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infodiff/config.hpp"
#include "infodiff/diffusion.hpp"
#include "infodiff/game.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/graph_io.hpp"
#include "infodiff/hdf.hpp"
#include "infodiff/lpa.hpp"

namespace infodiff {

/// Community detection pipelines: GID driven by each diffusion model, and LPA.
enum class Algorithm { ggadm, gegadm, gpsodm, lpa };

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

struct DatasetSpec {
    enum class Kind { file, gn, er };

    std::string id;
    Kind kind = Kind::file;
    std::string graph_path;
    std::string truth_path; ///< optional ground truth
    CommunityFormat truth_format = CommunityFormat::node_label;
    bool one_based = false;
    double mu = 0.0;   ///< gn
    std::size_t n = 0; ///< er
    double p = 0.0;    ///< er
    std::string group; ///< sweep family this point belongs to (empty otherwise)
};

struct HdfSource {
    std::optional<std::string> file;
    std::optional<RandomHdfSpec> random; ///< drawn once per cell from the cell seed
};

struct ExperimentConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<Algorithm> algorithms{Algorithm::ggadm, Algorithm::gegadm, Algorithm::gpsodm};
    ModelConfig model;  ///< model and seed are set per cell
    GameConfig game;    ///< seed is set per cell
    LpaConfig lpa;
    HdfSource hdf;
    std::vector<std::string> metrics{"nmi", "fccn", "q"};
    std::size_t repeats = 1;
    std::vector<double> mu_grid; ///< expands every gn dataset into one dataset per value
    std::uint64_t master_seed = 0;
    std::string output_dir = "results";

    /// Build from a parsed config; relative paths resolve against `base_dir`.
    static ExperimentConfig from_config(const Config& config, const std::string& base_dir = ".");

    /// Throws ConfigError on invalid values or missing files.
    void validate() const;

    /// Datasets after applying the mu grid.
    std::vector<DatasetSpec> expanded_datasets() const;
};

/// One (dataset, algorithm, repeat) cell.
struct ResultRecord {
    std::string algorithm;
    std::string dataset;
    std::string group;
    std::size_t repeat = 0;
    std::uint64_t seed = 0;
    std::optional<double> mu;
    std::size_t node_count = 0;
    std::size_t community_count = 0;
    std::size_t largest_community = 0;
    std::optional<double> nmi;
    std::optional<double> fccn;
    std::optional<double> modularity;
    double wall_time = 0.0; ///< seconds
    bool converged = false;
    bool ok = true;
    std::string error;
};

/// Seed for a cell: master ^ stable hash of (dataset, algorithm, repeat).
std::uint64_t cell_seed(std::uint64_t master, const std::string& dataset, const std::string& algorithm,
                        std::size_t repeat);

/// The graph (and optional truth) a dataset yields for a given repeat.
/// Generated datasets draw a fresh graph per repeat, shared by all algorithms.
GeneratedGraph materialize(const DatasetSpec& dataset, std::uint64_t master_seed, std::size_t repeat,
                           std::optional<CommunityCover>* truth_out = nullptr);

/// Run a single cell. Stage errors are captured in the record.
ResultRecord run_cell(const ExperimentConfig& config, const DatasetSpec& dataset, Algorithm algorithm,
                      std::size_t repeat);

/// Every dataset x algorithm x repeat cell, sorted by cell key.
std::vector<ResultRecord> run_pipeline(const ExperimentConfig& config);

struct SummaryRow {
    std::string dataset;
    std::string algorithm;
    std::size_t records = 0;
    std::size_t failed = 0;
    std::size_t n_valid = 0; ///< records with a non-null nmi
    std::size_t n_valid_fccn = 0;
    std::size_t n_valid_modularity = 0;
    std::optional<double> mean_nmi, max_nmi;
    std::optional<double> mean_fccn, max_fccn;
    std::optional<double> mean_modularity, max_modularity;
    double mean_wall_time = 0.0;
    double mean_communities = 0.0;
};

/// Per (dataset, algorithm) aggregates; null metrics are skipped.
std::vector<SummaryRow> emit_summary(const std::vector<ResultRecord>& records);

struct CurvePoint {
    double mu = 0.0;
    std::string algorithm;
    double mean_nmi = 0.0;
    double stderr_nmi = 0.0;
    std::size_t samples = 0;
};

/// Mean NMI per (mu, algorithm) over the records of one sweep group.
std::vector<CurvePoint> sweep_curve(const std::vector<ResultRecord>& records, const std::string& group);

std::string records_csv(const std::vector<ResultRecord>& records, bool include_wall_time = true);
std::string records_jsonl(const std::vector<ResultRecord>& records, bool include_wall_time = true);
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string curve_csv(const std::vector<CurvePoint>& points);

/// records.csv, records.jsonl, summary.csv and curve_<group>.csv for every
/// sweep group, under `directory` (created if missing).
void write_outputs(const std::vector<ResultRecord>& records, const std::string& directory);

} // namespace infodiff
