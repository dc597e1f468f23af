#pragma once

#include <aoisched/generators.hpp>
#include <aoisched/textio.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aoisched {

enum class Family {
    Fig3, Fig4, Fig5, Fig6, Fig7, Fig8, Fig9, Fig10,
    BoundsCurve, AdversarialAudit, InvariantSuite,
};

std::string to_string(Family f);
Family family_from_name(const std::string& name);

/// Experiment configuration. Written and read as a key = value document:
///
///   family = fig3
///   r_values = 1,3,5
///   c_min_grid = 1,2,5,10,20
///   tr_p = 0.2
///   tr_q = 0.8
///   opportunity_rate = 0.7
///   lambdas = 1e-05,0.25,0.5,0.75,1
///   epsilons = 0,0.5,1,1.5,2,2.5
///   aging = linear            (or exp:0.3)
///   horizon = 2000
///   seeds = 20
///   base_seed = 1
///   replications = 1          (rounding draws per environment)
///   instances = 1000          (invariant-suite only)
///   threads = 0               (0: hardware concurrency)
///   output_dir = out/fig3
///
/// Missing keys take the family defaults.
struct ExperimentConfig {
    Family family = Family::Fig3;
    std::vector<double> r_values;
    std::vector<double> c_min_grid;
    double tr_p = 0.2;
    double tr_q = 0.8;
    double opportunity_rate = 0.7;
    std::vector<double> lambdas;
    std::vector<double> epsilons;
    std::string aging = "linear";
    std::int64_t horizon = 2000;
    std::int64_t seeds = 20;
    std::uint64_t base_seed = 1;
    std::int64_t replications = 1;
    std::int64_t instances = 1000;
    std::int64_t threads = 0;
    std::string output_dir = "out";

    static ExperimentConfig defaults(Family family);
    static ExperimentConfig from_document(const textio::Document& doc);
    textio::Document to_document() const;
    /// Throws ConfigError.
    void validate() const;
    bool is_ml() const;
};

/// One CSV row: a cell's parameters and one algorithm's time-average cost
/// over the cell's seeds.
struct ResultRow {
    std::string family;
    double tr_p = 0.0;
    double tr_q = 0.0;
    double ratio_r = 1.0;
    double c_min = 1.0;
    std::optional<double> epsilon;
    std::optional<double> lambda;
    std::string aging;
    std::int64_t horizon = 0;
    std::int64_t seeds = 0;
    std::string algorithm;
    double mean_cost = 0.0;
    double std_cost = 0.0;
    double opt = 0.0;
    std::optional<double> theory_bound;
    double ratio = 0.0;
    /// Per-environment time-average costs, in seed order (not written).
    std::vector<double> samples;
};

std::string csv_header();
std::string to_csv_line(const ResultRow& row);

struct ExperimentResult {
    std::vector<ResultRow> rows;
    /// Rows for the families with their own table layout.
    std::string table_header;
    std::vector<std::string> table_lines;
    std::vector<std::string> failures;
    std::vector<std::uint64_t> seeds_used;
    double wall_seconds = 0.0;

    std::string csv() const;
};

/// Runs every cell of the configured grid on a thread pool. Cells that throw
/// are recorded in failures and the rest continue.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Writes <family>.csv, manifest.txt (deterministic) and timing.txt.
void write_artifacts(const ExperimentConfig& config, const ExperimentResult& result);

/// Seed of environment s in cell c.
std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t cell, std::int64_t s);

/// Finds a row by algorithm (and λ for ML rows) within a cell.
const ResultRow* find_row(const std::vector<ResultRow>& rows, double tr_p, double ratio_r,
                          double c_min, const std::string& algorithm,
                          std::optional<double> epsilon = std::nullopt,
                          std::optional<double> lambda = std::nullopt);

} // namespace aoisched
