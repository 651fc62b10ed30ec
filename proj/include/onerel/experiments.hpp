#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "onerel/sampling.hpp"
#include "onerel/word.hpp"

namespace onerel {

// Named event predicates over sampled words. Registry:
//   touching-hyperplane        embeddable verdict is Embeddable
//   brown-ascending            rank-2 verdict is AscendingHNN (k must be 2)
//   bad-walk                   every whole-walk 0-cell is multiply covered
//                              (zero displacement counts as bad)
//   corner-count-threshold(m)  whole-walk corner count, with multiplicities,
//                              is below m (zero displacement counts as below)
//   always-true                sanity predicate
struct Event {
    std::string name;
    std::function<bool(const Word&)> predicate;
};

Event lookup_event(const std::string& name, int k);
std::vector<std::string> event_registry_names();

struct ExperimentConfig {
    Model model = Model::CR;
    int k = 2;
    std::vector<int> lengths;
    int trials = 1000;
    std::string event;
    std::uint64_t seed = 0;
    std::string out;
};

// Flat key=value text: model, k, n (list), trials, event, seed, out.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

struct EstimateRow {
    std::string model;
    int k;
    int n;
    int trials;
    std::string event;
    std::int64_t successes;
    double estimate;
    double ci_low;
    double ci_high;
    std::uint64_t seed;
    std::int64_t wall_time_ms;  // pinned to 0: rows are byte-reproducible by contract
};

// Wilson 95% score interval.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials);

// Runs `trials` independent trials, one RNG stream per trial index, split
// deterministically over worker threads (ONEREL_THREADS, default hardware).
EstimateRow estimate_probability(Model model, int k, int n, int trials, const std::string& event,
                                 std::uint64_t seed);

std::string csv_header();
std::string csv_row(const EstimateRow& row);

// One row per length, ascending, streamed to the output path.
std::vector<EstimateRow> run_experiment(const ExperimentConfig& config);

int worker_thread_count();

}  // namespace onerel
