#include "onerel/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "onerel/criteria.hpp"
#include "onerel/hull.hpp"

namespace onerel {

namespace {

bool displacement_zero(const Walk& w) {
    for (auto c : w.displacement())
        if (c != 0) return false;
    return true;
}

}  // namespace

Event lookup_event(const std::string& name, int k) {
    if (name == "always-true") return {name, [](const Word&) { return true; }};
    if (name == "touching-hyperplane") {
        return {name, [](const Word& w) {
                    return embeddable_criterion(w).kind == VerdictKind::Embeddable;
                }};
    }
    if (name == "brown-ascending") {
        if (k != 2)
            throw std::invalid_argument("event brown-ascending needs k = 2, got k = " +
                                        std::to_string(k));
        return {name, [](const Word& w) {
                    return brown_criterion(w).kind == VerdictKind::AscendingHNN;
                }};
    }
    if (name == "bad-walk") {
        return {name, [](const Word& w) {
                    Walk walk = trace_walk(w);
                    if (displacement_zero(walk)) return true;
                    return is_bad(walk);
                }};
    }
    const std::string prefix = "corner-count-threshold(";
    if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
        const std::string arg = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        std::int64_t m = 0;
        try {
            m = std::stoll(arg);
        } catch (...) {
            throw std::invalid_argument("bad corner-count-threshold argument '" + arg + "'");
        }
        return {name, [m](const Word& w) {
                    Walk walk = trace_walk(w);
                    if (displacement_zero(walk)) return true;
                    return corner_count(walk) < m;
                }};
    }
    throw std::invalid_argument("unknown event '" + name +
                                "' (registry: always-true, touching-hyperplane, brown-ascending, "
                                "bad-walk, corner-count-threshold(m))");
}

std::vector<std::string> event_registry_names() {
    return {"always-true", "touching-hyperplane", "brown-ascending", "bad-walk",
            "corner-count-threshold(m)"};
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    bool saw_model = false, saw_k = false, saw_n = false, saw_trials = false, saw_event = false;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const char* ws = " \t\r\n";
            auto b = s.find_first_not_of(ws);
            if (b == std::string::npos) return std::string();
            auto e = s.find_last_not_of(ws);
            return s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "model") {
            cfg.model = parse_model(val);
            saw_model = true;
        } else if (key == "k") {
            cfg.k = std::stoi(val);
            saw_k = true;
        } else if (key == "n") {
            std::string item;
            std::istringstream vs(val);
            while (std::getline(vs, item, ','))
                for (std::istringstream is(item); is >> item;) cfg.lengths.push_back(std::stoi(item));
            saw_n = true;
        } else if (key == "trials") {
            cfg.trials = std::stoi(val);
            saw_trials = true;
        } else if (key == "event") {
            cfg.event = val;
            saw_event = true;
        } else if (key == "seed") {
            cfg.seed = std::stoull(val);
        } else if (key == "out") {
            cfg.out = val;
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    if (!saw_model || !saw_k || !saw_n || !saw_trials || !saw_event)
        throw std::invalid_argument("config needs model, k, n, trials and event");
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (cfg.lengths.empty()) throw std::invalid_argument("config: n list is empty");
    lookup_event(cfg.event, cfg.k);  // validate against the registry
    std::sort(cfg.lengths.begin(), cfg.lengths.end());
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials) {
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    double lo = std::max(0.0, center - half);
    double hi = std::min(1.0, center + half);
    if (successes == 0) lo = 0.0;  // endpoints are exact for the score interval
    if (successes == trials) hi = 1.0;
    return {lo, hi};
}

int worker_thread_count() {
    if (const char* env = std::getenv("ONEREL_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

EstimateRow estimate_probability(Model model, int k, int n, int trials, const std::string& event,
                                 std::uint64_t seed) {
    Event ev = lookup_event(event, k);
    if (count_words(model, n, k) <= 0) throw std::invalid_argument("empty sample space");
    warm_cr_tables(n, k);

    const int threads = std::min(worker_thread_count(), trials);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(threads), 0);
    std::vector<std::string> errors(static_cast<std::size_t>(threads));
    auto run_chunk = [&](int worker) {
        std::int64_t local = 0;
        try {
            for (int trial = worker; trial < trials; trial += threads) {
                SeededRng rng(seed, static_cast<std::uint64_t>(trial));
                Word w = sample_word(model, n, k, rng);
                if (ev.predicate(w)) ++local;
            }
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(worker)] = e.what();
        }
        counts[static_cast<std::size_t>(worker)] = local;
    };
    if (threads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (!err.empty())
            throw std::runtime_error("event evaluation failed for " + event + " at n=" +
                                     std::to_string(n) + ": " + err);
    std::int64_t successes = 0;
    for (auto c : counts) successes += c;

    EstimateRow row;
    row.model = to_string(model);
    row.k = k;
    row.n = n;
    row.trials = trials;
    row.event = event;
    row.successes = successes;
    row.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    auto ci = wilson_interval(successes, trials);
    row.ci_low = ci.first;
    row.ci_high = ci.second;
    row.seed = seed;
    row.wall_time_ms = 0;
    return row;
}

std::string csv_header() {
    return "model,k,n,trials,event,successes,estimate,ci_low,ci_high,seed,wall_time_ms";
}

std::string csv_row(const EstimateRow& row) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g", row.estimate, row.ci_low, row.ci_high);
    std::ostringstream out;
    out << row.model << ',' << row.k << ',' << row.n << ',' << row.trials << ',' << row.event
        << ',' << row.successes << ',' << buf << ',' << row.seed << ',' << row.wall_time_ms;
    return out.str();
}

std::vector<EstimateRow> run_experiment(const ExperimentConfig& config) {
    std::ofstream out;
    const bool to_file = !config.out.empty();
    if (to_file) {
        out.open(config.out);
        if (!out) throw std::runtime_error("cannot open output file: " + config.out);
        out << csv_header() << '\n';
        out.flush();
    }
    std::vector<EstimateRow> rows;
    for (int n : config.lengths) {
        EstimateRow row =
            estimate_probability(config.model, config.k, n, config.trials, config.event, config.seed);
        rows.push_back(row);
        if (to_file) {
            out << csv_row(row) << '\n';
            out.flush();  // a crash leaves a clearly truncated but valid prefix
        }
    }
    return rows;
}

}  // namespace onerel
