#include "fracsis/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "fracsis/errors.hpp"

namespace fracsis {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("key '" + key + "': not an integer: '" + value + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("key '" + key + "': empty list element");
        out.push_back(parse_number(key, item));
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

const std::set<std::string> kKnownKeys = {
    "model.alpha", "model.beta", "model.gamma", "model.n_pop", "model.m_alpha",
    "grid.x_max", "grid.t_max", "grid.n_x", "grid.n_t",
    "cost.variant", "cost.table_x", "cost.table_y",
    "run.kind", "run.out",
    "profiles.snapshot_times",
    "trajectory.initial_states", "trajectory.pairing",
    "converge.dx_levels",
    "sweep.alphas", "sweep.domains",
};

}  // namespace

std::string to_string(RunKind kind) {
    switch (kind) {
        case RunKind::kProfiles: return "profiles";
        case RunKind::kTrajectories: return "trajectories";
        case RunKind::kConverge: return "converge";
        case RunKind::kSweep: return "sweep";
        case RunKind::kStationary: return "stationary";
    }
    return "?";
}

std::map<std::string, std::string> parse_flat_config(std::istream& in,
                                                     const std::string& origin) {
    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        if (!entries.emplace(key, value).second)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": duplicate key '" + key + "'");
    }
    return entries;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return from_stream(in, path.string());
}

ExperimentConfig ExperimentConfig::from_stream(std::istream& in,
                                               const std::string& origin) {
    const auto entries = parse_flat_config(in, origin);
    ExperimentConfig cfg;

    auto get = [&](const std::string& key) -> const std::string* {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto require = [&](const std::string& key) -> const std::string& {
        const auto* v = get(key);
        if (!v) throw ConfigError(origin + ": missing required key '" + key + "'");
        return *v;
    };

    cfg.model.alpha = parse_number("model.alpha", require("model.alpha"));
    cfg.model.beta = parse_number("model.beta", require("model.beta"));
    cfg.model.gamma = parse_number("model.gamma", require("model.gamma"));
    cfg.model.n_pop = parse_number("model.n_pop", require("model.n_pop"));
    if (const auto* v = get("model.m_alpha"))
        cfg.model.m_alpha = parse_number("model.m_alpha", *v);

    cfg.grid.x_max = parse_number("grid.x_max", require("grid.x_max"));
    cfg.grid.t_max = parse_number("grid.t_max", require("grid.t_max"));
    cfg.grid.n_x = parse_int("grid.n_x", require("grid.n_x"));
    cfg.grid.n_t = parse_int("grid.n_t", require("grid.n_t"));

    const std::string variant = require("cost.variant");
    if (variant == "linear") {
        cfg.cost = ExitCostSpec::linear();
    } else if (variant == "kinked") {
        cfg.cost = ExitCostSpec::kinked();
    } else if (variant == "bump") {
        cfg.cost = ExitCostSpec::bump();
    } else if (variant == "table") {
        try {
            cfg.cost = ExitCostSpec::table(
                parse_list("cost.table_x", require("cost.table_x")),
                parse_list("cost.table_y", require("cost.table_y")));
        } catch (const Error& e) {
            throw ConfigError(origin + ": " + e.what());
        }
    } else {
        throw ConfigError(origin + ": cost.variant must be one of "
                          "linear|kinked|bump|table, got '" + variant + "'");
    }

    const std::string kind = require("run.kind");
    if (kind == "profiles") cfg.kind = RunKind::kProfiles;
    else if (kind == "trajectories") cfg.kind = RunKind::kTrajectories;
    else if (kind == "converge") cfg.kind = RunKind::kConverge;
    else if (kind == "sweep") cfg.kind = RunKind::kSweep;
    else if (kind == "stationary") cfg.kind = RunKind::kStationary;
    else
        throw ConfigError(origin + ": run.kind must be one of "
                          "profiles|trajectories|converge|sweep|stationary");

    if (const auto* v = get("run.out")) cfg.out_dir = *v;

    if (const auto* v = get("profiles.snapshot_times"))
        cfg.snapshot_times = parse_list("profiles.snapshot_times", *v);
    if (const auto* v = get("trajectory.initial_states"))
        cfg.initial_states = parse_list("trajectory.initial_states", *v);
    if (const auto* v = get("trajectory.pairing")) {
        if (*v == "remaining-horizon") cfg.pairing = FeedbackPairing::kRemainingHorizon;
        else if (*v == "same-level") cfg.pairing = FeedbackPairing::kSameLevel;
        else
            throw ConfigError(origin + ": trajectory.pairing must be "
                              "remaining-horizon|same-level");
    }
    cfg.dx_levels = {0.1, 0.05, 0.025, 0.0125, 0.00625};
    if (const auto* v = get("converge.dx_levels"))
        cfg.dx_levels = parse_list("converge.dx_levels", *v);
    if (const auto* v = get("sweep.alphas"))
        cfg.sweep_alphas = parse_list("sweep.alphas", *v);
    if (const auto* v = get("sweep.domains"))
        cfg.sweep_domains = parse_list("sweep.domains", *v);

    return cfg;
}

void ExperimentConfig::validate() const {
    try {
        validate_params(model);
        build_grid(grid.x_max, grid.t_max, grid.n_x, grid.n_t);
        // the exit cost must be defined and minimal at the origin over the
        // widest domain any run will touch
        double extent = grid.x_max;
        for (double dom : sweep_domains) extent = std::max(extent, dom);
        check_exit_cost_minimal_at_origin(
            cost, build_grid(extent, grid.t_max, grid.n_x, grid.n_t).nodes());
        for (double alpha : sweep_alphas) {
            ModelParams p = model;
            p.alpha = alpha;
            validate_params(p);
        }
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    for (double t : snapshot_times)
        if (t < 0.0 || t > grid.t_max)
            throw ConfigError("profiles.snapshot_times outside [0, t_max]");
    for (double x : initial_states)
        if (x < 0.0 || x > grid.x_max)
            throw ConfigError("trajectory.initial_states outside [0, x_max]");
    if (kind == RunKind::kTrajectories && initial_states.empty())
        throw ConfigError("trajectories run needs trajectory.initial_states");
    if (!std::is_sorted(dx_levels.rbegin(), dx_levels.rend()) ||
        std::adjacent_find(dx_levels.begin(), dx_levels.end()) != dx_levels.end())
        throw ConfigError("converge.dx_levels must be strictly decreasing");
    for (double dx : dx_levels)
        if (!(dx > 0.0) || dx > grid.x_max / 2.0)
            throw ConfigError("converge.dx_levels must lie in (0, x_max/2]");
    if (kind == RunKind::kSweep) {
        if (sweep_alphas.empty() || sweep_domains.empty())
            throw ConfigError("sweep run needs sweep.alphas and sweep.domains");
        for (double a : sweep_alphas)
            if (a < 0.0 || a > 1.0) throw ConfigError("sweep.alphas outside [0, 1]");
        if (!std::is_sorted(sweep_domains.begin(), sweep_domains.end()))
            throw ConfigError("sweep.domains must be ascending");
        for (double d : sweep_domains)
            if (!(d > 0.0)) throw ConfigError("sweep.domains must be positive");
    }
}

}  // namespace fracsis
