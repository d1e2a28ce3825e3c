#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "fracsis/exit_cost.hpp"
#include "fracsis/feedback.hpp"
#include "fracsis/grid.hpp"
#include "fracsis/sis_model.hpp"

namespace fracsis {

enum class RunKind { kProfiles, kTrajectories, kConverge, kSweep, kStationary };

std::string to_string(RunKind kind);

// One experiment per flat key=value file; '#' starts a comment. Unknown
// keys are rejected so typos fail loudly. See the repository README for
// the full key list.
struct ExperimentConfig {
    ModelParams model;
    Grid1D grid;
    ExitCostSpec cost;
    RunKind kind = RunKind::kProfiles;
    std::filesystem::path out_dir = "out";

    std::vector<double> snapshot_times;             // profiles
    std::vector<double> initial_states;             // trajectories
    FeedbackPairing pairing = FeedbackPairing::kRemainingHorizon;
    std::vector<double> dx_levels;                  // converge
    std::vector<double> sweep_alphas;               // sweep
    std::vector<double> sweep_domains;              // sweep (x_max = t_max)

    static ExperimentConfig from_file(const std::filesystem::path& path);
    static ExperimentConfig from_stream(std::istream& in, const std::string& origin);

    // All referenced values must pass module-level validation before a run
    // starts; throws ConfigError with the offending key.
    void validate() const;
};

// Low-level access: raw key=value pairs in file order.
std::map<std::string, std::string> parse_flat_config(std::istream& in,
                                                     const std::string& origin);

}  // namespace fracsis
