#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/cli/config.hpp"
#include "orbitlab/cli/registry.hpp"

namespace orbitlab::cli {

enum class Format { Csv, Json };

struct Flags {
    std::optional<unsigned> m_max;
    std::optional<unsigned> n_max;
    /// replaces the config's list when non-empty
    std::vector<Rational> epsilons;
    Format format = Format::Json;
};

struct CommandResult {
    std::string text;
    int exit_code = 0;
};

CommandResult command_orbit(const AnalysisConfig& c, const Flags& f);
CommandResult command_cn(const AnalysisConfig& c, const Flags& f);
CommandResult command_pullback(const AnalysisConfig& c, const Flags& f);
CommandResult command_genericity(const AnalysisConfig& c, const Flags& f);
CommandResult command_commute(const AnalysisConfig& c, const Flags& f);

/// Exit 0 on pass, 1 on fail; unknown names throw InputError.
CommandResult command_verify_example(const std::string& name, Format format);

}  // namespace orbitlab::cli
