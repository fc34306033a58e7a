#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kerr/fock.hpp"

namespace kerrsim {

/// Rejected command-line or file configuration (exit code 2).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class EngineChoice { Numeric, Analytic, Both };
enum class OutputFormat { Csv, Json };
enum class Figure { Fig1a, Fig1b, Fig2a, Fig2b, Fig3, Fig4a, Fig4b };

/// Everything the CLI needs for one invocation. Time is given in units of
/// T_rev = pi/chi; `steps` counts grid points including both ends.
struct RunConfig {
    double chi = 5.0;
    double x0 = 1.0;
    double p0 = 1.0;
    unsigned m = 0;
    std::optional<std::size_t> n_max;
    double tmax = 2.0;
    std::size_t steps = 2001;
    bool grid_from_user = false;  ///< --tmax or --steps given explicitly
    EngineChoice engine = EngineChoice::Numeric;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;  ///< empty writes to stdout
    std::optional<Figure> figure;
};

/// m values a figure preset compares (chi = 5, x0 = p0 = 1 for all).
std::vector<unsigned> figure_m_values(Figure figure);

std::string_view figure_name(Figure figure);
std::string_view engine_choice_name(EngineChoice engine);
std::string_view format_name(OutputFormat format);

/// One SimParams per series the configuration asks for. Figure presets
/// replace chi, x0, p0 and m; a user grid coarser than T_rev/500 is rejected
/// for presets rather than silently refined. Throws ConfigError.
std::vector<kerr::SimParams> expand_runs(const RunConfig& config);

}  // namespace kerrsim
