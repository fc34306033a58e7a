#include "kerrsim/config.hpp"

#include <cmath>
#include <sstream>

#include "kerr/revival.hpp"

namespace kerrsim {

std::vector<unsigned> figure_m_values(Figure figure) {
    switch (figure) {
        case Figure::Fig1a:
        case Figure::Fig2a: return {0};
        case Figure::Fig1b:
        case Figure::Fig2b: return {10};
        case Figure::Fig3: return {0, 1, 10};
        case Figure::Fig4a: return {0, 5};
        case Figure::Fig4b: return {0, 2};
    }
    return {};
}

std::string_view figure_name(Figure figure) {
    switch (figure) {
        case Figure::Fig1a: return "fig1a";
        case Figure::Fig1b: return "fig1b";
        case Figure::Fig2a: return "fig2a";
        case Figure::Fig2b: return "fig2b";
        case Figure::Fig3: return "fig3";
        case Figure::Fig4a: return "fig4a";
        case Figure::Fig4b: return "fig4b";
    }
    return "?";
}

std::string_view engine_choice_name(EngineChoice engine) {
    switch (engine) {
        case EngineChoice::Numeric: return "numeric";
        case EngineChoice::Analytic: return "analytic";
        case EngineChoice::Both: return "both";
    }
    return "?";
}

std::string_view format_name(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

std::vector<kerr::SimParams> expand_runs(const RunConfig& config) {
    if (!std::isfinite(config.tmax) || config.tmax <= 0.0)
        throw ConfigError("--tmax must be a positive number of revival periods");
    if (config.steps < 2) throw ConfigError("--steps must be at least 2");

    kerr::SimParams base;
    base.chi = config.chi;
    base.x0 = config.x0;
    base.p0 = config.p0;
    base.m = config.m;
    base.n_max = config.n_max;
    base.n_steps = config.steps;

    std::vector<unsigned> m_values{config.m};
    if (config.figure) {
        base.chi = 5.0;
        base.x0 = 1.0;
        base.p0 = 1.0;
        m_values = figure_m_values(*config.figure);
        const double step_in_trev = config.tmax / static_cast<double>(config.steps - 1);
        if (config.grid_from_user && !(step_in_trev < 1.0 / kerr::kMinStepsPerRevival)) {
            std::ostringstream msg;
            msg << "figure " << figure_name(*config.figure) << " needs a grid step below T_rev/"
                << kerr::kMinStepsPerRevival << "; requested step is T_rev/"
                << 1.0 / step_in_trev;
            throw ConfigError(msg.str());
        }
    }

    std::vector<kerr::SimParams> runs;
    for (unsigned m : m_values) {
        kerr::SimParams p = base;
        p.m = m;
        p.t_start = 0.0;
        p.t_end = config.tmax * p.revival_period();
        try {
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        runs.push_back(p);
    }
    return runs;
}

}  // namespace kerrsim
