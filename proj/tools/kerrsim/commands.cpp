#include "kerrsim/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "kerr/closed_form.hpp"
#include "kerr/errors.hpp"
#include "kerr/evolution.hpp"
#include "kerr/revival.hpp"
#include "kerrsim/io.hpp"

namespace kerrsim {
namespace {

struct Output {
    std::string suffix;
    std::string content;
};

// Writes every output to its own file, or the single output to stdout.
int emit(const RunConfig& config, const std::vector<Output>& outputs, std::ostream& out,
         std::ostream& err) {
    if (config.output_path.empty()) {
        if (outputs.size() != 1) {
            err << "error: this run produces " << outputs.size()
                << " series; pass --out to write them to files\n";
            return kExitInvalidConfig;
        }
        out << outputs.front().content;
        return kExitOk;
    }
    const std::filesystem::path base(config.output_path);
    for (const Output& o : outputs) {
        std::filesystem::path path = base;
        if (outputs.size() > 1)
            path = base.parent_path() /
                   (base.stem().string() + o.suffix + base.extension().string());
        std::ofstream file(path, std::ios::binary);
        file << o.content;
        if (!file) {
            err << "error: cannot write " << path.string() << '\n';
            return kExitFailure;
        }
        err << "wrote " << path.string() << '\n';
    }
    return kExitOk;
}

std::string render(const kerr::TimeSeries& ts, OutputFormat format,
                   const kerr::RevivalReport* report = nullptr) {
    std::ostringstream buffer;
    if (format == OutputFormat::Csv) {
        write_csv(buffer, ts);
    } else {
        buffer << to_document(ts, report).dump(2) << '\n';
    }
    return buffer.str();
}

std::string m_suffix(const std::vector<kerr::SimParams>& runs, const kerr::SimParams& p) {
    return runs.size() > 1 ? "_m" + std::to_string(p.m) : std::string{};
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const kerr::TruncationInsufficient& e) {
        err << "error: " << e.what() << '\n';
        return kExitTruncation;
    } catch (const kerr::NoRevivalFound& e) {
        err << "error: no revival found: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
}

}  // namespace

int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::vector<kerr::SimParams> runs = expand_runs(config);
        std::vector<Output> outputs;
        for (const kerr::SimParams& p : runs) {
            const std::string suffix = m_suffix(runs, p);
            if (config.engine != EngineChoice::Analytic) {
                outputs.push_back({suffix + (config.engine == EngineChoice::Both ? "_numeric" : ""),
                                   render(kerr::run_series(p), config.format)});
            }
            if (config.engine != EngineChoice::Numeric) {
                outputs.push_back(
                    {suffix + (config.engine == EngineChoice::Both ? "_analytic" : ""),
                     render(kerr::run_analytic_series(p), config.format)});
            }
        }
        return emit(config, outputs, out, err);
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        bool all_pass = true;
        for (const kerr::SimParams& p : expand_runs(config)) {
            const kerr::TimeSeries numeric = kerr::run_series(p);
            const kerr::TimeSeries analytic = kerr::run_analytic_series(p);

            struct Worst {
                double error = 0.0;
                double t = 0.0;
            };
            std::map<std::string, Worst> worst{{"mean_x", {}}, {"mean_p", {}}, {"mean_n", {}}};
            auto track = [&](const std::string& channel, double a, double b, double t) {
                const double e = std::abs(a - b);
                Worst& w = worst[channel];
                if (!(e <= w.error)) w = Worst{e, t};
            };
            for (std::size_t i = 0; i < numeric.samples.size(); ++i) {
                const kerr::ObservableSet& n = numeric.samples[i];
                const kerr::ObservableSet& a = analytic.samples[i];
                track("mean_x", n.mean_x, a.mean_x, n.t);
                track("mean_p", n.mean_p, a.mean_p, n.t);
                track("mean_n", n.mean_n, a.mean_n, n.t);
            }

            out << "verify m=" << p.m << " nu=" << format_double(p.nu())
                << " chi=" << format_double(p.chi) << " n_max=" << p.resolved_n_max()
                << " samples=" << numeric.samples.size() << '\n';
            const std::pair<const std::string, Worst>* breach = nullptr;
            for (const auto& entry : worst) {
                out << "  " << entry.first << " max_abs_err=" << format_double(entry.second.error)
                    << " at t=" << format_double(entry.second.t) << '\n';
                if (!(entry.second.error < kVerifyTolerance) &&
                    (!breach || entry.second.error > breach->second.error))
                    breach = &entry;
            }
            if (breach) {
                all_pass = false;
                out << "FAIL worst channel=" << breach->first
                    << " t=" << format_double(breach->second.t)
                    << " err=" << format_double(breach->second.error)
                    << " tolerance=" << format_double(kVerifyTolerance) << '\n';
            } else {
                out << "PASS tolerance=" << format_double(kVerifyTolerance) << '\n';
            }
        }
        return all_pass ? kExitOk : kExitFailure;
    });
}

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::vector<kerr::SimParams> runs = expand_runs(config);
        std::vector<Output> outputs;
        for (const kerr::SimParams& p : runs) {
            const kerr::TimeSeries ts = kerr::run_series(p);
            const kerr::RevivalReport report = kerr::analyze_revivals(ts);
            if (report.fractional_events.empty() && report.t_rev > 0.0)
                err << "note: grid too coarse for fractional-revival analysis (m=" << p.m << ")\n";
            outputs.push_back({m_suffix(runs, p), render(ts, OutputFormat::Json, &report)});
        }
        return emit(config, outputs, out, err);
    });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kerr-medium evolution of atom-added coherent states: time series, "
                 "closed-form verification and revival detection"};
    app.name("kerrsim");
    app.set_config("--config", "", "Read options from an INI/TOML file (flags take precedence)");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::size_t n_max = 0;
    app.add_option("--chi", config.chi, "Kerr coupling chi (> 0)")->capture_default_str();
    app.add_option("--x0", config.x0, "Initial x quadrature offset")->capture_default_str();
    app.add_option("--p0", config.p0, "Initial p quadrature offset")->capture_default_str();
    app.add_option("--m", config.m, "Number of added atoms")->capture_default_str();
    auto* nmax_opt = app.add_option("--nmax", n_max, "Fock truncation index (default: auto)");
    auto* tmax_opt =
        app.add_option("--tmax", config.tmax, "End time in units of T_rev = pi/chi")->capture_default_str();
    auto* steps_opt =
        app.add_option("--steps", config.steps, "Grid points, both ends included")->capture_default_str();

    const std::map<std::string, EngineChoice> engines{
        {"numeric", EngineChoice::Numeric}, {"analytic", EngineChoice::Analytic}, {"both", EngineChoice::Both}};
    const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                      {"json", OutputFormat::Json}};
    const std::map<std::string, Figure> figures{
        {"fig1a", Figure::Fig1a}, {"fig1b", Figure::Fig1b}, {"fig2a", Figure::Fig2a},
        {"fig2b", Figure::Fig2b}, {"fig3", Figure::Fig3},   {"fig4a", Figure::Fig4a},
        {"fig4b", Figure::Fig4b}};
    Figure figure = Figure::Fig1a;
    app.add_option("--engine", config.engine, "numeric | analytic | both")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case).description(""))
        ->option_text("ENGINE");
    app.add_option("--format", config.format, "csv | json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->option_text("FORMAT");
    auto* figure_opt = app.add_option("--figure", figure, "fig1a..fig4b preset (chi=5, x0=p0=1)")
                           ->transform(CLI::CheckedTransformer(figures, CLI::ignore_case).description(""))
                           ->option_text("FIGURE");
    app.add_option("--out", config.output_path, "Output file (default: stdout)");

    auto* series = app.add_subcommand("series", "Emit the observable time series as CSV or JSON");
    auto* verify = app.add_subcommand("verify", "Compare closed-form and numeric means");
    auto* detect = app.add_subcommand("detect", "Detect revivals and fractional revivals (JSON)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    if (nmax_opt->count() > 0) config.n_max = n_max;
    if (figure_opt->count() > 0) config.figure = figure;
    config.grid_from_user = tmax_opt->count() > 0 || steps_opt->count() > 0;

    if (series->parsed()) return cmd_series(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (detect->parsed()) return cmd_detect(config, out, err);
    return kExitInvalidConfig;
}

}  // namespace kerrsim
