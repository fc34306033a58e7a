#include "kerrsim/io.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace kerrsim {

std::string format_double(double value) {
    std::array<char, 32> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                      std::chars_format::general, 17);
    return std::string(buffer.data(), result.ptr);
}

namespace {

void put(std::ostream& out, const std::optional<double>& value) {
    if (value) out << format_double(*value);
}

}  // namespace

void write_csv(std::ostream& out, const kerr::TimeSeries& ts) {
    const double t_rev = ts.params.revival_period();
    out << kCsvHeader << '\n';
    for (const kerr::ObservableSet& s : ts.samples) {
        out << format_double(s.t) << ',' << format_double(s.t / t_rev) << ','
            << format_double(s.mean_x) << ',' << format_double(s.mean_p) << ',';
        put(out, s.var_x);
        out << ',';
        put(out, s.var_p);
        out << ',';
        put(out, s.uncertainty_product);
        out << ',';
        put(out, s.m4_x);
        out << ',';
        put(out, s.m4_p);
        out << ',' << format_double(s.mean_n) << ',';
        put(out, s.autocorr);
        out << '\n';
    }
}

std::string engine_name(kerr::Engine engine) {
    return engine == kerr::Engine::Numeric ? "numeric" : "analytic";
}

kerr::Engine parse_engine_name(const std::string& name) {
    if (name == "numeric") return kerr::Engine::Numeric;
    if (name == "analytic") return kerr::Engine::Analytic;
    throw std::invalid_argument("unknown engine: " + name);
}

Json to_document(const kerr::TimeSeries& ts, const kerr::RevivalReport* report) {
    Json doc = ts;
    if (report) doc["report"] = *report;
    return doc;
}

}  // namespace kerrsim

namespace kerr {
namespace {

kerrsim::Json optional_value(const std::optional<double>& v) {
    return v ? kerrsim::Json(*v) : kerrsim::Json(nullptr);
}

std::optional<double> read_optional(const kerrsim::Json& j, const char* key) {
    const kerrsim::Json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
}

}  // namespace

void to_json(kerrsim::Json& j, const SimParams& p) {
    j = kerrsim::Json{
        {"chi", p.chi},
        {"x0", p.x0},
        {"p0", p.p0},
        {"m", p.m},
        {"n_max", p.n_max ? kerrsim::Json(*p.n_max) : kerrsim::Json(nullptr)},
        {"t_start", p.t_start},
        {"t_end", p.t_end},
        {"n_steps", p.n_steps},
    };
}

void from_json(const kerrsim::Json& j, SimParams& p) {
    p.chi = j.at("chi").get<double>();
    p.x0 = j.at("x0").get<double>();
    p.p0 = j.at("p0").get<double>();
    p.m = j.at("m").get<unsigned>();
    const kerrsim::Json& n_max = j.at("n_max");
    p.n_max = n_max.is_null() ? std::nullopt : std::optional<std::size_t>(n_max.get<std::size_t>());
    p.t_start = j.at("t_start").get<double>();
    p.t_end = j.at("t_end").get<double>();
    p.n_steps = j.at("n_steps").get<std::size_t>();
}

void to_json(kerrsim::Json& j, const ObservableSet& s) {
    j = kerrsim::Json{
        {"t", s.t},
        {"mean_x", s.mean_x},
        {"mean_p", s.mean_p},
        {"var_x", optional_value(s.var_x)},
        {"var_p", optional_value(s.var_p)},
        {"uncertainty_product", optional_value(s.uncertainty_product)},
        {"m4_x", optional_value(s.m4_x)},
        {"m4_p", optional_value(s.m4_p)},
        {"mean_n", s.mean_n},
        {"autocorr", optional_value(s.autocorr)},
    };
}

void from_json(const kerrsim::Json& j, ObservableSet& s) {
    s.t = j.at("t").get<double>();
    s.mean_x = j.at("mean_x").get<double>();
    s.mean_p = j.at("mean_p").get<double>();
    s.var_x = read_optional(j, "var_x");
    s.var_p = read_optional(j, "var_p");
    s.uncertainty_product = read_optional(j, "uncertainty_product");
    s.m4_x = read_optional(j, "m4_x");
    s.m4_p = read_optional(j, "m4_p");
    s.mean_n = j.at("mean_n").get<double>();
    s.autocorr = read_optional(j, "autocorr");
}

void to_json(kerrsim::Json& j, const TimeSeries& ts) {
    j = kerrsim::Json{
        {"config", ts.params},
        {"engine", kerrsim::engine_name(ts.engine)},
        {"samples", ts.samples},
    };
}

void from_json(const kerrsim::Json& j, TimeSeries& ts) {
    ts.params = j.at("config").get<SimParams>();
    ts.engine = kerrsim::parse_engine_name(j.at("engine").get<std::string>());
    ts.samples = j.at("samples").get<std::vector<ObservableSet>>();
}

void to_json(kerrsim::Json& j, const FractionalEvent& e) {
    j = kerrsim::Json{
        {"j", e.j},
        {"k", e.k},
        {"t", e.t},
        {"signature_moment_order", e.signature_moment_order},
        {"oscillation_amplitude", e.oscillation_amplitude},
    };
}

void from_json(const kerrsim::Json& j, FractionalEvent& e) {
    e.j = j.at("j").get<int>();
    e.k = j.at("k").get<int>();
    e.t = j.at("t").get<double>();
    e.signature_moment_order = j.at("signature_moment_order").get<int>();
    e.oscillation_amplitude = j.at("oscillation_amplitude").get<double>();
}

void to_json(kerrsim::Json& j, const RevivalReport& r) {
    j = kerrsim::Json{
        {"t_rev", r.t_rev},
        {"revival_times", r.revival_times},
        {"fractional_events", r.fractional_events},
        {"window_width", r.window_width},
    };
}

void from_json(const kerrsim::Json& j, RevivalReport& r) {
    r.t_rev = j.at("t_rev").get<double>();
    r.revival_times = j.at("revival_times").get<std::vector<double>>();
    r.fractional_events = j.at("fractional_events").get<std::vector<FractionalEvent>>();
    r.window_width = j.at("window_width").get<double>();
}

}  // namespace kerr
