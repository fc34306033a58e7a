#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "kerr/evolution.hpp"
#include "kerr/revival.hpp"

namespace kerrsim {

using Json = nlohmann::ordered_json;

/// Exact CSV header, in column order.
inline constexpr const char* kCsvHeader =
    "t,t_over_trev,mean_x,mean_p,var_x,var_p,dxdp,m4_x,m4_p,mean_n,autocorr";

/// 17 significant digits: round-trips every double.
std::string format_double(double value);

/// One row per sample, LF endings. Fields the engine did not populate are empty.
void write_csv(std::ostream& out, const kerr::TimeSeries& ts);

/// {config, engine, samples[]} plus `report` when given.
Json to_document(const kerr::TimeSeries& ts, const kerr::RevivalReport* report = nullptr);

std::string engine_name(kerr::Engine engine);
kerr::Engine parse_engine_name(const std::string& name);

}  // namespace kerrsim

namespace kerr {

// nlohmann/json ADL hooks.
void to_json(kerrsim::Json& j, const SimParams& p);
void from_json(const kerrsim::Json& j, SimParams& p);
void to_json(kerrsim::Json& j, const ObservableSet& s);
void from_json(const kerrsim::Json& j, ObservableSet& s);
void to_json(kerrsim::Json& j, const TimeSeries& ts);
void from_json(const kerrsim::Json& j, TimeSeries& ts);
void to_json(kerrsim::Json& j, const FractionalEvent& e);
void from_json(const kerrsim::Json& j, FractionalEvent& e);
void to_json(kerrsim::Json& j, const RevivalReport& r);
void from_json(const kerrsim::Json& j, RevivalReport& r);

}  // namespace kerr
