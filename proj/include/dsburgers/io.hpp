#pragma once

// Snapshot CSV files and run metadata.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsburgers/errors.hpp"
#include "dsburgers/godunov.hpp"
#include "dsburgers/grid.hpp"

namespace dsburgers::io {

namespace fs = std::filesystem;

inline std::string snapshot_filename(long iter) { return "snap_" + std::to_string(iter) + ".csv"; }

/// 17 significant digits, enough for an exact round trip of any double.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());
}

/// Writes `snap_<iter>.csv` into `dir`: header `r,v`, one row per cell.
inline fs::path emit_snapshot_csv(const godunov::Snapshot& snap, const Grid& grid, const fs::path& dir) {
  const fs::path path = dir / snapshot_filename(snap.iter);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << "r,v\n";
  for (std::size_t j = 0; j < snap.v.size(); ++j) out << format_double(grid.center(j)) << ',' << format_double(snap.v[j]) << '\n';
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
  return path;
}

struct CsvProfile {
  std::vector<double> r;
  std::vector<double> v;
};

inline CsvProfile read_profile_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::string line;
  if (!std::getline(in, line) || line != "r,v") throw IoError(path.string(), "expected header 'r,v'");
  CsvProfile prof;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError(path.string(), "line " + std::to_string(lineno) + ": missing comma");
    try {
      std::size_t used = 0;
      const double r = std::stod(line.substr(0, comma), &used);
      const std::string rest = line.substr(comma + 1);
      const double v = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing characters");
      prof.r.push_back(r);
      prof.v.push_back(v);
    } catch (const std::exception&) {
      throw IoError(path.string(), "line " + std::to_string(lineno) + ": not a number pair");
    }
  }
  return prof;
}

/// Everything a run reports about itself.
struct RunMetadata {
  nlohmann::json config;  // resolved configuration echo
  std::optional<double> dt_fixed;
  double dt_min = 0.0;
  double dt_max = 0.0;
  double max_char_factor = 0.0;
  bool superluminal = false;
  double wall_clock_seconds = 0.0;
  int order = 2;
  std::string source_form;
  long steps = 0;
  double final_time = 0.0;
  std::string status = "ok";  // "ok" or "instability"
  std::string message;
};

inline nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

inline nlohmann::json to_json(const RunMetadata& m) {
  nlohmann::json j;
  j["config"] = m.config;
  j["dt"] = m.dt_fixed ? nlohmann::json(*m.dt_fixed) : nlohmann::json(nullptr);
  j["dt_min"] = finite_or_null(m.dt_min);
  j["dt_max"] = finite_or_null(m.dt_max);
  j["max_char_factor"] = m.max_char_factor;
  j["superluminal"] = m.superluminal;
  j["wall_clock_seconds"] = m.wall_clock_seconds;
  j["order"] = m.order;
  j["source_form"] = m.source_form;
  j["steps"] = m.steps;
  j["final_time"] = m.final_time;
  j["status"] = m.status;
  j["message"] = m.message;
  return j;
}

inline fs::path emit_metadata(const RunMetadata& meta, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << to_json(meta).dump(2) << '\n';
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
  return path;
}

}  // namespace dsburgers::io
