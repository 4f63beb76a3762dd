#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symbio/life.hpp"

namespace symbio::cli {

using Json = nlohmann::ordered_json;

/// Bad invocation: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool timing = false;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::optional<unsigned> max_steps;
  std::string out;
};

/// What a subcommand produced. `ok == false` maps to exit code 1.
struct RunReport {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::vector<std::string> trace;
  std::string text;
  bool ok = true;
  double millis = 0.0;
};

std::uint64_t require_seed(const Options& o, const std::string& command);

Json cells_json(const life::CellSet& cells);
Json motion_json(const life::RigidMotion& m);
Json period_json(const life::PeriodReport& r);

std::string render_output(const RunReport& r, const Options& o);

void register_algebra(CLI::App& app, Options& opts, RunReport& report);
void register_fold(CLI::App& app, Options& opts, RunReport& report);
void register_quantum(CLI::App& app, Options& opts, RunReport& report);
void register_life(CLI::App& app, Options& opts, RunReport& report);

}  // namespace symbio::cli
