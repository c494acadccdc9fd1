#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace squeezeslab::cli {

enum class Command { coefficients, variances, extrema, spectrum, pulseparams, poynting };
enum class Format { csv, json };
enum class SweepVariable { l, eta, kappa, omega, t };

struct Sweep {
  SweepVariable variable;
  double from;
  double to;
  std::size_t points;
};

/// Everything in SI units: wavelength and half-thickness in m, pulse length in m,
/// temperature in K, sigma in m^2, omega in rad/s, t in s.
struct RunConfig {
  Command command = Command::coefficients;
  std::string preset;
  double eta = 1.5;
  double kappa = 0.0;
  double wavelength = 1064e-9;
  double half_thickness = 1e-6;
  double rho = 0.8;
  double temperature = 0.0;
  double sigma = 1e-6;
  double pulse_length = 80e-6;
  double alpha = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double x = 0.0;
  std::optional<Sweep> sweep;
  std::string out;
  Format format = Format::csv;
};

/// Bad command line or invalid parameters (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

const char* to_string(Command command);
const char* to_string(SweepVariable variable);

/// "var:from:to:points", e.g. "l:2e-9:2e-5:10000".
Sweep parse_sweep(const std::string& text);

/// args[0] is the program name. Presets are applied first, explicit options override them.
RunConfig parse_args(const std::vector<std::string>& args);

/// The sweep actually used: the explicit one, the preset's, or the command default.
Sweep effective_sweep(const RunConfig& config);

Table execute(const RunConfig& config);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, const RunConfig& config, std::ostream& out);

/// Full CLI entry point; returns the process exit code (0, 2 config, 3 numerical).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace squeezeslab::cli
