#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/continuum.hpp"
#include "squeezeslab/errors.hpp"
#include "squeezeslab/kernels.hpp"
#include "squeezeslab/poynting.hpp"
#include "squeezeslab/single_mode.hpp"
#include "squeezeslab/slab_optics.hpp"

namespace squeezeslab::cli {

namespace {

using constants::c;
using kernels::Exec;

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct HelpRequested {
  std::string text;
};

struct CommandInfo {
  Command command;
  const char* name;
};

constexpr CommandInfo kCommands[] = {
    {Command::coefficients, "coefficients"}, {Command::variances, "variances"},
    {Command::extrema, "extrema"},           {Command::spectrum, "spectrum"},
    {Command::pulseparams, "pulseparams"},   {Command::poynting, "poynting"},
};

Command command_from(const std::string& name) {
  for (const auto& info : kCommands) {
    if (name == info.name) return info.command;
  }
  throw ConfigError("unknown command '" + name + "'");
}

SweepVariable variable_from(const std::string& name) {
  if (name == "l") return SweepVariable::l;
  if (name == "eta") return SweepVariable::eta;
  if (name == "kappa") return SweepVariable::kappa;
  if (name == "omega") return SweepVariable::omega;
  if (name == "t") return SweepVariable::t;
  throw ConfigError("unknown sweep variable '" + name + "' (expected l|eta|kappa|omega|t)");
}

double parse_number(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError(std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

// Presets hard-code the figure parameters. The sweep only applies to the
// preset's own command; any other command falls back to its default sweep.
void apply_preset(RunConfig& cfg, std::optional<Sweep>& preset_sweep, Command& preset_command) {
  const std::string& p = cfg.preset;
  if (p == "fig2" || p == "fig3") {
    preset_command = Command::variances;
    cfg.eta = 1.5;
    cfg.kappa = p == "fig2" ? 0.005 : 0.0075;
    cfg.rho = 0.8;
    cfg.wavelength = 1064e-9;
    preset_sweep = p == "fig2" ? Sweep{SweepVariable::l, 2e-9, 2e-5, 10000}
                               : Sweep{SweepVariable::l, 2e-8, 2e-4, 10000};
  } else if (p == "fig4" || p == "fig5" || p == "fig6" || p == "fig7") {
    preset_command = p == "fig7" ? Command::spectrum : Command::pulseparams;
    cfg.eta = 1.5;
    cfg.kappa = 0.002;
    cfg.wavelength = 633e-9;
    cfg.half_thickness = 1e-6;
    cfg.pulse_length = 80e-6;
    cfg.rho = 1.5;
    if (p != "fig7") preset_sweep = Sweep{SweepVariable::eta, 1.05, 3.0, 200};
  } else {
    throw ConfigError("unknown preset '" + p + "' (expected fig2..fig7)");
  }
}

bool allowed(Command command, SweepVariable v) {
  switch (command) {
    case Command::coefficients:
      return v != SweepVariable::t;
    case Command::variances:
    case Command::extrema:
      return v == SweepVariable::l;
    case Command::spectrum:
      return v == SweepVariable::omega;
    case Command::pulseparams:
      return v == SweepVariable::eta;
    case Command::poynting:
      return v == SweepVariable::t;
  }
  return false;
}

double omega_c(const RunConfig& cfg) { return angular_frequency(cfg.wavelength); }

SlabSpec make_slab(const RunConfig& cfg) {
  SlabSpec slab{cfg.half_thickness, DielectricModel::constant(cfg.eta, cfg.kappa), cfg.sigma,
                cfg.temperature};
  validate(slab);
  return slab;
}

GaussianPulseSpec make_pulse(const RunConfig& cfg, bool coherent) {
  GaussianPulseSpec pulse{omega_c(cfg), cfg.pulse_length, cfg.rho, std::nullopt, cfg.theta,
                          cfg.phi};
  if (coherent) pulse.alpha0 = std::complex<double>(cfg.alpha, 0.0);
  validate(pulse);
  return pulse;
}

std::vector<double> sweep_values(const Sweep& s) { return kernels::linspace(s.from, s.to, s.points); }

Table run_coefficients(const RunConfig& cfg, const Sweep& sweep) {
  const auto xs = sweep_values(sweep);
  const SlabSpec base = make_slab(cfg);
  const double w0 = omega_c(cfg);
  Table table{{"x", "abs_R", "abs_T", "delta_R", "delta_T", "absorptance"}, {}};
  const auto coeffs = kernels::map_grid(
      std::span<const double>(xs),
      [&](double x) {
        SlabSpec slab = base;
        double w = w0;
        switch (sweep.variable) {
          case SweepVariable::l:
            slab.half_thickness = x;
            break;
          case SweepVariable::eta:
            slab.model = DielectricModel::constant(x, cfg.kappa);
            break;
          case SweepVariable::kappa:
            slab.model = DielectricModel::constant(cfg.eta, x);
            break;
          case SweepVariable::omega:
            w = x;
            break;
          case SweepVariable::t:
            break;
        }
        return scatter_coefficients(slab, w);
      },
      Exec::parallel);

  std::vector<double> dr(coeffs.size()), dt(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    dr[i] = coeffs[i].delta_r;
    dt[i] = coeffs[i].delta_t;
  }
  unwrap_half_phases(dr);
  unwrap_half_phases(dt);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& k = coeffs[i];
    table.rows.push_back({xs[i], k.abs_r, k.abs_t, dr[i], dt[i], k.absorptance});
  }
  return table;
}

Table run_variances(const RunConfig& cfg, const Sweep& sweep) {
  const auto ls = sweep_values(sweep);
  const SlabSpec base = make_slab(cfg);
  const double w = omega_c(cfg);
  const SqueezeParams sq{cfg.rho, cfg.theta, {cfg.alpha, 0.0}};
  Table table{{"l", "varX_T", "varY_T", "varX_R", "varY_R"}, {}};
  table.rows = kernels::map_grid(
      std::span<const double>(ls),
      [&](double l) {
        const SlabSpec slab = with_half_thickness(base, l);
        const auto t = transmitted_variances(slab, w, sq);
        const auto r = reflected_variances(slab, w, sq);
        return std::vector<Cell>{l, t.var_x, t.var_y, r.var_x, r.var_y};
      },
      Exec::parallel);
  return table;
}

Table run_extrema(const RunConfig& cfg, const Sweep& sweep, std::ostream& err) {
  const SlabSpec slab = make_slab(cfg);
  const double w = omega_c(cfg);
  const SqueezeParams sq{cfg.rho, cfg.theta, {cfg.alpha, 0.0}};
  Table table{{"channel", "kind", "l", "varX"}, {}};
  for (Channel ch : {Channel::transmitted, Channel::reflected}) {
    const auto result = find_extrema(slab, w, sweep.from, sweep.to, ch);
    if (result.range_too_short) {
      err << "warning: l range shorter than one oscillation period\n";
    }
    for (const auto& e : result.extrema) {
      const double v = channel_variances(with_half_thickness(slab, e.l), w, sq, ch).var_x;
      const char* kind = e.kind == numerics::ExtremumKind::minimum ? "min" : "max";
      table.rows.push_back({std::string(to_string(ch)), std::string(kind), e.l, v});
    }
  }
  const double lm = l_max(slab, w);
  if (std::isfinite(lm)) {
    const double v = transmitted_variances(with_half_thickness(slab, lm), w, sq).var_x;
    table.rows.push_back({std::string("T"), std::string("l_max"), lm, v});
  }
  return table;
}

// Narrow-band spectra are parabolic in the squeeze exponent, so the incident
// columns use the matching parabolic profile. Squeeze exponents are clamped at 0
// outside the positive part of each parabola, and the spectra follow the clamped values.
Table run_spectrum(const RunConfig& cfg, const Sweep& sweep) {
  const SlabSpec slab = make_slab(cfg);
  const auto pulse = make_pulse(cfg, false);
  const double w0 = pulse.omega_c;
  const double norm = spectral_prefactor(w0, slab.sigma);
  const auto pt = output_pulse_params(slab, pulse, Channel::transmitted);
  const auto pr = output_pulse_params(slab, pulse, Channel::reflected);
  const auto ws = sweep_values(sweep);
  Table table{{"omega_rel", "S_I", "S_T", "S_R", "rho_I", "rho_T", "rho_R"}, {}};
  table.rows = kernels::map_grid(
      std::span<const double>(ws),
      [&](double w) {
        const double pre = spectral_prefactor(w, slab.sigma) / norm;
        auto rho = [&](const PulseParams& p) {
          return p.valid ? std::max(0.0, squeezing_spectrum(p, pulse, w)) : nan;
        };
        const double rho_i = std::max(0.0, incident_squeeze(pulse, w, SqueezeProfile::parabolic));
        const double rho_t = rho(pt);
        const double rho_r = rho(pr);
        return std::vector<Cell>{(w - w0) / w0,
                                 pre * std::exp(-2.0 * rho_i),
                                 pre * std::exp(-2.0 * rho_t),
                                 pre * std::exp(-2.0 * rho_r),
                                 rho_i,
                                 rho_t,
                                 rho_r};
      },
      Exec::parallel);
  return table;
}

Table run_pulseparams(const RunConfig& cfg, const Sweep& sweep) {
  const auto etas = sweep_values(sweep);
  const SlabSpec base = make_slab(cfg);
  const auto pulse = make_pulse(cfg, false);
  Table table{{"eta_c", "dw_T_rel", "dw_R_rel", "Lratio_T", "Lratio_R", "rhoeff_T_rel",
               "rhoeff_R_rel", "valid_T", "valid_R"},
              {}};
  table.rows = kernels::map_grid(
      std::span<const double>(etas),
      [&](double eta) {
        SlabSpec slab = base;
        slab.model = DielectricModel::constant(eta, cfg.kappa);
        const auto t = output_pulse_params(slab, pulse, Channel::transmitted);
        const auto r = output_pulse_params(slab, pulse, Channel::reflected);
        auto ratio = [&](const PulseParams& p) { return std::sqrt(p.length_sq) / pulse.length; };
        return std::vector<Cell>{eta,
                                 t.delta_omega / pulse.omega_c,
                                 r.delta_omega / pulse.omega_c,
                                 ratio(t),
                                 ratio(r),
                                 t.rho_eff / pulse.rho_peak,
                                 r.rho_eff / pulse.rho_peak,
                                 t.valid,
                                 r.valid};
      },
      Exec::parallel);
  return table;
}

Table run_poynting(const RunConfig& cfg, const Sweep& sweep) {
  if (!(cfg.alpha > 0.0)) throw ConfigError("poynting needs --alpha > 0");
  const SlabSpec slab = make_slab(cfg);
  const auto pulse = make_pulse(cfg, true);
  const double s0 = peak_incident_intensity(pulse, slab.sigma);
  const CoherentField field_t(slab, pulse, Channel::transmitted);
  const CoherentField field_r(slab, pulse, Channel::reflected);
  const double sq_t = squeezed_flux(slab, pulse, Channel::transmitted) / s0;
  const double sq_r = squeezed_flux(slab, pulse, Channel::reflected) / s0;
  const double th_t = thermal_flux(slab, pulse, Channel::transmitted) / s0;
  const double th_r = thermal_flux(slab, pulse, Channel::reflected) / s0;

  const auto ts = sweep_values(sweep);
  std::vector<double> taus(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) taus[i] = ts[i] - cfg.x / c;
  const auto coh_t = field_t.intensity_trace(taus, Exec::parallel);
  const auto coh_r = field_r.intensity_trace(taus, Exec::parallel);

  Table table{{"t", "coherent_T", "squeezed_T", "thermal_T", "total_T", "coherent_R",
               "squeezed_R", "thermal_R", "total_R"},
              {}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double ct = coh_t[i] / s0;
    const double cr = coh_r[i] / s0;
    table.rows.push_back(
        {ts[i], ct, sq_t, th_t, ct + sq_t + th_t, cr, sq_r, th_r, cr + sq_r + th_r});
  }
  return table;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* to_string(Command command) {
  for (const auto& info : kCommands) {
    if (info.command == command) return info.name;
  }
  return "?";
}

const char* to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::l:
      return "l";
    case SweepVariable::eta:
      return "eta";
    case SweepVariable::kappa:
      return "kappa";
    case SweepVariable::omega:
      return "omega";
    case SweepVariable::t:
      return "t";
  }
  return "?";
}

Sweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw ConfigError("sweep must be var:from:to:points, got '" + text + "'");
  Sweep s{variable_from(parts[0]), parse_number(parts[1], "sweep start"),
          parse_number(parts[2], "sweep end"), 0};
  const double points = parse_number(parts[3], "sweep point count");
  if (points != std::floor(points) || points < 2.0) {
    throw ConfigError("sweep needs an integer point count >= 2");
  }
  s.points = static_cast<std::size_t>(points);
  if (!(s.from < s.to)) throw ConfigError("empty sweep range: from must be below to");
  return s;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Squeezed light through a dispersive absorbing slab", "squeezeslab"};
  std::string command;
  std::string sweep;
  std::string format = "csv";
  RunConfig cli;

  app.add_option("command", command,
                 "coefficients | variances | extrema | spectrum | pulseparams | poynting")
      ->required();
  app.add_option("--preset", cli.preset, "fig2 .. fig7");
  auto* eta = app.add_option("--eta", cli.eta, "real refractive index at the carrier");
  auto* kappa = app.add_option("--kappa", cli.kappa, "extinction coefficient");
  auto* wl = app.add_option("--wavelength", cli.wavelength, "vacuum wavelength, m");
  auto* lh = app.add_option("--half-thickness", cli.half_thickness, "slab half-thickness l, m");
  auto* rho = app.add_option("--rho", cli.rho, "squeeze parameter (peak value for pulses)");
  auto* temp = app.add_option("--temp", cli.temperature, "slab temperature, K");
  auto* sigma = app.add_option("--sigma", cli.sigma, "quantization area, m^2");
  auto* len = app.add_option("--pulse-length", cli.pulse_length, "rms pulse length L_I, m");
  auto* alpha = app.add_option("--alpha", cli.alpha, "coherent amplitude (real)");
  auto* theta = app.add_option("--theta", cli.theta, "squeeze angle, rad");
  auto* phi = app.add_option("--phi", cli.phi, "coherent phase, rad");
  auto* x = app.add_option("--x", cli.x, "observation point for poynting, m");
  app.add_option("--sweep", sweep, "var:from:to:points with var in l|eta|kappa|omega|t");
  app.add_option("--out", cli.out, "output file (stdout if omitted)");
  app.add_option("--format", format, "csv | json");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  }

  RunConfig cfg;
  cfg.command = command_from(command);
  cfg.out = cli.out;
  if (format == "csv") {
    cfg.format = Format::csv;
  } else if (format == "json") {
    cfg.format = Format::json;
  } else {
    throw ConfigError("unknown format '" + format + "' (expected csv|json)");
  }

  std::optional<Sweep> preset_sweep;
  Command preset_command = cfg.command;
  if (!cli.preset.empty()) {
    cfg.preset = cli.preset;
    apply_preset(cfg, preset_sweep, preset_command);
  }
  auto take = [](CLI::Option* opt, double& dst, double src) {
    if (opt->count() > 0) dst = src;
  };
  take(eta, cfg.eta, cli.eta);
  take(kappa, cfg.kappa, cli.kappa);
  take(wl, cfg.wavelength, cli.wavelength);
  take(lh, cfg.half_thickness, cli.half_thickness);
  take(rho, cfg.rho, cli.rho);
  take(temp, cfg.temperature, cli.temperature);
  take(sigma, cfg.sigma, cli.sigma);
  take(len, cfg.pulse_length, cli.pulse_length);
  take(alpha, cfg.alpha, cli.alpha);
  take(theta, cfg.theta, cli.theta);
  take(phi, cfg.phi, cli.phi);
  take(x, cfg.x, cli.x);

  if (!sweep.empty()) {
    cfg.sweep = parse_sweep(sweep);
  } else if (preset_sweep && preset_command == cfg.command) {
    cfg.sweep = preset_sweep;
  }
  if (cfg.sweep && !allowed(cfg.command, cfg.sweep->variable)) {
    throw ConfigError(std::string("sweep variable '") + to_string(cfg.sweep->variable) +
                      "' not supported by command '" + to_string(cfg.command) + "'");
  }
  if (!(cfg.wavelength > 0.0)) throw ConfigError("wavelength must be positive");
  return cfg;
}

Sweep effective_sweep(const RunConfig& cfg) {
  if (cfg.sweep) return *cfg.sweep;
  switch (cfg.command) {
    case Command::coefficients:
    case Command::variances:
      return {SweepVariable::l, 1e-9, 1e-5, 1000};
    case Command::extrema:
      return {SweepVariable::l, 1e-9, 2e-5, 2};
    case Command::pulseparams:
      return {SweepVariable::eta, 1.05, 3.0, 200};
    case Command::spectrum: {
      const double w0 = omega_c(cfg);
      const double half = 8.0 * c / cfg.pulse_length;
      return {SweepVariable::omega, w0 - half, w0 + half, 4097};
    }
    case Command::poynting: {
      const double span = 10.0 * cfg.pulse_length / c;
      const double l = cfg.half_thickness;
      return {SweepVariable::t, cfg.x / c - span - 2.0 * l / c,
              cfg.x / c + span + 4.0 * l * cfg.eta / c, 2001};
    }
  }
  throw ConfigError("unknown command");
}

Table execute(const RunConfig& cfg) {
  std::ostringstream warnings;
  const Sweep sweep = effective_sweep(cfg);
  switch (cfg.command) {
    case Command::coefficients:
      return run_coefficients(cfg, sweep);
    case Command::variances:
      return run_variances(cfg, sweep);
    case Command::extrema:
      return run_extrema(cfg, sweep, warnings);
    case Command::spectrum:
      return run_spectrum(cfg, sweep);
    case Command::pulseparams:
      return run_pulseparams(cfg, sweep);
    case Command::poynting:
      return run_poynting(cfg, sweep);
  }
  throw ConfigError("unknown command");
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    out << (j ? "," : "") << table.columns[j];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<V, bool>) {
              out << (v ? '1' : '0');
            } else {
              out << v;
            }
          },
          row[j]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, const RunConfig& cfg, std::ostream& out) {
  const Sweep sweep = effective_sweep(cfg);
  nlohmann::ordered_json config = {
      {"command", to_string(cfg.command)},
      {"preset", cfg.preset},
      {"eta", cfg.eta},
      {"kappa", cfg.kappa},
      {"wavelength", cfg.wavelength},
      {"half_thickness", cfg.half_thickness},
      {"rho", cfg.rho},
      {"temp", cfg.temperature},
      {"sigma", cfg.sigma},
      {"pulse_length", cfg.pulse_length},
      {"alpha", cfg.alpha},
      {"theta", cfg.theta},
      {"phi", cfg.phi},
      {"x", cfg.x},
      {"sweep",
       {{"variable", to_string(sweep.variable)},
        {"from", sweep.from},
        {"to", sweep.to},
        {"points", sweep.points}}},
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::visit([&](const auto& v) { obj[table.columns[j]] = v; }, row[j]);
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc = {{"config", config}, {"rows", rows}};
  out << doc.dump(1) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_args(args);
    const Table table = cfg.command == Command::extrema
                            ? run_extrema(cfg, effective_sweep(cfg), err)
                            : execute(cfg);

    std::ostringstream buffer;
    if (cfg.format == Format::csv) {
      write_csv(table, buffer);
    } else {
      write_json(table, cfg, buffer);
    }
    if (cfg.out.empty() || cfg.out == "-") {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      file << buffer.str();
      if (!file) {
        err << "error: cannot write '" << cfg.out << "'\n";
        return 2;
      }
    }
    return 0;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace squeezeslab::cli
