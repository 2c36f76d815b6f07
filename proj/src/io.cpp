#include "qwalk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qwalk/kernels.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/metrics.hpp"
#include "qwalk/two_particle.hpp"
#include "qwalk/version.hpp"

namespace qwalk::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("config field '" + field + "': " + why);
}

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) fail_field(prefix + item.key(), "unknown field");
  }
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double as_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail_field(field, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail_field(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) fail_field(field, "out of range");
  return static_cast<int>(v);
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail_field(field, "expected a string");
  return j.get<std::string>();
}

std::pair<int, int> override_key(const json& entry, const std::string& field) {
  if (!entry.is_object()) fail_field(field, "expected an object");
  const json* layer = find(entry, "layer");
  const json* index = find(entry, "index");
  if (layer == nullptr || index == nullptr) {
    fail_field(field, "entries need 'layer' and 'index'");
  }
  return {as_int(*layer, field + ".layer"), as_int(*index, field + ".index")};
}

CouplerConfig parse_couplers(const json& j) {
  CouplerConfig out;
  if (!j.is_object()) fail_field("couplers", "expected an object");
  std::string kind = "ideal";
  if (const json* k = find(j, "kind")) kind = as_string(*k, "couplers.kind");

  if (kind == "ideal") {
    check_keys(j, "couplers.", {"kind", "cross_coupling", "phase", "overrides"});
    if (const json* v = find(j, "cross_coupling")) {
      out.default_coupler.cross_coupling = as_number(*v, "couplers.cross_coupling");
    }
    if (const json* v = find(j, "phase")) {
      out.default_coupler.phase = as_number(*v, "couplers.phase");
    }
    if (const json* v = find(j, "overrides")) {
      if (!v->is_array()) fail_field("couplers.overrides", "expected an array");
      for (const json& entry : *v) {
        const auto key = override_key(entry, "couplers.overrides");
        check_keys(entry, "couplers.overrides.", {"layer", "index", "cross_coupling", "phase"});
        CouplerSpec spec = out.default_coupler;
        if (const json* c = find(entry, "cross_coupling")) {
          spec.cross_coupling = as_number(*c, "couplers.overrides.cross_coupling");
        }
        if (const json* p = find(entry, "phase")) {
          spec.phase = as_number(*p, "couplers.overrides.phase");
        }
        if (!out.overrides.emplace(key, spec).second) {
          fail_field("couplers.overrides", "duplicate coupler (" + std::to_string(key.first) +
                                               ", " + std::to_string(key.second) + ")");
        }
      }
    }
    return out;
  }

  if (kind == "polarized") {
    out.polarized = true;
    check_keys(j, "couplers.",
               {"kind", "coupling_strength", "ratio_vh", "tilt_table", "tilt_angle",
                "birefringent_phase", "strength_overrides"});
    const json* strength = find(j, "coupling_strength");
    if (strength == nullptr) fail_field("couplers.coupling_strength", "required");
    out.coupling_strength = as_number(*strength, "couplers.coupling_strength");
    if (const json* v = find(j, "ratio_vh")) {
      out.ratio_vh = as_number(*v, "couplers.ratio_vh");
    }
    if (const json* v = find(j, "tilt_table")) {
      if (!v->is_array()) fail_field("couplers.tilt_table", "expected an array");
      std::vector<std::pair<double, double>> table;
      for (const json& row : *v) {
        if (!row.is_array() || row.size() != 2) {
          fail_field("couplers.tilt_table", "entries must be [angle, ratio] pairs");
        }
        table.emplace_back(as_number(row[0], "couplers.tilt_table"),
                           as_number(row[1], "couplers.tilt_table"));
      }
      out.tilt_table = std::move(table);
    }
    if (const json* v = find(j, "tilt_angle")) {
      out.tilt_angle = as_number(*v, "couplers.tilt_angle");
    }
    if (const json* v = find(j, "birefringent_phase")) {
      out.birefringent_phase = as_number(*v, "couplers.birefringent_phase");
    }
    if (const json* v = find(j, "strength_overrides")) {
      if (!v->is_array()) fail_field("couplers.strength_overrides", "expected an array");
      for (const json& entry : *v) {
        const auto key = override_key(entry, "couplers.strength_overrides");
        check_keys(entry, "couplers.strength_overrides.", {"layer", "index", "coupling_strength"});
        const json* s = find(entry, "coupling_strength");
        if (s == nullptr) {
          fail_field("couplers.strength_overrides", "entries need 'coupling_strength'");
        }
        const double value = as_number(*s, "couplers.strength_overrides.coupling_strength");
        if (!out.strength_overrides.emplace(key, value).second) {
          fail_field("couplers.strength_overrides", "duplicate coupler");
        }
      }
    }
    return out;
  }

  fail_field("couplers.kind", "expected 'ideal' or 'polarized'");
}

RunMode mode_from_name(const std::string& name) {
  if (name == "single") return RunMode::single;
  if (name == "pair") return RunMode::pair;
  if (name == "anyon-sweep") return RunMode::anyon_sweep;
  if (name == "independence-report") return RunMode::independence_report;
  fail_field("mode", "expected single, pair, anyon-sweep, or independence-report");
}

}  // namespace

const char* mode_name(RunMode m) {
  switch (m) {
    case RunMode::single: return "single";
    case RunMode::pair: return "pair";
    case RunMode::anyon_sweep: return "anyon-sweep";
    case RunMode::independence_report: return "independence-report";
  }
  return "single";
}

const char* format_name(OutputFormat f) {
  return f == OutputFormat::json ? "json" : "csv";
}

double CouplerConfig::resolved_ratio() const {
  if (tilt_table.has_value()) {
    return TiltCalibration(*tilt_table).ratio_at(tilt_angle.value());
  }
  return ratio_vh.value_or(1.0);
}

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");
  check_keys(j, "",
             {"steps", "mode", "rails", "phi", "phis", "couplers", "basis", "format", "output",
              "kernels"});

  RunConfig cfg;
  const json* steps = find(j, "steps");
  if (steps == nullptr) fail_field("steps", "required");
  cfg.steps = as_int(*steps, "steps");

  const json* mode = find(j, "mode");
  if (mode == nullptr) fail_field("mode", "required");
  cfg.mode = mode_from_name(as_string(*mode, "mode"));

  const json* rails = find(j, "rails");
  if (rails == nullptr) fail_field("rails", "required");
  if (!rails->is_array()) fail_field("rails", "expected an array of port numbers");
  for (const json& r : *rails) cfg.rails.push_back(as_int(r, "rails"));

  const json* phi = find(j, "phi");
  const json* phis = find(j, "phis");
  if (cfg.mode == RunMode::pair) {
    if (phis != nullptr) fail_field("phis", "pair mode takes a single 'phi'");
    if (phi == nullptr) fail_field("phi", "required for pair mode");
    cfg.phis.push_back(as_number(*phi, "phi"));
  } else if (cfg.mode == RunMode::anyon_sweep) {
    if (phi != nullptr) fail_field("phi", "anyon-sweep mode takes a 'phis' array");
    if (phis == nullptr) fail_field("phis", "required for anyon-sweep mode");
    if (!phis->is_array() || phis->empty()) fail_field("phis", "expected a non-empty array");
    for (const json& p : *phis) cfg.phis.push_back(as_number(p, "phis"));
  } else {
    if (phi != nullptr || phis != nullptr) {
      fail_field(phi != nullptr ? "phi" : "phis", "only valid for two-particle modes");
    }
  }

  if (const json* c = find(j, "couplers")) cfg.couplers = parse_couplers(*c);

  if (const json* b = find(j, "basis")) {
    try {
      cfg.basis = basis_from_name(as_string(*b, "basis"));
    } catch (const std::invalid_argument& e) {
      fail_field("basis", e.what());
    }
  }
  if (const json* f = find(j, "format")) {
    const std::string name = as_string(*f, "format");
    if (name == "json") {
      cfg.format = OutputFormat::json;
    } else if (name == "csv") {
      cfg.format = OutputFormat::csv;
    } else {
      fail_field("format", "expected 'json' or 'csv'");
    }
  }
  if (const json* o = find(j, "output")) cfg.output = as_string(*o, "output");
  if (const json* k = find(j, "kernels")) cfg.kernels = as_string(*k, "kernels");

  validate(cfg);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  return parse_run_config(read_text_file(path));
}

void validate(const RunConfig& cfg) {
  if (cfg.steps < 1) fail_field("steps", "must be a positive integer");

  if (cfg.kernels != "auto" && cfg.kernels != "scalar" && cfg.kernels != "avx2") {
    fail_field("kernels", "expected auto, scalar, or avx2");
  }

  const std::size_t want_rails =
      (cfg.mode == RunMode::pair || cfg.mode == RunMode::anyon_sweep) ? 2 : 1;
  if (cfg.rails.size() != want_rails) {
    fail_field("rails", "mode '" + std::string(mode_name(cfg.mode)) + "' needs exactly " +
                            std::to_string(want_rails) + " input rail(s)");
  }
  for (const int r : cfg.rails) {
    if (r < 1 || r > 2 * cfg.steps) {
      fail_field("rails", "rail " + std::to_string(r) + " outside 1.." +
                              std::to_string(2 * cfg.steps));
    }
  }
  if (want_rails == 2 && cfg.rails[0] == cfg.rails[1]) {
    fail_field("rails", "two-particle input rails must differ");
  }

  const std::string phi_field = cfg.mode == RunMode::pair ? "phi" : "phis";
  for (const double phi : cfg.phis) {
    try {
      ExchangePhase check(phi);
      (void)check;
    } catch (const std::invalid_argument& e) {
      fail_field(phi_field, e.what());
    }
  }

  if (cfg.mode == RunMode::independence_report && !cfg.couplers.polarized) {
    fail_field("couplers", "independence-report needs polarized couplers");
  }

  if (cfg.couplers.polarized) {
    if (cfg.couplers.tilt_table.has_value() && cfg.couplers.ratio_vh.has_value()) {
      fail_field("couplers.ratio_vh", "give either ratio_vh or a tilt table, not both");
    }
    if (cfg.couplers.tilt_table.has_value() != cfg.couplers.tilt_angle.has_value()) {
      fail_field("couplers.tilt_angle", "tilt_table and tilt_angle go together");
    }
    try {
      PolarizedCouplerModel model;
      model.coupling_strength = cfg.couplers.coupling_strength;
      model.ratio_vh = cfg.couplers.resolved_ratio();
      model.birefringent_phase = cfg.couplers.birefringent_phase;
      model.strength_overrides = cfg.couplers.strength_overrides;
      qwalk::validate(model);
      NetworkSpec base;
      base.steps = cfg.steps;
      (void)horizontal_spec(base, model);
    } catch (const std::invalid_argument& e) {
      fail_field("couplers", e.what());
    }
  } else {
    try {
      NetworkSpec spec;
      spec.steps = cfg.steps;
      spec.default_coupler = cfg.couplers.default_coupler;
      spec.overrides = cfg.couplers.overrides;
      qwalk::validate(spec);
    } catch (const std::invalid_argument& e) {
      fail_field("couplers", e.what());
    }
  }
}

namespace {

NetworkSpec base_network_spec(const RunConfig& cfg) {
  NetworkSpec spec;
  spec.steps = cfg.steps;
  if (!cfg.couplers.polarized) {
    spec.default_coupler = cfg.couplers.default_coupler;
    spec.overrides = cfg.couplers.overrides;
  }
  return spec;
}

PolarizedCouplerModel model_from(const CouplerConfig& couplers) {
  PolarizedCouplerModel model;
  model.coupling_strength = couplers.coupling_strength;
  model.ratio_vh = couplers.resolved_ratio();
  model.birefringent_phase = couplers.birefringent_phase;
  model.strength_overrides = couplers.strength_overrides;
  return model;
}

std::vector<int> port_labels(int steps) {
  std::vector<int> out(static_cast<std::size_t>(2 * steps));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i) + 1;
  return out;
}

}  // namespace

RunResult execute(const RunConfig& cfg) {
  validate(cfg);
  kernels::select_backend_by_name(cfg.kernels);

  RunResult res;
  res.mode = cfg.mode;
  const NetworkSpec base = base_network_spec(cfg);

  switch (cfg.mode) {
    case RunMode::single: {
      std::vector<double> ports;
      if (cfg.couplers.polarized) {
        // Unpolarized probe light: equal H/V mixture.
        const auto [u_h, u_v] = polarized_network(base, model_from(cfg.couplers));
        const auto p_h = single_particle_distribution(u_h, cfg.rails[0]);
        const auto p_v = single_particle_distribution(u_v, cfg.rails[0]);
        ports.resize(p_h.size());
        for (std::size_t i = 0; i < ports.size(); ++i) ports[i] = 0.5 * (p_h[i] + p_v[i]);
      } else {
        ports = single_particle_distribution(build_network_unitary(base), cfg.rails[0]);
      }
      if (cfg.basis == Basis::positions) {
        res.single_probs = regroup_single(ports, cfg.steps);
        res.single_labels = lattice_positions(cfg.steps);
      } else {
        res.single_probs = std::move(ports);
        res.single_labels = port_labels(cfg.steps);
      }
      break;
    }
    case RunMode::pair:
    case RunMode::anyon_sweep: {
      std::vector<ExchangePhase> phases;
      phases.reserve(cfg.phis.size());
      for (const double phi : cfg.phis) phases.emplace_back(phi);

      std::vector<PairDistribution> dists;
      if (cfg.couplers.polarized) {
        const auto [u_h, u_v] = polarized_network(base, model_from(cfg.couplers));
        for (const ExchangePhase& phase : phases) {
          dists.push_back(
              pair_distribution(pair_amplitudes(u_h, u_v, cfg.rails[0], cfg.rails[1], phase)));
        }
      } else {
        const ModeUnitary u = build_network_unitary(base);
        dists = anyon_sweep(u, cfg.rails[0], cfg.rails[1], phases);
      }
      if (cfg.basis == Basis::positions) {
        for (auto& d : dists) d = regroup_pair(d, cfg.steps);
      }
      if (cfg.mode == RunMode::pair) {
        res.pair = std::move(dists[0]);
      } else {
        for (std::size_t i = 0; i < dists.size(); ++i) {
          res.sweep.push_back(
              {phases[i].value(), phases[i].statistics_label(), std::move(dists[i])});
        }
      }
      break;
    }
    case RunMode::independence_report: {
      res.report = polarization_independence_report(base, model_from(cfg.couplers),
                                                    cfg.rails[0], cfg.basis);
      break;
    }
  }
  return res;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string couplers_params(const CouplerConfig& c) {
  std::string out;
  if (!c.polarized) {
    out = "{\"kind\":\"ideal\",\"cross_coupling\":" + format_double(c.default_coupler.cross_coupling) +
          ",\"phase\":" + format_double(c.default_coupler.phase);
    if (!c.overrides.empty()) {
      out += ",\"overrides\":[";
      bool first = true;
      for (const auto& [key, spec] : c.overrides) {
        if (!first) out += ",";
        first = false;
        out += "{\"layer\":" + std::to_string(key.first) +
               ",\"index\":" + std::to_string(key.second) +
               ",\"cross_coupling\":" + format_double(spec.cross_coupling) +
               ",\"phase\":" + format_double(spec.phase) + "}";
      }
      out += "]";
    }
    return out + "}";
  }

  out = "{\"kind\":\"polarized\",\"coupling_strength\":" + format_double(c.coupling_strength);
  if (c.tilt_table.has_value()) {
    out += ",\"tilt_table\":[";
    bool first = true;
    for (const auto& [angle, ratio] : *c.tilt_table) {
      if (!first) out += ",";
      first = false;
      out += "[" + format_double(angle) + "," + format_double(ratio) + "]";
    }
    out += "],\"tilt_angle\":" + format_double(c.tilt_angle.value());
  } else {
    out += ",\"ratio_vh\":" + format_double(c.resolved_ratio());
  }
  out += ",\"birefringent_phase\":" + format_double(c.birefringent_phase);
  if (!c.strength_overrides.empty()) {
    out += ",\"strength_overrides\":[";
    bool first = true;
    for (const auto& [key, strength] : c.strength_overrides) {
      if (!first) out += ",";
      first = false;
      out += "{\"layer\":" + std::to_string(key.first) +
             ",\"index\":" + std::to_string(key.second) +
             ",\"coupling_strength\":" + format_double(strength) + "}";
    }
    out += "]";
  }
  return out + "}";
}

}  // namespace

std::string canonical_params(const RunConfig& cfg) {
  std::string out = "{\"version\":\"";
  out += kVersion;
  out += "\",\"steps\":" + std::to_string(cfg.steps);
  out += ",\"mode\":\"" + std::string(mode_name(cfg.mode)) + "\"";
  out += ",\"rails\":[";
  for (std::size_t i = 0; i < cfg.rails.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(cfg.rails[i]);
  }
  out += "]";
  if (cfg.mode == RunMode::pair) {
    out += ",\"phi\":" + format_double(cfg.phis[0]);
  } else if (cfg.mode == RunMode::anyon_sweep) {
    out += ",\"phis\":[";
    for (std::size_t i = 0; i < cfg.phis.size(); ++i) {
      if (i > 0) out += ",";
      out += format_double(cfg.phis[i]);
    }
    out += "]";
  }
  out += ",\"couplers\":" + couplers_params(cfg.couplers);
  out += ",\"basis\":\"" + std::string(basis_name(cfg.basis)) + "\"";
  out += ",\"format\":\"" + std::string(format_name(cfg.format)) + "\"";
  out += ",\"kernels\":\"" + json_escape(cfg.kernels) + "\"";
  if (!cfg.output.empty()) {
    out += ",\"output\":\"" + json_escape(cfg.output) + "\"";
  }
  return out + "}";
}

namespace {

std::string entry_rows_json(const std::vector<int>& labels, const std::vector<double>& probs,
                            const std::string& indent) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < probs.size(); ++i) {
    out += indent + "  [" + std::to_string(labels[i]) + ", " + format_double(probs[i]) + "]";
    out += (i + 1 < probs.size()) ? ",\n" : "\n";
  }
  return out + indent + "]";
}

std::string entry_rows_json(const PairDistribution& dist, const std::string& indent) {
  const auto& labels = dist.labels();
  const std::size_t n = labels.size();
  std::string out = "[\n";
  std::size_t row = 0;
  const std::size_t count = dist.pair_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++row) {
      out += indent + "  [" + std::to_string(labels[i]) + ", " + std::to_string(labels[j]) +
             ", " + format_double(dist.at(i, j)) + "]";
      out += (row + 1 < count) ? ",\n" : "\n";
    }
  }
  return out + indent + "]";
}

double sum_of(const std::vector<double>& probs) {
  double t = 0.0;
  for (const double p : probs) t += p;
  return t;
}

std::string render_json(const RunConfig& cfg, const RunResult& result) {
  std::string out = "{\n";
  out += "  \"params\": " + canonical_params(cfg) + ",\n";
  out += "  \"basis\": \"" + std::string(basis_name(cfg.basis)) + "\",\n";
  switch (result.mode) {
    case RunMode::single:
      out += "  \"entries\": " + entry_rows_json(result.single_labels, result.single_probs, "  ") +
             ",\n";
      out += "  \"total\": " + format_double(sum_of(result.single_probs)) + "\n";
      break;
    case RunMode::pair:
      out += "  \"entries\": " + entry_rows_json(*result.pair, "  ") + ",\n";
      out += "  \"total\": " + format_double(result.pair->total()) + "\n";
      break;
    case RunMode::anyon_sweep: {
      out += "  \"sweep\": [\n";
      for (std::size_t b = 0; b < result.sweep.size(); ++b) {
        const SweepBlock& block = result.sweep[b];
        out += "    {\n";
        out += "      \"phi\": " + format_double(block.phi) + ",\n";
        out += "      \"statistics\": \"" + block.statistics + "\",\n";
        out += "      \"entries\": " + entry_rows_json(block.dist, "      ") + ",\n";
        out += "      \"total\": " + format_double(block.dist.total()) + "\n";
        out += (b + 1 < result.sweep.size()) ? "    },\n" : "    }\n";
      }
      out += "  ]\n";
      break;
    }
    case RunMode::independence_report: {
      const IndependenceReport& r = *result.report;
      out += "  \"scores\": {\n";
      out += "    \"horizontal\": " + format_double(r.horizontal) + ",\n";
      out += "    \"vertical\": " + format_double(r.vertical) + ",\n";
      out += "    \"diagonal\": " + format_double(r.diagonal) + ",\n";
      out += "    \"antidiagonal\": " + format_double(r.antidiagonal) + "\n";
      out += "  }\n";
      break;
    }
  }
  return out + "}\n";
}

std::string csv_label_column(Basis b) {
  return b == Basis::ports ? "port" : "position";
}

std::string csv_rows(const PairDistribution& dist) {
  const auto& labels = dist.labels();
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i; j < labels.size(); ++j) {
      out += std::to_string(labels[i]) + "," + std::to_string(labels[j]) + "," +
             format_double(dist.at(i, j)) + "\n";
    }
  }
  return out;
}

std::string render_csv(const RunConfig& cfg, const RunResult& result) {
  std::string out = "# qwalk ";
  out += kVersion;
  out += "\n# params: " + canonical_params(cfg) + "\n";
  out += "# basis: " + std::string(basis_name(cfg.basis)) + "\n";
  const std::string label = csv_label_column(cfg.basis);
  switch (result.mode) {
    case RunMode::single: {
      out += "# entries: " + std::to_string(result.single_probs.size()) + "\n";
      out += "# total: " + format_double(sum_of(result.single_probs)) + "\n";
      out += label + ",probability\n";
      for (std::size_t i = 0; i < result.single_probs.size(); ++i) {
        out += std::to_string(result.single_labels[i]) + "," +
               format_double(result.single_probs[i]) + "\n";
      }
      break;
    }
    case RunMode::pair:
      out += "# entries: " + std::to_string(result.pair->pair_count()) + "\n";
      out += "# total: " + format_double(result.pair->total()) + "\n";
      out += label + "1," + label + "2,probability\n";
      out += csv_rows(*result.pair);
      break;
    case RunMode::anyon_sweep: {
      out += "# blocks: " + std::to_string(result.sweep.size()) + "\n";
      for (const SweepBlock& block : result.sweep) {
        out += "# phi: " + format_double(block.phi) + "\n";
        out += "# statistics: " + block.statistics + "\n";
        out += "# entries: " + std::to_string(block.dist.pair_count()) + "\n";
        out += "# total: " + format_double(block.dist.total()) + "\n";
        out += label + "1," + label + "2,probability\n";
        out += csv_rows(block.dist);
      }
      break;
    }
    case RunMode::independence_report: {
      const IndependenceReport& r = *result.report;
      out += "input,similarity\n";
      out += "H," + format_double(r.horizontal) + "\n";
      out += "V," + format_double(r.vertical) + "\n";
      out += "D," + format_double(r.diagonal) + "\n";
      out += "A," + format_double(r.antidiagonal) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace

std::string render(const RunConfig& cfg, const RunResult& result) {
  return cfg.format == OutputFormat::json ? render_json(cfg, result) : render_csv(cfg, result);
}

namespace {

[[noreturn]] void fail_file(const std::string& path, const std::string& why) {
  throw std::runtime_error(path + ": " + why);
}

int parse_int_token(const std::string& token, const std::string& path, std::size_t line_no) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    fail_file(path, "line " + std::to_string(line_no) + ": expected an integer, got '" + token +
                        "'");
  }
  return value;
}

double parse_double_token(const std::string& token, const std::string& path,
                          std::size_t line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    fail_file(path, "line " + std::to_string(line_no) + ": expected a number, got '" + token +
                        "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

ParsedDistribution read_distribution_json(const std::string& path, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_file(path, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_file(path, "expected a JSON object");
  if (j.contains("sweep")) fail_file(path, "contains an anyon sweep, not a single distribution");
  if (j.contains("scores")) fail_file(path, "contains an independence report, not a distribution");
  for (const char* key : {"params", "basis", "entries", "total"}) {
    if (!j.contains(key)) fail_file(path, std::string("missing '") + key + "'");
  }
  for (const auto& item : j.items()) {
    if (item.key() != "params" && item.key() != "basis" && item.key() != "entries" &&
        item.key() != "total") {
      fail_file(path, "unexpected key '" + item.key() + "'");
    }
  }
  ParsedDistribution out;
  if (!j["basis"].is_string()) fail_file(path, "'basis' must be a string");
  out.basis = j["basis"].get<std::string>();
  if (!j["total"].is_number()) fail_file(path, "'total' must be a number");
  out.total = j["total"].get<double>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.empty()) fail_file(path, "'entries' must be a non-empty array");
  for (const json& row : entries) {
    if (!row.is_array() || (row.size() != 2 && row.size() != 3)) {
      fail_file(path, "entries must be [index..., probability] rows");
    }
    const std::size_t arity = row.size() - 1;
    if (out.arity == 0) out.arity = arity;
    if (arity != out.arity) fail_file(path, "entry rows have inconsistent arity");
    std::array<int, 2> idx{0, 0};
    for (std::size_t k = 0; k < arity; ++k) {
      if (!row[k].is_number_integer()) fail_file(path, "entry indices must be integers");
      idx[k] = row[k].get<int>();
    }
    if (!row[arity].is_number()) fail_file(path, "entry probability must be a number");
    out.indices.push_back(idx);
    out.probs.push_back(row[arity].get<double>());
  }
  return out;
}

ParsedDistribution read_distribution_csv(const std::string& path, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  ParsedDistribution out;
  std::optional<std::size_t> expected_rows;
  bool saw_total = false;
  bool header_done = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header_done) fail_file(path, "line " + std::to_string(line_no) +
                                           ": unexpected header after data rows");
      if (line.rfind("# blocks:", 0) == 0) {
        fail_file(path, "contains an anyon sweep, not a single distribution");
      }
      if (line.rfind("# basis: ", 0) == 0) out.basis = line.substr(9);
      if (line.rfind("# entries: ", 0) == 0) {
        expected_rows = static_cast<std::size_t>(parse_int_token(line.substr(11), path, line_no));
      }
      if (line.rfind("# total: ", 0) == 0) {
        out.total = parse_double_token(line.substr(9), path, line_no);
        saw_total = true;
      }
      continue;
    }
    if (!header_done) {
      header_done = true;
      if (line == "input,similarity") {
        fail_file(path, "contains an independence report, not a distribution");
      }
      const auto cols = split(line, ',');
      if (cols.size() != 2 && cols.size() != 3) {
        fail_file(path, "line " + std::to_string(line_no) + ": unrecognized column header");
      }
      out.arity = cols.size() - 1;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != out.arity + 1) {
      fail_file(path, "line " + std::to_string(line_no) + ": expected " +
                          std::to_string(out.arity + 1) + " fields");
    }
    std::array<int, 2> idx{0, 0};
    for (std::size_t k = 0; k < out.arity; ++k) {
      idx[k] = parse_int_token(fields[k], path, line_no);
    }
    out.indices.push_back(idx);
    out.probs.push_back(parse_double_token(fields[out.arity], path, line_no));
  }

  if (!header_done) fail_file(path, "no column header found");
  if (out.basis.empty()) fail_file(path, "missing '# basis' header");
  if (!saw_total) fail_file(path, "missing '# total' header");
  if (!expected_rows.has_value()) fail_file(path, "missing '# entries' header");
  if (out.probs.size() != *expected_rows) {
    fail_file(path, "expected " + std::to_string(*expected_rows) + " rows, found " +
                        std::to_string(out.probs.size()) + " (truncated file?)");
  }
  if (out.probs.empty()) fail_file(path, "no data rows");
  return out;
}

}  // namespace

ParsedDistribution read_distribution_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail_file(path, "file is empty");
  if (text[first] == '{') return read_distribution_json(path, text);
  return read_distribution_csv(path, text);
}

CompareResult compare_files(const std::string& path_a, const std::string& path_b,
                            double threshold) {
  const ParsedDistribution a = read_distribution_file(path_a);
  const ParsedDistribution b = read_distribution_file(path_b);
  if (a.basis != b.basis) {
    throw std::runtime_error("distributions are not comparable: basis '" + a.basis + "' vs '" +
                             b.basis + "'");
  }
  if (a.arity != b.arity) {
    throw std::runtime_error("distributions are not comparable: arity mismatch");
  }
  if (a.indices != b.indices) {
    throw std::runtime_error("distributions are not comparable: index sets differ");
  }
  CompareResult out;
  out.similarity = similarity(std::span<const double>(a.probs), std::span<const double>(b.probs));
  out.max_abs_difference =
      max_abs_difference(std::span<const double>(a.probs), std::span<const double>(b.probs));
  out.pass = out.similarity >= threshold;
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_file(path, "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail_file(path, "write failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_file(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) fail_file(path, "read failed");
  return buf.str();
}

}  // namespace qwalk::io
