#include "roe2d/output.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace roe2d {

namespace fs = std::filesystem;

std::string format_number(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

std::string format_time_tag(double t) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, t);
  return std::string(buf, r.ptr);
}

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return os;
}

void finish(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw std::runtime_error("write to '" + path.string() + "' failed");
}

double parse_number(std::string_view s, const std::string& where) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw std::runtime_error(where + ": bad number '" + std::string(s) + "'");
  return v;
}

std::string short_mode(WaveModel m) {
  if (m == WaveModel::blend_geometric) return "blend_geo";
  if (m == WaveModel::blend_arithmetic) return "blend_arith";
  return std::string(to_string(m));
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    std::size_t e = k;
    while (e < line.size() && line[e] != ' ' && line[e] != '\t') ++e;
    if (e > k) out.push_back(line.substr(k, e - k));
    k = e;
  }
  return out;
}

}  // namespace

SliceScatter slice_scatter(const Field2D& field, Quantity q, const GasModel& gas,
                           std::string case_name, double time) {
  SliceScatter s;
  s.quantity = std::string(to_string(q));
  s.case_name = std::move(case_name);
  s.time = time;
  for (int i = 0; i < field.nx(); ++i) s.x.push_back(field.xc(i));
  s.slices.assign(static_cast<std::size_t>(field.ny()), {});
  for (int j = 0; j < field.ny(); ++j) {
    auto& row = s.slices[static_cast<std::size_t>(j)];
    row.reserve(static_cast<std::size_t>(field.nx()));
    for (int i = 0; i < field.nx(); ++i) row.push_back(quantity_value(field.at(i, j), q, gas));
  }
  return s;
}

void write_slice_scatter(const SliceScatter& s, const fs::path& path) {
  auto os = open_out(path);
  os << "# quantity=" << s.quantity << " case=" << s.case_name
     << " time=" << format_number(s.time) << '\n';
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    os << format_number(s.x[i]);
    for (const auto& slice : s.slices) os << ' ' << format_number(slice.at(i));
    os << '\n';
  }
  finish(os, path);
}

SliceScatter read_slice_scatter(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  SliceScatter s;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
    throw std::runtime_error(path.string() + ": missing header");
  for (auto tok : split_ws(std::string_view(line).substr(2))) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "quantity")
      s.quantity = std::string(val);
    else if (key == "case")
      s.case_name = std::string(val);
    else if (key == "time")
      s.time = parse_number(val, path.string());
  }
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (s.slices.empty()) s.slices.resize(toks.size() - 1);
    if (toks.size() != s.slices.size() + 1) throw std::runtime_error(where + ": ragged row");
    s.x.push_back(parse_number(toks[0], where));
    for (std::size_t k = 1; k < toks.size(); ++k) s.slices[k - 1].push_back(parse_number(toks[k], where));
  }
  return s;
}

void write_field(const Field2D& field, const GasModel& gas, const fs::path& path,
                 std::string_view title) {
  auto os = open_out(path);
  const int nx = field.nx(), ny = field.ny();
  os << "# vtk DataFile Version 3.0\n" << title << '\n' << "ASCII\nDATASET STRUCTURED_POINTS\n";
  os << "DIMENSIONS " << nx + 1 << ' ' << ny + 1 << " 1\n";
  os << "ORIGIN " << format_number(field.x0()) << ' ' << format_number(field.y0()) << " 0\n";
  os << "SPACING " << format_number(field.dx()) << ' ' << format_number(field.dy()) << " 1\n";
  os << "CELL_DATA " << static_cast<long>(nx) * ny << '\n';

  auto scalars = [&](const char* name, auto value) {
    os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const ConservedState& q = field.at(i, j);
        os << format_number(value(q, cons_to_prim_unchecked(q, gas))) << '\n';
      }
  };
  scalars("density", [](const ConservedState& q, const PrimitiveState&) { return q.rho; });
  scalars("pressure", [](const ConservedState&, const PrimitiveState& w) { return w.p; });
  scalars("u", [](const ConservedState&, const PrimitiveState& w) { return w.u; });
  scalars("v", [](const ConservedState&, const PrimitiveState& w) { return w.v; });
  scalars("entropy", [&](const ConservedState&, const PrimitiveState& w) {
    return entropy_scalar(w, gas);
  });
  scalars("rho_v", [](const ConservedState& q, const PrimitiveState&) { return q.my; });
  finish(os, path);
}

std::string output_stem(const RunConfig& config, const TestCase& tc, double t) {
  return tc.name + "_" + short_mode(config.model.mode) + "_ord" + std::to_string(config.order) + "_t" + format_time_tag(t);
}

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());
}

}  // namespace

std::vector<fs::path> write_snapshot(const Field2D& field, const RunConfig& config,
                                     const TestCase& tc, double t) {
  ensure_dir(config.output.dir);
  const std::string stem = output_stem(config, tc, t);
  const fs::path dat = config.output.dir / (stem + ".dat");
  const fs::path vtk = config.output.dir / (stem + ".vtk");
  write_slice_scatter(slice_scatter(field, tc.default_quantity, config.gas, tc.name, t), dat);
  write_field(field, config.gas, vtk, stem);
  return {dat, vtk};
}

std::string manifest_text(const RunConfig& config, const TestCase& tc, const RunOutcome& outcome) {
  using nlohmann::ordered_json;
  const ViscosityModel& m = config.model;
  ordered_json j;
  j["case"] = tc.name;
  j["mode"] = short_mode(m.mode);
  j["order"] = config.order;
  j["phi"] = m.phi;
  j["delta_frac"] = m.delta_frac;
  j["indicator"] = m.indicator;
  j["beta_fixed"] = m.beta_fixed;
  j["indicator_scale"] = std::string(to_string(m.indicator_scale));
  j["gamma"] = config.gas.gamma;
  j["cfl"] = config.cfl;
  j["t_end"] = effective_t_end(config, tc);
  j["seed"] = config.seed;
  j["grid"] = {{"nx", tc.nx}, {"ny", tc.ny}, {"x", {tc.x0, tc.x1}}, {"y", {tc.y0, tc.y1}}};
  j["noise"] = tc.noise.amplitude;
  ordered_json sides = ordered_json::object();
  const char* names[] = {"left", "right", "bottom", "top"};
  for (int k = 0; k < 4; ++k) {
    const BoundaryCondition& bc = tc.bc.sides[static_cast<std::size_t>(k)];
    sides[names[k]] = bc.kind == BoundaryKind::custom ? bc.id : std::string(to_string(bc.kind));
  }
  j["boundaries"] = sides;
  j["output_times"] = config.output.times;
  j["kernels"] = config.serial_kernels ? "serial" : "openmp";

  ordered_json o;
  o["status"] = std::string(to_string(outcome.status));
  o["t_reached"] = outcome.t_reached;
  o["steps"] = outcome.steps;
  o["reconstruction_fallbacks"] = outcome.reconstruction_fallbacks;
  if (!outcome.completed()) {
    const CellLocation& loc = outcome.abort_location;
    o["diagnostic"] = outcome.diagnostic;
    o["where"] = {{"i", loc.i}, {"j", loc.j}, {"step", loc.step}, {"stage", loc.stage},
                  {"time", loc.time}};
  }
  ordered_json files = ordered_json::array();
  for (const auto& f : outcome.files) files.push_back(f.filename().string());
  o["files"] = files;
  if (config.output.record_timing) o["wall_seconds"] = outcome.wall_seconds;
  j["outcome"] = o;
  return j.dump(2) + "\n";
}

fs::path write_manifest(const RunConfig& config, const TestCase& tc, const RunOutcome& outcome) {
  ensure_dir(config.output.dir);
  const fs::path path = config.output.dir / (tc.name + "_" + short_mode(config.model.mode) + ".manifest");
  auto os = open_out(path);
  os << manifest_text(config, tc, outcome);
  finish(os, path);
  return path;
}

// --- configuration ----------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct LineError {
  int line;
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
  }
};

double to_double(std::string_view v, const LineError& at) {
  double x = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) at.fail("bad number '" + std::string(v) + "'");
  return x;
}

template <class Int>
Int to_int(std::string_view v, const LineError& at) {
  Int x = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) at.fail("bad integer '" + std::string(v) + "'");
  return x;
}

bool to_bool(std::string_view v, const LineError& at) {
  if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
  if (v == "off" || v == "false" || v == "no" || v == "0") return false;
  at.fail("expected on/off, got '" + std::string(v) + "'");
}

void assign(ParsedConfig& pc, std::string_view key, std::string_view val, const LineError& at) {
  RunConfig& r = pc.run;
  try {
    if (key == "case")
      pc.case_name = std::string(val);
    else if (key == "mode")
      r.model.mode = parse_wave_model(val);
    else if (key == "order")
      r.order = to_int<int>(val, at);
    else if (key == "phi")
      r.model.phi = to_double(val, at);
    else if (key == "delta_frac")
      r.model.delta_frac = to_double(val, at);
    else if (key == "indicator")
      r.model.indicator = to_bool(val, at);
    else if (key == "beta_fixed")
      r.model.beta_fixed = to_double(val, at);
    else if (key == "indicator_scale")
      r.model.indicator_scale = parse_indicator_scale(val);
    else if (key == "gamma")
      r.gas.gamma = to_double(val, at);
    else if (key == "cfl")
      r.cfl = to_double(val, at);
    else if (key == "t_end")
      r.t_end = to_double(val, at);
    else if (key == "seed")
      r.seed = to_int<std::uint64_t>(val, at);
    else if (key == "nx")
      pc.overrides.nx = to_int<int>(val, at);
    else if (key == "ny")
      pc.overrides.ny = to_int<int>(val, at);
    else if (key == "noise")
      pc.overrides.noise = to_double(val, at);
    else if (key == "outdir")
      r.output.dir = std::string(val);
    else if (key == "output_times") {
      r.output.times.clear();
      std::size_t k = 0;
      while (k <= val.size()) {
        auto e = val.find(',', k);
        if (e == std::string_view::npos) e = val.size();
        const auto item = trim(val.substr(k, e - k));
        if (!item.empty()) r.output.times.push_back(to_double(item, at));
        k = e + 1;
      }
    } else if (key == "write_files")
      r.output.write_files = to_bool(val, at);
    else if (key == "record_timing")
      r.output.record_timing = to_bool(val, at);
    else if (key == "max_steps")
      r.max_steps = to_int<long>(val, at);
    else if (key == "serial_kernels")
      r.serial_kernels = to_bool(val, at);
    else
      at.fail("unknown key '" + std::string(key) + "'");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.rfind("config line", 0) == 0) throw;
    at.fail(msg);
  }
}

}  // namespace

ParsedConfig parse_config(std::string_view text, ParsedConfig pc) {
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const LineError at{lineno};

    // Split on commas; a piece without '=' continues the previous value (lists).
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t k = 0;
    while (k <= line.size()) {
      auto e = line.find(',', k);
      if (e == std::string_view::npos) e = line.size();
      const std::string_view piece = line.substr(k, e - k);
      k = e + 1;
      const auto eq = piece.find('=');
      if (eq == std::string_view::npos) {
        if (pairs.empty()) at.fail("expected key = value");
        pairs.back().second += "," + std::string(trim(piece));
        continue;
      }
      const auto key = trim(piece.substr(0, eq));
      if (key.empty()) at.fail("missing key");
      pairs.emplace_back(std::string(key), std::string(trim(piece.substr(eq + 1))));
    }
    for (const auto& [key, val] : pairs) {
      if (val.empty()) at.fail("missing value for '" + key + "'");
      assign(pc, key, val, at);
    }
  }
  return pc;
}

ParsedConfig load_config(const fs::path& path, ParsedConfig defaults) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  try {
    return parse_config(ss.str(), std::move(defaults));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace roe2d
