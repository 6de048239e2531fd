#include "fracframes/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fracframes/error.hpp"
#include "fracframes/timestep.hpp"

namespace fracframes::cli {

namespace {

const std::map<std::string, std::string>& builtins() {
  static const std::map<std::string, std::string> table = {
      {"gaussian", R"(# (I + (-Delta)^s) u = f with u = exp(-x^2), s = 1/3
name: gaussian
problem: gaussian
dim: 1
s: 1/3
operator: [[1, 0], [1, s]]
families: [{kind: extended, a: -s, s: -s}, {kind: weighted, a: s}]
intervals: [[-5, -3], [-3, -1], [-1, 1], [1, 3], [3, 5]]
pads: [[-10, -5], [5, 10]]
pts_per_segment: 5001
eps_offset: 1e-2
n_schedule: [10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120, 130, 140, 150, 160, 170, 180, 190, 200, 210, 220, 230, 240, 250]
)"},
      {"mult-exponents", R"(# (I + (-Delta)^{1/3} + (-Delta)^{1/5}) u = f with u = exp(-x^2)
name: mult-exponents
problem: gaussian
dim: 1
s: 1/4
operator: [[1, 0], [1, 1/3], [1, 1/5]]
families: [{kind: extended, a: -s, s: -s}, {kind: weighted, a: s}]
intervals: [[-5, -3], [-3, -1], [-1, 1], [1, 3], [3, 5]]
pads: [[-10, -5], [5, 10]]
pts_per_segment: 5001
eps_offset: 1e-2
n_schedule: [10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120, 130, 140, 150, 160, 170, 180, 190, 200, 210, 220, 230, 240, 250]
)"},
      {"gaussian2d", R"(# (-Delta)^{1/2} u = f with u = exp(-x^2 - y^2) on nested disks
name: gaussian2d
problem: gaussian
dim: 2
s: 1/2
operator: [[1, s]]
families: [{kind: extended, a: -s, s: -s}, {kind: weighted, a: s}]
disks: [1, 1.5, 2, 3, 4]
radial_breaks: [0, 1, 1.5, 2, 3, 4, 10]
n_angles: 30
pts_per_segment: 1001
eps_offset: 1e-3
n_schedule: [10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120, 130, 140, 150]
)"},
      {"frac-heat", R"(# u_t + (-Delta)^{1/2} u = 0, u(x, 0) = 1 / (1 + x^2)
name: frac-heat
problem: heat
dim: 1
s: 1/2
operator: [[1, s]]
families: [{kind: extended, a: -s, s: -s, offset: 1}, {kind: weighted, a: s}]
intervals: [[-5, -3], [-3, -1], [-1, 1], [1, 3], [3, 5]]
pads: [[-20, -5], [5, 20]]
pts_per_segment: 5001
eps_offset: 1e-4
n_schedule: [250]
methods: [backward-euler, implicit-midpoint, gauss-legendre-4, gauss-legendre-6]
dts: [1e-1, 1e-2, 1e-3, 1e-4]
t_end: 1
tail_method: gauss-legendre-6
tail_dt: 1e-2
tail_x_max: 1000
tail_samples: 2001
)"},
      {"variable-s", R"(# u_t + (-Delta)^{s(t)} u = 0 with s(t) = 1/2 - t/3, u(x, 0) = 1 / (1 + x^2)
name: variable-s
problem: variable-s
dim: 1
s: 1/2
operator: [[1, s]]
families: [{kind: extended, a: -s, s: -s, offset: 1}, {kind: weighted, a: s}]
intervals: [[-5, -3], [-3, -1], [-1, 1], [1, 3], [3, 5]]
pads: [[-20, -5], [5, 20]]
pts_per_segment: 5001
eps_offset: 1e-4
n_schedule: [250]
methods: [implicit-midpoint]
dts: [1e-2]
t_end: 1
s_start: 1/2
s_rate: -1/3
compare_s: [1/2, 1/3, 1/6]
slope_window: [5, 20]
tail_x_max: 1000
tail_samples: 201
)"},
  };
  return table;
}

std::string trim(std::string_view v) {
  const auto b = v.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = v.find_last_not_of(" \t");
  return std::string(v.substr(b, e - b + 1));
}

std::optional<double> parse_real(std::string_view v) {
  double out = 0.0;
  const auto slash = v.find('/');
  if (slash != std::string_view::npos) {
    const auto num = parse_real(v.substr(0, slash));
    const auto den = parse_real(v.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  if (v.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) return std::nullopt;
  return out;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::string scalar(const YAML::Node& n, const std::string& path) {
  if (!n.IsScalar()) fail(path, "expected a scalar");
  return n.Scalar();
}

Param param(const YAML::Node& n, const std::string& path) {
  try {
    return Param::parse(scalar(n, path));
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
}

double real(const YAML::Node& n, const std::string& path) {
  const Param p = param(n, path);
  if (p.symbolic()) fail(path, "expected a number, got '" + p.text + "'");
  return p.constant;
}

int integer(const YAML::Node& n, const std::string& path) {
  const double v = real(n, path);
  if (v != std::floor(v) || std::abs(v) > 1e9) fail(path, "expected an integer");
  return static_cast<int>(v);
}

bool boolean(const YAML::Node& n, const std::string& path) {
  const std::string v = scalar(n, path);
  if (v == "true" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "no" || v == "off") return false;
  fail(path, "expected true or false");
}

template <class F>
auto list(const YAML::Node& n, const std::string& path, F&& item) {
  if (!n.IsSequence()) fail(path, "expected a list");
  std::vector<decltype(item(n, path))> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(item(n[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

basis1d::Interval interval(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence() || n.size() != 2) fail(path, "expected [left, right]");
  const double a = real(n[0], path + "[0]");
  const double b = real(n[1], path + "[1]");
  if (!(a < b)) fail(path, "need left < right");
  return {a, b};
}

FamilySpec family(const YAML::Node& n, const std::string& path) {
  if (!n.IsMap()) fail(path, "expected {kind, a, s, offset}");
  FamilySpec f;
  for (const auto& kv : n) {
    const std::string key = kv.first.as<std::string>();
    const std::string p = path + "." + key;
    if (key == "kind") {
      f.kind = scalar(kv.second, p);
      if (f.kind != "weighted" && f.kind != "extended") fail(p, "expected weighted or extended");
    } else if (key == "a") {
      f.a = param(kv.second, p);
    } else if (key == "s") {
      f.s = param(kv.second, p);
    } else if (key == "offset") {
      f.offset = integer(kv.second, p);
    } else {
      fail(p, "unknown key");
    }
  }
  if (f.kind.empty()) fail(path + ".kind", "missing");
  if (f.a.text.empty()) fail(path + ".a", "missing");
  if (f.kind == "extended" && f.s.text.empty()) f.s = f.a;
  return f;
}

TermSpec term(const YAML::Node& n, const std::string& path) {
  if (!n.IsSequence() || n.size() != 2) fail(path, "expected [lambda, t]");
  return {param(n[0], path + "[0]"), param(n[1], path + "[1]")};
}

Problem problem(const std::string& v, const std::string& path) {
  if (v == "gaussian") return Problem::Gaussian;
  if (v == "column") return Problem::Column;
  if (v == "samples") return Problem::Samples;
  if (v == "heat") return Problem::Heat;
  if (v == "variable-s") return Problem::VariableS;
  fail(path, "unknown problem '" + v + "' (gaussian, column, samples, heat, variable-s)");
}

YAML::Node load_yaml(const std::string& text, const std::string& origin) {
  try {
    YAML::Node n = YAML::Load(text);
    if (!n.IsMap()) throw ConfigError(origin + ": top level must be a mapping");
    return n;
  } catch (const YAML::Exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

void apply_overrides(YAML::Node& root, const std::vector<Override>& overrides) {
  for (const auto& o : overrides) {
    try {
      root[o.key] = YAML::Load(o.value);
    } catch (const YAML::Exception& e) {
      throw ConfigError("--override " + o.key + ": " + e.what());
    }
  }
}

ExperimentConfig from_node(const YAML::Node& root) {
  ExperimentConfig c;
  bool have_problem = false;
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "name") c.name = scalar(v, key);
    else if (key == "problem") { c.problem = problem(scalar(v, key), key); have_problem = true; }
    else if (key == "dim") c.dim = integer(v, key);
    else if (key == "s") c.s = real(v, key);
    else if (key == "operator") c.op = list(v, key, term);
    else if (key == "families") c.families = list(v, key, family);
    else if (key == "intervals") c.intervals = list(v, key, interval);
    else if (key == "pads") c.pads = list(v, key, interval);
    else if (key == "disks") c.disks = list(v, key, real);
    else if (key == "radial_breaks") c.radial_breaks = list(v, key, real);
    else if (key == "n_angles") c.n_angles = integer(v, key);
    else if (key == "mode_m") c.mode_m = integer(v, key);
    else if (key == "mode_j") c.mode_j = integer(v, key);
    else if (key == "pts_per_segment") c.pts_per_segment = integer(v, key);
    else if (key == "eps_offset") c.eps_offset = real(v, key);
    else if (key == "n_schedule") c.n_schedule = list(v, key, integer);
    else if (key == "svd_eps") c.svd_eps = v.IsNull() ? std::nullopt : std::optional<double>(real(v, key));
    else if (key == "record_timing") c.record_timing = boolean(v, key);
    else if (key == "rhs_column") c.rhs_column = integer(v, key);
    else if (key == "rhs_file") c.rhs_file = scalar(v, key);
    else if (key == "eval_points") c.eval_points = list(v, key, [](const YAML::Node& n, const std::string& p) {
      return n.IsSequence() ? list(n, p, real) : std::vector<double>{real(n, p)};
    });
    else if (key == "eval_samples") c.eval_samples = integer(v, key);
    else if (key == "methods") c.methods = list(v, key, scalar);
    else if (key == "dts") c.dts = list(v, key, real);
    else if (key == "t_end") c.t_end = real(v, key);
    else if (key == "tail_method") c.tail_method = scalar(v, key);
    else if (key == "tail_dt") c.tail_dt = real(v, key);
    else if (key == "tail_x_max") c.tail_x_max = real(v, key);
    else if (key == "tail_samples") c.tail_samples = integer(v, key);
    else if (key == "s_start") c.s_start = real(v, key);
    else if (key == "s_rate") c.s_rate = real(v, key);
    else if (key == "compare_s") c.compare_s = list(v, key, real);
    else if (key == "slope_window") c.slope_window = list(v, key, real);
    else fail(key, "unknown key");
  }
  if (!have_problem) fail("problem", "missing");
  if (c.name.empty()) c.name = to_string(c.problem);
  c.validate();
  return c;
}

}  // namespace

Param Param::parse(const std::string& raw) {
  Param p;
  p.text = trim(raw);
  std::string t;
  for (char ch : p.text) {
    if (ch != ' ' && ch != '\t') t.push_back(ch);
  }
  if (t.empty()) throw ConfigError("empty value");
  if (t.back() == 's') {
    t.pop_back();
    if (!t.empty() && t.back() == '*') t.pop_back();
    if (t.empty() || t == "+") {
      p.s_coeff = 1.0;
    } else if (t == "-") {
      p.s_coeff = -1.0;
    } else {
      const auto v = parse_real(t);
      if (!v) throw ConfigError("cannot parse '" + p.text + "'");
      p.s_coeff = *v;
    }
    return p;
  }
  const auto v = parse_real(t);
  if (!v) throw ConfigError("cannot parse '" + p.text + "' as a number, fraction or multiple of s");
  p.constant = *v;
  return p;
}

Param Param::value(double v) {
  Param p;
  p.constant = v;
  std::ostringstream os;
  os.precision(17);
  os << v;
  p.text = os.str();
  return p;
}

std::string to_string(Problem p) {
  switch (p) {
    case Problem::Gaussian: return "gaussian";
    case Problem::Column: return "column";
    case Problem::Samples: return "samples";
    case Problem::Heat: return "heat";
    case Problem::VariableS: return "variable-s";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (dim != 1 && dim != 2) fail("dim", "must be 1 or 2");
  if (op.empty()) fail("operator", "needs at least one [lambda, t] term");
  if (families.empty()) fail("families", "needs at least one family");
  if (dim == 1) {
    if (intervals.empty()) fail("intervals", "required in 1D");
    if (!disks.empty() || !radial_breaks.empty()) fail("disks", "only used in 2D");
  } else {
    if (disks.empty()) fail("disks", "required in 2D");
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (!(disks[i] > 0.0)) fail("disks[" + std::to_string(i) + "]", "radius must be positive");
    }
    if (radial_breaks.size() < 2) fail("radial_breaks", "needs at least two radii");
    if (n_angles < 1) fail("n_angles", "must be positive");
    if (!intervals.empty() || !pads.empty()) fail("intervals", "only used in 1D");
  }
  if (pts_per_segment < 2) fail("pts_per_segment", "must be at least 2");
  if (!(eps_offset > 0.0)) fail("eps_offset", "must be positive");
  if (n_schedule.empty()) fail("n_schedule", "needs at least one truncation size");
  for (std::size_t i = 0; i < n_schedule.size(); ++i) {
    const std::string p = "n_schedule[" + std::to_string(i) + "]";
    if (n_schedule[i] < 1) fail(p, "must be positive");
    if (i > 0 && n_schedule[i] <= n_schedule[i - 1]) fail(p, "schedule must be increasing");
  }
  if (svd_eps && !(*svd_eps > 0.0)) fail("svd_eps", "must be positive");
  if (eval_samples < 1) fail("eval_samples", "must be positive");
  for (std::size_t i = 0; i < eval_points.size(); ++i) {
    if (eval_points[i].size() != static_cast<std::size_t>(dim)) {
      fail("eval_points[" + std::to_string(i) + "]", "needs " + std::to_string(dim) + " coordinate(s)");
    }
  }
  if (problem == Problem::Column && (rhs_column < 0 || rhs_column >= max_n())) {
    fail("rhs_column", "must index a column of the largest space");
  }
  if (problem == Problem::Samples && rhs_file.empty()) fail("rhs_file", "required for problem: samples");
  if (time_dependent()) {
    if (dim != 1) fail("dim", "time-dependent problems are one-dimensional");
    if (methods.empty()) fail("methods", "needs at least one tableau");
    for (std::size_t i = 0; i < methods.size(); ++i) {
      try {
        (void)timestep::tableau(methods[i]);
      } catch (const Error& e) {
        fail("methods[" + std::to_string(i) + "]", e.what());
      }
    }
    if (dts.empty()) fail("dts", "needs at least one step size");
    for (std::size_t i = 0; i < dts.size(); ++i) {
      const std::string p = "dts[" + std::to_string(i) + "]";
      if (!(dts[i] > 0.0)) fail(p, "must be positive");
      try {
        (void)timestep::step_count(0.0, t_end, dts[i]);
      } catch (const Error& e) {
        fail(p, e.what());
      }
    }
    if (!(t_end > 0.0)) fail("t_end", "must be positive");
    if (!(tail_x_max > 0.0)) fail("tail_x_max", "must be positive");
    if (tail_samples < 2) fail("tail_samples", "must be at least 2");
  }
  if (problem == Problem::Heat) {
    if (std::abs(s - 0.5) > 1e-15) fail("s", "the heat problem has a closed-form solution only for s = 1/2");
    if (!tail_method.empty()) {
      try {
        (void)timestep::tableau(tail_method);
      } catch (const Error& e) {
        fail("tail_method", e.what());
      }
      if (!(tail_dt > 0.0)) fail("tail_dt", "must be positive");
    }
  }
  if (problem == Problem::VariableS) {
    const double s1 = s_start + s_rate * t_end;
    if (!(s_start > 0.0 && s_start < 1.0 && s1 > 0.0 && s1 < 1.0)) {
      fail("s_rate", "s(t) must stay inside (0, 1) on [0, t_end]");
    }
    for (std::size_t i = 0; i < compare_s.size(); ++i) {
      if (!(compare_s[i] > 0.0 && compare_s[i] < 1.0)) {
        fail("compare_s[" + std::to_string(i) + "]", "must lie in (0, 1)");
      }
    }
    if (slope_window.size() != 2 || !(slope_window[0] > 0.0 && slope_window[0] < slope_window[1])) {
      fail("slope_window", "expected [lo, hi] with 0 < lo < hi");
    }
    if (slope_window[1] > tail_x_max) fail("slope_window", "upper end exceeds tail_x_max");
  }
  // Building the families checks exponents and image rules early.
  try {
    const double s_check = problem == Problem::VariableS ? s_start : s;
    (void)build_space(*this, std::min(max_n(), 4), s_check);
    (void)frame::operator_image(build_space(*this, std::min(max_n(), 4), s_check), build_operator(*this, s_check));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    fail("families", e.what());
  }
}

Override Override::parse(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--override '" + text + "': expected key=value");
  return {trim(text.substr(0, eq)), text.substr(eq + 1)};
}

std::vector<std::string> experiment_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : builtins()) out.push_back(k);
  return out;
}

std::string builtin_yaml(const std::string& name) {
  const auto it = builtins().find(name);
  if (it == builtins().end()) {
    std::string names;
    for (const auto& n : experiment_names()) names += (names.empty() ? "" : ", ") + n;
    throw ConfigError("unknown experiment '" + name + "' (" + names + ")");
  }
  return it->second;
}

ExperimentConfig parse_config_text(const std::string& yaml_text, const std::vector<Override>& overrides) {
  YAML::Node root = load_yaml(yaml_text, "config");
  apply_overrides(root, overrides);
  return from_node(root);
}

ExperimentConfig builtin_config(const std::string& name, const std::vector<Override>& overrides) {
  return parse_config_text(builtin_yaml(name), overrides);
}

ExperimentConfig load_config_file(const std::filesystem::path& path, const std::vector<Override>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  YAML::Node root = load_yaml(ss.str(), path.string());
  apply_overrides(root, overrides);
  ExperimentConfig cfg;
  try {
    cfg = from_node(root);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (!cfg.rhs_file.empty() && std::filesystem::path(cfg.rhs_file).is_relative()) {
    cfg.rhs_file = (path.parent_path() / cfg.rhs_file).string();
  }
  return cfg;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  using nlohmann::json;
  json j;
  j["name"] = c.name;
  j["problem"] = to_string(c.problem);
  j["dim"] = c.dim;
  j["s"] = c.s;
  json op = json::array();
  for (const auto& t : c.op) {
    op.push_back({{"lambda", t.lambda.text}, {"t", t.t.text}, {"lambda_value", t.lambda.at(c.s)}, {"t_value", t.t.at(c.s)}});
  }
  j["operator"] = op;
  json fams = json::array();
  for (const auto& f : c.families) {
    json fj = {{"kind", f.kind}, {"a", f.a.text}, {"a_value", f.a.at(c.s)}, {"offset", f.offset}};
    if (f.kind == "extended") {
      fj["s"] = f.s.text;
      fj["s_value"] = f.s.at(c.s);
    }
    fams.push_back(fj);
  }
  j["families"] = fams;
  if (c.dim == 1) {
    json iv = json::array();
    for (const auto& i : c.intervals) iv.push_back({i.a, i.b});
    j["intervals"] = iv;
    json pd = json::array();
    for (const auto& i : c.pads) pd.push_back({i.a, i.b});
    j["pads"] = pd;
  } else {
    j["disks"] = c.disks;
    j["radial_breaks"] = c.radial_breaks;
    j["n_angles"] = c.n_angles;
    j["mode_m"] = c.mode_m;
    j["mode_j"] = c.mode_j;
  }
  j["pts_per_segment"] = c.pts_per_segment;
  j["eps_offset"] = c.eps_offset;
  j["n_schedule"] = c.n_schedule;
  j["svd_eps"] = c.svd_eps ? json(*c.svd_eps) : json(nullptr);
  j["record_timing"] = c.record_timing;
  if (c.problem == Problem::Column) j["rhs_column"] = c.rhs_column;
  if (c.problem == Problem::Samples) j["rhs_file"] = c.rhs_file;
  if (!c.eval_points.empty()) j["eval_points"] = c.eval_points;
  j["eval_samples"] = c.eval_samples;
  if (c.time_dependent()) {
    j["methods"] = c.methods;
    j["dts"] = c.dts;
    j["t_end"] = c.t_end;
    j["tail_x_max"] = c.tail_x_max;
    j["tail_samples"] = c.tail_samples;
  }
  if (c.problem == Problem::Heat) {
    j["tail_method"] = c.tail_method;
    j["tail_dt"] = c.tail_dt;
  }
  if (c.problem == Problem::VariableS) {
    j["s_start"] = c.s_start;
    j["s_rate"] = c.s_rate;
    j["compare_s"] = c.compare_s;
    j["slope_window"] = c.slope_window;
  }
  return j;
}

std::vector<frame::BasisFamily> build_families(const ExperimentConfig& cfg, std::optional<double> s_opt) {
  const double s = s_opt.value_or(cfg.s);
  std::vector<frame::BasisFamily> out;
  for (const auto& f : cfg.families) {
    const double a = f.a.at(s);
    const double fs = f.s.at(s);
    if (cfg.dim == 1) {
      for (const auto& iv : cfg.intervals) {
        out.push_back(f.kind == "weighted" ? frame::BasisFamily::weighted_jacobi(a, iv, f.offset)
                                           : frame::BasisFamily::extended_jacobi(a, fs, iv, f.offset));
      }
    } else {
      if (f.kind == "extended" && a != fs) {
        throw ConfigError("families: extended Zernike families need a = s");
      }
      for (double rho : cfg.disks) {
        const basis2d::RadialScale scale(1.0 / rho);
        out.push_back(f.kind == "weighted"
                          ? frame::BasisFamily::weighted_zernike(a, scale, cfg.mode_m, cfg.mode_j, f.offset)
                          : frame::BasisFamily::extended_zernike(fs, scale, cfg.mode_m, cfg.mode_j, f.offset));
      }
    }
  }
  return out;
}

frame::SumSpace build_space(const ExperimentConfig& cfg, int n_columns, std::optional<double> s) {
  return frame::SumSpace(build_families(cfg, s), n_columns);
}

frame::OperatorSpec build_operator(const ExperimentConfig& cfg, std::optional<double> s_opt) {
  const double s = s_opt.value_or(cfg.s);
  frame::OperatorSpec op;
  for (const auto& t : cfg.op) op.terms.push_back({t.lambda.at(s), t.t.at(s)});
  op.validate();
  return op;
}

frame::Points build_grid(const ExperimentConfig& cfg) {
  if (cfg.dim == 1) return frame::collocation_grid_1d(cfg.intervals, cfg.pts_per_segment, cfg.eps_offset, cfg.pads);
  return frame::collocation_grid_2d(cfg.radial_breaks, cfg.pts_per_segment, cfg.eps_offset, cfg.n_angles);
}

}  // namespace fracframes::cli
