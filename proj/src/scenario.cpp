#include "owc/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "owc/errors.hpp"
#include "owc/format.hpp"

namespace owc {

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::owc: return "owc";
    case RunMode::classical_nsw: return "classical_nsw";
    case RunMode::compare_step: return "compare_step";
    case RunMode::accuracy_check: return "accuracy_check";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(const std::string& name, int line,
                          const std::string& msg) {
  std::ostringstream os;
  os << name << ":" << line << ": " << msg;
  throw ConfigError(os.str());
}

double parse_number(const std::string& name, int line, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail_at(name, line, "unparsable number for key '" + key + "': '" + value + "'");
  }
}

std::vector<double> parse_list(const std::string& name, int line,
                               const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  if (trim(value).empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_number(name, line, key, trim(item)));
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::istream& in, const std::string& name) {
  Scenario sc;
  std::map<std::string, int> seen;  // key -> line, for diagnostics
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    if (const auto hash = text.find('#'); hash != std::string::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      fail_at(name, line, "expected key=value, got '" + trim(raw) + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (seen.count(key)) {
      fail_at(name, line, "duplicate key '" + key + "' (first on line " +
                              std::to_string(seen[key]) + ")");
    }
    seen[key] = line;

    if (key == "g") sc.physical.g = parse_number(name, line, key, value);
    else if (key == "rho") sc.physical.rho = parse_number(name, line, key, value);
    else if (key == "l") sc.physical.l = parse_number(name, line, key, value);
    else if (key == "l0") sc.physical.l0 = parse_number(name, line, key, value);
    else if (key == "r") sc.physical.r = parse_number(name, line, key, value);
    else if (key == "l1") sc.physical.l1 = parse_number(name, line, key, value);
    else if (key == "h_s") sc.physical.h_s = parse_number(name, line, key, value);
    else if (key == "h_0") sc.physical.h_0 = parse_number(name, line, key, value);
    else if (key == "zeta_w") sc.physical.zeta_w = parse_number(name, line, key, value);
    else if (key == "amplitude") sc.physical.amplitude = parse_number(name, line, key, value);
    else if (key == "period") sc.physical.period = parse_number(name, line, key, value);
    else if (key == "dx") sc.dx = parse_number(name, line, key, value);
    else if (key == "cfl") sc.cfl = parse_number(name, line, key, value);
    else if (key == "t_end") sc.t_end = parse_number(name, line, key, value);
    else if (key == "gauges") sc.gauges = parse_list(name, line, key, value);
    else if (key == "snapshot_times") sc.snapshot_times = parse_list(name, line, key, value);
    else if (key == "mode") {
      if (value == "owc") sc.mode = RunMode::owc;
      else if (value == "classical_nsw") sc.mode = RunMode::classical_nsw;
      else if (value == "compare_step") sc.mode = RunMode::compare_step;
      else if (value == "accuracy_check") sc.mode = RunMode::accuracy_check;
      else fail_at(name, line, "unknown mode '" + value +
                                   "' (expected owc, classical_nsw, compare_step or accuracy_check)");
    } else {
      fail_at(name, line, "unknown key '" + key + "'");
    }
  }

  for (const char* key : {"l", "l0", "r", "l1", "h_s", "h_0", "zeta_w",
                          "period", "dx", "t_end"}) {
    if (!seen.count(key)) {
      throw ConfigError(name + ": missing required key '" + std::string(key) + "'");
    }
  }

  auto line_of = [&](const char* key) {
    return seen.count(key) ? seen[key] : 0;
  };
  try {
    validate(sc.physical);
  } catch (const ConfigError& e) {
    throw ConfigError(name + ": " + e.what());
  }
  if (!(sc.dx > 0.0)) fail_at(name, line_of("dx"), "dx must be positive");
  if (!(sc.cfl > 0.0 && sc.cfl < 1.0)) {
    fail_at(name, line_of("cfl"), "cfl must lie in (0, 1)");
  }
  if (!(sc.t_end > 0.0)) fail_at(name, line_of("t_end"), "t_end must be positive");
  for (double x : sc.gauges) {
    if (!(x >= -sc.physical.l && x <= sc.physical.l1)) {
      fail_at(name, line_of("gauges"),
              "gauge position " + gshort(x) + " outside [-l, l1]");
    }
  }
  for (double t : sc.snapshot_times) {
    if (!(t >= 0.0 && t <= sc.t_end)) {
      fail_at(name, line_of("snapshot_times"),
              "snapshot time " + gshort(t) + " outside [0, t_end]");
    }
  }
  if (sc.mode == RunMode::classical_nsw &&
      sc.physical.h_s != sc.physical.h_0) {
    fail_at(name, line_of("mode"),
            "classical_nsw runs a flat depth h_s and requires h_0 equal to h_s "
            "(got h_s=" + gshort(sc.physical.h_s) + ", h_0=" +
                gshort(sc.physical.h_0) + ")");
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  return parse_scenario(in, path);
}

void write_scenario(const Scenario& sc, std::ostream& out) {
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += g17(v[i]);
    }
    return s;
  };
  out << "g = " << g17(sc.physical.g) << "\n"
      << "rho = " << g17(sc.physical.rho) << "\n"
      << "l = " << g17(sc.physical.l) << "\n"
      << "l0 = " << g17(sc.physical.l0) << "\n"
      << "r = " << g17(sc.physical.r) << "\n"
      << "l1 = " << g17(sc.physical.l1) << "\n"
      << "h_s = " << g17(sc.physical.h_s) << "\n"
      << "h_0 = " << g17(sc.physical.h_0) << "\n"
      << "zeta_w = " << g17(sc.physical.zeta_w) << "\n"
      << "amplitude = " << g17(sc.physical.amplitude) << "\n"
      << "period = " << g17(sc.physical.period) << "\n"
      << "dx = " << g17(sc.dx) << "\n"
      << "cfl = " << g17(sc.cfl) << "\n"
      << "t_end = " << g17(sc.t_end) << "\n"
      << "mode = " << to_string(sc.mode) << "\n"
      << "gauges = " << list(sc.gauges) << "\n"
      << "snapshot_times = " << list(sc.snapshot_times) << "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write scenario file '" + path + "'");
  write_scenario(sc, out);
}

}  // namespace owc
