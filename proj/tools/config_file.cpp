#include "config_file.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ghz::cli {

namespace {

constexpr std::array<std::string_view, 8> kSections{
    "control", "target", "interaction", "decay", "integrator", "time", "meta", "sweep"};

bool is_section(std::string_view name) {
  for (auto s : kSections) {
    if (s == name) return true;
  }
  return false;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

double to_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError(key, "expected a number, got '" + text + "'");
  }
  if (used != text.size()) throw ParameterError(key, "expected a number, got '" + text + "'");
  return v;
}

std::vector<std::string> split_items(const std::string& inner) {
  std::vector<std::string> items;
  std::stringstream ss(inner);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

Axis parse_axis(const std::string& key, const std::string& value) {
  if (!ProtocolParameters::is_key(key)) throw ParameterError(key, "unknown sweep parameter");
  if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
    std::vector<double> values;
    for (const auto& item : split_items(value.substr(1, value.size() - 2))) {
      values.push_back(to_number(key, item));
    }
    if (values.empty()) throw ParameterError(key, "empty value list");
    return Axis::list(key, key, std::move(values));
  }
  if (value.size() >= 2 && value.front() == '{' && value.back() == '}') {
    std::optional<double> min, max, count;
    for (const auto& item : split_items(value.substr(1, value.size() - 2))) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParameterError(key, "expected name = value in axis");
      const std::string name = trim(item.substr(0, eq));
      const double v = to_number(key, trim(item.substr(eq + 1)));
      if (name == "min") {
        min = v;
      } else if (name == "max") {
        max = v;
      } else if (name == "count") {
        count = v;
      } else {
        throw ParameterError(key + "." + name, "unknown axis field");
      }
    }
    if (!min || !max || !count) throw ParameterError(key, "axis needs min, max and count");
    if (*count < 1 || *count != static_cast<int>(*count)) {
      throw ParameterError(key, "axis count must be a positive integer");
    }
    return Axis::linear(key, key, *min, *max, static_cast<int>(*count));
  }
  throw ParameterError(key, "sweep axis must be [v1, v2, ...] or { min = a, max = b, count = n }");
}

void apply_sweep_entry(SweepSpec& sweep, const std::string& key, const std::string& value) {
  if (key == "experiment") {
    try {
      sweep.experiment = experiment_from_string(unquote(value));
    } catch (const std::invalid_argument& e) {
      throw ParameterError("experiment", e.what());
    }
  } else if (key == "id") {
    sweep.id = unquote(value);
  } else {
    sweep.axes.push_back(parse_axis(key, value));
  }
}

CliConfig parse_key_value(const std::string& text) {
  CliConfig config;
  std::string section;
  std::istringstream is(text);
  std::size_t line_no = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (!is_section(section)) throw ParameterError("[" + section + "]", "unknown section");
      if (section == "sweep" && !config.sweep) config.sweep = SweepSpec{};
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("line " + std::to_string(line_no), "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "sweep") {
      apply_sweep_entry(*config.sweep, key, value);
    } else {
      config.params.set_text(key, unquote(value));
    }
  }
  return config;
}

void apply_json_value(ProtocolParameters& params, const std::string& key,
                      const nlohmann::json& value) {
  if (value.is_number()) {
    if (!ProtocolParameters::is_key(key)) throw ParameterError(key, "unknown parameter");
    params.set(key, value.get<double>());
  } else if (value.is_string()) {
    params.set_text(key, value.get<std::string>());
  } else {
    throw ParameterError(key, "expected a number or string");
  }
}

SweepSpec parse_json_sweep(const nlohmann::json& node) {
  if (!node.is_object()) throw ParameterError("sweep", "expected an object");
  SweepSpec sweep;
  for (const auto& [key, value] : node.items()) {
    if (key == "experiment" || key == "id") {
      if (!value.is_string()) throw ParameterError(key, "expected a string");
      apply_sweep_entry(sweep, key, value.get<std::string>());
    } else if (key == "axes") {
      if (!value.is_object()) throw ParameterError("axes", "expected an object");
      for (const auto& [axis_key, axis] : value.items()) {
        if (!ProtocolParameters::is_key(axis_key)) {
          throw ParameterError(axis_key, "unknown sweep parameter");
        }
        if (axis.is_array()) {
          sweep.axes.push_back(Axis::list(axis_key, axis_key, axis.get<std::vector<double>>()));
        } else if (axis.is_object()) {
          for (const auto& [field, _] : axis.items()) {
            if (field != "min" && field != "max" && field != "count") {
              throw ParameterError(axis_key + "." + field, "unknown axis field");
            }
          }
          if (!axis.contains("min") || !axis.contains("max") || !axis.contains("count")) {
            throw ParameterError(axis_key, "axis needs min, max and count");
          }
          sweep.axes.push_back(Axis::linear(axis_key, axis_key, axis["min"].get<double>(),
                                            axis["max"].get<double>(),
                                            axis["count"].get<int>()));
        } else {
          throw ParameterError(axis_key, "axis must be a list or {min, max, count}");
        }
      }
    } else {
      throw ParameterError(key, "unknown sweep field");
    }
  }
  return sweep;
}

CliConfig parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError("json", e.what());
  }
  if (!doc.is_object()) throw ParameterError("json", "top level must be an object");
  CliConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "sweep") {
      config.sweep = parse_json_sweep(value);
    } else if (value.is_object()) {
      if (!is_section(key)) throw ParameterError(key, "unknown section");
      for (const auto& [inner, v] : value.items()) apply_json_value(config.params, inner, v);
    } else {
      apply_json_value(config.params, key, value);
    }
  }
  return config;
}

}  // namespace

CliConfig parse_config(const std::string& text) {
  const std::string head = trim(text);
  CliConfig config = (!head.empty() && head.front() == '{') ? parse_json(text)
                                                           : parse_key_value(text);
  config.params.validate();
  if (config.sweep) config.sweep->base = config.params;
  return config;
}

CliConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("config", "cannot read " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config(buf.str());
}

void apply_override(ProtocolParameters& params, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ParameterError(assignment, "override must have the form key=value");
  }
  params.set_text(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

}  // namespace ghz::cli
